#pragma once

// Ring-definition language.
//
//   expr := "Z/" NAT | "GF(" NAT ")" | expr "[x]/(" poly ")"
//         | "prod(" expr "," expr ")" | "sdp(" NAT "," NAT "," ("zero"|"unital") ")"
//   poly := term ("+" term)*
//   term := [NAT "*"] "x" ["^" NAT] | NAT
//
// Whitespace between tokens is ignored. "[x]/(...)" applies to GF(q) bases
// only; polynomial coefficients are element indices of GF(q).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "residua/errors.hpp"
#include "residua/ring.hpp"

namespace residua {

struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;  // one past the last byte

    bool operator==(const SourceSpan&) const = default;
};

struct PolyTerm {
    std::uint64_t coeff = 1;
    std::uint64_t exponent = 0;
    SourceSpan span;
};

enum class SdpKind { zero, unital };

struct RingExpr {
    enum class Kind { zmod, gf, poly_quot, prod, sdp };

    Kind kind = Kind::zmod;
    SourceSpan span;
    /// n of Z/n, q of GF(q) and sdp(q, ...).
    std::uint64_t modulus = 0;
    std::uint64_t dim = 0;
    SdpKind sdp_kind = SdpKind::zero;
    std::vector<PolyTerm> poly;
    /// poly_quot: {base}; prod: {left, right}.
    std::vector<RingExpr> children;
};

/// Equal up to source spans.
bool same_structure(const RingExpr& a, const RingExpr& b);

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected);

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class SemanticError : public Error {
public:
    SemanticError(SourceSpan span, const std::string& what);

    SourceSpan span() const noexcept { return span_; }

private:
    SourceSpan span_;
};

/// Parses and checks parameters. Throws ParseError, SemanticError.
RingExpr parse_ring_expr(std::string_view text);

/// Canonical text; parse(to_string(e)) has the same structure as e.
std::string to_string(const RingExpr& e);

/// Builds the ring; the label is to_string(e). Throws SemanticError.
Ring evaluate(const RingExpr& e);
Ring evaluate(std::string_view text);

}  // namespace residua
