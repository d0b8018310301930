#include "residua/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "residua/poly_gf.hpp"
#include "residua/split_ext.hpp"

namespace residua {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
    std::string out;
    for (const auto& e : expected) out += (out.empty() ? "" : ", ") + e;
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    RingExpr parse() {
        RingExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail({"[x]/(", "end of input"});
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(std::string_view lit) {
        skip_ws();
        if (s_.substr(pos_).starts_with(lit)) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    bool peek(std::string_view lit) {
        skip_ws();
        return s_.substr(pos_).starts_with(lit);
    }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        throw ParseError(pos_, std::move(expected));
    }

    void expect(std::string_view lit) {
        if (!accept(lit)) fail({std::string(lit)});
    }

    std::uint64_t nat() {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (pos_ - start >= 18) throw SemanticError({start, pos_}, "number too large");
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail({"NAT"});
        return v;
    }

    RingExpr expr() {
        skip_ws();
        const std::size_t start = pos_;
        RingExpr e = primary();
        while (peek("[")) {
            expect("[");
            expect("x");
            expect("]");
            expect("/");
            expect("(");
            RingExpr q;
            q.kind = RingExpr::Kind::poly_quot;
            q.poly = poly();
            expect(")");
            q.span = {start, pos_};
            q.children.push_back(std::move(e));
            e = std::move(q);
        }
        return e;
    }

    RingExpr primary() {
        skip_ws();
        const std::size_t start = pos_;
        RingExpr e;
        if (accept("Z")) {
            expect("/");
            e.kind = RingExpr::Kind::zmod;
            e.modulus = nat();
        } else if (accept("GF")) {
            expect("(");
            e.kind = RingExpr::Kind::gf;
            e.modulus = nat();
            expect(")");
        } else if (accept("prod")) {
            expect("(");
            e.kind = RingExpr::Kind::prod;
            e.children.push_back(expr());
            if (!accept(",")) fail({",", "[x]/("});
            e.children.push_back(expr());
            if (!accept(")")) fail({")", "[x]/("});
        } else if (accept("sdp")) {
            expect("(");
            e.kind = RingExpr::Kind::sdp;
            e.modulus = nat();
            expect(",");
            e.dim = nat();
            expect(",");
            if (accept("zero"))
                e.sdp_kind = SdpKind::zero;
            else if (accept("unital"))
                e.sdp_kind = SdpKind::unital;
            else
                fail({"zero", "unital"});
            expect(")");
        } else {
            fail({"Z/", "GF(", "prod(", "sdp("});
        }
        e.span = {start, pos_};
        return e;
    }

    std::vector<PolyTerm> poly() {
        std::vector<PolyTerm> terms;
        do {
            terms.push_back(term());
        } while (accept("+"));
        if (!peek(")")) fail({"+", ")"});
        return terms;
    }

    PolyTerm term() {
        skip_ws();
        const std::size_t start = pos_;
        PolyTerm t;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            t.coeff = nat();
            if (!accept("*")) {
                t.exponent = 0;
                t.span = {start, pos_};
                return t;
            }
            expect("x");
        } else if (!accept("x")) {
            fail({"NAT", "x"});
        }
        t.exponent = accept("^") ? nat() : 1;
        t.span = {start, pos_};
        return t;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

// Digitwise addition of GF(p^k) element indices.
std::uint64_t gf_add(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0, place = 1;
    while (a > 0 || b > 0) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return out;
}

// exponent -> nonzero coefficient after collecting like terms.
std::map<std::uint64_t, std::uint64_t> collect(std::uint64_t q, const std::vector<PolyTerm>& terms) {
    const auto pk = prime_power(q);
    const std::uint64_t p = pk->first;
    const bool prime = pk->second == 1;
    std::map<std::uint64_t, std::uint64_t> out;
    for (const auto& t : terms) {
        std::uint64_t c = t.coeff;
        if (prime)
            c %= q;
        else if (c >= q)
            throw SemanticError(t.span, "coefficient " + std::to_string(c) + " is not an element of GF(" +
                                            std::to_string(q) + ")");
        out[t.exponent] = gf_add(p, out[t.exponent], c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Order of the ring denoted by e, saturating at kTableCap + 1.
std::uint64_t checked_order(const RingExpr& e);

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > kTableCap) return kTableCap + 1;
    }
    return acc;
}

std::uint64_t checked_order(const RingExpr& e) {
    auto cap = [&](std::uint64_t order) {
        if (order > kTableCap)
            throw SemanticError(e.span, "ring order exceeds the table cap of " + std::to_string(kTableCap));
        return order;
    };
    switch (e.kind) {
        case RingExpr::Kind::zmod:
            if (e.modulus == 0) throw SemanticError(e.span, "Z/0 is not a ring of this library");
            return cap(e.modulus);
        case RingExpr::Kind::gf:
            if (!prime_power(e.modulus))
                throw SemanticError(e.span, "GF(" + std::to_string(e.modulus) + "): order is not a prime power");
            return cap(e.modulus);
        case RingExpr::Kind::poly_quot: {
            if (e.children.size() != 1 || e.children[0].kind != RingExpr::Kind::gf)
                throw SemanticError(e.span, "[x]/(f) applies to GF(q) bases only");
            const std::uint64_t q = checked_order(e.children[0]);
            const auto coeffs = collect(q, e.poly);
            if (coeffs.empty() || coeffs.rbegin()->first == 0)
                throw SemanticError(e.span, "modulus polynomial must have degree >= 1");
            return cap(saturating_pow(q, coeffs.rbegin()->first));
        }
        case RingExpr::Kind::prod: {
            if (e.children.size() != 2) throw SemanticError(e.span, "prod needs two operands");
            const std::uint64_t a = checked_order(e.children[0]);
            const std::uint64_t b = checked_order(e.children[1]);
            return cap(a * b);
        }
        case RingExpr::Kind::sdp:
            if (!prime_power(e.modulus))
                throw SemanticError(e.span, "sdp base order " + std::to_string(e.modulus) + " is not a prime power");
            return cap(saturating_pow(e.modulus, e.dim + 1));
    }
    return 0;
}

std::string term_text(const PolyTerm& t) {
    if (t.exponent == 0) return std::to_string(t.coeff);
    std::string out = t.coeff == 1 ? "" : std::to_string(t.coeff) + "*";
    out += "x";
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
    return out;
}

Ring build(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::zmod: return zmod(e.modulus);
        case RingExpr::Kind::gf: return gf_ring(e.modulus);
        case RingExpr::Kind::poly_quot: {
            const std::uint64_t q = e.children[0].modulus;
            const auto sparse = collect(q, e.poly);
            std::vector<Elem> coeffs(sparse.rbegin()->first + 1, 0);
            for (auto [exp, c] : sparse) coeffs[exp] = static_cast<Elem>(c);
            return poly_quotient_ring(gf_ring(q), coeffs, to_string(e));
        }
        case RingExpr::Kind::prod: return product(build(e.children[0]), build(e.children[1]));
        case RingExpr::Kind::sdp: {
            const Ring k = gf_ring(e.modulus);
            const auto alg = e.sdp_kind == SdpKind::zero ? zero_algebra(k, e.dim) : unital_algebra(k, e.dim);
            return semidirect_pair(alg);
        }
    }
    throw SemanticError(e.span, "unknown expression kind");
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : Error("parse error at offset " + std::to_string(offset) + ": expected " + join_expected(expected)),
      offset_(offset),
      expected_(std::move(expected)) {}

SemanticError::SemanticError(SourceSpan span, const std::string& what)
    : Error("semantic error at " + std::to_string(span.begin) + ".." + std::to_string(span.end) + ": " +
            what),
      span_(span) {}

bool same_structure(const RingExpr& a, const RingExpr& b) {
    if (a.kind != b.kind || a.modulus != b.modulus || a.dim != b.dim || a.sdp_kind != b.sdp_kind)
        return false;
    if (a.poly.size() != b.poly.size() || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.poly.size(); ++i)
        if (a.poly[i].coeff != b.poly[i].coeff || a.poly[i].exponent != b.poly[i].exponent) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!same_structure(a.children[i], b.children[i])) return false;
    return true;
}

RingExpr parse_ring_expr(std::string_view text) {
    RingExpr e = Parser(text).parse();
    checked_order(e);
    return e;
}

std::string to_string(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::zmod: return "Z/" + std::to_string(e.modulus);
        case RingExpr::Kind::gf: return "GF(" + std::to_string(e.modulus) + ")";
        case RingExpr::Kind::poly_quot: {
            std::string poly;
            for (const auto& t : e.poly) poly += (poly.empty() ? "" : "+") + term_text(t);
            return to_string(e.children.at(0)) + "[x]/(" + poly + ")";
        }
        case RingExpr::Kind::prod:
            return "prod(" + to_string(e.children.at(0)) + "," + to_string(e.children.at(1)) + ")";
        case RingExpr::Kind::sdp:
            return "sdp(" + std::to_string(e.modulus) + "," + std::to_string(e.dim) + "," +
                   (e.sdp_kind == SdpKind::zero ? "zero" : "unital") + ")";
    }
    return {};
}

Ring evaluate(const RingExpr& e) {
    checked_order(e);
    try {
        return build(e).relabeled(to_string(e));
    } catch (const SemanticError&) {
        throw;
    } catch (const Error& err) {
        throw SemanticError(e.span, err.what());
    }
}

Ring evaluate(std::string_view text) { return evaluate(parse_ring_expr(text)); }

}  // namespace residua
