#pragma once

// Polynomials over prime fields, finite fields GF(q), quotient rings
// GF(q)[x]/(f) and the bounded-degree maximal spectrum of GF(q)[x].

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

/// Polynomial over Z/p, low degree first, trailing zeros trimmed.
struct PrimePoly {
    std::uint32_t p = 2;
    std::vector<std::uint32_t> coeffs;

    /// Reduces coefficients mod p and trims.
    static PrimePoly make(std::uint32_t p, std::vector<std::uint32_t> coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }
    bool operator==(const PrimePoly&) const = default;
};

/// Polynomial whose coefficients are element indices of gf_ring(q).
struct GfPoly {
    std::uint32_t q = 2;
    std::vector<Elem> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const GfPoly&) const = default;
};

GfPoly to_gf(const PrimePoly& f);

/// Text form in the DSL polynomial syntax, highest degree first
/// ("x^2+x+1", "2*x+1", "0").
std::string to_string(const PrimePoly& f);
std::string to_string(const GfPoly& f);

enum class PolyOp { add, sub, mul, mod, gcd };

/// Arithmetic in Z/p[x]; gcd is returned monic.
/// Throws ModulusMismatch, or DivisionByZeroPoly for mod/gcd by zero.
PrimePoly poly_arith(PolyOp op, const PrimePoly& f, const PrimePoly& g);

/// Throws DegreeZero for constants.
bool is_irreducible(const PrimePoly& f);

/// Monic irreducibles of degree exactly d over Z/p, lexicographic from the
/// leading coefficient down. Throws CapExceeded when p^d > kMaxPolyScan.
std::vector<PrimePoly> enumerate_irreducibles(std::uint32_t p, std::size_t d);

inline constexpr std::size_t kMaxPolyScan = 1U << 16U;

bool is_prime(std::uint64_t n);

/// (p, k) with q = p^k, if q is a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// The field of order q as Z/p[g]/(f), f the least monic irreducible of
/// degree k. Throws NotPrimePower, CapExceeded.
Ring gf_ring(std::uint64_t q);

/// field[x]/(f); f is made monic first. Elements are coefficient vectors
/// c_0 + c_1 x + ... encoded as sum c_i q^i. Throws DegreeZero, CapExceeded.
Ring poly_quotient_ring(const Ring& field, const std::vector<Elem>& f, std::string label = {});
Ring poly_quotient_ring(std::uint64_t q, const GfPoly& f);

/// Monic irreducibles of degree exactly d over GF(q).
std::vector<GfPoly> enumerate_irreducibles_gf(std::uint64_t q, std::size_t d);

struct SpectrumEntry {
    GfPoly f;
    std::uint64_t residue_order;
};

/// Maximal ideals (f) of GF(q)[x] with deg f <= dmax, each with the order of
/// its residue field q^deg f.
std::vector<SpectrumEntry> polyring_max_spectrum(std::uint64_t q, std::size_t dmax);

}  // namespace residua
