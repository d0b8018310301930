#include "residua/poly_gf.hpp"

#include "residua/poly_algebra.hpp"

namespace residua {

namespace {

std::string poly_text(const std::vector<Elem>& coeffs) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Elem c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string element_name(const Ring& field, const std::vector<Elem>& digits, const char* var) {
    std::string out;
    for (std::size_t i = digits.size(); i-- > 0;) {
        const Elem c = digits[i];
        if (c == field.zero()) continue;
        if (!out.empty()) out += "+";
        std::string coeff = field.name(c);
        if (coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
        if (i == 0) {
            out += coeff;
            continue;
        }
        if (c != field.one()) out += coeff + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? field.name(field.zero()) : out;
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (acc > cap / base) throw CapExceeded("table would exceed order " + std::to_string(cap));
        acc *= base;
    }
    return acc;
}

// field[var]/(f) with f monic of degree >= 1.
Ring build_quotient(const Ring& field, std::vector<Elem> f, std::string label, const char* var) {
    PolyOps<TableField> ops{TableField(field)};
    f = ops.trim(std::move(f));
    if (ops.degree(f) < 1) throw DegreeZero();
    f = ops.monic(f);
    const std::size_t q = field.order();
    const std::size_t d = static_cast<std::size_t>(ops.degree(f));
    const std::size_t n = checked_power(q, d, kTableCap);

    std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(d));
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t v = a;
        for (std::size_t i = 0; i < d; ++i) {
            digits[a][i] = static_cast<Elem>(v % q);
            v /= q;
        }
    }
    auto encode = [&](const std::vector<Elem>& c) {
        Elem idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) idx = static_cast<Elem>(idx * q + c[i]);
        return idx;
    };

    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<Elem> sum(d);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            for (std::size_t i = 0; i < d; ++i) sum[i] = field.add(digits[a][i], digits[b][i]);
            add[a * n + b] = add[b * n + a] = encode(sum);
            auto prod = ops.mod(ops.mul(ops.trim(digits[a]), ops.trim(digits[b])), f);
            mul[a * n + b] = mul[b * n + a] = encode(prod);
        }
    }
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) names[a] = element_name(field, digits[a], var);
    std::vector<Elem> zero_digits(d, field.zero()), one_digits(d, field.zero());
    one_digits[0] = field.one();
    return Ring(detail::trusted, n, std::move(add), std::move(mul), encode(zero_digits),
                encode(one_digits), std::move(label), std::move(names));
}

}  // namespace

PrimePoly PrimePoly::make(std::uint32_t p, std::vector<std::uint32_t> coeffs) {
    for (auto& c : coeffs) c %= p;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return PrimePoly{p, std::move(coeffs)};
}

GfPoly to_gf(const PrimePoly& f) { return GfPoly{f.p, {f.coeffs.begin(), f.coeffs.end()}}; }

std::string to_string(const PrimePoly& f) { return poly_text({f.coeffs.begin(), f.coeffs.end()}); }
std::string to_string(const GfPoly& f) { return poly_text(f.coeffs); }

PrimePoly poly_arith(PolyOp op, const PrimePoly& f, const PrimePoly& g) {
    if (f.p != g.p)
        throw ModulusMismatch("moduli " + std::to_string(f.p) + " and " + std::to_string(g.p));
    PolyOps<PrimeField> ops{PrimeField{f.p}};
    const std::vector<Elem> a(f.coeffs.begin(), f.coeffs.end());
    const std::vector<Elem> b(g.coeffs.begin(), g.coeffs.end());
    std::vector<Elem> r;
    switch (op) {
        case PolyOp::add: r = ops.add(a, b); break;
        case PolyOp::sub: r = ops.sub(a, b); break;
        case PolyOp::mul: r = ops.mul(a, b); break;
        case PolyOp::mod:
            if (b.empty()) throw DivisionByZeroPoly();
            r = ops.mod(a, b);
            break;
        case PolyOp::gcd:
            if (b.empty()) throw DivisionByZeroPoly();
            r = ops.gcd(a, b);
            break;
    }
    return PrimePoly{f.p, {r.begin(), r.end()}};
}

bool is_irreducible(const PrimePoly& f) {
    if (f.degree() < 1) throw DegreeZero();
    PolyOps<PrimeField> ops{PrimeField{f.p}};
    return ops.is_irreducible({f.coeffs.begin(), f.coeffs.end()});
}

std::vector<PrimePoly> enumerate_irreducibles(std::uint32_t p, std::size_t d) {
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    if (d == 0) throw DegreeZero();
    const std::size_t count = checked_power(p, d, kMaxPolyScan);
    PolyOps<PrimeField> ops{PrimeField{p}};
    std::vector<PrimePoly> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto f = ops.monic_from_index(d, i);
        if (ops.is_irreducible(f)) out.push_back(PrimePoly{p, {f.begin(), f.end()}});
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<std::uint32_t>(p), k);
}

Ring gf_ring(std::uint64_t q) {
    auto pk = prime_power(q);
    if (!pk) throw NotPrimePower(q);
    if (q > kTableCap) throw CapExceeded("GF(" + std::to_string(q) + ") exceeds table cap");
    const std::string label = "GF(" + std::to_string(q) + ")";
    const auto [p, k] = *pk;
    Ring prime = zmod(p).relabeled(label);
    if (k == 1) return prime;
    const auto f = enumerate_irreducibles(p, k).front();
    return build_quotient(prime, {f.coeffs.begin(), f.coeffs.end()}, label, "g");
}

Ring poly_quotient_ring(const Ring& field, const std::vector<Elem>& f, std::string label) {
    if (label.empty()) label = field.label() + "[x]/(" + poly_text(f) + ")";
    return build_quotient(field, f, std::move(label), "x");
}

Ring poly_quotient_ring(std::uint64_t q, const GfPoly& f) {
    const Ring field = gf_ring(q);
    for (Elem c : f.coeffs)
        if (c >= q) throw InvalidInput("coefficient " + std::to_string(c) + " outside GF(q)");
    return poly_quotient_ring(field, f.coeffs);
}

std::vector<GfPoly> enumerate_irreducibles_gf(std::uint64_t q, std::size_t d) {
    const Ring field = gf_ring(q);
    if (d == 0) throw DegreeZero();
    const std::size_t count = checked_power(q, d, kMaxPolyScan);
    PolyOps<TableField> ops{TableField(field)};
    std::vector<GfPoly> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto f = ops.monic_from_index(d, i);
        if (ops.is_irreducible(f)) out.push_back(GfPoly{static_cast<std::uint32_t>(q), f});
    }
    return out;
}

std::vector<SpectrumEntry> polyring_max_spectrum(std::uint64_t q, std::size_t dmax) {
    std::vector<SpectrumEntry> out;
    std::uint64_t residue = 1;
    for (std::size_t d = 1; d <= dmax; ++d) {
        residue *= q;
        for (auto& f : enumerate_irreducibles_gf(q, d)) out.push_back({std::move(f), residue});
    }
    return out;
}

}  // namespace residua
