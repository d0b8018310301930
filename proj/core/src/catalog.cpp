#include "residua/catalog.hpp"

#include <algorithm>
#include <set>

#include "residua/dsl.hpp"
#include "residua/poly_algebra.hpp"
#include "residua/poly_gf.hpp"

namespace residua {

namespace {

struct Candidate {
    std::string expr;
    std::size_t order;
};

std::vector<std::uint64_t> prime_powers(const std::vector<std::uint32_t>& primes, std::size_t max_order,
                                        std::uint32_t min_exponent) {
    std::vector<std::uint64_t> out;
    for (std::uint32_t p : primes) {
        if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
        std::uint64_t q = p;
        for (std::uint32_t k = 1; q <= max_order; ++k, q *= p)
            if (k >= min_exponent) out.push_back(q);
    }
    return out;
}

std::vector<Candidate> base_candidates(const CatalogOptions& options) {
    std::vector<Candidate> out;
    const std::size_t max = options.max_order;
    for (auto n : prime_powers(options.primes, max, 2))
        out.push_back({"Z/" + std::to_string(n), static_cast<std::size_t>(n)});
    const auto fields = prime_powers(options.primes, max, 1);
    for (auto q : fields) out.push_back({"GF(" + std::to_string(q) + ")", static_cast<std::size_t>(q)});
    for (auto q : fields) {
        if (q * q > max) continue;
        const Ring field = gf_ring(q);
        PolyOps<TableField> ops{TableField(field)};
        std::size_t max_deg = 0;
        for (std::uint64_t o = q; o <= max; o *= q) ++max_deg;
        for (std::size_t d = 1; d <= max_deg; ++d) {
            for (const auto& f : enumerate_irreducibles_gf(q, d)) {
                std::vector<Elem> power = {field.one()};
                std::uint64_t order = 1;
                for (std::size_t e = 1; d * e <= max_deg; ++e) {
                    power = ops.mul(power, f.coeffs);
                    order = 1;
                    for (std::size_t i = 0; i < d * e; ++i) order *= q;
                    if (d * e < 2) continue;
                    out.push_back({"GF(" + std::to_string(q) + ")[x]/(" +
                                       to_string(GfPoly{static_cast<std::uint32_t>(q), power}) + ")",
                                   static_cast<std::size_t>(order)});
                }
            }
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> base_ring_expressions(const CatalogOptions& options) {
    std::vector<std::string> out;
    for (auto& c : base_candidates(options)) out.push_back(std::move(c.expr));
    return out;
}

std::vector<std::string> catalog_expressions(const CatalogOptions& options) {
    const auto base = base_candidates(options);
    std::vector<std::string> out;
    for (const auto& c : base) out.push_back(c.expr);
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j)
            if (base[i].order * base[j].order <= options.max_order)
                out.push_back("prod(" + base[i].expr + "," + base[j].expr + ")");
    for (auto q : prime_powers(options.primes, options.max_order, 1)) {
        std::uint64_t order = q * q;
        for (std::size_t d = 1; d <= 2 && order <= options.max_order; ++d, order *= q)
            for (const char* kind : {"zero", "unital"})
                out.push_back("sdp(" + std::to_string(q) + "," + std::to_string(d) + "," + kind + ")");
    }
    for (const auto& extra : options.extra_rings) out.push_back(extra);
    std::set<std::string> seen;
    std::vector<std::string> unique;
    for (auto& e : out)
        if (seen.insert(e).second) unique.push_back(std::move(e));
    return unique;
}

std::vector<Ring> build_catalog(const CatalogOptions& options) {
    std::vector<Ring> out;
    std::set<std::string> seen;
    for (const auto& expr : catalog_expressions(options)) {
        Ring r = evaluate(expr);
        if (seen.insert(r.label()).second) out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> monic_quotient_expressions(std::uint32_t q, std::size_t max_degree) {
    const Ring field = gf_ring(q);
    PolyOps<TableField> ops{TableField(field)};
    std::vector<std::string> out;
    std::size_t count = 1;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        count *= q;
        for (std::size_t i = 0; i < count; ++i)
            out.push_back("GF(" + std::to_string(q) + ")[x]/(" +
                          to_string(GfPoly{q, ops.monic_from_index(d, i)}) + ")");
    }
    return out;
}

}  // namespace residua
