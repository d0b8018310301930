#pragma once

// The standard catalog of finite rings that the verification suites run over.

#include <cstdint>
#include <string>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

struct CatalogOptions {
    std::size_t max_order = kSuiteCap;
    std::vector<std::uint32_t> primes{2, 3};
    /// Extra DSL expressions appended to the generated families.
    std::vector<std::string> extra_rings;
};

/// DSL expressions of the catalog, in a fixed order:
///   Z/p^k (k >= 2), GF(q), GF(q)[x]/(f^e) for monic irreducible f over GF(q)
///   with deg(f^e) >= 2, binary products of those, then sdp(q, d, zero|unital)
///   for d in {1, 2}; all with order <= max_order. User rings come last.
std::vector<std::string> catalog_expressions(const CatalogOptions& options);

/// Evaluated catalog; ring labels are the DSL expressions (deduplicated).
std::vector<Ring> build_catalog(const CatalogOptions& options);

/// The expressions of the single-ring families (no products, no sdp).
std::vector<std::string> base_ring_expressions(const CatalogOptions& options);

/// GF(q)[x]/(f) for every monic f over GF(q) with 1 <= deg f <= max_degree.
std::vector<std::string> monic_quotient_expressions(std::uint32_t q, std::size_t max_degree);

}  // namespace residua
