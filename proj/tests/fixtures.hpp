#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "residua/catalog.hpp"
#include "residua/dsl.hpp"
#include "residua/ring.hpp"

namespace fixtures {

/// Catalog rings of order <= max_order plus Z/n for 2 <= n <= max_order.
inline std::vector<residua::Ring> small_rings(std::size_t max_order) {
    residua::CatalogOptions options;
    options.max_order = max_order;
    for (std::size_t n = 2; n <= max_order; ++n) options.extra_rings.push_back("Z/" + std::to_string(n));
    return residua::build_catalog(options);
}

inline residua::Elem named(const residua::Ring& r, std::string_view name) {
    for (residua::Elem a = 0; a < r.order(); ++a)
        if (r.name(a) == name) return a;
    throw residua::InvalidInput(r.label() + " has no element " + std::string(name));
}

inline residua::ElemSet named_set(const residua::Ring& r, std::initializer_list<std::string_view> names) {
    residua::ElemSet out;
    for (auto n : names) out.push_back(named(r, n));
    std::sort(out.begin(), out.end());
    return out;
}

/// Fifty well-formed expressions, several with irregular spacing.
inline const std::vector<std::string>& valid_corpus() {
    static const std::vector<std::string> corpus{
        "Z/1",
        "Z/2",
        "Z/4",
        "Z/12",
        " Z / 36 ",
        "Z/4096",
        "GF(2)",
        "GF(3)",
        "GF(4)",
        "GF( 8 )",
        "GF(9)",
        "GF(25)",
        "GF(49)",
        "GF(2)[x]/(x)",
        "GF(2)[x]/(x^2)",
        "GF(2)[x]/(x^2+1)",
        "GF(2)[x]/(x^2+x+1)",
        "GF(2)[x]/(x^3+x+1)",
        "GF(2) [x] / ( x^4 + x + 1 )",
        "GF(2)[x]/(1+x^2)",
        "GF(2)[x]/(x+x^3)",
        "GF(2)[x]/(3*x^2)",
        "GF(3)[x]/(x^2)",
        "GF(3)[x]/(x^2+1)",
        "GF(3)[x]/(2*x^2+x+2)",
        "GF(3)[x]/(x^3+2*x+1)",
        "GF(3)[x]/(x^2+x^1+x^0)",
        "GF(4)[x]/(x^2)",
        "GF(4)[x]/(x^2+x+2)",
        "GF(4)[x]/(3*x^2+2*x+1)",
        "GF(5)[x]/(x^2+2)",
        "GF(7)[x]/(x+3)",
        "GF(8)[x]/(x^2+x+5)",
        "GF(9)[x]/(x^2+1)",
        "GF(16)[x]/(x^2)",
        "prod(Z/2,Z/3)",
        "prod(GF(2),GF(2))",
        "prod( GF(4) , Z/4 )",
        "prod(GF(2)[x]/(x^2),GF(3))",
        "prod(prod(Z/2,Z/2),Z/2)",
        "prod(Z/2,prod(GF(2),GF(3)[x]/(x^2)))",
        "prod(prod(Z/2,Z/3),prod(Z/5,Z/7))",
        "sdp(2,0,zero)",
        "sdp(2,1,zero)",
        "sdp(2,1,unital)",
        "sdp(3,2,zero)",
        "sdp( 4 , 2 , unital )",
        "prod(sdp(2,1,zero),GF(2))",
        "prod(sdp(3,1,unital),Z/4)",
        "prod(GF(2)[x]/(x^3+x^2),sdp(2,2,unital))",
    };
    return corpus;
}

/// Twenty malformed inputs; each must fail with a positioned ParseError.
inline const std::vector<std::string>& invalid_corpus() {
    static const std::vector<std::string> corpus{
        "",
        "Z/",
        "Z",
        "Z4",
        "GF(",
        "GF(4",
        "GF()",
        "gf(2)",
        "Q/5",
        "prod(Z/2)",
        "prod(Z/2,",
        "prod(Z/2,Z/3",
        "sdp(2,1,foo)",
        "sdp(2,1)",
        "sdp(,1,zero)",
        "GF(2)[x]/(",
        "GF(2)[x]/(x^)",
        "GF(2)[x]/(x+)",
        "GF(2)[y]/(x)",
        "Z/4)",
    };
    return corpus;
}

}  // namespace fixtures
