#include "residua/representatives.hpp"

#include <algorithm>
#include <set>

namespace residua {

namespace {

bool is_strict_subset(const ElemSet& small, const ElemSet& big) {
    return small.size() < big.size() &&
           std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_subset(const ElemSet& small, const ElemSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_maximal_ideal(const Ring& a, const Ideal& m) {
    if (find_ideal_violation(a, m.members)) return false;
    if (m.size() == a.order()) return false;
    return is_field(quotient(a, m).ring);
}

}  // namespace

KappaAlgebra make_kappa_algebra(const Ring& ring, const Subring& kappa) {
    if (!kappa.contains_one || !is_subfield(ring, kappa))
        throw InvalidInput("kappa is not a subfield containing the ring's one");
    auto [kring, incl] = subring_table(ring, kappa);
    return KappaAlgebra{ring, kappa, std::move(kring), std::move(incl)};
}

std::vector<Subring> enumerate_subfields(const Ring& r, bool require_one) {
    if (r.order() > kEnumerationCap)
        throw CapExceeded("subfield enumeration above order " + std::to_string(kEnumerationCap));
    // Every finite field is generated over its prime field by one element.
    std::set<ElemSet> seen;
    std::vector<Subring> out;
    for (Elem a = 0; a < r.order(); ++a) {
        const Elem seed[] = {a};
        Subring s = subring_generated(r, seed, require_one);
        if (!seen.insert(s.members).second) continue;
        if (is_subfield(r, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Subring> largest_subfield(const Ring& r) {
    const auto fields = enumerate_subfields(r, true);
    for (const auto& k : fields) {
        const bool contains_all = std::all_of(fields.begin(), fields.end(), [&](const Subring& o) {
            return is_subset(o.members, k.members);
        });
        if (contains_all) return k;
    }
    return std::nullopt;
}

std::vector<Subring> maximal_subfields(const Ring& r) {
    const auto fields = enumerate_subfields(r, true);
    std::vector<Subring> out;
    for (const auto& k : fields) {
        const bool has_superfield = std::any_of(fields.begin(), fields.end(), [&](const Subring& o) {
            return is_strict_subset(k.members, o.members);
        });
        if (!has_superfield) out.push_back(k);
    }
    return out;
}

DecompositionReport residue_restriction(const Ring& a, const Subring& kappa, const Ideal& m) {
    if (!is_subfield(a, kappa)) throw InvalidInput("kappa is not a subfield");
    if (!is_maximal_ideal(a, m)) throw InvalidInput("ideal is not maximal");
    const Quotient q = quotient(a, m);

    DecompositionReport rep;
    rep.kappa = kappa;
    rep.maximal = m;

    std::vector<char> hit(q.ring.order(), 0);
    rep.restriction_injective = true;
    for (Elem u : kappa.members) {
        const Elem image = q.projection(u);
        if (hit[image]) rep.restriction_injective = false;
        hit[image] = 1;
    }
    rep.restriction_surjective =
        std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });

    rep.intersection_trivial = true;
    for (Elem u : kappa.members)
        if (u != a.zero() && m.contains(u)) rep.intersection_trivial = false;

    std::vector<std::size_t> ways(a.order(), 0);
    for (Elem u : kappa.members)
        for (Elem x : m.members) ++ways[a.add(u, x)];
    rep.sum_covers = std::all_of(ways.begin(), ways.end(), [](std::size_t w) { return w > 0; });
    rep.unique_sum = std::all_of(ways.begin(), ways.end(), [](std::size_t w) { return w == 1; });

    rep.verdict = rep.restriction_injective && rep.restriction_surjective;
    rep.biconditional_holds = (rep.intersection_trivial && rep.sum_covers) == rep.verdict;
    return rep;
}

bool check_unit_decomposition(const Ring& a, const Subring& kappa) {
    if (a.is_zero_ring()) throw PreconditionUnmet("zero ring");
    const auto m = local_maximal_ideal(a);
    if (!m) throw PreconditionUnmet("ring is not local");
    const auto largest = largest_subfield(a);
    if (!largest || largest->members != kappa.members)
        throw PreconditionUnmet("kappa is not the largest subfield");

    std::vector<char> decomposed(a.order(), 0);
    for (Elem u : kappa.members) {
        if (u == a.zero()) continue;
        for (Elem x : m->members) decomposed[a.add(u, x)] = 1;
    }
    const UnitGroup u = units(a);
    for (Elem x = 0; x < a.order(); ++x)
        if (static_cast<bool>(decomposed[x]) != u.contains(x)) return false;
    return true;
}

std::optional<bool> check_theorem_qfld(const Ring& a) {
    if (a.is_zero_ring()) return std::nullopt;
    const auto m = local_maximal_ideal(a);
    if (!m) return std::nullopt;
    const auto kappa = largest_subfield(a);
    if (!kappa) return std::nullopt;
    return residue_restriction(a, *kappa, *m).verdict;
}

bool check_prop_maximal(const Ring& a, const Subring& kappa, const Ideal& m) {
    if (!residue_restriction(a, kappa, m).verdict)
        throw PreconditionUnmet("projection restricted to kappa is not a bijection");
    const auto fields = enumerate_subfields(a, true);
    return std::none_of(fields.begin(), fields.end(), [&](const Subring& o) {
        return is_strict_subset(kappa.members, o.members);
    });
}

std::vector<Subring> fields_of_representatives(const Ring& a, const Ideal& m) {
    std::vector<Subring> out;
    for (auto& k : enumerate_subfields(a, true))
        if (residue_restriction(a, k, m).verdict) out.push_back(std::move(k));
    return out;
}

std::vector<RingMorphism> algebra_homs(const KappaAlgebra& ka) {
    std::vector<RingMorphism> out;
    for (auto& h : hom_enumerate(ka.ring, ka.kappa_ring, true)) {
        bool fixes_kappa = true;
        for (Elem i = 0; i < ka.kappa_ring.order() && fixes_kappa; ++i)
            fixes_kappa = h(ka.embedding(i)) == i;
        if (fixes_kappa) out.push_back(std::move(h));
    }
    return out;
}

GelfandReport gelfand_bijection_check(const KappaAlgebra& ka) {
    GelfandReport rep;
    rep.homs = algebra_homs(ka);
    rep.maximal = maximal_ideals(ka.ring);
    for (const auto& m : rep.maximal)
        rep.residue_surjective.push_back(
            residue_restriction(ka.ring, ka.kappa, m).restriction_surjective);

    rep.kernels_maximal = true;
    for (const auto& h : rep.homs) {
        Ideal ker;
        for (Elem x = 0; x < ka.ring.order(); ++x)
            if (h(x) == ka.kappa_ring.zero()) ker.members.push_back(x);
        auto it = std::find(rep.maximal.begin(), rep.maximal.end(), ker);
        if (it == rep.maximal.end()) {
            rep.kernels_maximal = false;
            rep.kernel_index.push_back(rep.maximal.size());
        } else {
            rep.kernel_index.push_back(static_cast<std::size_t>(it - rep.maximal.begin()));
        }
    }
    std::set<std::size_t> image(rep.kernel_index.begin(), rep.kernel_index.end());
    rep.injective = rep.kernels_maximal && image.size() == rep.homs.size();

    std::set<std::size_t> expected;
    for (std::size_t j = 0; j < rep.maximal.size(); ++j)
        if (rep.residue_surjective[j]) expected.insert(j);
    rep.restricted_bijection = rep.injective && image == expected;
    rep.full_bijection = rep.restricted_bijection && expected.size() == rep.maximal.size();
    return rep;
}

AbsIsoSearch search_absiso_gap(std::span<const Ring> catalog) {
    AbsIsoSearch out;
    for (const Ring& a : catalog) {
        if (a.is_zero_ring()) continue;
        const auto subfields = enumerate_subfields(a, true);
        for (const auto& m : maximal_ideals(a)) {
            const Ring residue = quotient(a, m).ring;
            std::vector<bool> verdicts;
            for (const auto& k : subfields) verdicts.push_back(residue_restriction(a, k, m).verdict);
            const bool any_verdict =
                std::find(verdicts.begin(), verdicts.end(), true) != verdicts.end();
            for (std::size_t i = 0; i < subfields.size(); ++i) {
                ++out.triples_examined;
                if (verdicts[i]) continue;
                const Ring kring = subring_table(a, subfields[i]).first;
                if (!find_isomorphism(residue, kring)) continue;
                out.findings.push_back(AbsIsoFinding{a.label(), subfields[i], m, any_verdict});
            }
        }
    }
    return out;
}

}  // namespace residua
