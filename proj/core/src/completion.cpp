#include "residua/completion.hpp"

#include <map>

namespace residua {

Ideal ideal_power(const Ring& r, const Ideal& ideal, std::size_t n) {
    if (n == 0) throw InvalidInput("ideal power exponent must be >= 1");
    Ideal acc = ideal;
    for (std::size_t i = 1; i < n; ++i) acc = ideal_product(r, acc, ideal);
    return acc;
}

std::size_t stable_index(const Ring& r, const Ideal& ideal) {
    std::size_t n = 1;
    Ideal cur = ideal;
    for (;;) {
        Ideal next = ideal_product(r, cur, ideal);
        if (next == cur) return n;
        cur = std::move(next);
        ++n;
    }
}

TowerSystem build_tower(const Ring& r, const Ideal& ideal, std::size_t depth) {
    if (depth == 0) throw InvalidInput("tower depth must be >= 1");
    TowerSystem t;
    t.depth = depth;
    for (std::size_t n = 1; n <= depth; ++n) {
        t.powers.push_back(n == 1 ? ideal : ideal_product(r, t.powers.back(), ideal));
        t.levels.push_back(quotient(r, t.powers.back()));
    }
    for (std::size_t n = 1; n < depth; ++n) {
        const Quotient& upper = t.levels[n];
        const Quotient& lower = t.levels[n - 1];
        RingMorphism q{{}, true};
        for (Elem c = 0; c < upper.ring.order(); ++c)
            q.map.push_back(lower.projection(upper.representatives[c]));
        if (auto bad = find_morphism_violation(upper.ring, lower.ring, q))
            throw Error("tower transition is not a homomorphism: " + *bad);
        t.transitions.push_back(std::move(q));
    }
    return t;
}

InverseLimit inverse_limit(const Ring& r, const Ideal& ideal) {
    const std::size_t depth = stable_index(r, ideal) + 1;
    TowerSystem tower = build_tower(r, ideal, depth);

    std::vector<std::vector<Elem>> tuples;
    for (Elem c = 0; c < tower.levels[0].ring.order(); ++c) tuples.push_back({c});
    for (std::size_t n = 1; n < depth; ++n) {
        std::vector<std::vector<Elem>> longer;
        const RingMorphism& down = tower.transitions[n - 1];
        for (const auto& t : tuples)
            for (Elem c = 0; c < tower.levels[n].ring.order(); ++c)
                if (down(c) == t.back()) {
                    auto ext = t;
                    ext.push_back(c);
                    longer.push_back(std::move(ext));
                }
        tuples = std::move(longer);
        if (tuples.size() > kTableCap) throw CapExceeded("inverse limit exceeds table cap");
    }

    std::map<std::vector<Elem>, Elem> index;
    for (Elem i = 0; i < tuples.size(); ++i) index.emplace(tuples[i], i);
    const std::size_t n = tuples.size();
    auto componentwise = [&](const std::vector<Elem>& a, const std::vector<Elem>& b, bool mul) {
        std::vector<Elem> out(depth);
        for (std::size_t l = 0; l < depth; ++l) {
            const Ring& ring = tower.levels[l].ring;
            out[l] = mul ? ring.mul(a[l], b[l]) : ring.add(a[l], b[l]);
        }
        return index.at(out);
    };
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem i = 0; i < n; ++i)
        for (Elem j = 0; j < n; ++j) {
            add[i * n + j] = componentwise(tuples[i], tuples[j], false);
            mul[i * n + j] = componentwise(tuples[i], tuples[j], true);
        }
    std::vector<Elem> zero_t(depth), one_t(depth);
    for (std::size_t l = 0; l < depth; ++l) {
        zero_t[l] = tower.levels[l].ring.zero();
        one_t[l] = tower.levels[l].ring.one();
    }
    std::vector<std::string> names(n);
    for (Elem i = 0; i < n; ++i) {
        std::string s = "(";
        for (std::size_t l = 0; l < depth; ++l)
            s += (l ? "," : "") + tower.levels[l].ring.name(tuples[i][l]);
        names[i] = s + ")";
    }
    Ring limit(detail::trusted, n, std::move(add), std::move(mul), index.at(zero_t), index.at(one_t),
               "lim(" + r.label() + ")", std::move(names));

    RingMorphism natural{{}, true};
    for (Elem x = 0; x < r.order(); ++x) {
        std::vector<Elem> t(depth);
        for (std::size_t l = 0; l < depth; ++l) t[l] = tower.levels[l].projection(x);
        natural.map.push_back(index.at(t));
    }

    // Projection onto R/I^N, N the stable index.
    const Quotient& stable = tower.levels[depth - 2];
    RingMorphism onto_stable{{}, true};
    for (const auto& t : tuples) onto_stable.map.push_back(t[depth - 2]);
    const bool stabilizes = is_homomorphism(limit, stable.ring, onto_stable) &&
                            is_injective(onto_stable, stable.ring.order()) &&
                            is_surjective(onto_stable, stable.ring.order());

    return InverseLimit{std::move(tower), std::move(tuples), std::move(limit), std::move(natural),
                        stabilizes};
}

bool is_complete(const Ring& r, const Ideal& ideal) {
    const InverseLimit lim = inverse_limit(r, ideal);
    return is_injective(lim.natural, lim.ring.order()) &&
           is_surjective(lim.natural, lim.ring.order());
}

DichotomyReport dichotomy_check(const Ring& r, const Ideal& ideal) {
    DichotomyReport rep;
    rep.stable_index = stable_index(r, ideal);
    rep.idempotent = ideal_product(r, ideal, ideal) == ideal;
    rep.nilpotent = ideal_power(r, ideal, rep.stable_index) == zero_ideal(r);
    rep.is_zero = ideal == zero_ideal(r);
    rep.complete = is_complete(r, ideal);
    if (rep.idempotent) rep.idempotent_assertion = rep.complete == rep.is_zero;
    if (rep.nilpotent) rep.nilpotent_assertion = rep.complete;
    return rep;
}

SurveyReport complete_local_survey(std::span<const Ring> catalog) {
    SurveyReport out;
    for (const Ring& r : catalog) {
        if (r.is_zero_ring()) continue;
        const auto m = local_maximal_ideal(r);
        if (!m) continue;
        SurveyRow row;
        row.ring = r.label();
        row.order = r.order();
        row.maximal_size = m->size();
        row.stable_index = stable_index(r, *m);
        row.nilpotent = ideal_power(r, *m, row.stable_index) == zero_ideal(r);
        row.complete = is_complete(r, *m);
        row.semidirect =
            r.label().rfind("sdp(", 0) == 0 || r.label().find(" x| ") != std::string::npos;
        if (!row.complete) out.counterexamples.push_back(row);
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace residua
