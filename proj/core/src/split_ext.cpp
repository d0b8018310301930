#include "residua/split_ext.hpp"

#include <algorithm>
#include <sstream>

namespace residua {

namespace {

std::string pair_name(const NonUnitalAlgebra& a, Elem x, Elem k) {
    return "(" + a.name(x) + "," + a.base().name(k) + ")";
}

std::size_t checked_power(std::size_t base, std::size_t exp) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (acc > kTableCap / base) throw CapExceeded("algebra carrier exceeds table cap");
        acc *= base;
    }
    return acc;
}

// Carrier K^dim with the given componentwise product (or zero product).
NonUnitalAlgebra power_algebra(const Ring& base, std::size_t dim, bool componentwise,
                               const std::string& kind) {
    const std::size_t q = base.order();
    const std::size_t n = checked_power(q, dim);
    std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(dim));
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t v = a;
        for (std::size_t i = 0; i < dim; ++i) {
            digits[a][i] = static_cast<Elem>(v % q);
            v /= q;
        }
    }
    auto encode = [&](const std::vector<Elem>& c) {
        Elem idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) idx = static_cast<Elem>(idx * q + c[i]);
        return idx;
    };
    std::vector<Elem> add(n * n), mul(n * n), action(q * n);
    std::vector<Elem> tmp(dim);
    const std::vector<Elem> zero_vec(dim, base.zero());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < dim; ++i) tmp[i] = base.add(digits[a][i], digits[b][i]);
            add[a * n + b] = encode(tmp);
            if (componentwise) {
                for (std::size_t i = 0; i < dim; ++i)
                    tmp[i] = base.mul(digits[a][i], digits[b][i]);
                mul[a * n + b] = encode(tmp);
            } else {
                mul[a * n + b] = encode(zero_vec);
            }
        }
        for (Elem k = 0; k < q; ++k) {
            for (std::size_t i = 0; i < dim; ++i) tmp[i] = base.mul(k, digits[a][i]);
            action[k * n + a] = encode(tmp);
        }
    }
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (dim == 1) {
            names[a] = base.name(digits[a][0]);
            continue;
        }
        std::string s = "<";
        for (std::size_t i = 0; i < dim; ++i) s += (i ? " " : "") + base.name(digits[a][i]);
        names[a] = s + ">";
    }
    const std::string label =
        kind + "(" + base.label() + "^" + std::to_string(dim) + ")";
    return NonUnitalAlgebra::from_tables(base, n, std::move(add), std::move(mul),
                                         std::move(action), encode(zero_vec), label,
                                         std::move(names));
}

}  // namespace

// -- NonUnitalAlgebra -----------------------------------------------------------

std::optional<std::string> find_algebra_violation(const Ring& base, std::size_t n,
                                                  const std::vector<Elem>& add,
                                                  const std::vector<Elem>& mul,
                                                  const std::vector<Elem>& action, Elem zero) {
    const std::size_t q = base.order();
    if (n == 0) return "carrier must contain zero";
    if (add.size() != n * n || mul.size() != n * n || action.size() != q * n)
        return "shape: table sizes";
    if (zero >= n) return "shape: zero out of range";
    for (Elem v : add)
        if (v >= n) return "shape: entry out of range";
    for (Elem v : mul)
        if (v >= n) return "shape: entry out of range";
    for (Elem v : action)
        if (v >= n) return "shape: entry out of range";

    auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
    auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };
    auto S = [&](Elem k, Elem a) { return action[k * n + a]; };
    std::ostringstream msg;
    auto fail = [&](const char* what, Elem a, Elem b, Elem c) {
        msg << what << " fails at (" << a << ", " << b << ", " << c << ")";
        return msg.str();
    };

    for (Elem a = 0; a < n; ++a) {
        if (A(zero, a) != a) return fail("additive identity", a, 0, 0);
        bool inv = false;
        for (Elem b = 0; b < n && !inv; ++b) inv = A(a, b) == zero;
        if (!inv) return fail("additive inverse", a, 0, 0);
        for (Elem b = 0; b < n; ++b) {
            if (A(a, b) != A(b, a)) return fail("additive commutativity", a, b, 0);
            if (M(a, b) != M(b, a)) return fail("multiplicative commutativity", a, b, 0);
            for (Elem c = 0; c < n; ++c) {
                if (A(A(a, b), c) != A(a, A(b, c))) return fail("additive associativity", a, b, c);
                if (M(M(a, b), c) != M(a, M(b, c)))
                    return fail("multiplicative associativity", a, b, c);
                if (M(a, A(b, c)) != A(M(a, b), M(a, c))) return fail("distributivity", a, b, c);
            }
        }
    }
    for (Elem a = 0; a < n; ++a)
        if (S(base.one(), a) != a) return fail("unital action", a, 0, 0);
    for (Elem k = 0; k < q; ++k)
        for (Elem l = 0; l < q; ++l)
            for (Elem a = 0; a < n; ++a) {
                if (S(base.mul(k, l), a) != S(k, S(l, a))) return fail("action associativity", k, l, a);
                if (S(base.add(k, l), a) != A(S(k, a), S(l, a)))
                    return fail("action additivity in scalars", k, l, a);
            }
    for (Elem k = 0; k < q; ++k)
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                if (S(k, A(a, b)) != A(S(k, a), S(k, b)))
                    return fail("action additivity in vectors", k, a, b);
                if (S(k, M(a, b)) != M(S(k, a), b)) return fail("bilinearity k(ab)=(ka)b", k, a, b);
            }
    return std::nullopt;
}

NonUnitalAlgebra NonUnitalAlgebra::from_tables(Ring base, std::size_t n, std::vector<Elem> add,
                                               std::vector<Elem> mul, std::vector<Elem> action,
                                               Elem zero, std::string label,
                                               std::vector<std::string> names) {
    if (n > kTableCap) throw CapExceeded("algebra carrier exceeds table cap");
    if (auto bad = find_algebra_violation(base, n, add, mul, action, zero))
        throw AxiomViolation(*bad);
    if (!names.empty() && names.size() != n) throw AxiomViolation("shape: names size mismatch");
    NonUnitalAlgebra a;
    a.base_ = std::move(base);
    a.n_ = n;
    a.add_ = std::move(add);
    a.mul_ = std::move(mul);
    a.action_ = std::move(action);
    a.zero_ = zero;
    a.label_ = std::move(label);
    a.names_ = std::move(names);
    a.neg_.assign(n, zero);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (a.add(x, y) == zero) {
                a.neg_[x] = y;
                break;
            }
    return a;
}

std::string NonUnitalAlgebra::name(Elem a) const {
    return names_.empty() ? std::to_string(a) : names_[a];
}

std::optional<Elem> NonUnitalAlgebra::unit() const {
    for (Elem e = 0; e < n_; ++e) {
        bool ok = true;
        for (Elem a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a;
        if (ok) return e;
    }
    return std::nullopt;
}

bool NonUnitalAlgebra::is_square_zero() const {
    return std::all_of(mul_.begin(), mul_.end(), [&](Elem v) { return v == zero_; });
}

NonUnitalAlgebra zero_algebra(const Ring& base, std::size_t dim) {
    return power_algebra(base, dim, false, "zero");
}

NonUnitalAlgebra unital_algebra(const Ring& base, std::size_t dim) {
    return power_algebra(base, dim, true, "unital");
}

// -- semidirect product -----------------------------------------------------------

Ring semidirect_pair(const NonUnitalAlgebra& a) {
    const Ring& k = a.base();
    const std::size_t q = k.order();
    const std::size_t n = a.order() * q;
    if (n > kTableCap) throw CapExceeded("semidirect product exceeds table cap");
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem u = 0; u < n; ++u) {
        const Elem x = u / static_cast<Elem>(q), ku = u % static_cast<Elem>(q);
        for (Elem v = 0; v < n; ++v) {
            const Elem y = v / static_cast<Elem>(q), kv = v % static_cast<Elem>(q);
            add[u * n + v] = sdp_index(a, a.add(x, y), k.add(ku, kv));
            // (x,k)(y,l) = (xy + l.x + k.y, kl)
            const Elem first = a.add(a.add(a.mul(x, y), a.act(kv, x)), a.act(ku, y));
            mul[u * n + v] = sdp_index(a, first, k.mul(ku, kv));
        }
    }
    std::vector<std::string> names(n);
    for (Elem u = 0; u < n; ++u) names[u] = pair_name(a, u / static_cast<Elem>(q), u % static_cast<Elem>(q));
    return Ring::from_flat_tables(n, std::move(add), std::move(mul), sdp_index(a, a.zero(), k.zero()),
                                  sdp_index(a, a.zero(), k.one()),
                                  a.label() + " x| " + k.label(), std::move(names));
}

// -- triples ----------------------------------------------------------------------------

SplitTriple make_split_triple(Ring r, Ideal ideal, RingMorphism section) {
    if (auto bad = find_ideal_violation(r, ideal.members)) throw InvalidTriple(*bad);
    Quotient q = quotient(r, ideal);
    if (!section.unital) throw InvalidTriple("section must be unital");
    if (auto bad = find_morphism_violation(q.ring, r, section))
        throw InvalidTriple("section is not a homomorphism: " + *bad);
    for (Elem u = 0; u < q.ring.order(); ++u)
        if (q.projection(section(u)) != u)
            throw InvalidTriple("p.s differs from the identity at " + q.ring.name(u));
    return SplitTriple{std::move(r), std::move(ideal), std::move(q), std::move(section)};
}

SplitTriple pair_to_triple(const NonUnitalAlgebra& a) {
    Ring r = semidirect_pair(a);
    const Ring& k = a.base();
    Ideal ideal;
    for (Elem x = 0; x < a.order(); ++x) ideal.members.push_back(sdp_index(a, x, k.zero()));
    std::sort(ideal.members.begin(), ideal.members.end());
    if (auto bad = find_ideal_violation(r, ideal.members)) throw InvalidTriple(*bad);
    const Quotient q = quotient(r, ideal);
    RingMorphism s;
    s.unital = true;
    s.map.resize(q.ring.order());
    for (Elem c = 0; c < q.ring.order(); ++c) {
        const Elem kc = q.representatives[c] % static_cast<Elem>(k.order());
        s.map[c] = sdp_index(a, a.zero(), kc);
    }
    return make_split_triple(std::move(r), std::move(ideal), std::move(s));
}

TriplePair triple_to_pair(const SplitTriple& t) {
    const Ring& r = t.ring;
    const Ring& k = t.quotient.ring;
    const ElemSet& carrier = t.ideal.members;
    const std::size_t n = carrier.size();
    std::vector<Elem> index_of(r.order(), static_cast<Elem>(-1));
    for (Elem i = 0; i < n; ++i) index_of[carrier[i]] = i;
    auto at = [&](Elem x) {
        const Elem i = index_of[x];
        if (i == static_cast<Elem>(-1)) throw InvalidTriple("ideal not closed");
        return i;
    };
    std::vector<Elem> add(n * n), mul(n * n), action(k.order() * n);
    for (Elem i = 0; i < n; ++i) {
        for (Elem j = 0; j < n; ++j) {
            add[i * n + j] = at(r.add(carrier[i], carrier[j]));
            mul[i * n + j] = at(r.mul(carrier[i], carrier[j]));
        }
        for (Elem u = 0; u < k.order(); ++u) action[u * n + i] = at(r.mul(t.section(u), carrier[i]));
    }
    std::vector<std::string> names(n);
    for (Elem i = 0; i < n; ++i) names[i] = r.name(carrier[i]);
    try {
        auto alg = NonUnitalAlgebra::from_tables(k, n, std::move(add), std::move(mul),
                                                 std::move(action), at(r.zero()),
                                                 "I(" + r.label() + ")", std::move(names));
        return TriplePair{std::move(alg), carrier};
    } catch (const AxiomViolation& e) {
        throw InvalidTriple(std::string("ideal is not an algebra over R/I: ") + e.what());
    }
}

std::vector<RingMorphism> sections_enumerate(const Ring& r, const Ideal& ideal) {
    const Quotient q = quotient(r, ideal);
    std::vector<RingMorphism> out;
    for (auto& s : hom_enumerate(q.ring, r, true)) {
        bool section = true;
        for (Elem u = 0; u < q.ring.order() && section; ++u) section = q.projection(s(u)) == u;
        if (section) out.push_back(std::move(s));
    }
    return out;
}

PhiPsi build_phi_psi(const SplitTriple& t) {
    TriplePair pair = triple_to_pair(t);
    const NonUnitalAlgebra& alg = pair.algebra;
    Ring sdp = semidirect_pair(alg);
    const Ring& r = t.ring;
    const std::size_t q = alg.base().order();

    RingMorphism phi;
    phi.unital = true;
    phi.map.resize(sdp.order());
    for (Elem v = 0; v < sdp.order(); ++v) {
        const Elem x = v / static_cast<Elem>(q), u = v % static_cast<Elem>(q);
        phi.map[v] = r.add(pair.carrier[x], t.section(u));
    }
    std::vector<Elem> index_of(r.order(), static_cast<Elem>(-1));
    for (Elem i = 0; i < pair.carrier.size(); ++i) index_of[pair.carrier[i]] = i;
    RingMorphism psi;
    psi.unital = true;
    psi.map.resize(r.order());
    for (Elem x = 0; x < r.order(); ++x) {
        const Elem px = t.quotient.projection(x);
        const Elem diff = r.sub(x, t.section(px));
        if (index_of[diff] == static_cast<Elem>(-1))
            throw InvalidTriple("r - sp(r) is not in I at " + r.name(x));
        psi.map[x] = sdp_index(alg, index_of[diff], px);
    }
    if (auto bad = find_morphism_violation(sdp, r, phi)) throw InvalidTriple("phi: " + *bad);
    if (auto bad = find_morphism_violation(r, sdp, psi)) throw InvalidTriple("psi: " + *bad);
    return PhiPsi{std::move(pair), std::move(sdp), std::move(phi), std::move(psi)};
}

bool DiagramReport::all_pass() const {
    auto ok = [](const IdentityCheck& c) { return c.pass; };
    return std::all_of(identities.begin(), identities.end(), ok) &&
           std::all_of(morphisms.begin(), morphisms.end(), ok);
}

DiagramReport verify_split_diagram(const SplitTriple& t) {
    const PhiPsi pp = build_phi_psi(t);
    const NonUnitalAlgebra& alg = pp.pair.algebra;
    const Ring& r = t.ring;
    const Ring& k = t.quotient.ring;
    const Ring& sdp = pp.semidirect;
    const auto& p = t.quotient.projection;
    const auto& s = t.section;
    const Elem q = static_cast<Elem>(k.order());

    auto pi2 = [&](Elem v) { return v % q; };
    auto iota2 = [&](Elem u) { return sdp_index(alg, alg.zero(), u); };
    auto iota1 = [&](Elem x) { return sdp_index(alg, x, k.zero()); };
    auto incl = [&](Elem x) { return pp.pair.carrier[x]; };

    DiagramReport rep;
    auto check = [&](std::string name, std::size_t count, auto&& holds, auto&& describe) {
        IdentityCheck c{std::move(name), true, std::nullopt};
        for (Elem e = 0; e < count; ++e)
            if (!holds(e)) {
                c.pass = false;
                c.counterexample = describe(e);
                break;
            }
        return c;
    };
    auto sdp_name = [&](Elem v) { return sdp.name(v); };

    rep.identities.push_back(check(
        "phi.iota1 = i", alg.order(), [&](Elem x) { return pp.phi(iota1(x)) == incl(x); },
        [&](Elem x) { return alg.name(x); }));
    rep.identities.push_back(check(
        "p.phi = pi2", sdp.order(), [&](Elem v) { return p(pp.phi(v)) == pi2(v); }, sdp_name));
    rep.identities.push_back(check(
        "psi.s = iota2", k.order(), [&](Elem u) { return pp.psi(s(u)) == iota2(u); },
        [&](Elem u) { return k.name(u); }));
    rep.identities.push_back(check(
        "pi2.iota2 = 1", k.order(), [&](Elem u) { return pi2(iota2(u)) == u; },
        [&](Elem u) { return k.name(u); }));
    rep.identities.push_back(check(
        "phi.psi = 1_R", r.order(), [&](Elem x) { return pp.phi(pp.psi(x)) == x; },
        [&](Elem x) { return r.name(x); }));
    rep.identities.push_back(check(
        "psi.phi = 1", sdp.order(), [&](Elem v) { return pp.psi(pp.phi(v)) == v; }, sdp_name));

    auto morphism = [&](std::string name, const Ring& src, const Ring& tgt, RingMorphism f) {
        auto bad = find_morphism_violation(src, tgt, f);
        return IdentityCheck{std::move(name), !bad.has_value(), bad};
    };
    RingMorphism pi2_map{{}, true}, iota2_map{{}, true};
    for (Elem v = 0; v < sdp.order(); ++v) pi2_map.map.push_back(pi2(v));
    for (Elem u = 0; u < k.order(); ++u) iota2_map.map.push_back(iota2(u));
    rep.morphisms.push_back(morphism("p unital hom", r, k, p));
    rep.morphisms.push_back(morphism("s unital hom", k, r, s));
    rep.morphisms.push_back(morphism("phi unital hom", sdp, r, pp.phi));
    rep.morphisms.push_back(morphism("psi unital hom", r, sdp, pp.psi));
    rep.morphisms.push_back(morphism("pi2 unital hom", sdp, k, pi2_map));
    rep.morphisms.push_back(morphism("iota2 unital hom", k, sdp, iota2_map));

    // i and iota1 live on the non-unital carrier I: only + and * are checked.
    auto nonunital = [&](std::string name, auto&& f, auto&& add_t, auto&& mul_t) {
        return check(
            std::move(name), alg.order() * alg.order(),
            [&](Elem e) {
                const Elem x = e / static_cast<Elem>(alg.order());
                const Elem y = e % static_cast<Elem>(alg.order());
                return f(alg.add(x, y)) == add_t(f(x), f(y)) &&
                       f(alg.mul(x, y)) == mul_t(f(x), f(y));
            },
            [&](Elem e) {
                return alg.name(e / static_cast<Elem>(alg.order())) + "," +
                       alg.name(e % static_cast<Elem>(alg.order()));
            });
    };
    rep.morphisms.push_back(nonunital(
        "i preserves + and *", incl, [&](Elem a, Elem b) { return r.add(a, b); },
        [&](Elem a, Elem b) { return r.mul(a, b); }));
    rep.morphisms.push_back(nonunital(
        "iota1 preserves + and *", iota1, [&](Elem a, Elem b) { return sdp.add(a, b); },
        [&](Elem a, Elem b) { return sdp.mul(a, b); }));
    return rep;
}

// -- round trips --------------------------------------------------------------------

std::optional<std::vector<Elem>> find_algebra_isomorphism(const NonUnitalAlgebra& a,
                                                          const NonUnitalAlgebra& b,
                                                          const RingMorphism& sigma) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.base().order() != b.base().order()) return std::nullopt;
    if (a.is_square_zero() != b.is_square_zero()) return std::nullopt;
    if (a.unit().has_value() != b.unit().has_value()) return std::nullopt;
    const std::size_t n = a.order();
    const std::size_t q = a.base().order();
    constexpr Elem kUnset = static_cast<Elem>(-1);
    std::vector<Elem> map(n, kUnset), pre(n, kUnset), trail;

    auto assign = [&](Elem x0, Elem y0) {
        std::vector<std::pair<Elem, Elem>> work{{x0, y0}};
        while (!work.empty()) {
            auto [x, y] = work.back();
            work.pop_back();
            if (map[x] != kUnset) {
                if (map[x] != y) return false;
                continue;
            }
            if (pre[y] != kUnset) return false;
            map[x] = y;
            pre[y] = x;
            trail.push_back(x);
            for (Elem c = 0; c < q; ++c) work.emplace_back(a.act(c, x), b.act(sigma(c), y));
            for (Elem z : trail) {
                work.emplace_back(a.add(x, z), b.add(y, map[z]));
                work.emplace_back(a.mul(x, z), b.mul(y, map[z]));
            }
        }
        return true;
    };
    auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
            const Elem x = trail.back();
            trail.pop_back();
            pre[map[x]] = kUnset;
            map[x] = kUnset;
        }
    };
    if (!assign(a.zero(), b.zero())) return std::nullopt;

    std::optional<std::vector<Elem>> result;
    auto descend = [&](auto&& self) -> void {
        if (result) return;
        Elem next = 0;
        while (next < n && map[next] != kUnset) ++next;
        if (next == n) {
            result = map;
            return;
        }
        const std::size_t mark = trail.size();
        for (Elem y = 0; y < n && !result; ++y) {
            if (pre[y] != kUnset) continue;
            if (assign(next, y)) self(self);
            if (!result) undo(mark);
        }
    };
    descend(descend);
    return result;
}

RoundtripReport equivalence_roundtrip(const NonUnitalAlgebra& a) {
    RoundtripReport rep;
    const SplitTriple t = pair_to_triple(a);
    const TriplePair back = triple_to_pair(t);
    const auto sigma = find_isomorphism(a.base(), back.algebra.base());
    rep.base_isomorphic = sigma.has_value();
    if (sigma) rep.algebra_isomorphic = find_algebra_isomorphism(a, back.algebra, *sigma).has_value();
    rep.triple_isomorphic = triple_roundtrip(t);
    return rep;
}

bool triple_roundtrip(const SplitTriple& t) {
    const PhiPsi pp = build_phi_psi(t);
    const SplitTriple again = pair_to_triple(pp.pair.algebra);
    // again.ring is I x| (R/I) with the same indexing as pp.semidirect.
    if (!again.ring.same_tables(pp.semidirect)) return false;
    if (!is_injective(pp.phi, t.ring.order()) || !is_surjective(pp.phi, t.ring.order()))
        return false;
    ElemSet image;
    for (Elem v : again.ideal.members) image.push_back(pp.phi(v));
    std::sort(image.begin(), image.end());
    if (image != t.ideal.members) return false;
    for (Elem u = 0; u < t.quotient.ring.order(); ++u) {
        const Elem again_u = again.quotient.projection(sdp_index(pp.pair.algebra, pp.pair.algebra.zero(), u));
        if (pp.phi(again.section(again_u)) != t.section(u)) return false;
    }
    return true;
}

// -- extreme cases ----------------------------------------------------------------------

UnitalExtremeReport extreme_unital_check(const NonUnitalAlgebra& a) {
    const auto e = a.unit();
    if (!e || *e == a.zero()) throw PreconditionUnmet("algebra has no unit different from zero");
    const Ring& k = a.base();
    UnitalExtremeReport rep;
    rep.ring = semidirect_pair(a);
    const Ring& r = rep.ring;
    rep.unit = *e;
    rep.probe = sdp_index(a, a.neg(*e), k.one());
    rep.trace.push_back("probe (-e,1) = " + r.name(rep.probe) + " with e = " + a.name(*e));
    rep.trace.push_back("(-e,1)(b,l) = ((-e)b + l(-e) + 1b, l) = (-l.e, l)");
    bool nonunit = true;
    bool formula = true;
    const Elem q = static_cast<Elem>(k.order());
    for (Elem v = 0; v < r.order(); ++v) {
        const Elem prod = r.mul(rep.probe, v);
        const Elem l = v % q;
        if (prod == r.one()) nonunit = false;
        if (prod != sdp_index(a, a.neg(a.act(l, *e)), l)) formula = false;
        rep.trace.push_back(r.name(rep.probe) + r.name(v) + " = " + r.name(prod));
    }
    rep.trace.push_back("= (0,1) needs l = 1 and l.e = 0, so 1 = k = 0: no inverse");
    rep.probe_is_nonunit = nonunit && formula;
    rep.idempotent = sdp_index(a, *e, k.zero());
    const Elem sq = r.mul(rep.idempotent, rep.idempotent);
    rep.idempotent_witness =
        sq == rep.idempotent && rep.idempotent != r.zero() && rep.idempotent != r.one();
    rep.trace.push_back("(e,0)^2 = " + r.name(sq) + ", idempotent different from 0 and 1");
    rep.ring_is_local = is_local(r);
    return rep;
}

SquareZeroExtremeReport extreme_squarezero_check(const NonUnitalAlgebra& a) {
    const Ring& k = a.base();
    if (!is_field(k)) throw PreconditionUnmet("base ring is not a field");
    if (!a.is_square_zero()) throw PreconditionUnmet("algebra multiplication is not identically zero");
    SquareZeroExtremeReport rep;
    rep.ring = semidirect_pair(a);
    const Ring& r = rep.ring;
    const UnitGroup ku = units(k);
    rep.inverse_formula_holds = true;
    for (Elem x = 0; x < a.order(); ++x)
        for (Elem c = 0; c < k.order(); ++c) {
            if (c == k.zero()) continue;
            const Elem cinv = *ku.inverse[c];
            const Elem cinv2 = k.mul(cinv, cinv);
            const Elem candidate = sdp_index(a, a.neg(a.act(cinv2, x)), cinv);
            const Elem elem = sdp_index(a, x, c);
            const Elem prod = r.mul(elem, candidate);
            rep.trace.push_back(r.name(elem) + r.name(candidate) + " = " + r.name(prod));
            if (prod != r.one() && rep.inverse_formula_holds) {
                rep.inverse_formula_holds = false;
                rep.first_failure = r.name(elem);
            }
        }
    const UnitGroup ru = units(r);
    const Elem q = static_cast<Elem>(k.order());
    rep.units_are_nonzero_k = true;
    for (Elem v = 0; v < r.order(); ++v)
        if (ru.contains(v) != (v % q != k.zero())) rep.units_are_nonzero_k = false;
    const auto m = local_maximal_ideal(r);
    rep.ring_is_local = m.has_value();
    if (m) {
        ElemSet expected;
        for (Elem x = 0; x < a.order(); ++x) expected.push_back(sdp_index(a, x, k.zero()));
        std::sort(expected.begin(), expected.end());
        rep.maximal_is_a = m->members == expected;
    }
    return rep;
}

}  // namespace residua
