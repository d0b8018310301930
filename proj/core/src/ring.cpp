#include "residua/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace residua {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
    std::ostringstream out;
    out << "(a=" << a << ", b=" << b << ", c=" << c << ")";
    return out.str();
}

ElemSet to_set(const std::vector<char>& flags) {
    ElemSet out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(static_cast<Elem>(i));
    return out;
}

}  // namespace

// -- Ring ---------------------------------------------------------------------

std::optional<std::string> find_axiom_violation(std::size_t n, std::span<const Elem> add,
                                                std::span<const Elem> mul, Elem zero, Elem one,
                                                bool cubic) {
    if (n == 0) return "carrier: ring must have at least one element";
    if (add.size() != n * n || mul.size() != n * n) return "shape: tables must be n x n";
    if (zero >= n || one >= n) return "shape: zero/one index out of range";
    for (std::size_t i = 0; i < n * n; ++i)
        if (add[i] >= n || mul[i] >= n) return "shape: table entry out of range";

    auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
    auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };
    std::ostringstream msg;

    for (Elem a = 0; a < n; ++a) {
        if (A(zero, a) != a || A(a, zero) != a) {
            msg << "additive identity fails at (a=" << a << ")";
            return msg.str();
        }
    }
    for (Elem a = 0; a < n; ++a) {
        bool found = false;
        for (Elem b = 0; b < n && !found; ++b) found = A(a, b) == zero;
        if (!found) {
            msg << "additive inverse missing for (a=" << a << ")";
            return msg.str();
        }
    }
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = a + 1; b < n; ++b) {
            if (A(a, b) != A(b, a)) {
                msg << "additive commutativity fails at (a=" << a << ", b=" << b << ")";
                return msg.str();
            }
            if (M(a, b) != M(b, a)) {
                msg << "multiplicative commutativity fails at (a=" << a << ", b=" << b << ")";
                return msg.str();
            }
        }
    }
    for (Elem a = 0; a < n; ++a) {
        if (M(one, a) != a || M(a, one) != a) {
            msg << "multiplicative identity fails at (a=" << a << "): one*a = " << M(one, a);
            return msg.str();
        }
    }
    if (zero == one && n != 1) return "zero equals one in a ring with more than one element";
    if (!cubic) return std::nullopt;

    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            const Elem ab_add = A(a, b);
            const Elem ab_mul = M(a, b);
            for (Elem c = 0; c < n; ++c) {
                if (A(ab_add, c) != A(a, A(b, c)))
                    return "additive associativity fails at " + triple(a, b, c);
                if (M(ab_mul, c) != M(a, M(b, c)))
                    return "multiplicative associativity fails at " + triple(a, b, c);
                if (M(a, A(b, c)) != A(ab_mul, M(a, c)))
                    return "distributivity fails at " + triple(a, b, c);
            }
        }
    }
    return std::nullopt;
}

Ring Ring::from_tables(const std::vector<std::vector<Elem>>& add,
                       const std::vector<std::vector<Elem>>& mul, Elem zero, Elem one,
                       std::string label, std::vector<std::string> names) {
    const std::size_t n = add.size();
    if (mul.size() != n) throw AxiomViolation("shape: add and mul tables differ in size");
    std::vector<Elem> flat_add, flat_mul;
    flat_add.reserve(n * n);
    flat_mul.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (add[i].size() != n || mul[i].size() != n)
            throw AxiomViolation("shape: tables must be n x n");
        flat_add.insert(flat_add.end(), add[i].begin(), add[i].end());
        flat_mul.insert(flat_mul.end(), mul[i].begin(), mul[i].end());
    }
    return from_flat_tables(n, std::move(flat_add), std::move(flat_mul), zero, one,
                            std::move(label), std::move(names));
}

Ring Ring::from_flat_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                            Elem one, std::string label, std::vector<std::string> names) {
    if (n > kTableCap)
        throw CapExceeded("ring order " + std::to_string(n) + " exceeds table cap " +
                          std::to_string(kTableCap));
    if (auto bad = find_axiom_violation(n, add, mul, zero, one, true)) throw AxiomViolation(*bad);
    if (!names.empty() && names.size() != n) throw AxiomViolation("shape: names size mismatch");
    Ring r;
    r.n_ = n;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.one_ = one;
    r.label_ = std::move(label);
    r.names_ = std::move(names);
    r.finish_negation();
    return r;
}

Ring::Ring(detail::trusted_t, std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
           Elem zero, Elem one, std::string label, std::vector<std::string> names)
    : n_(n),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      label_(std::move(label)),
      names_(std::move(names)) {
    if (n_ > kTableCap)
        throw CapExceeded("ring order " + std::to_string(n_) + " exceeds table cap " +
                          std::to_string(kTableCap));
    if (auto bad = find_axiom_violation(n_, add_, mul_, zero_, one_,
                                        n_ <= detail::kTrustedCubicCheckCap))
        throw AxiomViolation(*bad);
    finish_negation();
}

void Ring::finish_negation() {
    neg_.assign(n_, zero_);
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            if (add(a, b) == zero_) {
                neg_[a] = b;
                break;
            }
}

Elem Ring::times(std::size_t k, Elem a) const noexcept {
    Elem acc = zero_;
    for (std::size_t i = 0; i < k; ++i) acc = add(acc, a);
    return acc;
}

Elem Ring::pow(Elem a, std::size_t e) const noexcept {
    Elem acc = one_;
    Elem base = a;
    while (e > 0) {
        if (e & 1U) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return acc;
}

std::string Ring::name(Elem a) const {
    if (names_.empty()) return std::to_string(a);
    return names_[a];
}

Ring Ring::relabeled(std::string label) const {
    Ring copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

bool Ring::same_tables(const Ring& other) const noexcept {
    return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
           mul_ == other.mul_;
}

// -- subsets ------------------------------------------------------------------

bool Ideal::contains(Elem a) const { return std::binary_search(members.begin(), members.end(), a); }

ElemSet Ideal::nonzero_members(const Ring& r) const {
    ElemSet out;
    for (Elem a : members)
        if (a != r.zero()) out.push_back(a);
    return out;
}

bool Subring::contains(Elem a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

// -- morphisms ------------------------------------------------------------------

std::optional<std::string> find_morphism_violation(const Ring& source, const Ring& target,
                                                   const RingMorphism& f) {
    const std::size_t n = source.order();
    if (f.map.size() != n) return "map length differs from source order";
    for (Elem a : f.map)
        if (a >= target.order()) return "image index out of range";
    std::ostringstream msg;
    if (f(source.zero()) != target.zero()) return "zero is not mapped to zero";
    if (f.unital && f(source.one()) != target.one()) return "one is not mapped to one";
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = a; b < n; ++b) {
            if (f(source.add(a, b)) != target.add(f(a), f(b))) {
                msg << "addition not preserved at (" << source.name(a) << ", " << source.name(b)
                    << ")";
                return msg.str();
            }
            if (f(source.mul(a, b)) != target.mul(f(a), f(b))) {
                msg << "multiplication not preserved at (" << source.name(a) << ", "
                    << source.name(b) << ")";
                return msg.str();
            }
        }
    }
    return std::nullopt;
}

bool is_homomorphism(const Ring& source, const Ring& target, const RingMorphism& f) {
    return !find_morphism_violation(source, target, f).has_value();
}

bool is_injective(const RingMorphism& f, std::size_t target_order) {
    std::vector<char> hit(target_order, 0);
    for (Elem a : f.map) {
        if (hit[a]) return false;
        hit[a] = 1;
    }
    return true;
}

bool is_surjective(const RingMorphism& f, std::size_t target_order) {
    std::vector<char> hit(target_order, 0);
    for (Elem a : f.map) hit[a] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

RingMorphism compose(const RingMorphism& g, const RingMorphism& f) {
    RingMorphism out;
    out.unital = g.unital && f.unital;
    out.map.reserve(f.map.size());
    for (Elem a : f.map) out.map.push_back(g(a));
    return out;
}

RingMorphism identity_morphism(const Ring& r) {
    RingMorphism id;
    id.map.resize(r.order());
    for (Elem a = 0; a < r.order(); ++a) id.map[a] = a;
    return id;
}

// -- constructions --------------------------------------------------------------

Ring zmod(std::size_t n) {
    if (n == 0) throw InvalidInput("Z/n requires n >= 1");
    if (n > kTableCap) throw CapExceeded("Z/" + std::to_string(n) + " exceeds table cap");
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            add[a * n + b] = static_cast<Elem>((a + b) % n);
            mul[a * n + b] = static_cast<Elem>((a * b) % n);
        }
    return Ring(detail::trusted, n, std::move(add), std::move(mul), 0, static_cast<Elem>(1 % n),
                "Z/" + std::to_string(n), {});
}

Ring product(const Ring& r, const Ring& s) {
    const std::size_t n = r.order(), m = s.order();
    const std::size_t order = n * m;
    if (order > kTableCap)
        throw CapExceeded("product order " + std::to_string(order) + " exceeds table cap");
    std::vector<Elem> add(order * order), mul(order * order);
    for (Elem a = 0; a < order; ++a) {
        const Elem ar = a / m, as = a % m;
        for (Elem b = 0; b < order; ++b) {
            const Elem br = b / m, bs = b % m;
            add[a * order + b] = r.add(ar, br) * m + s.add(as, bs);
            mul[a * order + b] = r.mul(ar, br) * m + s.mul(as, bs);
        }
    }
    std::vector<std::string> names(order);
    for (Elem a = 0; a < order; ++a) names[a] = "(" + r.name(a / m) + "," + s.name(a % m) + ")";
    return Ring(detail::trusted, order, std::move(add), std::move(mul),
                r.zero() * static_cast<Elem>(m) + s.zero(), r.one() * static_cast<Elem>(m) + s.one(),
                "prod(" + r.label() + "," + s.label() + ")", std::move(names));
}

Quotient quotient(const Ring& r, const Ideal& ideal) {
    if (auto bad = find_ideal_violation(r, ideal.members)) throw InvalidIdeal(*bad);
    const std::size_t n = r.order();
    std::vector<Elem> least(n);
    for (Elem a = 0; a < n; ++a) {
        Elem best = a;
        for (Elem i : ideal.members) best = std::min(best, r.add(a, i));
        least[a] = best;
    }
    ElemSet reps = least;
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    const std::size_t k = reps.size();
    std::vector<Elem> coset_of_rep(n, 0);
    for (Elem c = 0; c < k; ++c) coset_of_rep[reps[c]] = c;

    RingMorphism p;
    p.unital = true;
    p.map.resize(n);
    for (Elem a = 0; a < n; ++a) p.map[a] = coset_of_rep[least[a]];

    std::vector<Elem> add(k * k), mul(k * k);
    std::vector<std::string> names(k);
    for (Elem c = 0; c < k; ++c) {
        names[c] = "[" + r.name(reps[c]) + "]";
        for (Elem d = 0; d < k; ++d) {
            add[c * k + d] = p(r.add(reps[c], reps[d]));
            mul[c * k + d] = p(r.mul(reps[c], reps[d]));
        }
    }
    Ring q(detail::trusted, k, std::move(add), std::move(mul), p(r.zero()), p(r.one()),
           r.label() + "/I" + std::to_string(ideal.size()), std::move(names));
    return Quotient{std::move(q), std::move(p), std::move(reps)};
}

std::pair<Ring, RingMorphism> subring_table(const Ring& r, const Subring& s) {
    const ElemSet& mem = s.members;
    const std::size_t k = mem.size();
    if (k == 0) throw InvalidInput("empty subring");
    auto index_of = [&](Elem a) -> std::optional<Elem> {
        auto it = std::lower_bound(mem.begin(), mem.end(), a);
        if (it == mem.end() || *it != a) return std::nullopt;
        return static_cast<Elem>(it - mem.begin());
    };
    std::vector<Elem> add(k * k), mul(k * k);
    for (Elem i = 0; i < k; ++i)
        for (Elem j = 0; j < k; ++j) {
            auto sa = index_of(r.add(mem[i], mem[j]));
            auto sm = index_of(r.mul(mem[i], mem[j]));
            if (!sa || !sm) throw InvalidInput("members are not closed under the ring operations");
            add[i * k + j] = *sa;
            mul[i * k + j] = *sm;
        }
    auto zero = index_of(r.zero());
    if (!zero) throw InvalidInput("subring lacks zero");
    std::optional<Elem> identity;
    for (Elem e = 0; e < k && !identity; ++e) {
        bool ok = true;
        for (Elem j = 0; j < k && ok; ++j) ok = mul[e * k + j] == j;
        if (ok) identity = e;
    }
    if (!identity) throw InvalidInput("subring has no identity of its own");
    if (s.contains_one && mem[*identity] != r.one())
        throw InvalidInput("subring flagged unital does not contain the ring's one");
    std::vector<std::string> names(k);
    for (Elem i = 0; i < k; ++i) names[i] = r.name(mem[i]);
    Ring sub(detail::trusted, k, std::move(add), std::move(mul), *zero, *identity,
             "sub(" + r.label() + ")", std::move(names));
    RingMorphism incl{mem, mem[*identity] == r.one()};
    return {std::move(sub), std::move(incl)};
}

// -- elements -----------------------------------------------------------------

UnitGroup units(const Ring& r) {
    UnitGroup g;
    g.inverse.assign(r.order(), std::nullopt);
    for (Elem a = 0; a < r.order(); ++a)
        for (Elem b = 0; b < r.order(); ++b)
            if (r.mul(a, b) == r.one()) {
                g.inverse[a] = b;
                g.members.push_back(a);
                break;
            }
    return g;
}

Idempotents idempotents(const Ring& r) {
    Idempotents out;
    for (Elem e = 0; e < r.order(); ++e)
        if (r.mul(e, e) == e) out.all.push_back(e);
    for (Elem e : out.all) {
        if (e == r.zero()) continue;
        bool minimal = true;
        for (Elem f : out.all) {
            if (f == r.zero() || f == e) continue;
            if (r.mul(f, e) == f) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.primitive.push_back(e);
    }
    return out;
}

std::size_t characteristic(const Ring& r) {
    std::size_t k = 1;
    Elem acc = r.one();
    while (acc != r.zero()) {
        acc = r.add(acc, r.one());
        ++k;
    }
    return k;
}

bool is_field(const Ring& r) {
    if (r.order() < 2) return false;
    return units(r).members.size() == r.order() - 1;
}

// -- ideals -----------------------------------------------------------------------

std::optional<std::string> find_ideal_violation(const Ring& r, const ElemSet& members) {
    std::vector<char> in(r.order(), 0);
    for (Elem a : members) {
        if (a >= r.order()) return "member index out of range";
        in[a] = 1;
    }
    if (!in[r.zero()]) return "ideal does not contain zero";
    std::ostringstream msg;
    for (Elem a : members) {
        if (!in[r.neg(a)]) {
            msg << "not closed under negation at " << r.name(a);
            return msg.str();
        }
        for (Elem b : members)
            if (!in[r.add(a, b)]) {
                msg << "not closed under addition at (" << r.name(a) << ", " << r.name(b) << ")";
                return msg.str();
            }
        for (Elem x = 0; x < r.order(); ++x)
            if (!in[r.mul(x, a)]) {
                msg << "does not absorb " << r.name(x) << " * " << r.name(a);
                return msg.str();
            }
    }
    return std::nullopt;
}

Ideal ideal_generated(const Ring& r, std::span<const Elem> gens) {
    std::vector<char> in(r.order(), 0);
    ElemSet members;
    std::vector<Elem> work;
    auto push = [&](Elem a) {
        if (!in[a]) {
            in[a] = 1;
            members.push_back(a);
            work.push_back(a);
        }
    };
    push(r.zero());
    for (Elem g : gens) push(g);
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        for (Elem s = 0; s < r.order(); ++s) push(r.mul(s, x));
        const std::size_t known = members.size();
        for (std::size_t i = 0; i < known; ++i) push(r.add(x, members[i]));
    }
    return Ideal{to_set(in)};
}

Ideal zero_ideal(const Ring& r) { return Ideal{{r.zero()}}; }

Ideal unit_ideal(const Ring& r) {
    Ideal all;
    all.members.resize(r.order());
    for (Elem a = 0; a < r.order(); ++a) all.members[a] = a;
    return all;
}

Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b) {
    ElemSet gens = a.members;
    gens.insert(gens.end(), b.members.begin(), b.members.end());
    return ideal_generated(r, gens);
}

Ideal ideal_product(const Ring& r, const Ideal& a, const Ideal& b) {
    std::vector<char> seen(r.order(), 0);
    ElemSet gens;
    for (Elem x : a.members)
        for (Elem y : b.members) {
            const Elem p = r.mul(x, y);
            if (!seen[p]) {
                seen[p] = 1;
                gens.push_back(p);
            }
        }
    return ideal_generated(r, gens);
}

std::vector<Ideal> all_ideals(const Ring& r) {
    if (r.order() > kEnumerationCap)
        throw CapExceeded("ideal enumeration above order " + std::to_string(kEnumerationCap));
    std::set<ElemSet> found;
    for (Elem a = 0; a < r.order(); ++a) {
        const Elem g[] = {a};
        found.insert(ideal_generated(r, g).members);
    }
    // Every ideal of a finite ring is a finite sum of principal ideals.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<ElemSet> current(found.begin(), found.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                auto sum = ideal_sum(r, Ideal{current[i]}, Ideal{current[j]}).members;
                if (found.insert(std::move(sum)).second) grew = true;
            }
    }
    std::vector<Ideal> out;
    for (const auto& m : found) out.push_back(Ideal{m});
    return out;
}

std::vector<Ideal> maximal_ideals(const Ring& r) {
    if (r.is_zero_ring()) throw ZeroRing();
    std::vector<Ideal> out;
    for (Elem e : idempotents(r).primitive) {
        // a lies in the maximal ideal of the factor Re iff ae is not a unit of Re.
        Ideal m;
        for (Elem a = 0; a < r.order(); ++a) {
            bool unit_in_factor = false;
            const Elem ae = r.mul(a, e);
            for (Elem b = 0; b < r.order() && !unit_in_factor; ++b)
                unit_in_factor = r.mul(ae, b) == e;
            if (!unit_in_factor) m.members.push_back(a);
        }
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Ideal> local_maximal_ideal(const Ring& r) {
    if (r.is_zero_ring()) throw ZeroRing();
    const UnitGroup u = units(r);
    Ideal nonunits;
    for (Elem a = 0; a < r.order(); ++a)
        if (!u.contains(a)) nonunits.members.push_back(a);
    if (find_ideal_violation(r, nonunits.members)) return std::nullopt;
    return nonunits;
}

bool is_local(const Ring& r) { return local_maximal_ideal(r).has_value(); }

// -- subrings -----------------------------------------------------------------------

Subring subring_generated(const Ring& r, std::span<const Elem> seed, bool require_one) {
    std::vector<char> in(r.order(), 0);
    ElemSet members;
    std::vector<Elem> work;
    auto push = [&](Elem a) {
        if (!in[a]) {
            in[a] = 1;
            members.push_back(a);
            work.push_back(a);
        }
    };
    push(r.zero());
    if (require_one) push(r.one());
    for (Elem s : seed) push(s);
    while (!work.empty()) {
        const Elem x = work.back();
        work.pop_back();
        push(r.neg(x));
        const std::size_t known = members.size();
        for (std::size_t i = 0; i < known; ++i) {
            push(r.add(x, members[i]));
            push(r.mul(x, members[i]));
        }
    }
    return Subring{to_set(in), require_one};
}

bool is_subfield(const Ring& r, const Subring& s) {
    if (s.members.size() < 2) return false;
    std::vector<char> in(r.order(), 0);
    for (Elem a : s.members) in[a] = 1;
    if (!in[r.zero()]) return false;
    for (Elem a : s.members) {
        if (!in[r.neg(a)]) return false;
        for (Elem b : s.members)
            if (!in[r.add(a, b)] || !in[r.mul(a, b)]) return false;
    }
    std::optional<Elem> identity;
    for (Elem e : s.members) {
        if (e == r.zero()) continue;
        bool ok = true;
        for (Elem b : s.members)
            if (r.mul(e, b) != b) {
                ok = false;
                break;
            }
        if (ok) {
            identity = e;
            break;
        }
    }
    if (!identity) return false;
    if (s.contains_one && *identity != r.one()) return false;
    for (Elem a : s.members) {
        if (a == r.zero()) continue;
        bool inv = false;
        for (Elem b : s.members)
            if (r.mul(a, b) == *identity) {
                inv = true;
                break;
            }
        if (!inv) return false;
    }
    return true;
}

}  // namespace residua
