#pragma once

// Split extensions R -> R/I with a unital section, semidirect products
// A x| K with (a,k)(b,l) = (ab + l.a + k.b, kl), and the passage between
// triples (R, I, s) and pairs (K, A).

#include <optional>
#include <string>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

/// Finite commutative, not necessarily unital, algebra over a base ring K.
class NonUnitalAlgebra {
public:
    /// action is |K| x n, row k holding k.a for every carrier element a.
    /// Throws AxiomViolation.
    static NonUnitalAlgebra from_tables(Ring base, std::size_t n, std::vector<Elem> add,
                                        std::vector<Elem> mul, std::vector<Elem> action, Elem zero,
                                        std::string label = {},
                                        std::vector<std::string> names = {});

    const Ring& base() const noexcept { return base_; }
    std::size_t order() const noexcept { return n_; }
    Elem zero() const noexcept { return zero_; }
    Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem act(Elem k, Elem a) const noexcept { return action_[k * n_ + a]; }
    const std::string& label() const noexcept { return label_; }
    std::string name(Elem a) const;

    /// Multiplicative identity, if the algebra has one.
    std::optional<Elem> unit() const;
    bool is_square_zero() const;

private:
    NonUnitalAlgebra() = default;

    Ring base_ = zmod(1);
    std::size_t n_ = 0;
    std::vector<Elem> add_, mul_, action_, neg_;
    Elem zero_ = 0;
    std::string label_;
    std::vector<std::string> names_;
};

std::optional<std::string> find_algebra_violation(const Ring& base, std::size_t n,
                                                  const std::vector<Elem>& add,
                                                  const std::vector<Elem>& mul,
                                                  const std::vector<Elem>& action, Elem zero);

/// K^dim with identically zero multiplication (dim 0 gives the trivial algebra).
NonUnitalAlgebra zero_algebra(const Ring& base, std::size_t dim);
/// K^dim with componentwise multiplication and unit (1,...,1).
NonUnitalAlgebra unital_algebra(const Ring& base, std::size_t dim);

/// Ring on A x K; (a, k) has index a * |K| + k, zero (0,0), one (0,1).
/// Validated through the full axiom check. Throws CapExceeded, AxiomViolation.
Ring semidirect_pair(const NonUnitalAlgebra& a);

inline Elem sdp_index(const NonUnitalAlgebra& a, Elem x, Elem k) {
    return x * static_cast<Elem>(a.base().order()) + k;
}

struct SplitTriple {
    Ring ring;
    Ideal ideal;
    Quotient quotient;
    /// Unital section R/I -> R of the projection.
    RingMorphism section;
};

/// Validates that s is a unital homomorphism with p.s = 1. Throws InvalidTriple.
SplitTriple make_split_triple(Ring r, Ideal ideal, RingMorphism section);

/// (A x| K, A x {0}, k -> (0,k)).
SplitTriple pair_to_triple(const NonUnitalAlgebra& a);

struct TriplePair {
    /// Algebra over R/I on the carrier I, acting by u.x = s(u)x.
    NonUnitalAlgebra algebra;
    /// carrier[i] is the ring element behind algebra element i.
    ElemSet carrier;
};

TriplePair triple_to_pair(const SplitTriple& t);

/// All unital sections of R -> R/I (possibly none). Throws CapExceeded.
std::vector<RingMorphism> sections_enumerate(const Ring& r, const Ideal& ideal);

struct PhiPsi {
    TriplePair pair;
    /// I x| (R/I).
    Ring semidirect;
    /// phi(x,u) = x + s(u): semidirect -> R.
    RingMorphism phi;
    /// psi(r) = (r - sp(r), p(r)): R -> semidirect.
    RingMorphism psi;
};

PhiPsi build_phi_psi(const SplitTriple& t);

struct IdentityCheck {
    std::string name;
    bool pass = true;
    std::optional<std::string> counterexample;
};

struct DiagramReport {
    /// The six pointwise identities.
    std::vector<IdentityCheck> identities;
    /// Homomorphism / unitality checks for p, s, phi, psi, pi2, iota2, i, iota1.
    std::vector<IdentityCheck> morphisms;

    bool all_pass() const;
};

DiagramReport verify_split_diagram(const SplitTriple& t);

/// Bijection a -> b preserving +, * and with beta(k.x) = sigma(k).beta(x),
/// where sigma is a ring isomorphism a.base() -> b.base().
std::optional<std::vector<Elem>> find_algebra_isomorphism(const NonUnitalAlgebra& a,
                                                          const NonUnitalAlgebra& b,
                                                          const RingMorphism& sigma);

struct RoundtripReport {
    /// pair -> triple -> pair
    bool base_isomorphic = false;
    bool algebra_isomorphic = false;
    /// triple -> pair -> triple, compared through phi
    bool triple_isomorphic = false;

    bool ok() const { return base_isomorphic && algebra_isomorphic && triple_isomorphic; }
};

RoundtripReport equivalence_roundtrip(const NonUnitalAlgebra& a);

/// triple -> pair -> triple recovers a triple isomorphic to t through phi.
bool triple_roundtrip(const SplitTriple& t);

struct UnitalExtremeReport {
    Ring ring = zmod(1);
    Elem unit = 0;
    /// (-e, 1) in A x| K.
    Elem probe = 0;
    bool probe_is_nonunit = false;
    /// (e, 0), idempotent and neither 0 nor 1.
    Elem idempotent = 0;
    bool idempotent_witness = false;
    bool ring_is_local = true;
    std::vector<std::string> trace;

    bool confirmed() const { return probe_is_nonunit && idempotent_witness && !ring_is_local; }
};

/// Throws PreconditionUnmet unless A has a unit e != 0.
UnitalExtremeReport extreme_unital_check(const NonUnitalAlgebra& a);

struct SquareZeroExtremeReport {
    Ring ring = zmod(1);
    bool inverse_formula_holds = false;
    bool units_are_nonzero_k = false;
    bool ring_is_local = false;
    bool maximal_is_a = false;
    std::optional<std::string> first_failure;
    std::vector<std::string> trace;

    bool confirmed() const {
        return inverse_formula_holds && units_are_nonzero_k && ring_is_local && maximal_is_a;
    }
};

/// Throws PreconditionUnmet unless K is a field and A.A = 0.
SquareZeroExtremeReport extreme_squarezero_check(const NonUnitalAlgebra& a);

}  // namespace residua
