#pragma once

// Subfields, fields of representatives and the decomposition A = k (+) m.
//
// Two readings of "A/m is isomorphic to k" are kept apart: the restriction of
// the canonical projection to k being a bijection (used by every check
// here), and an abstract ring isomorphism (monitored by search_absiso_gap).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

/// A ring A with a designated subfield k and its inclusion.
struct KappaAlgebra {
    Ring ring;
    Subring kappa;
    Ring kappa_ring;
    /// Inclusion kappa_ring -> ring.
    RingMorphism embedding;
};

/// Throws InvalidInput unless kappa is a subfield of `ring` containing its one.
KappaAlgebra make_kappa_algebra(const Ring& ring, const Subring& kappa);

/// Every subfield (containing the ring's one when require_one), ordered by
/// member list. Throws CapExceeded.
std::vector<Subring> enumerate_subfields(const Ring& r, bool require_one = true);

/// The subfield containing every other subfield, if there is one.
std::optional<Subring> largest_subfield(const Ring& r);

/// Subfields with no strictly larger subfield.
std::vector<Subring> maximal_subfields(const Ring& r);

struct DecompositionReport {
    Subring kappa;
    Ideal maximal;
    bool restriction_injective = false;
    bool restriction_surjective = false;
    bool intersection_trivial = false;
    bool sum_covers = false;
    /// Each element has exactly one expression u + m.
    bool unique_sum = false;
    /// The projection restricted to kappa is a bijection onto A/m.
    bool verdict = false;
    /// (intersection_trivial && sum_covers) == (injective && surjective).
    bool biconditional_holds = false;
};

/// Evaluates the projection A -> A/m restricted to kappa.
/// Throws InvalidInput when kappa is not a subfield or m is not maximal.
DecompositionReport residue_restriction(const Ring& a, const Subring& kappa, const Ideal& m);

/// units(A) == { u + m : u in kappa*, m in m } for local A whose largest
/// subfield is kappa. Throws PreconditionUnmet otherwise.
bool check_unit_decomposition(const Ring& a, const Subring& kappa);

/// Restriction verdict for the largest subfield and the unique maximal ideal;
/// absent when A is not local or has no largest subfield.
std::optional<bool> check_theorem_qfld(const Ring& a);

/// No subfield strictly contains kappa. Throws PreconditionUnmet unless the
/// restriction verdict for (a, kappa, m) holds.
bool check_prop_maximal(const Ring& a, const Subring& kappa, const Ideal& m);

/// Subfields kappa with a true restriction verdict at m.
std::vector<Subring> fields_of_representatives(const Ring& a, const Ideal& m);

/// Unital homomorphisms h: A -> kappa with h restricted to kappa the identity.
std::vector<RingMorphism> algebra_homs(const KappaAlgebra& ka);

struct GelfandReport {
    std::vector<RingMorphism> homs;
    std::vector<Ideal> maximal;
    /// kernel_index[i] is the position in `maximal` of ker homs[i].
    std::vector<std::size_t> kernel_index;
    /// residue_surjective[j]: kappa maps onto A / maximal[j].
    std::vector<bool> residue_surjective;
    bool kernels_maximal = false;
    bool injective = false;
    /// h -> ker h is a bijection onto the residue-surjective maximal ideals.
    bool restricted_bijection = false;
    /// ... and those are all of Max(A).
    bool full_bijection = false;
};

GelfandReport gelfand_bijection_check(const KappaAlgebra& ka);

struct AbsIsoFinding {
    std::string ring;
    Subring kappa;
    Ideal maximal;
    /// Some other subfield gives a true restriction verdict at the same ideal.
    bool rescued = false;
};

struct AbsIsoSearch {
    std::size_t triples_examined = 0;
    std::vector<AbsIsoFinding> findings;
};

/// Triples (A, kappa, m) where A/m and kappa are abstractly isomorphic but the
/// restricted projection is not a bijection.
AbsIsoSearch search_absiso_gap(std::span<const Ring> catalog);

}  // namespace residua
