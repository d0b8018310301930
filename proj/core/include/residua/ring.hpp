#pragma once

// Finite commutative unital rings given by dense operation tables.
//
// Elements are indices 0..n-1. Every Ring value is immutable once built and
// has passed validation; free functions below never mutate their inputs, so
// rings may be shared across threads without synchronization.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "residua/errors.hpp"

namespace residua {

using Elem = std::uint32_t;

/// Sorted, duplicate-free set of element indices.
using ElemSet = std::vector<Elem>;

/// Largest table that can be constructed at all.
inline constexpr std::size_t kTableCap = 4096;
/// Largest ring for ideal / subfield / homomorphism enumeration.
inline constexpr std::size_t kEnumerationCap = 256;
/// Largest ring admitted to an exhaustive verification suite by default.
inline constexpr std::size_t kSuiteCap = 64;

namespace detail {
struct trusted_t {
    explicit trusted_t() = default;
};
/// Tag for constructors whose tables are correct by construction
/// (algebraic formulas). Associativity and distributivity are then only
/// re-checked when the order is small enough for a cubic scan.
inline constexpr trusted_t trusted{};
inline constexpr std::size_t kTrustedCubicCheckCap = 128;
}  // namespace detail

class Ring {
public:
    /// Validates every ring axiom over all pairs and triples.
    /// Throws AxiomViolation naming the first failure and its witnesses.
    static Ring from_tables(const std::vector<std::vector<Elem>>& add,
                            const std::vector<std::vector<Elem>>& mul, Elem zero, Elem one,
                            std::string label = {}, std::vector<std::string> names = {});

    /// Flat row-major variant of from_tables.
    static Ring from_flat_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
                                 Elem zero, Elem one, std::string label = {},
                                 std::vector<std::string> names = {});

    Ring(detail::trusted_t, std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
         Elem one, std::string label, std::vector<std::string> names);

    std::size_t order() const noexcept { return n_; }
    Elem zero() const noexcept { return zero_; }
    Elem one() const noexcept { return one_; }
    bool is_zero_ring() const noexcept { return n_ == 1; }

    Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    /// n-fold sum a + ... + a (n >= 0).
    Elem times(std::size_t n, Elem a) const noexcept;
    Elem pow(Elem a, std::size_t e) const noexcept;

    const std::string& label() const noexcept { return label_; }
    std::string name(Elem a) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::span<const Elem> add_table() const noexcept { return add_; }
    std::span<const Elem> mul_table() const noexcept { return mul_; }

    Ring relabeled(std::string label) const;

    /// Tables and distinguished elements are identical (labels ignored).
    bool same_tables(const Ring& other) const noexcept;

private:
    Ring() = default;
    void finish_negation();

    std::size_t n_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    Elem zero_ = 0;
    Elem one_ = 0;
    std::string label_;
    std::vector<std::string> names_;
};

/// Returns a description of the first violated ring axiom, if any.
/// When `cubic` is false only the pairwise axioms are scanned.
std::optional<std::string> find_axiom_violation(std::size_t n, std::span<const Elem> add,
                                                std::span<const Elem> mul, Elem zero, Elem one,
                                                bool cubic = true);

struct Ideal {
    ElemSet members;

    bool contains(Elem a) const;
    std::size_t size() const noexcept { return members.size(); }
    /// The members other than zero (the m* of a maximal ideal m).
    ElemSet nonzero_members(const Ring& r) const;
    bool operator==(const Ideal&) const = default;
    auto operator<=>(const Ideal&) const = default;
};

struct Subring {
    ElemSet members;
    bool contains_one = true;

    bool contains(Elem a) const;
    std::size_t size() const noexcept { return members.size(); }
    bool operator==(const Subring&) const = default;
    auto operator<=>(const Subring&) const = default;
};

/// Element-index map between two rings; source and target are supplied by
/// the caller wherever validation needs them.
struct RingMorphism {
    std::vector<Elem> map;
    bool unital = true;

    Elem operator()(Elem a) const { return map[a]; }
    std::size_t source_order() const noexcept { return map.size(); }
    bool operator==(const RingMorphism&) const = default;
};

/// Describes the first failure of `f` to be a homomorphism source -> target.
std::optional<std::string> find_morphism_violation(const Ring& source, const Ring& target,
                                                   const RingMorphism& f);
bool is_homomorphism(const Ring& source, const Ring& target, const RingMorphism& f);
bool is_injective(const RingMorphism& f, std::size_t target_order);
bool is_surjective(const RingMorphism& f, std::size_t target_order);

/// (g . f)(a) = g(f(a)); unital iff both are.
RingMorphism compose(const RingMorphism& g, const RingMorphism& f);
RingMorphism identity_morphism(const Ring& r);

// -- constructions -----------------------------------------------------------

Ring zmod(std::size_t n);

/// Componentwise ring; (r, s) has index r * |S| + s.
Ring product(const Ring& r, const Ring& s);

struct Quotient {
    Ring ring;
    RingMorphism projection;
    /// representatives[c] is the least element index of coset c.
    std::vector<Elem> representatives;
};

/// R/I with least-index coset representatives. Throws InvalidIdeal.
Quotient quotient(const Ring& r, const Ideal& ideal);

/// The subring as a ring in its own right, plus the inclusion into `r`
/// (non-unital when the subring's identity differs from r.one()).
/// Throws InvalidInput when the members are not a subring with identity.
std::pair<Ring, RingMorphism> subring_table(const Ring& r, const Subring& s);

// -- elements ---------------------------------------------------------------

struct UnitGroup {
    ElemSet members;
    /// inverse[a] is set exactly for units a.
    std::vector<std::optional<Elem>> inverse;

    bool contains(Elem a) const { return inverse[a].has_value(); }
};

UnitGroup units(const Ring& r);

struct Idempotents {
    ElemSet all;
    /// Minimal nonzero idempotents under e <= f  <=>  ef = e.
    ElemSet primitive;
};

Idempotents idempotents(const Ring& r);

/// Additive order of one.
std::size_t characteristic(const Ring& r);

bool is_field(const Ring& r);

// -- ideals -------------------------------------------------------------------

/// Describes why `members` fails to be an ideal, if it does.
std::optional<std::string> find_ideal_violation(const Ring& r, const ElemSet& members);

Ideal ideal_generated(const Ring& r, std::span<const Elem> gens);
Ideal zero_ideal(const Ring& r);
Ideal unit_ideal(const Ring& r);

/// Every ideal of r, sorted. Throws CapExceeded above kEnumerationCap.
std::vector<Ideal> all_ideals(const Ring& r);

/// Ideal sum and product.
Ideal ideal_sum(const Ring& r, const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ring& r, const Ideal& a, const Ideal& b);

/// Maximal ideals from the primitive idempotent decomposition, one per local
/// factor, sorted. Throws ZeroRing.
std::vector<Ideal> maximal_ideals(const Ring& r);

/// The maximal ideal when the non-units form an ideal. Throws ZeroRing.
std::optional<Ideal> local_maximal_ideal(const Ring& r);
bool is_local(const Ring& r);

// -- subrings -------------------------------------------------------------------

/// Closure of seed (plus one when require_one) under +, -, *.
Subring subring_generated(const Ring& r, std::span<const Elem> seed, bool require_one);

/// True when the members form a field under the ring operations (with their
/// own identity, which must be r.one() if s.contains_one).
bool is_subfield(const Ring& r, const Subring& s);

// -- homomorphism search --------------------------------------------------------

/// All (unital) homomorphisms source -> target by backtracking over images of
/// a greedy generating sequence. Throws CapExceeded.
std::vector<RingMorphism> hom_enumerate(const Ring& source, const Ring& target, bool unital);

/// A ring isomorphism if one exists. Throws CapExceeded.
std::optional<RingMorphism> find_isomorphism(const Ring& source, const Ring& target);

}  // namespace residua
