#pragma once

// I-adic towers R/I^n, their inverse limit built from compatible tuples, and
// completeness of finite rings.

#include <span>
#include <string>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

/// I^n, generated by all n-fold products of members of I (I^1 = I).
Ideal ideal_power(const Ring& r, const Ideal& ideal, std::size_t n);

/// Least N >= 1 with I^N = I^(N+1).
std::size_t stable_index(const Ring& r, const Ideal& ideal);

struct TowerSystem {
    std::size_t depth = 0;
    /// powers[n-1] = I^n
    std::vector<Ideal> powers;
    /// levels[n-1] = R/I^n with its projection from R
    std::vector<Quotient> levels;
    /// transitions[n-1]: R/I^(n+1) -> R/I^n
    std::vector<RingMorphism> transitions;
};

TowerSystem build_tower(const Ring& r, const Ideal& ideal, std::size_t depth);

struct InverseLimit {
    TowerSystem tower;
    /// The compatible tuples, one per limit element.
    std::vector<std::vector<Elem>> tuples;
    Ring ring;
    /// r -> (r + I^n)_n
    RingMorphism natural;
    /// Projection of the limit onto R/I^N (N = stable index) is bijective.
    bool stabilizes = false;
};

/// Limit of R/I^n through depth stable_index + 1. Throws CapExceeded.
InverseLimit inverse_limit(const Ring& r, const Ideal& ideal);

/// The natural map R -> lim R/I^n is bijective.
bool is_complete(const Ring& r, const Ideal& ideal);

struct DichotomyReport {
    std::size_t stable_index = 1;
    bool idempotent = false;
    bool nilpotent = false;
    bool is_zero = false;
    bool complete = false;
    /// Idempotent ideals: complete <=> I = 0. Vacuous otherwise.
    bool idempotent_assertion = true;
    /// Nilpotent ideals: complete. Vacuous otherwise.
    bool nilpotent_assertion = true;

    bool passes() const { return idempotent_assertion && nilpotent_assertion; }
};

DichotomyReport dichotomy_check(const Ring& r, const Ideal& ideal);

struct SurveyRow {
    std::string ring;
    std::size_t order = 0;
    std::size_t maximal_size = 0;
    std::size_t stable_index = 1;
    bool complete = false;
    bool nilpotent = false;
    bool semidirect = false;
};

struct SurveyReport {
    std::vector<SurveyRow> rows;
    /// Local rings that are not complete at their maximal ideal.
    std::vector<SurveyRow> counterexamples;
};

/// Completeness of every local ring of the catalog at its maximal ideal.
/// Rows for semidirect products (labels containing " x| ") carry a flag so
/// callers can single them out.
SurveyReport complete_local_survey(std::span<const Ring> catalog);

}  // namespace residua
