// Homomorphism and isomorphism search by backtracking with propagation.
//
// The source ring is generated (as a ring, with or without one) by a short
// greedy sequence of elements. Choosing images for those generators fixes the
// whole map; after every choice the partial map is closed under +, -, * and
// any clash prunes the branch.

#include <algorithm>

#include "residua/ring.hpp"

namespace residua {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

class HomSearch {
public:
    HomSearch(const Ring& source, const Ring& target, bool unital, bool injective, bool first_only)
        : src_(source),
          tgt_(target),
          unital_(unital),
          injective_(injective),
          first_only_(first_only),
          map_(source.order(), kUnset),
          preimage_(target.order(), kUnset) {}

    std::vector<RingMorphism> run() {
        gens_ = generating_sequence();
        if (!assign(src_.zero(), tgt_.zero())) return {};
        if (unital_ && !assign(src_.one(), tgt_.one())) return {};
        descend(0);
        return std::move(found_);
    }

private:
    std::vector<Elem> generating_sequence() const {
        std::vector<Elem> gens;
        Subring cur = subring_generated(src_, gens, unital_);
        while (cur.size() < src_.order()) {
            Elem next = 0;
            while (cur.contains(next)) ++next;
            gens.push_back(next);
            cur = subring_generated(src_, gens, unital_);
        }
        return gens;
    }

    // Sets map(a) = b and closes the known part; false on a clash.
    bool assign(Elem a, Elem b) {
        std::vector<std::pair<Elem, Elem>> work{{a, b}};
        while (!work.empty()) {
            auto [x, y] = work.back();
            work.pop_back();
            if (map_[x] != kUnset) {
                if (map_[x] != y) return false;
                continue;
            }
            if (injective_ && preimage_[y] != kUnset) return false;
            map_[x] = y;
            preimage_[y] = x;
            trail_.push_back(x);
            work.emplace_back(src_.neg(x), tgt_.neg(y));
            for (Elem k : trail_) {
                const Elem fk = map_[k];
                work.emplace_back(src_.add(x, k), tgt_.add(y, fk));
                work.emplace_back(src_.mul(x, k), tgt_.mul(y, fk));
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const Elem x = trail_.back();
            trail_.pop_back();
            preimage_[map_[x]] = kUnset;
            map_[x] = kUnset;
        }
    }

    void descend(std::size_t depth) {
        if (first_only_ && !found_.empty()) return;
        if (depth == gens_.size()) {
            RingMorphism f{map_, unital_};
            if (is_homomorphism(src_, tgt_, f)) found_.push_back(std::move(f));
            return;
        }
        const Elem g = gens_[depth];
        const std::size_t mark = trail_.size();
        if (map_[g] != kUnset) {
            descend(depth + 1);
            return;
        }
        for (Elem image = 0; image < tgt_.order(); ++image) {
            if (assign(g, image)) descend(depth + 1);
            undo_to(mark);
            if (first_only_ && !found_.empty()) return;
        }
    }

    const Ring& src_;
    const Ring& tgt_;
    bool unital_;
    bool injective_;
    bool first_only_;
    std::vector<Elem> gens_;
    std::vector<Elem> map_;
    std::vector<Elem> preimage_;
    std::vector<Elem> trail_;
    std::vector<RingMorphism> found_;
};

void check_caps(const Ring& source, const Ring& target) {
    if (source.order() > kEnumerationCap || target.order() > kEnumerationCap)
        throw CapExceeded("homomorphism search above order " + std::to_string(kEnumerationCap));
}

}  // namespace

std::vector<RingMorphism> hom_enumerate(const Ring& source, const Ring& target, bool unital) {
    check_caps(source, target);
    auto homs = HomSearch(source, target, unital, false, false).run();
    std::sort(homs.begin(), homs.end(),
              [](const RingMorphism& a, const RingMorphism& b) { return a.map < b.map; });
    return homs;
}

std::optional<RingMorphism> find_isomorphism(const Ring& source, const Ring& target) {
    check_caps(source, target);
    if (source.order() != target.order()) return std::nullopt;
    if (characteristic(source) != characteristic(target)) return std::nullopt;
    if (units(source).members.size() != units(target).members.size()) return std::nullopt;
    if (idempotents(source).all.size() != idempotents(target).all.size()) return std::nullopt;
    auto homs = HomSearch(source, target, true, true, true).run();
    if (homs.empty()) return std::nullopt;
    return homs.front();
}

}  // namespace residua
