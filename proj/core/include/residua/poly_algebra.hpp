#pragma once

// Dense univariate polynomial arithmetic over a finite coefficient field.
// Coefficients are stored low degree first; the zero polynomial is empty.

#include <concepts>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

template <class F>
concept CoefficientField = requires(const F& f, Elem a, Elem b) {
    { f.add(a, b) } -> std::same_as<Elem>;
    { f.mul(a, b) } -> std::same_as<Elem>;
    { f.neg(a) } -> std::same_as<Elem>;
    { f.inv(a) } -> std::same_as<Elem>;
    { f.zero() } -> std::same_as<Elem>;
    { f.one() } -> std::same_as<Elem>;
    { f.order() } -> std::convertible_to<std::size_t>;
};

/// Z/p with direct modular arithmetic.
struct PrimeField {
    std::uint32_t p;

    Elem add(Elem a, Elem b) const { return static_cast<Elem>((a + b) % p); }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        // a^(p-2)
        std::uint64_t acc = 1, base = a % p;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1U) {
            if (e & 1U) acc = acc * base % p;
            base = base * base % p;
        }
        return static_cast<Elem>(acc);
    }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    std::size_t order() const { return p; }
};

/// A field given by a validated RingTable.
class TableField {
public:
    explicit TableField(const Ring& field) : ring_(&field), inverse_(units(field).inverse) {}

    Elem add(Elem a, Elem b) const { return ring_->add(a, b); }
    Elem mul(Elem a, Elem b) const { return ring_->mul(a, b); }
    Elem neg(Elem a) const { return ring_->neg(a); }
    Elem inv(Elem a) const { return *inverse_[a]; }
    Elem zero() const { return ring_->zero(); }
    Elem one() const { return ring_->one(); }
    std::size_t order() const { return ring_->order(); }
    const Ring& ring() const { return *ring_; }

private:
    const Ring* ring_;
    std::vector<std::optional<Elem>> inverse_;
};

template <CoefficientField F>
class PolyOps {
public:
    using Coeffs = std::vector<Elem>;

    explicit PolyOps(F field) : f_(std::move(field)) {}

    const F& field() const { return f_; }

    Coeffs trim(Coeffs a) const {
        while (!a.empty() && a.back() == f_.zero()) a.pop_back();
        return a;
    }

    static int degree(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

    Coeffs add(const Coeffs& a, const Coeffs& b) const {
        Coeffs out(std::max(a.size(), b.size()), f_.zero());
        for (std::size_t i = 0; i < out.size(); ++i) {
            const Elem x = i < a.size() ? a[i] : f_.zero();
            const Elem y = i < b.size() ? b[i] : f_.zero();
            out[i] = f_.add(x, y);
        }
        return trim(std::move(out));
    }

    Coeffs neg(const Coeffs& a) const {
        Coeffs out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = f_.neg(a[i]);
        return out;
    }

    Coeffs sub(const Coeffs& a, const Coeffs& b) const { return add(a, neg(b)); }

    Coeffs mul(const Coeffs& a, const Coeffs& b) const {
        if (a.empty() || b.empty()) return {};
        Coeffs out(a.size() + b.size() - 1, f_.zero());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                out[i + j] = f_.add(out[i + j], f_.mul(a[i], b[j]));
        return trim(std::move(out));
    }

    Coeffs scale(const Coeffs& a, Elem c) const {
        Coeffs out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = f_.mul(a[i], c);
        return trim(std::move(out));
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Coeffs, Coeffs> divmod(const Coeffs& a, const Coeffs& b) const {
        Coeffs rem = trim(a);
        if (rem.size() < b.size()) return {{}, rem};
        Coeffs quo(rem.size() - b.size() + 1, f_.zero());
        const Elem lead_inv = f_.inv(b.back());
        while (!rem.empty() && rem.size() >= b.size()) {
            const std::size_t shift = rem.size() - b.size();
            const Elem c = f_.mul(rem.back(), lead_inv);
            quo[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i)
                rem[i + shift] = f_.add(rem[i + shift], f_.neg(f_.mul(c, b[i])));
            rem = trim(std::move(rem));
        }
        return {trim(std::move(quo)), rem};
    }

    Coeffs mod(const Coeffs& a, const Coeffs& b) const { return divmod(a, b).second; }

    Coeffs monic(const Coeffs& a) const {
        if (a.empty()) return a;
        return scale(a, f_.inv(a.back()));
    }

    Coeffs gcd(Coeffs a, Coeffs b) const {
        a = trim(std::move(a));
        b = trim(std::move(b));
        while (!b.empty()) {
            Coeffs r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }

    Elem eval(const Coeffs& a, Elem x) const {
        Elem acc = f_.zero();
        for (auto it = a.rbegin(); it != a.rend(); ++it) acc = f_.add(f_.mul(acc, x), *it);
        return acc;
    }

    /// The index-th monic polynomial of the given degree, where index runs
    /// over [0, q^degree) and orders polynomials lexicographically from the
    /// leading coefficient down. Requires field elements indexed 0..q-1.
    Coeffs monic_from_index(std::size_t degree, std::size_t index) const {
        Coeffs out(degree + 1, f_.zero());
        const std::size_t q = f_.order();
        for (std::size_t i = 0; i < degree; ++i) {
            out[i] = static_cast<Elem>(index % q);
            index /= q;
        }
        out[degree] = f_.one();
        return out;
    }

    /// Trial division by every monic polynomial of degree 1..deg/2.
    bool is_irreducible(const Coeffs& a) const {
        const int d = degree(a);
        if (d < 1) return false;
        std::size_t count = 1;
        for (int k = 1; 2 * k <= d; ++k) {
            count *= f_.order();
            for (std::size_t i = 0; i < count; ++i)
                if (mod(a, monic_from_index(static_cast<std::size_t>(k), i)).empty()) return false;
        }
        return true;
    }

private:
    F f_;
};

}  // namespace residua
