#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"
#include "types.hpp"

namespace heisrep {

/// Dense univariate polynomial over Z, coefficients low degree first.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static PolyZ constant(Int v) { return PolyZ({std::move(v)}); }
    static PolyZ x_power_minus_one(long d) {
        std::vector<Int> c(d + 1, 0);
        c[0] = -1;
        c[d] = 1;
        return PolyZ(std::move(c));
    }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    PolyZ operator*(const PolyZ& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return PolyZ(std::move(r));
    }

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<PolyZ> divide_exact(const PolyZ& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        if (is_zero()) return PolyZ();
        if (degree() < d.degree()) return std::nullopt;
        std::vector<Int> rem(c_);
        std::vector<Int> q(degree() - d.degree() + 1, 0);
        const Int& lead = d.c_.back();
        for (long k = degree() - d.degree(); k >= 0; --k) {
            Int num = rem[k + d.degree()];
            if (num % lead != 0) return std::nullopt;
            Int f = num / lead;
            q[k] = f;
            for (long j = 0; j <= d.degree(); ++j) rem[k + j] -= f * d.c_[j];
        }
        for (const auto& v : rem)
            if (v != 0) return std::nullopt;
        return PolyZ(std::move(q));
    }

    bool operator==(const PolyZ& o) const { return c_ == o.c_; }

private:
    std::vector<Int> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// d-th cyclotomic polynomial via Phi_d = (X^d - 1) / prod_{e|d, e<d} Phi_e.
inline const PolyZ& cyclotomic(long d) {
    static std::vector<PolyZ> cache{PolyZ()}; // index 0 unused
    if (d < 1) throw std::invalid_argument("cyclotomic: d >= 1 required");
    while (static_cast<long>(cache.size()) <= d) {
        long k = static_cast<long>(cache.size());
        PolyZ num = PolyZ::x_power_minus_one(k);
        for (long e = 1; e < k; ++e)
            if (k % e == 0) {
                auto q = num.divide_exact(cache[e]);
                if (!q) throw std::logic_error("cyclotomic recursion failed");
                num = *q;
            }
        cache.push_back(num);
    }
    return cache[d];
}

/// Characteristic polynomial of a rational matrix (monic, low degree first),
/// by the Faddeev-LeVerrier recursion.
inline std::vector<Rat> char_poly(const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: square matrix required");
    std::size_t n = a.rows();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix m(n, n); // M_0 = 0
    Rat ck = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        RatMatrix am = a * m;
        for (std::size_t i = 0; i < n; ++i) am(i, i) += ck;
        m = am;
        RatMatrix prod = a * m;
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
        ck = -tr / Rat(static_cast<long>(k));
        c[n - k] = ck;
    }
    return c;
}

/// Integer content check: char polys whose roots are all roots of unity are
/// monic integral. Returns nullopt when a coefficient is non-integral.
inline std::optional<PolyZ> to_integer_poly(const std::vector<Rat>& c) {
    std::vector<Int> z(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (boost::multiprecision::denominator(c[i]) != 1) return std::nullopt;
        z[i] = boost::multiprecision::numerator(c[i]);
    }
    return PolyZ(std::move(z));
}

} // namespace heisrep
