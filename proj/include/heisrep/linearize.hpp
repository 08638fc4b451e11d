#pragma once

#include <map>

#include "heisenberg.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "ring.hpp"
#include "semidirect.hpp"

namespace heisrep {

/// Integer matrix divided by a power of two. The tautological matrices have
/// denominator at most 2; keeping the numerator integral makes long products
/// cheap while remaining a genuine matrix product.
class HalfIntMatrix {
public:
    HalfIntMatrix() = default;
    HalfIntMatrix(IntMatrix num, long den_pow) : num_(std::move(num)), den_(den_pow) { normalize(); }

    static HalfIntMatrix identity(std::size_t n) { return HalfIntMatrix(IntMatrix::identity(n), 0); }

    const IntMatrix& num() const { return num_; }
    long den_pow() const { return den_; }

    HalfIntMatrix operator*(const HalfIntMatrix& o) const {
        return HalfIntMatrix(num_ * o.num_, den_ + o.den_);
    }
    bool operator==(const HalfIntMatrix& o) const { return den_ == o.den_ && num_ == o.num_; }
    bool operator!=(const HalfIntMatrix& o) const { return !(*this == o); }

    RatMatrix to_rational() const {
        Int d = Int(1) << static_cast<unsigned>(den_);
        return num_.map([&](const Int& x) { return Rat(x, d); });
    }

private:
    IntMatrix num_;
    long den_ = 0;

    void normalize() {
        while (den_ > 0) {
            bool all_even = true;
            for (std::size_t i = 0; i < num_.rows() && all_even; ++i)
                for (std::size_t j = 0; j < num_.cols() && all_even; ++j)
                    if ((num_(i, j) & 1) != 0) all_even = false;
            if (!all_even) break;
            num_ = num_.map([](const Int& x) { return Int(x >> 1); });
            --den_;
        }
    }
};

/// Tautological representation of H_g in GL_{g+2}(Q): upper unitriangular with
/// first row (1, m_1..m_g, c) and last column (c, n_1..n_g, 1) top to bottom,
/// where c = l/2 + m.n. The m.n correction is what makes the assignment
/// multiplicative for the normal form a^m b^n s^l; it vanishes on all
/// generators and on powers of s.
inline HalfIntMatrix tautological(const HeisenbergElement& x) {
    if (x.quotient().kind != QuotientKind::full)
        throw std::invalid_argument("tautological: defined on the full Heisenberg group");
    long g = x.genus();
    std::size_t d = static_cast<std::size_t>(g) + 2;
    IntMatrix num(d, d);
    for (std::size_t i = 0; i < d; ++i) num(i, i) = 2;
    for (long j = 0; j < g; ++j) {
        num(0, 1 + j) = 2 * x.m()[j];
        num(1 + j, d - 1) = 2 * x.n()[j];
    }
    num(0, d - 1) = x.l() + 2 * idot(x.m(), x.n());
    return HalfIntMatrix(std::move(num), 1);
}

/// Supra-tautological representation of H_g x| Aut+(H_g) in GL_{2g+2}(Z),
/// assembled as the product of the three displayed block matrices:
/// the H_g part with top row (JX)^T and corner l + m.n, the translation part,
/// and the symplectic part.
inline IntMatrix suprataut_h(const HeisenbergElement& h) {
    long g = h.genus();
    std::size_t d = static_cast<std::size_t>(2 * g) + 2;
    IntMatrix m = IntMatrix::identity(d);
    std::vector<Int> x = h.abelianized();
    // JX = (-n, m)
    for (long i = 0; i < g; ++i) {
        m(0, 1 + i) = -x[g + i];
        m(0, 1 + g + i) = x[i];
    }
    for (long i = 0; i < 2 * g; ++i) m(1 + i, d - 1) = x[i];
    m(0, d - 1) = h.l() + idot(h.m(), h.n());
    return m;
}

inline IntMatrix suprataut_translation(long g, const std::vector<Int>& y) {
    std::size_t d = static_cast<std::size_t>(2 * g) + 2;
    IntMatrix m = IntMatrix::identity(d);
    for (long i = 0; i < 2 * g; ++i) m(1 + i, d - 1) = y[i];
    return m;
}

inline IntMatrix suprataut_symplectic(long g, const IntMatrix& sp) {
    std::size_t d = static_cast<std::size_t>(2 * g) + 2;
    IntMatrix m = IntMatrix::identity(d);
    for (long i = 0; i < 2 * g; ++i)
        for (long j = 0; j < 2 * g; ++j) m(1 + i, 1 + j) = sp(i, j);
    return m;
}

inline IntMatrix suprataut(const SemidirectElement& z) {
    long g = z.genus();
    return suprataut_h(z.h()) * suprataut_translation(g, z.aut().y()) *
           suprataut_symplectic(g, z.aut().matrix());
}

/// Linear extension of the supra-tautological map to the group ring.
inline IntMatrix suprataut_ring(const HeisRing& x, long g) {
    IntMatrix acc(2 * g + 2, 2 * g + 2);
    for (const auto& [h, c] : x.terms()) {
        if (h.genus() != g) throw std::invalid_argument("suprataut_ring: genus mismatch");
        acc = acc + suprataut_h(h) * c;
    }
    return acc;
}

/// Whether a matrix lies in the span of supra-tautological images of group
/// elements. Such combinations have scalar diagonal blocks, vanish below the
/// diagonal blocks, and their top row is forced by the last column: for
/// sum c_h iota(h) the top row is (J u)^T with u the middle part of the last
/// column. The image of a semidirect element passes exactly when its
/// automorphism part is trivial, which is the persistence-of-the-kernel
/// condition for the linearized uncrossed representations.
inline bool in_suprataut_ring_span(const IntMatrix& m, long g) {
    std::size_t d = static_cast<std::size_t>(2 * g) + 2;
    if (!m.is_square() || m.rows() != d) return false;
    const Int& s = m(0, 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            bool top_row = i == 0 && j >= 1;
            bool last_col = j == d - 1 && i >= 1 && i < d - 1;
            if (top_row || last_col) continue;
            if (i == j) {
                if (m(i, j) != s) return false;
            } else if (m(i, j) != 0) {
                return false;
            }
        }
    // top row = (J u)^T where u is the middle part of the last column:
    // (Ju) = (-u_n, u_m) for u = (u_m, u_n)
    for (long i = 0; i < g; ++i) {
        if (m(0, 1 + i) != -m(1 + g + i, d - 1)) return false;
        if (m(0, 1 + g + i) != m(1 + i, d - 1)) return false;
    }
    return true;
}

/// Sparse operator on V^{(g+1)} with dim V = r: basis vectors are indexed by
/// tuples (j_1..j_{g+1}) in [0,r)^{g+1} and entries are Laurent polynomials in
/// the symbols s_1..s_g, t_1..t_g. The image of a group element is a
/// permutation matrix scaled by monomials.
class SparseOperator {
public:
    SparseOperator(long g, long r)
        : g_(g), r_(r), dim_(pow_size(r, g + 1)), cols_(dim_) {
        if (r < 2) throw std::invalid_argument("SparseOperator: r must be >= 2");
        if (g < 1) throw std::invalid_argument("SparseOperator: g must be >= 1");
    }

    long g() const { return g_; }
    long r() const { return r_; }
    std::size_t dim() const { return dim_; }

    static std::size_t pow_size(long r, long e) {
        std::size_t d = 1;
        for (long i = 0; i < e; ++i) {
            if (d > (std::size_t(1) << 40) / static_cast<std::size_t>(r))
                throw std::invalid_argument("operator dimension r^{g+1} too large");
            d *= static_cast<std::size_t>(r);
        }
        return d;
    }

    std::vector<long> tuple_of(std::size_t idx) const {
        std::vector<long> t(g_ + 1);
        for (long i = 0; i <= g_; ++i) { t[i] = static_cast<long>(idx % r_); idx /= r_; }
        return t;
    }
    std::size_t index_of(const std::vector<long>& t) const {
        std::size_t idx = 0;
        for (long i = g_; i >= 0; --i) idx = idx * r_ + static_cast<std::size_t>(((t[i] % r_) + r_) % r_);
        return idx;
    }

    void add_entry(std::size_t row, std::size_t col, const LaurentPoly& p) {
        if (p.is_zero()) return;
        auto& m = cols_[col];
        auto it = m.find(row);
        if (it == m.end()) m.emplace(row, p);
        else {
            it->second += p;
            if (it->second.is_zero()) m.erase(it);
        }
    }
    const std::map<std::size_t, LaurentPoly>& column(std::size_t col) const { return cols_[col]; }

    bool is_zero() const {
        for (const auto& c : cols_) if (!c.empty()) return false;
        return true;
    }
    bool operator==(const SparseOperator& o) const {
        return g_ == o.g_ && r_ == o.r_ && cols_ == o.cols_;
    }
    bool operator!=(const SparseOperator& o) const { return !(*this == o); }

    SparseOperator operator+(const SparseOperator& o) const {
        check(o);
        SparseOperator res(*this);
        for (std::size_t c = 0; c < dim_; ++c)
            for (const auto& [row, p] : o.cols_[c]) res.add_entry(row, c, p);
        return res;
    }
    /// Operator composition: (A*B) v = A (B v).
    SparseOperator operator*(const SparseOperator& o) const {
        check(o);
        SparseOperator res(g_, r_);
        for (std::size_t c = 0; c < dim_; ++c)
            for (const auto& [mid, p] : o.cols_[c])
                for (const auto& [row, q] : cols_[mid]) res.add_entry(row, c, q * p);
        return res;
    }

    static SparseOperator identity(long g, long r) {
        SparseOperator res(g, r);
        LaurentPoly one = laurent_const(1);
        for (std::size_t c = 0; c < res.dim_; ++c) res.add_entry(c, c, one);
        return res;
    }

    /// Dense form; the r^{g+1} blowup is the caller's decision.
    DenseMatrix<LaurentPoly> dense() const {
        DenseMatrix<LaurentPoly> m(dim_, dim_);
        for (std::size_t c = 0; c < dim_; ++c)
            for (const auto& [row, p] : cols_[c]) m(row, c) = p;
        return m;
    }

    /// Specialize all Laurent symbols to rational values (s_i = t_i = 1 gives
    /// the finite-quotient picture).
    RatMatrix specialize(const std::function<Rat(const std::string&)>& value_of) const {
        RatMatrix m(dim_, dim_);
        for (std::size_t c = 0; c < dim_; ++c)
            for (const auto& [row, p] : cols_[c]) m(row, c) = laurent_eval_rat(p, value_of);
        return m;
    }

private:
    long g_, r_;
    std::size_t dim_;
    std::vector<std::map<std::size_t, LaurentPoly>> cols_;

    void check(const SparseOperator& o) const {
        if (g_ != o.g_ || r_ != o.r_) throw std::invalid_argument("operator parameter mismatch");
    }
};

/// The faithful algebra map iota on Z[H_{g,r}]: s shifts the last index by one,
/// a_i scales by s_i and shifts the last index by 2 j_i, b_i scales by t_i and
/// shifts index i by one (all mod r).
inline SparseOperator iota_r_group(const HeisenbergElement& h, long r) {
    if (r < 2) throw std::invalid_argument("iota_r: r must be >= 2");
    long g = h.genus();
    SparseOperator op(g, r);
    LaurentMonomial coeff;
    for (long i = 0; i < g; ++i) {
        if (h.m()[i] != 0) coeff = coeff * LaurentMonomial("s" + std::to_string(i + 1), h.m()[i]);
        if (h.n()[i] != 0) coeff = coeff * LaurentMonomial("t" + std::to_string(i + 1), h.n()[i]);
    }
    LaurentPoly cp(coeff);
    Int l_mod = imod(h.l(), r);
    std::vector<Int> nm(g), mm(g);
    for (long i = 0; i < g; ++i) { nm[i] = imod(h.n()[i], r); mm[i] = imod(h.m()[i], 2 * r); }
    for (std::size_t src = 0; src < op.dim(); ++src) {
        std::vector<long> t = op.tuple_of(src);
        std::vector<long> u(t);
        Int last = t[g];
        last += l_mod;
        for (long i = 0; i < g; ++i) {
            long ji = static_cast<long>((Int(t[i]) + nm[i]) % r);
            u[i] = ji;
            last += 2 * mm[i] * ji;
        }
        u[g] = static_cast<long>(imod(last, r));
        op.add_entry(op.index_of(u), src, cp);
    }
    return op;
}

/// Linear extension to the group ring.
inline SparseOperator iota_r(const HeisRing& x, long g, long r) {
    SparseOperator acc(g, r);
    for (const auto& [h, c] : x.terms()) {
        if (h.genus() != g) throw std::invalid_argument("iota_r: genus mismatch");
        SparseOperator t = iota_r_group(h, r);
        SparseOperator scaled(g, r);
        for (std::size_t col = 0; col < t.dim(); ++col)
            for (const auto& [row, p] : t.column(col)) scaled.add_entry(row, col, p * c);
        acc = acc + scaled;
    }
    return acc;
}

} // namespace heisrep
