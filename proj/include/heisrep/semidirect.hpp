#pragma once

#include <utility>

#include "heisenberg.hpp"
#include "matrix.hpp"
#include "ring.hpp"

namespace heisrep {

/// J(X,Y) = (-Y,X) on Z^{2g} = Z^g x Z^g, as a 2g x 2g integer matrix.
inline IntMatrix symplectic_J(long g) {
    IntMatrix j(2 * g, 2 * g);
    for (long i = 0; i < g; ++i) {
        j(i, g + i) = -1;
        j(g + i, i) = 1;
    }
    return j;
}

/// M is symplectic iff M J M^T = J (equivalently M^{-1} = J M^T J^{-1}).
inline bool is_symplectic(const IntMatrix& m, long g) {
    if (!m.is_square() || m.rows() != static_cast<std::size_t>(2 * g)) return false;
    IntMatrix j = symplectic_J(g);
    return m * j * m.transpose() == j;
}

/// The symplectic form w(X,Y) = (JX)^T Y; w(a_i, b_i) = +1.
inline Int symplectic_form(const std::vector<Int>& x, const std::vector<Int>& y) {
    long g2 = static_cast<long>(x.size());
    long g = g2 / 2;
    Int s = 0;
    for (long i = 0; i < g; ++i) s += x[i] * y[g + i] - x[g + i] * y[i];
    return s;
}

/// Element of Aut+(H_g) = Z^{2g} (translations) x| Sp_2g(Z): fixes sigma,
/// acts on abelianized vectors by M, and twists the central coordinate by the
/// symplectic pairing against the translation part. Symplectic membership is
/// checked eagerly on construction.
class AutPlusElement {
public:
    explicit AutPlusElement(long g)
        : g_(g), y_(2 * g, 0), m_(IntMatrix::identity(2 * g)) {}

    AutPlusElement(long g, std::vector<Int> y, IntMatrix m)
        : g_(g), y_(std::move(y)), m_(std::move(m)) {
        if (y_.size() != static_cast<std::size_t>(2 * g_))
            throw std::invalid_argument("AutPlusElement: translation must lie in Z^{2g}");
        if (!is_symplectic(m_, g_))
            throw std::invalid_argument("AutPlusElement: matrix part is not symplectic");
    }

    static AutPlusElement translation(long g, std::vector<Int> y) {
        return AutPlusElement(g, std::move(y), IntMatrix::identity(2 * g));
    }
    static AutPlusElement symplectic(long g, IntMatrix m) {
        return AutPlusElement(g, std::vector<Int>(2 * g, 0), std::move(m));
    }

    long genus() const { return g_; }
    const std::vector<Int>& y() const { return y_; }
    const IntMatrix& matrix() const { return m_; }
    bool is_trivial() const {
        for (const auto& c : y_) if (c != 0) return false;
        return m_.is_identity();
    }

    /// Composition as automorphisms: (Y1,M1)(Y2,M2) = (Y1 + M1 Y2, M1 M2).
    AutPlusElement operator*(const AutPlusElement& o) const {
        check(o);
        std::vector<Int> y(y_);
        for (std::size_t i = 0; i < y.size(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < y.size(); ++j) acc += m_(i, j) * o.y_[j];
            y[i] += acc;
        }
        return AutPlusElement(g_, std::move(y), m_ * o.m_);
    }

    AutPlusElement inverse() const {
        // M^{-1} = J M^T J^{-1} stays integral.
        IntMatrix j = symplectic_J(g_);
        IntMatrix jinv = j * Int(-1);
        IntMatrix minv = j * m_.transpose() * jinv;
        std::vector<Int> y(2 * g_, 0);
        for (std::size_t i = 0; i < y.size(); ++i) {
            Int acc = 0;
            for (std::size_t k = 0; k < y.size(); ++k) acc += minv(i, k) * y_[k];
            y[i] = -acc;
        }
        return AutPlusElement(g_, std::move(y), std::move(minv));
    }

    /// Apply to a Heisenberg element. In the symmetrized coordinate
    /// lambda = l + m.n the action reads (X, lambda) -> (MX, lambda + w(Y, MX)).
    HeisenbergElement apply(const HeisenbergElement& h) const {
        if (h.genus() != g_) throw std::invalid_argument("genus mismatch");
        if (h.quotient().kind != QuotientKind::full)
            throw std::invalid_argument("Aut+ acts on the full Heisenberg group");
        std::vector<Int> x = h.abelianized();
        std::vector<Int> mx(2 * g_, 0);
        for (long i = 0; i < 2 * g_; ++i)
            for (long j = 0; j < 2 * g_; ++j) mx[i] += m_(i, j) * x[j];
        Int lambda = h.l() + idot(h.m(), h.n());
        lambda += symplectic_form(y_, mx);
        std::vector<Int> m2(mx.begin(), mx.begin() + g_), n2(mx.begin() + g_, mx.end());
        Int l2 = lambda - idot(m2, n2);
        return HeisenbergElement(g_, std::move(m2), std::move(n2), std::move(l2));
    }

    auto key() const { return std::make_pair(y_, flat()); }
    bool operator==(const AutPlusElement& o) const { return g_ == o.g_ && key() == o.key(); }
    bool operator<(const AutPlusElement& o) const { return key() < o.key(); }

    std::string str() const {
        std::ostringstream os;
        os << "Y=(";
        for (std::size_t i = 0; i < y_.size(); ++i) os << (i ? "," : "") << y_[i].str();
        os << ") M=" << (m_.is_identity() ? std::string("I") : m_.str());
        return os.str();
    }

private:
    long g_;
    std::vector<Int> y_;
    IntMatrix m_;

    std::vector<Int> flat() const {
        std::vector<Int> v;
        v.reserve(4 * g_ * g_);
        for (std::size_t i = 0; i < m_.rows(); ++i)
            for (std::size_t j = 0; j < m_.cols(); ++j) v.push_back(m_(i, j));
        return v;
    }
    void check(const AutPlusElement& o) const {
        if (g_ != o.g_) throw std::invalid_argument("genus mismatch");
    }
};

/// Element (h, phi) of H_g x| Aut+(H_g), with (h1,p1)(h2,p2) = (h1 p1(h2), p1 p2).
class SemidirectElement {
public:
    explicit SemidirectElement(long g)
        : h_(HeisenbergElement::identity(g)), aut_(g) {}
    SemidirectElement(HeisenbergElement h, AutPlusElement aut)
        : h_(std::move(h)), aut_(std::move(aut)) {
        if (h_.genus() != aut_.genus()) throw std::invalid_argument("genus mismatch");
    }

    static SemidirectElement from_group(const HeisenbergElement& h) {
        return SemidirectElement(h, AutPlusElement(h.genus()));
    }
    static SemidirectElement from_aut(const AutPlusElement& a) {
        return SemidirectElement(HeisenbergElement::identity(a.genus()), a);
    }

    long genus() const { return h_.genus(); }
    const HeisenbergElement& h() const { return h_; }
    const AutPlusElement& aut() const { return aut_; }

    SemidirectElement operator*(const SemidirectElement& o) const {
        return SemidirectElement(h_ * aut_.apply(o.h_), aut_ * o.aut_);
    }
    SemidirectElement inverse() const {
        AutPlusElement ai = aut_.inverse();
        return SemidirectElement(ai.apply(h_.inverse()), ai);
    }

    auto key() const { return std::make_pair(h_.key(), aut_.key()); }
    bool operator==(const SemidirectElement& o) const { return key() == o.key(); }
    bool operator<(const SemidirectElement& o) const { return key() < o.key(); }

    std::string str() const {
        std::string s = h_.str();
        if (!aut_.is_trivial()) s += " |> " + aut_.str();
        return s;
    }

private:
    HeisenbergElement h_;
    AutPlusElement aut_;
};

using SemidirectRing = RingElement<SemidirectElement>;
using SemidirectMatrix = DenseMatrix<SemidirectRing>;
using HeisRingMatrix = DenseMatrix<HeisRing>;

/// Uncross a crossed-representation matrix: Mat . (f_* I_N). Every entry of the
/// result carries the automorphism part f_*, so the output lies over Z[H_g]
/// exactly when f_* is trivial.
inline SemidirectMatrix uncross_matrix(const HeisRingMatrix& mat, const AutPlusElement& fstar) {
    if (!mat.is_square()) throw std::invalid_argument("uncross_matrix: square matrix required");
    SemidirectMatrix r(mat.rows(), mat.cols());
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            SemidirectRing e;
            for (const auto& [h, c] : mat(i, j).terms())
                e.add_term(SemidirectElement(h, fstar), c);
            r(i, j) = e;
        }
    return r;
}

/// Apply an automorphism to every coefficient of a matrix over Z[H_g].
inline HeisRingMatrix apply_aut(const HeisRingMatrix& mat, const AutPlusElement& f) {
    return mat.map([&](const HeisRing& x) {
        return x.map_terms([&](const HeisenbergElement& h) { return f.apply(h); });
    });
}

/// True iff every term of every entry has trivial automorphism part.
inline bool lies_in_group_ring(const SemidirectMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [s, c] : m(i, j).terms())
                if (!s.aut().is_trivial()) return false;
    return true;
}

} // namespace heisrep
