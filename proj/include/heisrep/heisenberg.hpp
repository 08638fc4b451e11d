#pragma once

#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "types.hpp"

namespace heisrep {

enum class QuotientKind { full, mod_sigma_r, finite_r };

/// Quotient of the Heisenberg group: the full group, H_{g,r} (sigma^r = 1),
/// or the finite quotient (sigma^r = a_i^r = b_i^r = 1).
struct QuotientSpec {
    QuotientKind kind = QuotientKind::full;
    long r = 0;

    static QuotientSpec full() { return {QuotientKind::full, 0}; }
    static QuotientSpec mod_sigma(long r) {
        if (r < 1) throw std::invalid_argument("QuotientSpec: r must be >= 1");
        return {QuotientKind::mod_sigma_r, r};
    }
    static QuotientSpec finite(long r) {
        if (r < 1) throw std::invalid_argument("QuotientSpec: r must be >= 1");
        return {QuotientKind::finite_r, r};
    }

    bool operator==(const QuotientSpec&) const = default;

    std::string str() const {
        switch (kind) {
            case QuotientKind::full: return "full";
            case QuotientKind::mod_sigma_r: return "mod_sigma_" + std::to_string(r);
            default: return "finite_" + std::to_string(r);
        }
    }
};

/// Element of H_g (or a quotient) in normal form a_1^{m_1}..a_g^{m_g} b_1^{n_1}..b_g^{n_g} s^l.
///
/// The single global sign convention is [a_i, b_i] = s^2, i.e. a_i b_i = b_i a_i s^2.
/// Collecting the a-letters of the right factor through the b-letters of the left
/// factor therefore costs s^{-2} per matching index:
///   (m,n,l) * (m',n',l') = (m+m', n+n', l+l' - 2 n.m').
class HeisenbergElement {
public:
    HeisenbergElement() = default;

    HeisenbergElement(long g, std::vector<Int> m, std::vector<Int> n, Int l,
                      QuotientSpec q = QuotientSpec::full())
        : g_(g), m_(std::move(m)), n_(std::move(n)), l_(std::move(l)), q_(q) {
        if (g_ < 1) throw std::invalid_argument("HeisenbergElement: genus must be positive");
        if (m_.size() != static_cast<std::size_t>(g_) || n_.size() != static_cast<std::size_t>(g_))
            throw std::invalid_argument("HeisenbergElement: exponent vectors must have length g");
        normalize();
    }

    static HeisenbergElement identity(long g, QuotientSpec q = QuotientSpec::full()) {
        return HeisenbergElement(g, std::vector<Int>(g, 0), std::vector<Int>(g, 0), 0, q);
    }
    static HeisenbergElement a(long g, long i, QuotientSpec q = QuotientSpec::full()) {
        check_index(g, i);
        std::vector<Int> m(g, 0), n(g, 0);
        m[i - 1] = 1;
        return HeisenbergElement(g, m, n, 0, q);
    }
    static HeisenbergElement b(long g, long i, QuotientSpec q = QuotientSpec::full()) {
        check_index(g, i);
        std::vector<Int> m(g, 0), n(g, 0);
        n[i - 1] = 1;
        return HeisenbergElement(g, m, n, 0, q);
    }
    static HeisenbergElement sigma(long g, Int l = 1, QuotientSpec q = QuotientSpec::full()) {
        return HeisenbergElement(g, std::vector<Int>(g, 0), std::vector<Int>(g, 0), std::move(l), q);
    }

    long genus() const { return g_; }
    const std::vector<Int>& m() const { return m_; }
    const std::vector<Int>& n() const { return n_; }
    const Int& l() const { return l_; }
    const QuotientSpec& quotient() const { return q_; }

    bool is_identity() const {
        if (l_ != 0) return false;
        for (const auto& x : m_) if (x != 0) return false;
        for (const auto& x : n_) if (x != 0) return false;
        return true;
    }

    /// Abelianized vector (m_1..m_g, n_1..n_g) in Z^{2g}.
    std::vector<Int> abelianized() const {
        std::vector<Int> v(m_);
        v.insert(v.end(), n_.begin(), n_.end());
        return v;
    }

    HeisenbergElement operator*(const HeisenbergElement& o) const {
        check_compatible(o);
        std::vector<Int> m(m_), n(n_);
        for (long i = 0; i < g_; ++i) { m[i] += o.m_[i]; n[i] += o.n_[i]; }
        Int l = l_ + o.l_ - 2 * idot(n_, o.m_);
        return HeisenbergElement(g_, std::move(m), std::move(n), std::move(l), q_);
    }

    HeisenbergElement inverse() const {
        std::vector<Int> m(g_), n(g_);
        for (long i = 0; i < g_; ++i) { m[i] = -m_[i]; n[i] = -n_[i]; }
        Int l = -l_ - 2 * idot(n_, m_);
        return HeisenbergElement(g_, std::move(m), std::move(n), std::move(l), q_);
    }

    HeisenbergElement pow(const Int& e) const {
        HeisenbergElement base = e < 0 ? inverse() : *this;
        Int k = e < 0 ? Int(-e) : e;
        HeisenbergElement acc = identity(g_, q_);
        while (k > 0) {
            if ((k & 1) != 0) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    /// [x,y] = x^{-1} y^{-1} x y; central, so the convention choice is immaterial here.
    HeisenbergElement commutator(const HeisenbergElement& o) const {
        return inverse() * o.inverse() * *this * o;
    }

    /// Image in the given quotient.
    HeisenbergElement reduce(const QuotientSpec& q) const {
        return HeisenbergElement(g_, m_, n_, l_, q);
    }

    auto key() const { return std::tie(m_, n_, l_); }
    bool operator==(const HeisenbergElement& o) const {
        return g_ == o.g_ && q_ == o.q_ && key() == o.key();
    }
    // Term order for canonical ring serialization: lexicographic on (m, n, l).
    bool operator<(const HeisenbergElement& o) const { return key() < o.key(); }

    /// Canonical text form, e.g. "a1^2 b3^-1 s^4"; the identity prints as "1".
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        auto emit = [&](const char* gen, long i, const Int& e) {
            if (e == 0) return;
            if (!first) os << ' ';
            first = false;
            os << gen;
            if (i > 0) os << i;
            if (e != 1) os << '^' << e.str();
        };
        for (long i = 0; i < g_; ++i) emit("a", i + 1, m_[i]);
        for (long i = 0; i < g_; ++i) emit("b", i + 1, n_[i]);
        emit("s", 0, l_);
        if (first) return "1";
        return os.str();
    }

private:
    long g_ = 1;
    std::vector<Int> m_{0};
    std::vector<Int> n_{0};
    Int l_ = 0;
    QuotientSpec q_ = QuotientSpec::full();

    static void check_index(long g, long i) {
        if (i < 1 || i > g) throw std::invalid_argument("generator index out of range");
    }
    void check_compatible(const HeisenbergElement& o) const {
        if (g_ != o.g_) throw std::invalid_argument("genus mismatch");
        if (!(q_ == o.q_)) throw std::invalid_argument("quotient mismatch");
    }
    void normalize() {
        switch (q_.kind) {
            case QuotientKind::full: break;
            case QuotientKind::mod_sigma_r:
                l_ = imod(l_, q_.r);
                break;
            case QuotientKind::finite_r:
                l_ = imod(l_, q_.r);
                for (auto& x : m_) x = imod(x, q_.r);
                for (auto& x : n_) x = imod(x, q_.r);
                break;
        }
    }
};

/// Parse the canonical text form: whitespace-separated tokens a<i>, b<i>, s,
/// optionally ^<exp>; "1" is the identity. Uppercase A<i>, B<i>, S mean inverses.
HeisenbergElement parse_heisenberg(const std::string& text, long g,
                                   QuotientSpec q = QuotientSpec::full());

} // namespace heisrep
