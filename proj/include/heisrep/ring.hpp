#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "heisenberg.hpp"
#include "types.hpp"

namespace heisrep {

/// Integral group ring element: finite formal sum of group elements with
/// nonzero integer coefficients. G needs *, inverse(), == and a strict order.
/// The zero element is the empty sum (default construction needs no context).
template <class G>
class RingElement {
public:
    using Terms = std::map<G, Int>;

    RingElement() = default;
    explicit RingElement(const G& g, Int c = 1) {
        if (c != 0) terms_[g] = std::move(c);
    }

    static RingElement zero() { return RingElement(); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    RingElement& add_term(const G& g, const Int& c) {
        if (c == 0) return *this;
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            terms_.emplace(g, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    RingElement operator+(const RingElement& o) const {
        RingElement r(*this);
        for (const auto& [g, c] : o.terms_) r.add_term(g, c);
        return r;
    }
    RingElement operator-(const RingElement& o) const {
        RingElement r(*this);
        for (const auto& [g, c] : o.terms_) r.add_term(g, -c);
        return r;
    }
    RingElement operator-() const {
        RingElement r;
        for (const auto& [g, c] : terms_) r.terms_[g] = -c;
        return r;
    }
    RingElement operator*(const RingElement& o) const {
        RingElement r;
        for (const auto& [g1, c1] : terms_)
            for (const auto& [g2, c2] : o.terms_) r.add_term(g1 * g2, c1 * c2);
        return r;
    }
    RingElement operator*(const Int& c) const {
        RingElement r;
        if (c == 0) return r;
        for (const auto& [g, k] : terms_) r.terms_[g] = k * c;
        return r;
    }
    RingElement& operator+=(const RingElement& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }

    bool operator==(const RingElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    /// Augmentation: sum of coefficients. A ring homomorphism to Z.
    Int augment() const {
        Int s = 0;
        for (const auto& [g, c] : terms_) s += c;
        return s;
    }

    /// Antipode: linear extension of g -> g^{-1}.
    RingElement star() const {
        RingElement r;
        for (const auto& [g, c] : terms_) r.add_term(g.inverse(), c);
        return r;
    }

    template <class F>
    auto map_terms(F&& f) const {
        using H = decltype(f(std::declval<const G&>()));
        RingElement<H> r;
        for (const auto& [g, c] : terms_) r.add_term(f(g), c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { os << "- "; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            std::string gs = g.str();
            if (a != 1) {
                os << a.str();
                if (gs != "1") os << '*' << gs;
            } else {
                os << gs;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

template <class G>
RingElement<G> operator*(const Int& c, const RingElement<G>& x) { return x * c; }

using HeisRing = RingElement<HeisenbergElement>;

inline HeisRing heis_ring_one(long g, QuotientSpec q = QuotientSpec::full()) {
    return HeisRing(HeisenbergElement::identity(g, q));
}

/// The involution of Z[H_g] fixing a_i, b_i and sending s to -s:
/// the term c * h picks up the sign (-1)^{l(h)}. On a mod-sigma-r quotient this
/// is only well defined when r is even (s^r = 1 must be fixed).
inline HeisRing involution_sigma_neg(const HeisRing& x) {
    HeisRing r;
    for (const auto& [h, c] : x.terms()) {
        const auto& q = h.quotient();
        if (q.kind == QuotientKind::mod_sigma_r && q.r % 2 != 0)
            throw std::domain_error("sigma -> -sigma is not defined mod sigma^r - 1 for odd r");
        if (q.kind == QuotientKind::finite_r && q.r % 2 != 0)
            throw std::domain_error("sigma -> -sigma is not defined on the finite quotient for odd r");
        r.add_term(h, (h.l() % 2 != 0) ? Int(-c) : c);
    }
    return r;
}

/// Reduce every term of a ring element into the given quotient.
inline HeisRing reduce(const HeisRing& x, const QuotientSpec& q) {
    HeisRing r;
    for (const auto& [h, c] : x.terms()) r.add_term(h.reduce(q), c);
    return r;
}

/// sigma^e as a ring element.
inline HeisRing sigma_power(long g, const Int& e, QuotientSpec q = QuotientSpec::full()) {
    return HeisRing(HeisenbergElement::sigma(g, e, q));
}

} // namespace heisrep
