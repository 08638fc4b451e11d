#pragma once

#include <map>
#include <sstream>
#include <string>

#include "ring.hpp"
#include "types.hpp"

namespace heisrep {

/// Monomial in a free abelian group of Laurent variables, e.g. s1^2 * t1^-1.
class LaurentMonomial {
public:
    LaurentMonomial() = default;
    explicit LaurentMonomial(const std::string& var, Int e = 1) {
        if (e != 0) exps_[var] = std::move(e);
    }

    static LaurentMonomial one() { return LaurentMonomial(); }

    const std::map<std::string, Int>& exponents() const { return exps_; }
    bool is_one() const { return exps_.empty(); }
    Int exponent(const std::string& var) const {
        auto it = exps_.find(var);
        return it == exps_.end() ? Int(0) : it->second;
    }

    LaurentMonomial operator*(const LaurentMonomial& o) const {
        LaurentMonomial r(*this);
        for (const auto& [v, e] : o.exps_) {
            auto it = r.exps_.find(v);
            if (it == r.exps_.end()) r.exps_[v] = e;
            else {
                it->second += e;
                if (it->second == 0) r.exps_.erase(it);
            }
        }
        return r;
    }
    LaurentMonomial inverse() const {
        LaurentMonomial r;
        for (const auto& [v, e] : exps_) r.exps_[v] = -e;
        return r;
    }
    LaurentMonomial pow(const Int& k) const {
        LaurentMonomial r;
        if (k == 0) return r;
        for (const auto& [v, e] : exps_) r.exps_[v] = e * k;
        return r;
    }

    /// Substitute each variable by a value in a commutative ring.
    template <class T, class F>
    T eval(F&& value_of, const T& one) const {
        T r = one;
        for (const auto& [v, e] : exps_) {
            T base = value_of(v);
            Int k = e < 0 ? Int(-e) : e;
            T p = one, acc = base;
            while (k > 0) {
                if ((k & 1) != 0) p = p * acc;
                acc = acc * acc;
                k >>= 1;
            }
            if (e < 0) throw std::domain_error("negative exponent needs invertible value");
            r = r * p;
        }
        return r;
    }

    bool operator==(const LaurentMonomial& o) const { return exps_ == o.exps_; }
    bool operator<(const LaurentMonomial& o) const { return exps_ < o.exps_; }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, e] : exps_) {
            if (!first) os << '*';
            first = false;
            os << v;
            if (e != 1) os << '^' << e.str();
        }
        return os.str();
    }

private:
    std::map<std::string, Int> exps_;
};

using LaurentPoly = RingElement<LaurentMonomial>;

inline LaurentPoly laurent_const(const Int& c) {
    return LaurentPoly(LaurentMonomial::one(), c);
}
inline LaurentPoly laurent_var(const std::string& v, Int e = 1) {
    return LaurentPoly(LaurentMonomial(v, std::move(e)));
}

/// Substitute all variables with rationals (must be nonzero for negative exponents).
inline Rat laurent_eval_rat(const LaurentPoly& p,
                            const std::function<Rat(const std::string&)>& value_of) {
    Rat total = 0;
    for (const auto& [mono, c] : p.terms()) {
        Rat term = Rat(c);
        for (const auto& [v, e] : mono.exponents()) {
            Rat base = value_of(v);
            if (base == 0) throw std::domain_error("specializing a Laurent variable to 0");
            Int k = e < 0 ? Int(-e) : e;
            Rat acc = 1;
            Rat b = base;
            while (k > 0) {
                if ((k & 1) != 0) acc *= b;
                b *= b;
                k >>= 1;
            }
            if (e < 0) acc = Rat(1) / acc;
            term *= acc;
        }
        total += term;
    }
    return total;
}

} // namespace heisrep
