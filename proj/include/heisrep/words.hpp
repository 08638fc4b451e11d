#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heisenberg.hpp"
#include "laurent.hpp"
#include "ring.hpp"

namespace heisrep {

/// Freely reduced word in the free group on x_1..x_k. Letters are stored as
/// signed indices (+i for x_i, -i for x_i^{-1}); reduction happens eagerly so
/// equality of words is equality in the group.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(long rank) : rank_(rank) {}
    FreeWord(long rank, std::vector<long> letters) : rank_(rank) {
        for (long s : letters) push(s);
    }

    static FreeWord generator(long rank, long i, int sign = +1) {
        FreeWord w(rank);
        w.push(sign >= 0 ? i : -i);
        return w;
    }

    long rank() const { return rank_; }
    const std::vector<long>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    void push(long s) {
        long i = s < 0 ? -s : s;
        if (i < 1 || i > rank_) throw std::invalid_argument("free word letter out of range");
        if (!letters_.empty() && letters_.back() == -s) letters_.pop_back();
        else letters_.push_back(s);
    }

    FreeWord operator*(const FreeWord& o) const {
        if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
        FreeWord r(*this);
        for (long s : o.letters_) r.push(s);
        return r;
    }
    FreeWord inverse() const {
        FreeWord r(rank_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push(-*it);
        return r;
    }

    bool operator==(const FreeWord& o) const { return rank_ == o.rank_ && letters_ == o.letters_; }
    bool operator<(const FreeWord& o) const {
        return std::tie(rank_, letters_) < std::tie(o.rank_, o.letters_);
    }

    /// Exponent sum per generator.
    std::vector<Int> abelianized() const {
        std::vector<Int> v(rank_, 0);
        for (long s : letters_) v[(s < 0 ? -s : s) - 1] += (s < 0 ? -1 : 1);
        return v;
    }

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) s += ' ';
            long l = letters_[i];
            s += "x" + std::to_string(l < 0 ? -l : l);
            if (l < 0) s += "^-1";
        }
        return s;
    }

private:
    long rank_ = 0;
    std::vector<long> letters_;
};

using FreeRing = RingElement<FreeWord>;

/// Fox free derivative d(w)/d(x_i): d(uv) = du + u dv, d(x_i) = 1,
/// d(x_i^{-1}) = -x_i^{-1}.
inline FreeRing fox_derivative(const FreeWord& w, long i) {
    if (i < 1 || i > w.rank()) throw std::invalid_argument("fox_derivative: index out of range");
    FreeRing acc;
    FreeWord prefix(w.rank());
    for (long s : w.letters()) {
        long j = s < 0 ? -s : s;
        if (j == i) {
            if (s > 0) {
                acc.add_term(prefix, 1);
            } else {
                acc.add_term(prefix * FreeWord::generator(w.rank(), i, -1), -1);
            }
        }
        prefix.push(s);
    }
    return acc;
}

/// Letters of words in the surface braid group pi_{n,g}: alpha_i, beta_i
/// (1 <= i <= g) and sigma_j (1 <= j <= n-1), with +-1 exponents.
struct SurfaceLetter {
    enum Kind { alpha, beta, exchange } kind;
    long index;
    int sign; // +1 or -1
    bool operator==(const SurfaceLetter&) const = default;
};

class SurfaceBraidWord {
public:
    SurfaceBraidWord(long g, long n) : g_(g), n_(n) {
        if (g < 1 || n < 1) throw std::invalid_argument("SurfaceBraidWord: g, n must be positive");
    }
    SurfaceBraidWord(long g, long n, std::vector<SurfaceLetter> letters)
        : SurfaceBraidWord(g, n) {
        for (const auto& l : letters) push(l);
    }

    long genus() const { return g_; }
    long strands() const { return n_; }
    const std::vector<SurfaceLetter>& letters() const { return letters_; }

    void push(SurfaceLetter l) {
        if (l.kind == SurfaceLetter::exchange) {
            if (l.index < 1 || l.index > n_ - 1)
                throw std::invalid_argument("exchange generator index out of range");
        } else {
            if (l.index < 1 || l.index > g_)
                throw std::invalid_argument("surface generator index out of range");
        }
        letters_.push_back(l);
    }

    SurfaceBraidWord operator*(const SurfaceBraidWord& o) const {
        if (g_ != o.g_ || n_ != o.n_) throw std::invalid_argument("word parameter mismatch");
        SurfaceBraidWord r(*this);
        for (const auto& l : o.letters_) r.letters_.push_back(l);
        return r;
    }
    SurfaceBraidWord inverse() const {
        SurfaceBraidWord r(g_, n_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            r.letters_.push_back({it->kind, it->index, -it->sign});
        return r;
    }

    std::string str() const;

private:
    long g_;
    long n_;
    std::vector<SurfaceLetter> letters_;
};

/// The Heisenberg local system: alpha_i -> a_i, beta_i -> b_i, sigma_j -> s.
inline HeisenbergElement eval_heisenberg(const SurfaceBraidWord& w,
                                         QuotientSpec q = QuotientSpec::full()) {
    HeisenbergElement acc = HeisenbergElement::identity(w.genus(), q);
    for (const auto& l : w.letters()) {
        HeisenbergElement img =
            l.kind == SurfaceLetter::alpha ? HeisenbergElement::a(w.genus(), l.index, q)
            : l.kind == SurfaceLetter::beta ? HeisenbergElement::b(w.genus(), l.index, q)
                                            : HeisenbergElement::sigma(w.genus(), 1, q);
        if (l.sign < 0) img = img.inverse();
        acc = acc * img;
    }
    return acc;
}

/// Word ([alpha_1^{-1},beta_1^{-1}] ... [alpha_k^{-1},beta_k^{-1}])^eps in
/// pi_{1,g}; represents a separating simple closed curve of genus k whose
/// Heisenberg image is s^{2 eps k}.
SurfaceBraidWord separating_word(long k, int eps, long g, long n = 1);

/// Parse "a1 b1 A1 B1 s1" (uppercase = inverse). Errors carry the byte offset.
SurfaceBraidWord parse_surface_word(const std::string& text, long g, long n);

struct ParseError : std::invalid_argument {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Artin braid word on k strands: letters +-i encode sigma_i^{+-1}.
struct BraidWord {
    long strands = 2;
    std::vector<long> letters;

    BraidWord(long k, std::vector<long> ls) : strands(k), letters(std::move(ls)) {
        for (long s : letters) {
            long i = s < 0 ? -s : s;
            if (i < 1 || i >= strands) throw std::invalid_argument("braid letter out of range");
        }
    }
    BraidWord inverse() const {
        std::vector<long> ls;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) ls.push_back(-*it);
        return BraidWord(strands, ls);
    }
    BraidWord operator*(const BraidWord& o) const {
        if (strands != o.strands) throw std::invalid_argument("strand count mismatch");
        std::vector<long> ls(letters);
        ls.insert(ls.end(), o.letters.begin(), o.letters.end());
        return BraidWord(strands, ls);
    }
};

/// Parse "s1 s2 S1" (uppercase = inverse, optional ^exp) into a braid word.
BraidWord parse_braid_word(const std::string& text, long strands);

/// Permutation induced on strands; entry p[j] = image of strand j (0-based).
std::vector<long> braid_permutation(const BraidWord& b);
inline bool is_pure(const BraidWord& b) {
    auto p = braid_permutation(b);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<long>(i)) return false;
    return true;
}

/// Artin action of a single generator: sigma_i maps x_i -> x_i x_{i+1} x_i^{-1},
/// x_{i+1} -> x_i and fixes the rest.
FreeWord artin_letter_on_generator(long letter, long strands, long gen_index);

/// Action of a braid word: (b1 b2)(w) = b1(b2(w)) (rightmost letter acts first).
FreeWord artin_action(const BraidWord& b, const FreeWord& w);

/// Local system of the k-holed disk, through the abelianization Z^{k+1}:
/// looping around hole i is the variable s_i, a strand exchange is sigma.
struct DiskLocalSystem {
    long holes;
    explicit DiskLocalSystem(long k) : holes(k) {
        if (k < 1) throw std::invalid_argument("DiskLocalSystem: need at least one hole");
    }
    std::string hole_symbol(long i) const {
        if (i < 1 || i > holes) throw std::invalid_argument("hole index out of range");
        return "s" + std::to_string(i);
    }
    static std::string exchange_symbol() { return "sigma"; }
};

/// Word in the abelianized holed-disk braid group: a list of (symbol, exponent)
/// where symbol 0 is the strand exchange and 1..k are hole loops.
struct DiskWord {
    std::vector<std::pair<long, Int>> factors;
};

inline LaurentMonomial eval_disk(const DiskWord& w, const DiskLocalSystem& sys) {
    LaurentMonomial m;
    for (const auto& [sym, e] : w.factors) {
        if (sym == 0) m = m * LaurentMonomial(DiskLocalSystem::exchange_symbol(), e);
        else m = m * LaurentMonomial(sys.hole_symbol(sym), e);
    }
    return m;
}

} // namespace heisrep
