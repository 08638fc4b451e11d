#include "heisrep/words.hpp"

#include <cctype>
#include <numeric>

namespace heisrep {

namespace {
long parse_long_at(const std::string& text, std::size_t start, std::size_t end) {
    try {
        return std::stol(text.substr(start, end - start));
    } catch (const std::out_of_range&) {
        throw ParseError("number out of range", start);
    }
}
} // namespace

std::string SurfaceBraidWord::str() const {
    if (letters_.empty()) return "";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        const auto& l = letters_[i];
        char c = l.kind == SurfaceLetter::alpha ? 'a' : l.kind == SurfaceLetter::beta ? 'b' : 's';
        if (l.sign < 0) c = static_cast<char>(std::toupper(c));
        s += c;
        s += std::to_string(l.index);
    }
    return s;
}

SurfaceBraidWord separating_word(long k, int eps, long g, long n) {
    if (k < 0 || k > g) throw std::invalid_argument("separating_word: need 0 <= k <= g");
    SurfaceBraidWord w(g, n);
    for (long i = 1; i <= k; ++i) {
        // [alpha_i^{-1}, beta_i^{-1}] with [x,y] = x y x^{-1} y^{-1}
        w.push({SurfaceLetter::alpha, i, -1});
        w.push({SurfaceLetter::beta, i, -1});
        w.push({SurfaceLetter::alpha, i, +1});
        w.push({SurfaceLetter::beta, i, +1});
    }
    return eps >= 0 ? w : w.inverse();
}

SurfaceBraidWord parse_surface_word(const std::string& text, long g, long n) {
    SurfaceBraidWord w(g, n);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        std::size_t start = i;
        char c = text[i];
        char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lc != 'a' && lc != 'b' && lc != 's')
            throw ParseError("expected generator letter a/b/s", start);
        int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : +1;
        ++i;
        std::size_t num_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (num_start == i) throw ParseError("expected generator index", i);
        long idx = parse_long_at(text, num_start, i);
        // optional ^exp with integer exponent
        long rep = 1;
        int rep_sign = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t e_start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (e_start == i) throw ParseError("expected exponent after ^", i);
            long e = parse_long_at(text, e_start, i);
            if (e < 0) { rep_sign = -1; e = -e; }
            rep = e;
        }
        SurfaceLetter::Kind kind = lc == 'a' ? SurfaceLetter::alpha
                                  : lc == 'b' ? SurfaceLetter::beta
                                              : SurfaceLetter::exchange;
        if (kind == SurfaceLetter::exchange) {
            if (n < 2) throw ParseError("exchange generator needs n >= 2", start);
            if (idx < 1 || idx > n - 1) throw ParseError("exchange index out of range", start);
        } else if (idx < 1 || idx > g) {
            throw ParseError("generator index out of range", start);
        }
        for (long r = 0; r < rep; ++r) w.push({kind, idx, sign * rep_sign});
    }
    return w;
}

BraidWord parse_braid_word(const std::string& text, long strands) {
    std::vector<long> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        std::size_t start = i;
        char c = text[i];
        if (c != 's' && c != 'S') throw ParseError("expected braid generator s<i>", start);
        int sign = c == 'S' ? -1 : +1;
        ++i;
        std::size_t num_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (num_start == i) throw ParseError("expected generator index", i);
        long idx = parse_long_at(text, num_start, i);
        long rep = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t e_start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (e_start == i) throw ParseError("expected exponent after ^", i);
            rep = parse_long_at(text, e_start, i);
        }
        if (idx < 1 || idx >= strands) throw ParseError("braid generator index out of range", start);
        long count = rep < 0 ? -rep : rep;
        long letter = (rep < 0 ? -1 : 1) * sign * idx;
        for (long r = 0; r < count; ++r) letters.push_back(letter);
    }
    return BraidWord(strands, letters);
}

std::vector<long> braid_permutation(const BraidWord& b) {
    std::vector<long> p(b.strands);
    std::iota(p.begin(), p.end(), 0);
    for (long s : b.letters) {
        long i = (s < 0 ? -s : s) - 1;
        std::swap(p[i], p[i + 1]);
    }
    return p;
}

FreeWord artin_letter_on_generator(long letter, long strands, long gen_index) {
    long i = letter < 0 ? -letter : letter;
    if (i < 1 || i >= strands) throw std::invalid_argument("artin: letter out of range");
    if (gen_index < 1 || gen_index > strands) throw std::invalid_argument("artin: generator out of range");
    FreeWord xi = FreeWord::generator(strands, i);
    FreeWord xi1 = FreeWord::generator(strands, i + 1);
    if (letter > 0) {
        if (gen_index == i) return xi * xi1 * xi.inverse();
        if (gen_index == i + 1) return xi;
    } else {
        if (gen_index == i) return xi1;
        if (gen_index == i + 1) return xi1.inverse() * xi * xi1;
    }
    return FreeWord::generator(strands, gen_index);
}

namespace {
FreeWord substitute_letter(long letter, long strands, const FreeWord& w) {
    FreeWord r(strands);
    for (long s : w.letters()) {
        FreeWord img = artin_letter_on_generator(letter, strands, s < 0 ? -s : s);
        if (s < 0) img = img.inverse();
        r = r * img;
    }
    return r;
}
} // namespace

FreeWord artin_action(const BraidWord& b, const FreeWord& w) {
    if (w.rank() != b.strands) throw std::invalid_argument("artin_action: rank mismatch");
    FreeWord r = w;
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        r = substitute_letter(*it, b.strands, r);
    return r;
}

HeisenbergElement parse_heisenberg(const std::string& text, long g, QuotientSpec q) {
    std::vector<Int> m(g, 0), n(g, 0);
    Int l = 0;
    HeisenbergElement acc = HeisenbergElement::identity(g, q);
    std::size_t i = 0;
    bool any = false;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] == '1' && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
            ++i;
            any = true;
            continue;
        }
        std::size_t start = i;
        char c = text[i];
        char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lc != 'a' && lc != 'b' && lc != 's')
            throw ParseError("expected a/b/s generator", start);
        int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : +1;
        ++i;
        long idx = 0;
        std::size_t num_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (num_start != i) idx = parse_long_at(text, num_start, i);
        Int e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t e_start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (e_start == i) throw ParseError("expected exponent after ^", i);
            e = Int(text.substr(e_start, i - e_start));
        }
        if (sign < 0) e = -e;
        HeisenbergElement gen = HeisenbergElement::identity(g, q);
        if (lc == 's') {
            if (idx != 0 && idx != 1) throw ParseError("sigma takes no index here", start);
            gen = HeisenbergElement::sigma(g, 1, q);
        } else if (lc == 'a') {
            if (idx < 1 || idx > g) throw ParseError("generator index out of range", start);
            gen = HeisenbergElement::a(g, idx, q);
        } else {
            if (idx < 1 || idx > g) throw ParseError("generator index out of range", start);
            gen = HeisenbergElement::b(g, idx, q);
        }
        acc = acc * gen.pow(e);
        any = true;
    }
    if (!any) throw ParseError("empty element text", 0);
    return acc;
}

} // namespace heisrep
