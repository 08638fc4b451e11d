#include "heisrep/lawrence.hpp"

#include <cctype>
#include <sstream>

namespace heisrep {

namespace {

LaurentPoly abelianize_burau(const FreeRing& x) {
    LaurentPoly p;
    for (const auto& [w, c] : x.terms()) {
        Int e = 0;
        for (const auto& v : w.abelianized()) e += v;
        p += LaurentPoly(LaurentMonomial("t", e), c);
    }
    return p;
}

LaurentPoly abelianize_gassner(const FreeRing& x) {
    LaurentPoly p;
    for (const auto& [w, c] : x.terms()) {
        LaurentMonomial m;
        auto ab = w.abelianized();
        for (std::size_t i = 0; i < ab.size(); ++i)
            if (ab[i] != 0) m = m * LaurentMonomial("t" + std::to_string(i + 1), ab[i]);
        p += LaurentPoly(m, c);
    }
    return p;
}

template <class Ab>
LaurentMatrix fox_matrix(const BraidWord& b, Ab&& abelianize) {
    long k = b.strands;
    LaurentMatrix m(k, k);
    for (long j = 1; j <= k; ++j) {
        FreeWord image = artin_action(b, FreeWord::generator(k, j));
        for (long i = 1; i <= k; ++i) m(i - 1, j - 1) = abelianize(fox_derivative(image, i));
    }
    return m;
}

} // namespace

LaurentMatrix burau_unreduced(const BraidWord& b) { return fox_matrix(b, abelianize_burau); }

LaurentMatrix burau_reduced(const BraidWord& b) {
    LaurentMatrix u = burau_unreduced(b);
    long k = b.strands;
    if (k < 2) throw std::invalid_argument("burau_reduced: need at least 2 strands");
    // column sums of the unreduced matrix are 1 (Fox fundamental identity), so
    // zero-sum column vectors form an invariant sublattice with basis
    // v_i = e_i - e_{i+1}; the image U v_i has coordinates the partial sums of
    // its entries
    LaurentMatrix r(k - 1, k - 1);
    for (long i = 0; i < k - 1; ++i) {
        std::vector<LaurentPoly> w(k);
        for (long row = 0; row < k; ++row) w[row] = u(row, i) - u(row, i + 1);
        LaurentPoly partial;
        for (long row = 0; row < k - 1; ++row) {
            partial += w[row];
            r(row, i) = partial;
        }
    }
    return r;
}

LaurentMatrix gassner(const BraidWord& b) {
    if (!is_pure(b)) throw std::invalid_argument("gassner: braid word is not pure");
    return fox_matrix(b, abelianize_gassner);
}

LaurentMatrix substitute_vars(const LaurentMatrix& m,
                              const std::map<std::string, std::string>& rename) {
    return m.map([&](const LaurentPoly& p) {
        LaurentPoly out;
        for (const auto& [mono, c] : p.terms()) {
            LaurentMonomial nm;
            for (const auto& [v, e] : mono.exponents()) {
                auto it = rename.find(v);
                nm = nm * LaurentMonomial(it == rename.end() ? v : it->second, e);
            }
            out.add_term(nm, c);
        }
        return out;
    });
}

RatMatrix specialize_matrix(const LaurentMatrix& m,
                            const std::function<Rat(const std::string&)>& value_of) {
    return m.map([&](const LaurentPoly& p) { return laurent_eval_rat(p, value_of); });
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det: square matrix required");
    std::size_t n = m.rows();
    if (n == 0) return laurent_const(1);
    if (n == 1) return m(0, 0);
    LaurentPoly det;
    // cofactor expansion along the first row
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        LaurentMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        LaurentPoly term = m(0, j) * laurent_det(minor);
        if (j % 2 == 1) term = -term;
        det += term;
    }
    return det;
}

IntMatrix permutation_matrix(const BraidWord& b) {
    auto p = braid_permutation(b);
    IntMatrix m(b.strands, b.strands);
    for (long j = 0; j < b.strands; ++j) m(p[j], j) = 1;
    return m;
}

long region_holes(Region r, long g) { return r == Region::V2g ? 2 * g : g; }

HeisRing heisenberg_restriction(Region region, long hole_index, long g) {
    if (hole_index == 0) return sigma_power(g, 1); // strand exchange
    if (hole_index < 0 || hole_index > region_holes(region, g))
        throw std::invalid_argument("heisenberg_restriction: invalid hole index");
    switch (region) {
        case Region::S:
            // each hole is bounded by a genus-1 separating curve
            return sigma_power(g, -2);
        case Region::Sg:
            return HeisRing(HeisenbergElement::b(g, hole_index));
        case Region::V2g: {
            long i = (hole_index + 1) / 2;
            if (hole_index % 2 == 1) return HeisRing(HeisenbergElement::a(g, i));
            return HeisRing(HeisenbergElement::a(g, i).inverse() *
                            HeisenbergElement::sigma(g, -2));
        }
    }
    throw std::logic_error("unreachable");
}

void SubstitutionMap::validate_abelian() const {
    for (const auto& [k1, v1] : images)
        for (const auto& [k2, v2] : images)
            if (v1 * v2 != v2 * v1)
                throw std::invalid_argument("substitution images of " + k1 + " and " + k2 +
                                            " do not commute");
}

HeisRing SubstitutionMap::apply(const LaurentMonomial& mono) const {
    HeisRing acc;
    bool started = false;
    for (const auto& [v, e] : mono.exponents()) {
        const HeisRing& img = image(v);
        // images are single group elements in all in-scope substitutions;
        // powers of general ring elements only support nonnegative exponents
        HeisRing p;
        if (img.size() == 1) {
            const auto& [h, c] = *img.terms().begin();
            if (c != 1 && c != -1 && e < 0)
                throw std::domain_error("cannot invert non-unit substitution image");
            Int coeff = 1;
            if (c == -1) {
                if (imod(e, 2) == 1) coeff = -1;
            } else if (c != 1) {
                for (Int i = 0; i < e; ++i) coeff *= c;
            }
            p = HeisRing(h.pow(e), coeff);
        } else {
            if (e < 0) throw std::domain_error("cannot invert non-monomial substitution image");
            p = heis_ring_one(img.terms().begin()->first.genus());
            for (Int i = 0; i < e; ++i) p = p * img;
        }
        acc = started ? acc * p : p;
        started = true;
    }
    if (!started) throw std::invalid_argument("cannot substitute the empty monomial without genus");
    return acc;
}

HeisRing SubstitutionMap::apply(const LaurentPoly& p) const {
    HeisRing acc;
    for (const auto& [mono, c] : p.terms()) {
        if (mono.is_one()) {
            // constants need a genus: borrow it from any image
            const auto& any = images.begin()->second;
            acc += heis_ring_one(any.terms().begin()->first.genus()) * c;
        } else {
            acc += apply(mono) * c;
        }
    }
    return acc;
}

SubstitutionMap standard_substitution(Region region, long g) {
    SubstitutionMap sub;
    long holes = region_holes(region, g);
    for (long i = 1; i <= holes; ++i)
        sub.images["s" + std::to_string(i)] = heisenberg_restriction(region, i, g);
    sub.images[DiskLocalSystem::exchange_symbol()] = sigma_power(g, 1);
    return sub;
}

SubstitutionReport substitution_check(Region region, long g, const SubstitutionMap& sub,
                                      const std::vector<DiskDiagram>& diagrams, long n_points) {
    SubstitutionReport rep;
    sub.validate_abelian();
    long holes = region_holes(region, g);
    DiskLocalSystem sys(holes);
    for (long i = 0; i <= holes; ++i) {
        std::string sym = i == 0 ? DiskLocalSystem::exchange_symbol() : sys.hole_symbol(i);
        DiskWord loop;
        loop.factors = {{i, Int(1)}};
        HeisRing through_disk = sub.apply(LaurentPoly(eval_disk(loop, sys)));
        HeisRing direct = heisenberg_restriction(region, i, g);
        if (through_disk != direct) {
            rep.pass = false;
            rep.failed_generator = sym;
            rep.detail = "disk route " + through_disk.str() + " != restriction " + direct.str();
            return rep;
        }
    }
    // n-point pairing values must agree after substitution
    for (const auto& d : diagrams) {
        long k = static_cast<long>(d.eta_loops.size());
        if (k < 1) continue;
        // disk-side value in Z[s_1..s_k, sigma]
        LaurentPoly disk_sum;
        HeisRing surf_sum;
        std::vector<long> tuple(n_points, 0);
        while (true) {
            Int index_sum = 0, wind = 0;
            LaurentMonomial mono;
            HeisRing surf = heis_ring_one(g);
            for (long j = 0; j < n_points; ++j) {
                index_sum += tuple[j];
                mono = mono * eval_disk(d.eta_loops[tuple[j]], sys);
                surf = surf * sub.apply(LaurentPoly(eval_disk(d.eta_loops[tuple[j]], sys)));
                for (long l = 0; l < j; ++l)
                    if (tuple[l] != tuple[j]) wind += d.A(tuple[l], tuple[j]);
            }
            Int sign = (imod(index_sum + wind, 2) == 1) ? -1 : 1;
            disk_sum.add_term(mono * LaurentMonomial(DiskLocalSystem::exchange_symbol(), wind), sign);
            surf_sum += surf * sigma_power(g, wind) * sign;
            long pos = n_points - 1;
            while (pos >= 0 && tuple[pos] == k - 1) { tuple[pos] = 0; --pos; }
            if (pos < 0) break;
            ++tuple[pos];
        }
        if (sub.apply(disk_sum) != surf_sum) {
            rep.pass = false;
            rep.failed_generator = "(diagram)";
            rep.detail = "pairing values disagree after substitution";
            return rep;
        }
    }
    return rep;
}

namespace {
long parse_gen_index(const std::string& name, const std::string& digits) {
    if (digits.empty()) throw std::invalid_argument("unknown generator " + name);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("unknown generator " + name);
    if (digits.size() > 9) throw std::invalid_argument("generator index out of range in " + name);
    return std::stol(digits);
}
} // namespace

SubgroupGenerator standard_subgroup_generator(const std::string& name, long g) {
    SubgroupGenerator gen;
    gen.name = name;
    gen.M = IntMatrix(g, g);
    gen.l.assign(g, 0);
    if (name.size() > 1 && name[0] == 'c') {
        long i = parse_gen_index(name, name.substr(1));
        if (i < 1 || i > g) throw std::invalid_argument("unknown generator " + name);
        gen.M(i - 1, i - 1) = 1;
        return gen;
    }
    if (name.size() > 1 && name[0] == 't') {
        auto comma = name.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("unknown generator " + name);
        long i = parse_gen_index(name, name.substr(1, comma - 1));
        long j = parse_gen_index(name, name.substr(comma + 1));
        if (i < 1 || j < 1 || i > g || j > g || i == j)
            throw std::invalid_argument("unknown generator " + name);
        gen.M(i - 1, j - 1) = 1;
        gen.M(j - 1, i - 1) = 1;
        gen.M(i - 1, i - 1) = 1;
        gen.M(j - 1, j - 1) = 1;
        return gen;
    }
    throw std::invalid_argument("unknown generator " + name);
}

std::pair<IntMatrix, std::vector<Int>> subgroup_Mf(
    const std::vector<std::pair<std::string, long>>& word, long g,
    const std::vector<SubgroupGenerator>& extra) {
    IntMatrix m(g, g);
    std::vector<Int> l(g, 0);
    for (const auto& [name, e] : word) {
        const SubgroupGenerator* gen = nullptr;
        for (const auto& x : extra)
            if (x.name == name) gen = &x;
        SubgroupGenerator builtin{"", IntMatrix(g, g), {}};
        if (!gen) {
            builtin = standard_subgroup_generator(name, g);
            gen = &builtin;
        }
        m = m + gen->M * Int(e);
        for (long i = 0; i < g; ++i)
            if (!gen->l.empty()) l[i] += gen->l[i] * e;
    }
    return {m, l};
}

} // namespace heisrep
