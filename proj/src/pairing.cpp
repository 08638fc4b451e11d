#include "heisrep/pairing.hpp"

#include <functional>
#include <sstream>

namespace heisrep {

HeisenbergElement diagram_point_value(const DiagramPoint& p, long genus) {
    if (p.sigma_exp && p.loop)
        throw std::invalid_argument("diagram point carries both a sigma power and a loop");
    if (p.sigma_exp) return HeisenbergElement::sigma(genus, *p.sigma_exp);
    if (p.loop) {
        if (p.loop->genus() != genus)
            throw std::invalid_argument("diagram point loop has wrong genus");
        return eval_heisenberg(*p.loop, QuotientSpec::full());
    }
    throw std::invalid_argument("diagram point carries no loop data");
}

std::vector<HeisRing> pair_1pt_terms(const IntersectionDiagram1& d) {
    std::vector<HeisRing> terms;
    terms.reserve(d.points.size());
    for (const auto& p : d.points) {
        if (p.sign != 1 && p.sign != -1) throw std::invalid_argument("point sign must be +-1");
        HeisenbergElement h = diagram_point_value(p, d.genus);
        terms.push_back(involution_sigma_neg(HeisRing(h, p.sign)));
    }
    return terms;
}

HeisRing pair_1pt(const IntersectionDiagram1& d, QuotientSpec q) {
    HeisRing sum;
    for (const auto& t : pair_1pt_terms(d)) sum += t;
    return reduce(sum, q);
}

AugmentationReport augmentation_check(const IntersectionDiagram1& d) {
    AugmentationReport r;
    r.epsilon_of_pairing = pair_1pt(d, QuotientSpec::full()).augment();
    r.algebraic_count = 0;
    for (const auto& p : d.points) {
        HeisenbergElement h = diagram_point_value(p, d.genus);
        int eta = (h.l() % 2 != 0) ? -1 : +1;
        r.algebraic_count += p.sign * eta;
    }
    r.equal = (r.epsilon_of_pairing == r.algebraic_count);
    return r;
}

HeisRing pair_npt(const NPointDiagram& d, long n, QuotientSpec q) {
    long k = d.k();
    if (k < 1) throw std::invalid_argument("pair_npt: diagram needs k >= 1 points");
    if (n < 1) throw std::invalid_argument("pair_npt: n >= 1 required");
    if (d.A.rows() != static_cast<std::size_t>(k) || d.A.cols() != static_cast<std::size_t>(k))
        throw std::invalid_argument("pair_npt: A must be k x k");
    for (long i = 0; i < k; ++i)
        for (long j = i + 1; j < k; ++j)
            if (d.A(i, j) != d.A(j, i)) throw std::invalid_argument("pair_npt: A must be symmetric");

    // stream tuples with an odometer, accumulating coefficients per sigma
    // exponent; the ring element is materialized once at the end
    std::map<Int, Int> coeff_by_exp;
    std::vector<long> tuple(n, 0);
    while (true) {
        Int index_sum = 0, exp = 0, wind = 0;
        for (long j = 0; j < n; ++j) {
            index_sum += tuple[j];
            exp += 2 * d.n_j[tuple[j]];
            for (long l = 0; l < j; ++l)
                if (tuple[l] != tuple[j]) wind += d.A(tuple[l], tuple[j]);
        }
        // (-1)^{sum i_j} s^{exp} (-s)^{wind}
        coeff_by_exp[exp + wind] += ((index_sum + wind) % 2 != 0) ? -1 : 1;
        long pos = n - 1;
        while (pos >= 0 && tuple[pos] == k - 1) { tuple[pos] = 0; --pos; }
        if (pos < 0) break;
        ++tuple[pos];
    }
    HeisRing sum;
    for (const auto& [e, c] : coeff_by_exp)
        sum.add_term(HeisenbergElement::sigma(d.genus, e), c);
    return reduce(sum, q);
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (long i = 0; i < g; ++i) os << (i ? "," : "") << a[i];
    os << " | ";
    for (long i = 0; i < g; ++i) os << (i ? "," : "") << b[i];
    os << ")";
    return os.str();
}

std::vector<Composition> all_compositions(long g, long n) {
    if (g < 1 || n < 0) throw std::invalid_argument("all_compositions: bad parameters");
    std::vector<Composition> out;
    std::vector<long> parts(2 * g, 0);
    // enumerate weak compositions of n into 2g parts, lexicographically
    std::function<void(long, long)> rec = [&](long pos, long rem) {
        if (pos == 2 * g - 1) {
            parts[pos] = rem;
            Composition c;
            c.g = g;
            c.n = n;
            c.a.assign(parts.begin(), parts.begin() + g);
            c.b.assign(parts.begin() + g, parts.end());
            out.push_back(c);
            return;
        }
        for (long v = 0; v <= rem; ++v) {
            parts[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, n);
    return out;
}

HeisRing dual_pairing(const Composition& c, const Composition& d) {
    if (c.g != d.g || c.n != d.n)
        throw std::invalid_argument("dual_pairing: composrtions of different size");
    if (c == d) return heis_ring_one(std::max<long>(c.g, 1));
    return HeisRing();
}

std::vector<IntersectionDiagram1> kernel_search(const KernelSearchOptions& opts) {
    std::vector<IntersectionDiagram1> hits;
    if (opts.max_points < 2) return hits;
    if (opts.exponent_bound < 0) throw std::invalid_argument("kernel_search: bad exponent bound");
    long half = opts.exponent_bound / 2;
    long values = 2 * half + 1; // even exponents in [-bound, bound]
    // total enumeration cost across all k
    long double est = 0;
    for (long k = 2; k <= opts.max_points; ++k) {
        long double c = 1;
        for (long i = 0; i < k - 1; ++i) c *= static_cast<long double>(values);
        est += c;
    }
    if (est > static_cast<long double>(opts.cost_limit)) {
        std::ostringstream os;
        os << "kernel_search: enumeration of ~" << static_cast<double>(est)
           << " diagrams exceeds the cost limit " << opts.cost_limit
           << "; tighten max_points or exponent_bound";
        throw std::domain_error(os.str());
    }
    for (long k = 2; k <= opts.max_points; ++k) {
        // first exponent normalized to 0 (a global sigma shift scales the pairing
        // by a unit), remaining k-1 exponents range over even values
        std::vector<long> e(k, 0);
        std::vector<long> idx(k - 1, 0);
        while (true) {
            for (long j = 0; j < k - 1; ++j)
                e[j + 1] = 2 * (idx[j] - half);
            IntersectionDiagram1 d;
            d.genus = opts.genus;
            for (long j = 0; j < k; ++j)
                d.points.push_back({j % 2 == 0 ? +1 : -1, Int(e[j]), std::nullopt});
            if (pair_1pt(d, opts.q).is_zero()) hits.push_back(d);
            long pos = k - 2;
            while (pos >= 0 && idx[pos] == values - 1) { idx[pos] = 0; --pos; }
            if (pos < 0) break;
            ++idx[pos];
        }
    }
    return hits;
}

} // namespace heisrep
