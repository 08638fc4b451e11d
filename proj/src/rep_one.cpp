#include "heisrep/rep_one.hpp"

#include <cctype>
#include <sstream>

namespace heisrep {

std::vector<std::string> CurveCatalog::basis_symbols() const {
    std::vector<std::string> syms;
    for (long i = 1; i <= g; ++i) {
        syms.push_back("A" + std::to_string(i));
        syms.push_back("B" + std::to_string(i));
    }
    for (const auto& c : curves) syms.push_back(c.name);
    return syms;
}

bool CurveCatalog::has_curve(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return true;
    return false;
}

const SeparatingCurveData& CurveCatalog::curve(const std::string& name) const {
    for (const auto& c : curves)
        if (c.name == name) return c;
    throw std::invalid_argument("unresolved curve '" + name + "' in catalog");
}

HeisRing row_value(const SeparatingCurveData& c, const std::string& symbol, QuotientSpec q) {
    auto it = c.row.find(symbol);
    if (it == c.row.end()) return HeisRing();
    return pair_1pt(it->second, q);
}

HeisRing pairing_bracket(const SeparatingCurveData& c, const ChainVector& v, QuotientSpec q) {
    HeisRing acc;
    for (const auto& [sym, coeff] : v.coords) acc += row_value(c, sym, q) * coeff;
    return acc;
}

namespace {
void check_mod2k_quotient(const SeparatingCurveData& c, QuotientSpec q) {
    if (q.kind != QuotientKind::mod_sigma_r || (2 * c.genus) % q.r != 0)
        throw std::invalid_argument(
            "quotient mismatch: transvection along a genus-" + std::to_string(c.genus) +
            " curve is untruncated only mod sigma^r - 1 with r dividing " +
            std::to_string(2 * c.genus));
    if (c.row.count(c.name))
        throw std::invalid_argument("curve '" + c.name + "' must have zero self-pairing");
}
} // namespace

ChainVector act_twist_mod2k(const CurveCatalog& cat, const std::string& curve,
                            const ChainVector& v, QuotientSpec q) {
    const auto& c = cat.curve(curve);
    check_mod2k_quotient(c, q);
    HeisRing bracket = pairing_bracket(c, v, q);
    return v + ChainVector::unit(curve, cat.g, q).scaled(bracket);
}

ChainVector act_twist_full(const CurveCatalog& cat, const std::string& curve,
                           const std::string& basis_symbol) {
    const auto& c = cat.curve(curve);
    auto it = c.splitting.find(basis_symbol);
    if (it == c.splitting.end())
        throw std::invalid_argument("missing splitting data for basis class '" + basis_symbol +
                                    "' on curve '" + curve + "'");
    HeisRing twist = sigma_power(cat.g, Int(-2 * c.genus));
    ChainVector out = it->second.ext + it->second.interior.scaled(twist);
    HeisRing bracket = row_value(c, basis_symbol, QuotientSpec::full());
    return out + ChainVector::unit(curve, cat.g).scaled(bracket);
}

DenseMatrix<HeisRing> transvection_matrix(const CurveCatalog& cat, const std::string& curve,
                                          QuotientSpec q, long exponent) {
    const auto& c = cat.curve(curve);
    check_mod2k_quotient(c, q);
    auto syms = cat.basis_symbols();
    std::size_t n = syms.size();
    std::size_t curve_row = 0;
    while (curve_row < n && syms[curve_row] != curve) ++curve_row;
    HeisRing one = heis_ring_one(cat.g, q);
    DenseMatrix<HeisRing> step(n, n);
    int dir = exponent >= 0 ? +1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
        step(j, j) = one;
        HeisRing r = row_value(c, syms[j], q);
        if (!r.is_zero()) {
            if (dir < 0) r = -r;
            step(curve_row, j) += r;
        }
    }
    DenseMatrix<HeisRing> acc = DenseMatrix<HeisRing>::identity(n, one);
    long reps = exponent >= 0 ? exponent : -exponent;
    for (long i = 0; i < reps; ++i) acc = step * acc;
    return acc;
}

TwistWord parse_twist_word(const std::string& text) {
    TwistWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 'T')
            throw std::invalid_argument("twist word token must look like T<curve>[^exp]: " + tok);
        std::string name = tok.substr(1);
        long e = 1;
        auto caret = name.find('^');
        if (caret != std::string::npos) {
            e = std::stol(name.substr(caret + 1));
            name = name.substr(0, caret);
        }
        if (name.empty()) throw std::invalid_argument("empty curve name in twist word");
        w.factors.emplace_back(name, e);
    }
    return w;
}

KernelCertificate kernel_certificate(const CurveCatalog& cat, const TwistWord& w, QuotientSpec q) {
    KernelCertificate cert;
    cert.basis = cat.basis_symbols();
    HeisRing one = heis_ring_one(cat.g, q);
    DenseMatrix<HeisRing> acc = DenseMatrix<HeisRing>::identity(cert.basis.size(), one);
    // leftmost factor acts first: the composite matrix multiplies on the left
    for (const auto& [name, e] : w.factors)
        acc = transvection_matrix(cat, name, q, e) * acc;
    cert.matrix = acc;
    cert.is_identity_on_basis = acc.is_identity(one);
    return cert;
}

DenseMatrix<HeisRing> matrix_from_pairings(
    const std::vector<std::vector<IntersectionDiagram1>>& rows, QuotientSpec q,
    bool star_convention) {
    std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("matrix_from_pairings: no rows supplied");
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("matrix_from_pairings: incomplete rows");
    DenseMatrix<HeisRing> m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            HeisRing v = pair_1pt(rows[j][i], q);
            m(i, j) = star_convention ? v.star() : v;
        }
    return m;
}

InfiniteOrderWitness infinite_order_witness(const CurveCatalog& cat, const std::string& curve,
                                            const ChainVector& v, long n_max, QuotientSpec q) {
    const auto& c = cat.curve(curve);
    check_mod2k_quotient(c, q);
    InfiniteOrderWitness w;
    w.bracket = pairing_bracket(c, v, q);
    w.has_witness = !w.bracket.is_zero();
    ChainVector cur = v;
    w.linear_growth = true;
    for (long n = 1; n <= n_max; ++n) {
        cur = act_twist_mod2k(cat, curve, cur, q);
        HeisRing coeff = cur.coord(curve) - v.coord(curve);
        w.coefficients.push_back(coeff);
        if (coeff != w.bracket * Int(n)) w.linear_growth = false;
    }
    return w;
}

namespace {
IntersectionDiagram1 two_point_diagram(long g, int sign0, const HeisenbergElement& h0, int sign1,
                                       const HeisenbergElement& h1) {
    IntersectionDiagram1 d;
    d.genus = g;
    DiagramPoint p0, p1;
    p0.sign = sign0;
    p1.sign = sign1;
    auto to_point = [&](const HeisenbergElement& h, DiagramPoint& p) {
        bool pure_sigma = true;
        for (long i = 0; i < g; ++i)
            if (h.m()[i] != 0 || h.n()[i] != 0) pure_sigma = false;
        if (pure_sigma) {
            p.sigma_exp = h.l();
        } else {
            SurfaceBraidWord w(g, 1);
            for (long i = 0; i < g; ++i) {
                for (Int e = 0; e < h.m()[i]; ++e) w.push({SurfaceLetter::alpha, i + 1, +1});
                for (Int e = 0; e > h.m()[i]; --e) w.push({SurfaceLetter::alpha, i + 1, -1});
            }
            for (long i = 0; i < g; ++i) {
                for (Int e = 0; e < h.n()[i]; ++e) w.push({SurfaceLetter::beta, i + 1, +1});
                for (Int e = 0; e > h.n()[i]; --e) w.push({SurfaceLetter::beta, i + 1, -1});
            }
            // trailing sigma power is not expressible for n = 1 words; fold the
            // exponent into the diagram by requiring l = 0 here
            if (h.l() != 0) throw std::invalid_argument("loop with mixed sigma power unsupported");
            p.loop = w;
        }
    };
    to_point(h0, p0);
    to_point(h1, p1);
    d.points = {p0, p1};
    return d;
}
} // namespace

CurveCatalog kernel_pair_catalog(long k) {
    if (k < 1) throw std::invalid_argument("kernel_pair_catalog: k >= 1 required");
    long g = 3 * k;
    CurveCatalog cat;
    cat.g = g;

    SeparatingCurveData alpha, beta;
    alpha.name = "alpha";
    alpha.genus = 2 * k;
    beta.name = "beta";
    beta.genus = 2 * k;

    auto id = HeisenbergElement::identity(g);
    // alpha encloses handles 1..2k, beta encloses handles k+1..3k
    for (long i = 1; i <= 2 * k; ++i) {
        alpha.row["A" + std::to_string(i)] =
            two_point_diagram(g, +1, id, -1, HeisenbergElement::b(g, i));
        alpha.row["B" + std::to_string(i)] =
            two_point_diagram(g, -1, id, +1, HeisenbergElement::a(g, i));
    }
    for (long i = k + 1; i <= 3 * k; ++i) {
        beta.row["A" + std::to_string(i)] =
            two_point_diagram(g, +1, id, -1, HeisenbergElement::b(g, i));
        beta.row["B" + std::to_string(i)] =
            two_point_diagram(g, -1, id, +1, HeisenbergElement::a(g, i));
    }
    // the two curves meet twice around a genus-k bigon
    alpha.row["beta"] = IntersectionDiagram1::from_sigma_exponents(
        g, {{+1, Int(0)}, {-1, Int(2 * k)}});
    beta.row["alpha"] = IntersectionDiagram1::from_sigma_exponents(
        g, {{+1, Int(0)}, {-1, Int(-2 * k)}});

    cat.curves = {alpha, beta};
    return cat;
}

CurveCatalog boundary_twist_catalog(long g) {
    CurveCatalog cat;
    cat.g = g;
    SeparatingCurveData delta;
    delta.name = "delta";
    delta.genus = g;
    // every absolute class lies inside the boundary-parallel curve
    for (long i = 1; i <= g; ++i)
        for (const char* pre : {"A", "B"}) {
            std::string sym = std::string(pre) + std::to_string(i);
            ChainSplitting s;
            s.interior = ChainVector::unit(sym, g);
            delta.splitting[sym] = s;
        }
    cat.curves = {delta};
    return cat;
}

} // namespace heisrep
