#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heisrep/io_json.hpp"
#include "heisrep/rep_one.hpp"

using namespace heisrep;

TEST_CASE("kernel pair catalog: pairings and certificates") {
    for (long k = 1; k <= 3; ++k) {
        auto cat = kernel_pair_catalog(k);
        auto q = QuotientSpec::mod_sigma(2 * k);
        const auto& alpha = cat.curve("alpha");
        const auto& beta = cat.curve("beta");

        // the two-point diagram gives <alpha, beta> = 1 - sigma^{2k} = 0 mod sigma^{2k}
        CHECK(row_value(alpha, "beta", QuotientSpec::full()) ==
              heis_ring_one(cat.g) - sigma_power(cat.g, 2 * k));
        CHECK(row_value(alpha, "beta", q).is_zero());
        CHECK(row_value(beta, "alpha", q).is_zero());

        // rows are nonzero on the enclosed handles
        CHECK_FALSE(row_value(alpha, "A1", q).is_zero());
        CHECK_FALSE(row_value(beta, "A" + std::to_string(3 * k), q).is_zero());

        // augmentation of every row entry is the algebraic intersection 0
        for (const auto& c : cat.curves)
            for (const auto& [sym, diag] : c.row) CHECK(augmentation_check(diag).equal);

        // transvections fix orthogonal classes
        auto fixed = act_twist_mod2k(cat, "alpha", ChainVector::unit("beta", cat.g, q), q);
        CHECK(fixed.coords.at("beta") == heis_ring_one(cat.g, q));
        CHECK(fixed.coord("alpha").is_zero());

        // the commutator of the two twists is the identity on every basis vector
        auto cert = kernel_certificate(
            cat, parse_twist_word("Talpha Tbeta Talpha^-1 Tbeta^-1"), q);
        CHECK(cert.is_identity_on_basis);

        // a single twist is not the identity
        auto single = kernel_certificate(cat, parse_twist_word("Talpha"), q);
        CHECK_FALSE(single.is_identity_on_basis);

        // tau tau^{-1} is the identity
        auto cancel = kernel_certificate(cat, parse_twist_word("Talpha Talpha^-1"), q);
        CHECK(cancel.is_identity_on_basis);
    }
}

TEST_CASE("transvections along curves with mutually zero pairing commute") {
    long k = 2;
    auto cat = kernel_pair_catalog(k);
    auto q = QuotientSpec::mod_sigma(2 * k);
    auto ta = transvection_matrix(cat, "alpha", q);
    auto tb = transvection_matrix(cat, "beta", q);
    CHECK(ta * tb == tb * ta);
    // and the inverse matrix undoes the twist
    auto inv = transvection_matrix(cat, "alpha", q, -1);
    CHECK((ta * inv).is_identity(heis_ring_one(cat.g, q)));
}

TEST_CASE("every twist is invertible on every basis vector") {
    for (long k = 1; k <= 3; ++k) {
        auto cat = kernel_pair_catalog(k);
        auto q = QuotientSpec::mod_sigma(2 * k);
        for (const auto& c : cat.curves)
            for (const auto& sym : cat.basis_symbols()) {
                auto v = ChainVector::unit(sym, cat.g, q);
                auto w = act_twist_mod2k(cat, c.name, v, q);
                // exponent-negated twist: subtract the bracket again
                auto bracket = pairing_bracket(cat.curve(c.name), w, q);
                auto back = w + ChainVector::unit(c.name, cat.g, q).scaled(-bracket);
                for (const auto& [s2, val] : back.coords)
                    CHECK(val == v.coord(s2));
                for (const auto& [s2, val] : v.coords)
                    CHECK(val == back.coord(s2));
            }
    }
}

TEST_CASE("quotient mismatch is rejected") {
    auto cat = kernel_pair_catalog(1);
    auto v = ChainVector::unit("A1", cat.g, QuotientSpec::mod_sigma(3));
    CHECK_THROWS_AS((void)act_twist_mod2k(cat, "alpha", v, QuotientSpec::mod_sigma(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)kernel_certificate(cat, parse_twist_word("Tgamma"),
                                             QuotientSpec::mod_sigma(2)),
                    std::invalid_argument);
}

TEST_CASE("full twisted action and reduction to the truncated one") {
    // boundary-parallel curve: everything interior, zero row
    long g = 3;
    auto cat = boundary_twist_catalog(g);
    for (long i = 1; i <= g; ++i)
        for (const char* pre : {"A", "B"}) {
            std::string sym = std::string(pre) + std::to_string(i);
            auto out = act_twist_full(cat, "delta", sym);
            CHECK(out.coord(sym) == sigma_power(g, -2 * g));
            CHECK(out.coord("delta").is_zero());
        }

    // a curve catalog with explicit mixed splitting data
    CurveCatalog cat2;
    cat2.g = 2;
    SeparatingCurveData c;
    c.name = "gamma";
    c.genus = 1;
    // A1 is split into an exterior and an interior part; A2 is exterior
    ChainSplitting s1;
    s1.ext = ChainVector::unit("A1", 2);
    c.splitting["A1"] = s1; // ext = e, int = 0, pairing 0
    ChainSplitting s2;
    s2.interior = ChainVector::unit("A2", 2);
    c.splitting["A2"] = s2; // entirely interior
    cat2.curves = {c};

    auto outside = act_twist_full(cat2, "gamma", "A1");
    CHECK(outside.coord("A1") == heis_ring_one(2));
    auto inside = act_twist_full(cat2, "gamma", "A2");
    CHECK(inside.coord("A2") == sigma_power(2, -2));
    CHECK_THROWS_AS((void)act_twist_full(cat2, "gamma", "B1"), std::invalid_argument);

    // reduction mod sigma^{2k} - 1 of the full action equals the truncated one
    auto q = QuotientSpec::mod_sigma(2);
    for (const char* sym : {"A1", "A2"}) {
        auto full = act_twist_full(cat2, "gamma", sym);
        ChainVector reduced;
        for (const auto& [kk, v] : full.coords) reduced.coords[kk] = reduce(v, q);
        auto trunc = act_twist_mod2k(cat2, "gamma", ChainVector::unit(sym, 2, q), q);
        for (const auto& [kk, v] : trunc.coords) CHECK(reduced.coord(kk) == v);
        for (const auto& [kk, v] : reduced.coords) CHECK(trunc.coord(kk) == v);
    }
}

TEST_CASE("matrix from pairings") {
    // identity rows produce the identity matrix for every module size with
    // N_{g,n} <= 20
    for (long g = 1; g <= 10; ++g)
        for (long n_cfg = 1; n_cfg <= 20; ++n_cfg) {
            if (composition_count(g, n_cfg) > 20) continue;
            long n = static_cast<long>(composition_count(g, n_cfg));
            std::vector<std::vector<IntersectionDiagram1>> rows(
                n, std::vector<IntersectionDiagram1>(n));
            for (long j = 0; j < n; ++j)
                for (long i = 0; i < n; ++i) {
                    rows[j][i].genus = g;
                    if (i == j) rows[j][i].points.push_back({+1, Int(0), std::nullopt});
                }
            auto m = matrix_from_pairings(rows, QuotientSpec::full());
            CHECK(m.is_identity(heis_ring_one(g)));
        }

    // two-route equality: the transvection matrix of the kernel-pair curve
    // equals the matrix assembled from its row diagrams
    long k = 1;
    auto cat = kernel_pair_catalog(k);
    auto q = QuotientSpec::mod_sigma(2 * k);
    auto syms = cat.basis_symbols();
    std::size_t nn = syms.size();
    std::vector<std::vector<IntersectionDiagram1>> rows2(nn, std::vector<IntersectionDiagram1>(nn));
    const auto& alpha = cat.curve("alpha");
    std::size_t alpha_row = 0;
    while (syms[alpha_row] != "alpha") ++alpha_row;
    for (std::size_t j = 0; j < nn; ++j)
        for (std::size_t i = 0; i < nn; ++i) {
            rows2[j][i].genus = cat.g;
            if (i == j) rows2[j][i].points.push_back({+1, Int(0), std::nullopt});
            if (i == alpha_row) {
                auto it = alpha.row.find(syms[j]);
                if (it != alpha.row.end())
                    for (const auto& p : it->second.points) rows2[j][i].points.push_back(p);
            }
        }
    auto assembled = matrix_from_pairings(rows2, q);
    CHECK(assembled == transvection_matrix(cat, "alpha", q));

    std::vector<std::vector<IntersectionDiagram1>> ragged(2);
    ragged[0].resize(2);
    ragged[1].resize(1);
    CHECK_THROWS_AS((void)matrix_from_pairings(ragged, QuotientSpec::full()),
                    std::invalid_argument);
}

TEST_CASE("infinite order witness") {
    auto cat = kernel_pair_catalog(1);
    auto q = QuotientSpec::mod_sigma(1); // Magnus reduction: sigma = 1
    auto w = infinite_order_witness(cat, "alpha", ChainVector::unit("A1", cat.g, q), 100, q);
    CHECK(w.has_witness);
    CHECK(w.linear_growth);
    CHECK(w.coefficients.size() == 100);
    CHECK(w.coefficients[99] == w.bracket * Int(100));

    // zero pairing: no witness, all coefficients vanish
    auto w0 = infinite_order_witness(cat, "alpha", ChainVector::unit("beta", cat.g, q), 10, q);
    CHECK_FALSE(w0.has_witness);
    for (const auto& c : w0.coefficients) CHECK(c.is_zero());
}

TEST_CASE("catalog json round trip") {
    auto cat = kernel_pair_catalog(1);
    auto j = catalog_to_json(cat);
    auto cat2 = catalog_from_json(j);
    CHECK(cat2.g == cat.g);
    auto q = QuotientSpec::mod_sigma(2);
    auto c1 = kernel_certificate(cat, parse_twist_word("Talpha Tbeta Talpha^-1 Tbeta^-1"), q);
    auto c2 = kernel_certificate(cat2, parse_twist_word("Talpha Tbeta Talpha^-1 Tbeta^-1"), q);
    CHECK(c1.is_identity_on_basis == c2.is_identity_on_basis);
    CHECK(c1.matrix == c2.matrix);
}
