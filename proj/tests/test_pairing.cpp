#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heisrep/io_json.hpp"
#include "heisrep/pairing.hpp"

using namespace heisrep;

namespace {
// the eight-point arc pair in genus >= 6 with vanishing twisted pairing
IntersectionDiagram1 eight_point_diagram() {
    return IntersectionDiagram1::from_sigma_exponents(
        6, {{+1, Int(-2)}, {-1, Int(-4)}, {+1, Int(-2)}, {-1, Int(0)},
            {+1, Int(-4)}, {-1, Int(-2)}, {+1, Int(0)}, {-1, Int(-2)}});
}
} // namespace

TEST_CASE("one-point pairing: kernel diagram and bigons") {
    auto d = eight_point_diagram();
    auto terms = pair_1pt_terms(d);
    std::vector<HeisRing> expect = {
        sigma_power(6, -2),  -sigma_power(6, -4), sigma_power(6, -2), -heis_ring_one(6),
        sigma_power(6, -4), -sigma_power(6, -2), heis_ring_one(6),  -sigma_power(6, -2)};
    REQUIRE(terms.size() == expect.size());
    for (std::size_t i = 0; i < terms.size(); ++i) CHECK(terms[i] == expect[i]);
    CHECK(pair_1pt(d).is_zero());

    // empty diagram pairs to zero
    CHECK(pair_1pt(IntersectionDiagram1{}).is_zero());

    // genus-k bigon: contributions +1 and -s^{2k}, vanishing mod sigma^{2k}
    for (long k = 1; k <= 4; ++k) {
        auto bigon = IntersectionDiagram1::from_sigma_exponents(
            std::max(k, 1L), {{+1, Int(0)}, {-1, Int(2 * k)}});
        CHECK(pair_1pt(bigon) ==
              heis_ring_one(std::max(k, 1L)) - sigma_power(std::max(k, 1L), 2 * k));
        CHECK(pair_1pt(bigon, QuotientSpec::mod_sigma(2 * k)).is_zero());
    }
}

TEST_CASE("pairing is additive under diagram concatenation") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> e(-4, 4);
    std::uniform_int_distribution<int> sg(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        IntersectionDiagram1 d1, d2;
        d1.genus = d2.genus = 2;
        for (int i = 0; i < 4; ++i) {
            d1.points.push_back({sg(rng) ? 1 : -1, Int(e(rng)), std::nullopt});
            d2.points.push_back({sg(rng) ? 1 : -1, Int(e(rng)), std::nullopt});
        }
        IntersectionDiagram1 cat = d1;
        for (const auto& p : d2.points) cat.points.push_back(p);
        CHECK(pair_1pt(cat) == pair_1pt(d1) + pair_1pt(d2));
    }
}

TEST_CASE("augmentation identity") {
    auto d = eight_point_diagram();
    auto rep = augmentation_check(d);
    CHECK(rep.equal);
    CHECK(rep.epsilon_of_pairing == 0);

    IntersectionDiagram1 single;
    single.genus = 1;
    single.points.push_back({+1, Int(0), std::nullopt});
    auto rep1 = augmentation_check(single);
    CHECK(rep1.equal);
    CHECK(rep1.epsilon_of_pairing == 1);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> e(-6, 6);
    std::uniform_int_distribution<int> sg(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        IntersectionDiagram1 d2;
        d2.genus = 1;
        for (int i = 0; i < 6; ++i) d2.points.push_back({sg(rng) ? 1 : -1, Int(e(rng)), std::nullopt});
        CHECK(augmentation_check(d2).equal);
    }
}

TEST_CASE("reduction commutes with the pairing") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> e(-6, 6);
    std::uniform_int_distribution<int> sg(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        IntersectionDiagram1 d;
        d.genus = 2;
        for (int i = 0; i < 5; ++i) d.points.push_back({sg(rng) ? 1 : -1, Int(e(rng)), std::nullopt});
        for (long r : {2, 4, 6})
            CHECK(reduce(pair_1pt(d), QuotientSpec::mod_sigma(r)) ==
                  pair_1pt(d, QuotientSpec::mod_sigma(r)));
    }
}

TEST_CASE("n-point pairing: single point, factorization, bigons") {
    // k = 1: one tuple, value +1, for any n
    NPointDiagram d1;
    d1.genus = 1;
    d1.n_j = {Int(0)};
    d1.A = IntMatrix(1, 1);
    for (long n = 1; n <= 4; ++n) CHECK(pair_npt(d1, n) == heis_ring_one(1));

    // all A = 0 factorizes: (sum_j (-1)^j s^{2 n_j})^n
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> nv(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        long k = std::uniform_int_distribution<long>(1, 3)(rng);
        NPointDiagram d;
        d.genus = 1;
        for (long j = 0; j < k; ++j) d.n_j.push_back(Int(nv(rng)));
        d.A = IntMatrix(k, k);
        HeisRing base;
        for (long j = 0; j < k; ++j)
            base.add_term(HeisenbergElement::sigma(1, 2 * d.n_j[j]), j % 2 ? -1 : 1);
        for (long n = 1; n <= 4; ++n) {
            HeisRing power = heis_ring_one(1);
            for (long i = 0; i < n; ++i) power = power * base;
            CHECK(pair_npt(d, n) == power);
        }
    }

    // genus-k bigon vanishes mod sigma^{2d} for every divisor d of k
    for (long k = 1; k <= 6; ++k)
        for (long d = 1; d <= k; ++d) {
            if (k % d != 0) continue;
            NPointDiagram bigon;
            bigon.genus = std::max(k, 1L);
            bigon.n_j = {Int(0), Int(k)};
            bigon.A = IntMatrix(2, 2);
            for (long n = 1; n <= 5; ++n)
                CHECK(pair_npt(bigon, n, QuotientSpec::mod_sigma(2 * d)).is_zero());
        }

    // asymmetric A is rejected
    NPointDiagram bad;
    bad.genus = 1;
    bad.n_j = {Int(0), Int(1)};
    bad.A = IntMatrix(2, 2);
    bad.A(0, 1) = 1;
    CHECK_THROWS_AS((void)pair_npt(bad, 2), std::invalid_argument);

    // n = 1 reduces to the one-point pairing of the same data
    std::mt19937_64 rng2(17);
    for (int trial = 0; trial < 30; ++trial) {
        long k = std::uniform_int_distribution<long>(1, 4)(rng2);
        NPointDiagram d;
        d.genus = 2;
        IntersectionDiagram1 d1;
        d1.genus = 2;
        for (long j = 0; j < k; ++j) {
            Int v = std::uniform_int_distribution<long>(-3, 3)(rng2);
            d.n_j.push_back(v);
            d1.points.push_back({j % 2 == 0 ? +1 : -1, Int(2 * v), std::nullopt});
        }
        d.A = IntMatrix(k, k);
        CHECK(pair_npt(d, 1) == pair_1pt(d1));
    }
}

TEST_CASE("n-point pairing agrees with the braid-word assembly route") {
    // each tuple's loop is assembled as a surface braid word and evaluated
    // through the local system; signs and the sigma -> -sigma involution are
    // applied to the result
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> nv(-2, 2), av(-2, 2);
    long g = 3;
    for (int trial = 0; trial < 40; ++trial) {
        long k = std::uniform_int_distribution<long>(1, 3)(rng);
        long n = std::uniform_int_distribution<long>(2, 3)(rng);
        NPointDiagram d;
        d.genus = g;
        for (long j = 0; j < k; ++j) d.n_j.push_back(Int(nv(rng)));
        d.A = IntMatrix(k, k);
        for (long i = 0; i < k; ++i)
            for (long j = i + 1; j < k; ++j) { Int v = av(rng); d.A(i, j) = v; d.A(j, i) = v; }

        HeisRing oracle;
        std::vector<long> tuple(n, 0);
        while (true) {
            SurfaceBraidWord w(g, n);
            Int index_sum = 0;
            for (long j = 0; j < n; ++j) {
                index_sum += tuple[j];
                long nj = static_cast<long>(d.n_j[tuple[j]]);
                long kk = nj < 0 ? -nj : nj;
                if (kk > g) throw std::logic_error("test parameter out of range");
                w = w * separating_word(kk, nj < 0 ? -1 : +1, g, n);
                for (long l = 0; l < j; ++l) {
                    if (tuple[l] == tuple[j]) continue;
                    long a = static_cast<long>(d.A(tuple[l], tuple[j]));
                    for (long rep = 0; rep < (a < 0 ? -a : a); ++rep)
                        w.push({SurfaceLetter::exchange, 1, a < 0 ? -1 : +1});
                }
            }
            HeisRing term(eval_heisenberg(w), imod(index_sum, 2) == 1 ? -1 : 1);
            oracle += involution_sigma_neg(term);
            long pos = n - 1;
            while (pos >= 0 && tuple[pos] == k - 1) { tuple[pos] = 0; --pos; }
            if (pos < 0) break;
            ++tuple[pos];
        }
        CHECK(pair_npt(d, n) == oracle);
    }
}

TEST_CASE("dual pairing is the Kronecker symbol") {
    for (long g = 1; g <= 2; ++g)
        for (long n = 1; n <= 3; ++n) {
            auto comps = all_compositions(g, n);
            CHECK(Int(comps.size()) == composition_count(g, n));
            for (const auto& c : comps)
                for (const auto& d : comps) {
                    auto v = dual_pairing(c, d);
                    if (c == d) CHECK(v == heis_ring_one(g));
                    else CHECK(v.is_zero());
                }
        }
    // g = 1, n = 2: the full 3x3 Gram matrix is the identity
    auto comps = all_compositions(1, 2);
    CHECK(comps.size() == 3);
}

TEST_CASE("kernel search") {
    // bounds excluding two or more points: empty
    KernelSearchOptions o1;
    o1.max_points = 1;
    CHECK(kernel_search(o1).empty());

    // mod sigma^2 with exponent bound 2: the bigon family (0, 2d) for d = 1, 2
    KernelSearchOptions o2;
    o2.max_points = 2;
    o2.exponent_bound = 4;
    o2.q = QuotientSpec::mod_sigma(2);
    auto hits = kernel_search(o2);
    bool found_d1 = false, found_d2 = false;
    for (const auto& h : hits) {
        if (h.points.size() != 2) continue;
        if (*h.points[1].sigma_exp == 2 || *h.points[1].sigma_exp == -2) found_d1 = true;
        if (*h.points[1].sigma_exp == 4 || *h.points[1].sigma_exp == -4) found_d2 = true;
    }
    CHECK(found_d1);
    CHECK(found_d2);

    // over the full ring with bound 4 and k = 8 the eight-point pattern is
    // rediscovered up to a global sigma shift
    KernelSearchOptions o3;
    o3.max_points = 8;
    o3.exponent_bound = 4;
    o3.genus = 6;
    auto hits3 = kernel_search(o3);
    // normalize the known pattern so its first exponent is 0
    std::vector<long> pattern = {0, -2, 0, 2, -2, 0, 2, 0};
    bool found = false;
    for (const auto& h : hits3) {
        if (h.points.size() != 8) continue;
        bool match = true;
        for (int i = 0; i < 8; ++i)
            if (*h.points[i].sigma_exp != pattern[i]) match = false;
        if (match) found = true;
    }
    CHECK(found);

    // oversized searches are refused with a cost estimate
    KernelSearchOptions o4;
    o4.max_points = 40;
    o4.exponent_bound = 12;
    CHECK_THROWS_AS((void)kernel_search(o4), std::domain_error);
}

TEST_CASE("diagram json round trip") {
    auto d = eight_point_diagram();
    auto j = diagram1_to_json(d);
    auto d2 = diagram1_from_json(j);
    CHECK(pair_1pt(d) == pair_1pt(d2));
    CHECK(d2.points.size() == 8);

    NPointDiagram nd;
    nd.genus = 2;
    nd.n_j = {Int(0), Int(3)};
    nd.A = IntMatrix(2, 2);
    nd.A(0, 1) = nd.A(1, 0) = 1;
    auto nj = diagram_npt_to_json(nd);
    CHECK(json_is_npt(nj));
    auto nd2 = diagram_npt_from_json(nj);
    CHECK(pair_npt(nd, 2) == pair_npt(nd2, 2));
}
