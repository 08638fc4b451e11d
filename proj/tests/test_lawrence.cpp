#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heisrep/lawrence.hpp"

using namespace heisrep;

namespace {
BraidWord random_braid(std::mt19937_64& rng, long k, long len) {
    std::uniform_int_distribution<long> d(1, k - 1);
    std::uniform_int_distribution<int> sg(0, 1);
    std::vector<long> ls;
    for (long i = 0; i < len; ++i) ls.push_back(sg(rng) ? d(rng) : -d(rng));
    return BraidWord(k, ls);
}

// random pure braid: a word times a word realizing the inverse permutation
BraidWord random_pure_braid(std::mt19937_64& rng, long k, long len) {
    BraidWord b = random_braid(rng, k, len);
    auto p = braid_permutation(b);
    // sort the permutation back with adjacent transpositions
    std::vector<long> ls;
    std::vector<long> cur(p);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j + 1 < k; ++j)
            if (cur[j] > cur[j + 1]) {
                std::swap(cur[j], cur[j + 1]);
                ls.push_back(j + 1);
            }
    BraidWord fix(k, ls);
    BraidWord prod = b * fix;
    if (!is_pure(prod)) throw std::logic_error("pure braid construction failed");
    return prod;
}

LaurentPoly tmono(const Int& e) { return LaurentPoly(LaurentMonomial("t", e)); }
} // namespace

TEST_CASE("burau of sigma_1 on two strands") {
    BraidWord s1(2, {1});
    auto red = burau_reduced(s1);
    REQUIRE(red.rows() == 1);
    CHECK(red(0, 0) == -tmono(1));

    auto un = burau_unreduced(s1);
    REQUIRE(un.rows() == 2);
    // t = 1 specializes to the transposition matrix
    auto at1 = specialize_matrix(un, [](const std::string&) { return Rat(1); });
    auto perm = permutation_matrix(s1).map([](const Int& v) { return Rat(v); });
    CHECK(at1 == perm);
}

TEST_CASE("burau matrices are multiplicative and satisfy the braid relations") {
    std::mt19937_64 rng(3);
    for (long k = 2; k <= 4; ++k) {
        for (int trial = 0; trial < 30; ++trial) {
            auto b1 = random_braid(rng, k, 8);
            auto b2 = random_braid(rng, k, 8);
            CHECK(burau_unreduced(b1 * b2) == burau_unreduced(b1) * burau_unreduced(b2));
            CHECK(burau_reduced(b1 * b2) == burau_reduced(b1) * burau_reduced(b2));
        }
        // defining relations
        for (long i = 1; i + 1 <= k - 1; ++i) {
            BraidWord lhs(k, {i, i + 1, i});
            BraidWord rhs(k, {i + 1, i, i + 1});
            CHECK(burau_unreduced(lhs) == burau_unreduced(rhs));
            CHECK(burau_reduced(lhs) == burau_reduced(rhs));
        }
        for (long i = 1; i <= k - 1; ++i)
            for (long j = i + 2; j <= k - 1; ++j) {
                BraidWord lhs(k, {i, j});
                BraidWord rhs(k, {j, i});
                CHECK(burau_unreduced(lhs) == burau_unreduced(rhs));
            }
    }
}

TEST_CASE("burau determinant is +- t^{exponent sum}") {
    std::mt19937_64 rng(5);
    for (long k = 2; k <= 4; ++k)
        for (int trial = 0; trial < 20; ++trial) {
            auto b = random_braid(rng, k, 10);
            Int e = 0;
            for (long s : b.letters) e += s < 0 ? -1 : 1;
            auto det = laurent_det(burau_unreduced(b));
            bool plus = det == tmono(e);
            bool minus = det == -tmono(e);
            CHECK((plus || minus));
        }
}

TEST_CASE("gassner: pure braids only, specializes to burau") {
    BraidWord s1(2, {1});
    CHECK_THROWS_AS((void)gassner(s1), std::invalid_argument);

    // identity braid
    BraidWord id(3, {});
    CHECK(gassner(id).is_identity(laurent_const(1)));

    std::mt19937_64 rng(7);
    std::map<std::string, std::string> to_t{{"t1", "t"}, {"t2", "t"}, {"t3", "t"}, {"t4", "t"}};
    for (long k = 2; k <= 4; ++k)
        for (int trial = 0; trial < 25; ++trial) {
            auto b = random_pure_braid(rng, k, 8);
            CHECK(substitute_vars(gassner(b), to_t) == burau_unreduced(b));
        }

    // gassner is multiplicative on pure braids
    for (int trial = 0; trial < 20; ++trial) {
        auto b1 = random_pure_braid(rng, 3, 6);
        auto b2 = random_pure_braid(rng, 3, 6);
        CHECK(gassner(b1 * b2) == gassner(b1) * gassner(b2));
    }

    // sigma_1^2 on two strands and the full twist on three strands specialize
    BraidWord s1s1(2, {1, 1});
    CHECK(substitute_vars(gassner(s1s1), to_t) == burau_unreduced(s1s1));
    BraidWord full(3, {1, 2, 1, 2, 1, 2});
    CHECK(substitute_vars(gassner(full), to_t) == burau_unreduced(full));
}

TEST_CASE("heisenberg restrictions of the three regions") {
    long g = 3;
    for (long i = 1; i <= g; ++i) {
        CHECK(heisenberg_restriction(Region::S, i, g) == sigma_power(g, -2));
        CHECK(heisenberg_restriction(Region::Sg, i, g) ==
              HeisRing(HeisenbergElement::b(g, i)));
    }
    for (long kk = 1; kk <= g; ++kk) {
        CHECK(heisenberg_restriction(Region::V2g, 2 * kk - 1, g) ==
              HeisRing(HeisenbergElement::a(g, kk)));
        CHECK(heisenberg_restriction(Region::V2g, 2 * kk, g) ==
              HeisRing(HeisenbergElement::a(g, kk).inverse() * HeisenbergElement::sigma(g, -2)));
    }
    // the strand exchange goes to sigma in every region
    for (auto r : {Region::S, Region::Sg, Region::V2g})
        CHECK(heisenberg_restriction(r, 0, g) == sigma_power(g, 1));
    CHECK_THROWS_AS((void)heisenberg_restriction(Region::S, g + 1, g), std::invalid_argument);
}

TEST_CASE("substitution checks: the three standard maps pass, mutations fail") {
    long g = 3;
    std::vector<DiskDiagram> diagrams;
    DiskDiagram d;
    d.eta_loops.resize(2);
    d.eta_loops[0].factors = {{1, Int(1)}};
    d.eta_loops[1].factors = {{2, Int(1)}, {0, Int(2)}};
    d.A = IntMatrix(2, 2);
    d.A(0, 1) = d.A(1, 0) = 1;
    diagrams.push_back(d);

    for (auto region : {Region::S, Region::Sg, Region::V2g}) {
        auto sub = standard_substitution(region, g);
        auto rep = substitution_check(region, g, sub, diagrams, 2);
        CHECK(rep.pass);

        // wrong region: S_g images against region S fail on hole loops
        if (region == Region::S) {
            auto wrong = standard_substitution(Region::Sg, g);
            auto rep2 = substitution_check(Region::S, g, wrong);
            CHECK_FALSE(rep2.pass);
            CHECK(rep2.failed_generator == "s1");
        }

        // any single-generator perturbation fails
        long holes = region_holes(region, g);
        for (long i = 1; i <= holes; ++i) {
            auto mutated = sub;
            mutated.images["s" + std::to_string(i)] =
                mutated.images["s" + std::to_string(i)] * sigma_power(g, 2);
            auto rep3 = substitution_check(region, g, mutated);
            CHECK_FALSE(rep3.pass);
            CHECK(rep3.failed_generator == "s" + std::to_string(i));
        }
    }
}

TEST_CASE("subgroup action records") {
    long g = 3;
    // tau_{c_1} -> E_11
    auto [m1, l1] = subgroup_Mf({{"c1", 1}}, g);
    IntMatrix e11(g, g);
    e11(0, 0) = 1;
    CHECK(m1 == e11);
    for (const auto& v : l1) CHECK(v == 0);

    // tau_{t_{1,2}} tau_{c_1}
    auto [m2, l2] = subgroup_Mf({{"t1,2", 1}, {"c1", 1}}, g);
    IntMatrix expect(g, g);
    expect(0, 1) = expect(1, 0) = 1;
    expect(0, 0) = 2;
    expect(1, 1) = 1;
    CHECK(m2 == expect);

    // commutators vanish
    std::mt19937_64 rng(17);
    std::vector<std::string> gens = {"c1", "c2", "c3", "t1,2", "t1,3", "t2,3"};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<std::string, long>> w1, w2;
        for (int i = 0; i < 3; ++i) {
            w1.emplace_back(gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)],
                            std::uniform_int_distribution<long>(-2, 2)(rng));
            w2.emplace_back(gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)],
                            std::uniform_int_distribution<long>(-2, 2)(rng));
        }
        // [w1, w2] = w1 w2 w1^{-1} w2^{-1}
        std::vector<std::pair<std::string, long>> comm;
        auto append = [&](const std::vector<std::pair<std::string, long>>& w, long sign) {
            if (sign > 0)
                for (const auto& f : w) comm.push_back(f);
            else
                for (auto it = w.rbegin(); it != w.rend(); ++it)
                    comm.emplace_back(it->first, -it->second);
        };
        append(w1, 1);
        append(w2, 1);
        append(w1, -1);
        append(w2, -1);
        auto [mc, lc] = subgroup_Mf(comm, g);
        CHECK(mc.is_zero());
        for (const auto& v : lc) CHECK(v == 0);

        // additivity and symmetry
        std::vector<std::pair<std::string, long>> cat12(w1);
        for (const auto& f : w2) cat12.push_back(f);
        auto [ma, la] = subgroup_Mf(w1, g);
        auto [mb, lb] = subgroup_Mf(w2, g);
        auto [mab, lab] = subgroup_Mf(cat12, g);
        CHECK(mab == ma + mb);
        CHECK(ma == ma.transpose());
        CHECK(mab == mab.transpose());
    }

    CHECK_THROWS_AS((void)subgroup_Mf({{"z9", 1}}, g), std::invalid_argument);

    // custom records for the 2g-strand analogue carry central exponents
    SubgroupGenerator v2g;
    v2g.name = "v1";
    v2g.M = IntMatrix(g, g);
    v2g.M(0, 0) = 1;
    v2g.l.assign(g, 0);
    v2g.l[0] = 1;
    auto [mv, lv] = subgroup_Mf({{"v1", 2}}, g, {v2g});
    CHECK(mv(0, 0) == 2);
    CHECK(lv[0] == 2);
}
