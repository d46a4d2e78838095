#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"

using namespace multigrad;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(Multidegree(std::move(e))); }

}  // namespace

TEST_CASE("multidegree basics") {
    Multidegree a({2, 0, 1}), b({1, 1, 1});
    CHECK((a + b) == Multidegree({3, 1, 2}));
    CHECK((a - b) == Multidegree({1, -1, 0}));
    CHECK(b.leq(a + b));
    CHECK_FALSE(a.leq(b));
    CHECK(a.join(b) == Multidegree({2, 1, 1}));
    CHECK(a.total() == 3);
    CHECK_FALSE((a - b).is_nonnegative());
    CHECK(a.support() == std::vector<std::size_t>{0, 2});
    CHECK(b.lex_less(a));
    CHECK(a.to_string() == "(2,0,1)");
}

TEST_CASE("varset subsets enumerate in lex order") {
    auto subs = subsets_of_size({0, 1, 2, 3}, 2);
    REQUIRE(subs.size() == 6);
    std::vector<std::vector<std::size_t>> expect{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (std::size_t k = 0; k < subs.size(); ++k) CHECK(subs[k].elements() == expect[k]);
    CHECK(subsets_of_size({0, 1}, 0).size() == 1);
    CHECK(subsets_of_size({0, 1}, 3).empty());
}

TEST_CASE("binomials match Pascal") {
    for (std::uint64_t n = 0; n <= 12; ++n)
        for (std::uint64_t k = 0; k <= n + 2; ++k) {
            std::uint64_t expect = 0;
            if (k <= n) {
                // Pascal recursion, independently
                std::vector<std::uint64_t> row{1};
                for (std::uint64_t r = 1; r <= n; ++r) {
                    std::vector<std::uint64_t> next(r + 1, 1);
                    for (std::uint64_t c = 1; c < r; ++c) next[c] = row[c - 1] + row[c];
                    row = next;
                }
                expect = row[k];
            }
            CHECK(binomial(n, k) == expect);
        }
}

TEST_CASE("minimalize on the stated cases") {
    auto i1 = MonomialIdeal::minimalize(1, {mono({1}), mono({2})});
    REQUIRE(i1.generators().size() == 1);
    CHECK(i1.generators()[0] == mono({1}));

    auto i2 = MonomialIdeal::minimalize(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
    CHECK(i2.generators().size() == 3);

    auto i3 = MonomialIdeal::minimalize(2, {mono({2, 1}), mono({1, 2}), mono({2, 2})});
    REQUIRE(i3.generators().size() == 2);
    CHECK(i3.generators()[0] == mono({1, 2}));
    CHECK(i3.generators()[1] == mono({2, 1}));
}

TEST_CASE("minimalize is idempotent and order-insensitive") {
    std::mt19937_64 eng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto ideal = oracle::random_ideal(eng, 3, 6, 3);
        auto gens = ideal.generators();
        CHECK(std::is_sorted(gens.begin(), gens.end(),
                             [](const Monomial& a, const Monomial& b) { return a.lex_less(b); }));
        std::shuffle(gens.begin(), gens.end(), eng);
        CHECK(MonomialIdeal::minimalize(3, gens) == ideal);
        CHECK(MonomialIdeal::minimalize(3, ideal.generators()) == ideal);
    }
}

TEST_CASE("contains on the stated cases") {
    auto ideal = MonomialIdeal::minimalize(2, {mono({2, 0}), mono({1, 1})});
    CHECK(ideal.contains(mono({3, 0})));
    CHECK_FALSE(ideal.contains(mono({0, 2})));
    CHECK_FALSE(MonomialIdeal(2).contains(mono({0, 0})));
}

TEST_CASE("lcm lattice on the stated cases") {
    auto one_var = MonomialIdeal::minimalize(1, {mono({1})});
    auto l1 = one_var.lcm_lattice_degrees();
    CHECK(l1.size() == 2);
    CHECK(l1.count(Multidegree({0})) == 1);
    CHECK(l1.count(Multidegree({1})) == 1);

    auto i2 = MonomialIdeal::minimalize(2, {mono({2, 0}), mono({1, 1})});
    auto l2 = i2.lcm_lattice_degrees();
    CHECK(l2.size() == 4);
    CHECK(l2.count(Multidegree({2, 1})) == 1);

    auto i3 = MonomialIdeal::minimalize(2, {mono({2, 0}), mono({1, 1}), mono({0, 2})});
    CHECK(i3.lcm_lattice_degrees().count(Multidegree({2, 2})) == 1);
}

TEST_CASE("lcm lattice always contains 0 and the full lcm") {
    std::mt19937_64 eng(29);
    for (int trial = 0; trial < 20; ++trial) {
        auto ideal = oracle::random_ideal(eng, 3, 5, 3);
        Multidegree top(3);
        for (const auto& g : ideal.generators()) top = top.join(g.deg);
        auto lat = ideal.lcm_lattice_degrees();
        CHECK(lat.count(Multidegree(3)) == 1);
        CHECK(lat.count(top) == 1);
    }
}

TEST_CASE("module degree basis on the stated cases") {
    auto m = ModulePresentation::quotient(
        MonomialIdeal::minimalize(2, {mono({2, 0}), mono({1, 1})}));
    CHECK(m.degree_basis(Multidegree({3, 0})).empty());
    auto b = m.degree_basis(Multidegree({0, 5}));
    REQUIRE(b.size() == 1);
    CHECK(b[0].first == 0);
    CHECK(b[0].second == mono({0, 5}));

    auto gens = MonomialIdeal::minimalize(2, {mono({1, 0}), mono({0, 1})});
    ModulePresentation sum(2, {{Multidegree({0, 0}), gens}, {Multidegree({1, 0}), gens}});
    auto b2 = sum.degree_basis(Multidegree({1, 0}));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].first == 1);
    CHECK(b2[0].second == mono({0, 0}));

    CHECK(m.degree_basis(Multidegree({-1, 0})).empty());
}

TEST_CASE("k polynomial on the stated cases") {
    auto s = ModulePresentation::quotient(MonomialIdeal(2));
    KPolynomial ks = k_polynomial(s);
    REQUIRE(ks.size() == 1);
    CHECK(ks.at(Multidegree(2)) == 1);

    auto sx = ModulePresentation::quotient(MonomialIdeal::minimalize(1, {mono({1})}));
    KPolynomial kx = k_polynomial(sx);
    CHECK(kx.at(Multidegree({0})) == 1);
    CHECK(kx.at(Multidegree({1})) == -1);

    auto m = ModulePresentation::quotient(
        MonomialIdeal::minimalize(2, {mono({2, 0}), mono({1, 1})}));
    KPolynomial km = k_polynomial(m);
    CHECK(km.at(Multidegree({0, 0})) == 1);
    CHECK(km.at(Multidegree({2, 0})) == -1);
    CHECK(km.at(Multidegree({1, 1})) == -1);
    CHECK(km.at(Multidegree({2, 1})) == 1);
    CHECK(km.size() == 4);
}

TEST_CASE("hilbert function matches the degree basis over a box") {
    std::mt19937_64 eng(31);
    for (int trial = 0; trial < 15; ++trial) {
        auto ideal = oracle::random_ideal(eng, 2, 5, 3);
        std::vector<ModulePresentation::Summand> summands{{Multidegree(2), ideal}};
        if (trial % 3 == 0)
            summands.push_back({Multidegree({1, 0}), oracle::random_ideal(eng, 2, 4, 2)});
        ModulePresentation m(2, std::move(summands));
        KPolynomial kp = k_polynomial(m);
        for (const Multidegree& a : degrees_in_box(Multidegree({5, 5}))) {
            CHECK(static_cast<long long>(m.degree_basis(a).size()) ==
                  hilbert_coefficient(kp, a));
        }
    }
}

TEST_CASE("contains agrees with an empty degree basis") {
    std::mt19937_64 eng(37);
    for (int trial = 0; trial < 10; ++trial) {
        auto ideal = oracle::random_ideal(eng, 3, 5, 3);
        auto m = ModulePresentation::quotient(ideal);
        for (const Multidegree& a : degrees_in_box(Multidegree({3, 3, 3}))) {
            CHECK(ideal.contains(Monomial(a)) == m.degree_basis(a).empty());
        }
    }
}

TEST_CASE("module presentation validates its input") {
    CHECK_THROWS_AS(ModulePresentation(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(
        ModulePresentation(2, {{Multidegree({-1, 0}), MonomialIdeal(2)}}),
        std::invalid_argument);
    CHECK_THROWS_AS(Monomial(Multidegree({-1})), std::invalid_argument);
}
