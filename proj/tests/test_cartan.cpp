#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "uqmod/cartan.hpp"

using namespace uqmod;

TEST_CASE("A2 validates") {
    auto cm = validate_cartan({{2, -1}, {-1, 2}});
    REQUIRE(cm.components().components.size() == 1);
    CHECK(cm.components().components[0].type == "A");
    CHECK(cm.components().components[0].rank == 2);
    CHECK(cm.d(0) == 1);
    CHECK(cm.d(1) == 1);
}

TEST_CASE("B2 symmetrizer from the defining relation") {
    auto cm = validate_cartan({{2, -1}, {-2, 2}});
    CHECK(cm.components().components[0].type == "B");
    // oracle: d_i a_ij = d_j a_ji over all pairs
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(cm.d(i) * cm.entry(i, j) == cm.d(j) * cm.entry(j, i));
    CHECK(((cm.d(0) == 2 && cm.d(1) == 1) || (cm.d(0) == 1 && cm.d(1) == 2)));
}

TEST_CASE("affine A1(1) rejected") {
    CHECK_THROWS_AS((void)validate_cartan({{2, -2}, {-2, 2}}), Error);
    try {
        (void)validate_cartan({{2, -2}, {-2, 2}});
    } catch (const Error& e) {
        CHECK(e.kind() == Err::NotFiniteType);
    }
}

TEST_CASE("generalized-Cartan axioms") {
    CHECK_THROWS_AS((void)validate_cartan({{1, 0}, {0, 2}}), Error);
    CHECK_THROWS_AS((void)validate_cartan({{2, 1}, {-1, 2}}), Error);
    CHECK_THROWS_AS((void)validate_cartan({{2, -1}, {0, 2}}), Error);
    try {
        (void)validate_cartan({{2, -1}, {0, 2}});
    } catch (const Error& e) {
        CHECK(e.kind() == Err::NotGeneralizedCartan);
    }
}

TEST_CASE("components of A1 x A1 and A2") {
    auto cm = validate_cartan({{2, 0}, {0, 2}});
    CHECK(cm.components().components.size() == 2);
    CHECK(!cm.same_component(0, 1));
    auto a2 = validate_cartan({{2, -1}, {-1, 2}});
    CHECK(a2.same_component(0, 1));
}

TEST_CASE("A2 x B2 block matrix") {
    auto cm = validate_cartan({{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -2, 2}});
    REQUIRE(cm.components().components.size() == 2);
    CHECK(cm.components().components[0].type == "A");
    CHECK(cm.components().components[1].type == "B");
    CHECK(cm.d(0) == 1);
    CHECK(cm.d(1) == 1);
    CHECK(cm.d(2) == 2);
    CHECK(cm.d(3) == 1);
}

TEST_CASE("type builders round trip through recognition") {
    struct Want {
        char t;
        int n;
        long roots;
    };
    std::vector<Want> cases{{'A', 1, 1}, {'A', 4, 10}, {'B', 3, 9},  {'C', 3, 9},
                            {'D', 4, 12}, {'E', 6, 36}, {'E', 7, 63}, {'E', 8, 120},
                            {'F', 4, 24}, {'G', 2, 6}};
    for (auto w : cases) {
        auto cm = validate_cartan(cartan_of_type(w.t, w.n));
        REQUIRE(cm.components().components.size() == 1);
        const auto& c = cm.components().components[0];
        CHECK(c.type == std::string(1, w.t == 'C' && w.n == 2 ? 'B' : w.t));
        CHECK(c.rank == w.n);
        CHECK(c.positive_roots == w.roots);
        for (int i = 0; i < w.n; ++i)
            for (int j = 0; j < w.n; ++j) CHECK(cm.d(i) * cm.entry(i, j) == cm.d(j) * cm.entry(j, i));
    }
}

TEST_CASE("permutation invariance of component type multisets") {
    std::mt19937 rng(3);
    auto base = validate_cartan(cartan_of_type('B', 3));
    std::vector<int> perm{0, 1, 2};
    for (int it = 0; it < 6; ++it) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<long>> m(3, std::vector<long>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                m[static_cast<size_t>(perm[static_cast<size_t>(i)])]
                 [static_cast<size_t>(perm[static_cast<size_t>(j)])] = base.entry(i, j);
        auto cm = validate_cartan(m);
        REQUIRE(cm.components().components.size() == 1);
        CHECK(cm.components().components[0].type == "B");
    }
}

TEST_CASE("dot export mentions every vertex") {
    auto cm = validate_cartan(cartan_of_type('G', 2));
    auto dot = dynkin_dot(cm);
    CHECK(dot.find("v1") != std::string::npos);
    CHECK(dot.find("v2") != std::string::npos);
    CHECK(dot.find("3") != std::string::npos);
}
