#include <catch2/catch_amalgamated.hpp>

#include "nakalg/kupisch.hpp"

using namespace nakalg;

TEST_CASE("kupisch validation") {
    CHECK_NOTHROW(Nakayama::linear({4, 4, 3, 2, 1}));
    CHECK_NOTHROW(Nakayama::linear({2, 4, 3, 2, 1}));
    CHECK_NOTHROW(Nakayama::linear({1}));
    CHECK_NOTHROW(Nakayama::cyclic({2}));
    CHECK_NOTHROW(Nakayama::cyclic({2, 4, 3, 3}));

    // drops by more than one
    CHECK_THROWS_AS(Nakayama::linear({4, 2, 2, 2, 1}), InvalidKupisch);
    // last entry of a chain must be 1
    CHECK_THROWS_AS(Nakayama::linear({3, 2, 2}), InvalidKupisch);
    // interior entries of a chain are at least 2
    CHECK_THROWS_AS(Nakayama::linear({2, 1, 1}), InvalidKupisch);
    // cyclic entries are at least 2, including around the wrap
    CHECK_THROWS_AS(Nakayama::cyclic({1}), InvalidKupisch);
    CHECK_THROWS_AS(Nakayama::cyclic({4, 2, 2}), InvalidKupisch);
    CHECK_THROWS_AS(Nakayama::linear({}), InvalidKupisch);

    try {
        Nakayama::linear({4, 2, 2, 2, 1});
        FAIL("expected InvalidKupisch");
    } catch (const InvalidKupisch& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("co-kupisch and cartan agree") {
    const Nakayama a = Nakayama::linear({4, 4, 3, 2, 1});
    CHECK(a.co_kupisch() == std::vector<long>({1, 2, 3, 4, 4}));
    const ExactMatrix cartan = ExactMatrix::from_int_rows({{1, 0, 0, 0, 0},
                                                           {1, 1, 0, 0, 0},
                                                           {1, 1, 1, 0, 0},
                                                           {1, 1, 1, 1, 0},
                                                           {0, 1, 1, 1, 1}});
    CHECK(a.cartan() == cartan);
    CHECK(a.total_dim() == 14);

    const Nakayama b = Nakayama::cyclic({3, 3, 3});
    CHECK(b.co_kupisch() == std::vector<long>({3, 3, 3}));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(b.cartan()(i, j) == 1);
}

TEST_CASE("f and g maps") {
    const Nakayama a = Nakayama::linear({4, 4, 3, 2, 1});
    CHECK(a.f(1) == 5);
    CHECK(a.f(5) == 6);
    CHECK(a.g(5) == 1);
    CHECK(a.g(1) == 0);
    // extended maps continue the chain with unit lengths and stay monotone
    for (long j = 1; j < 2 * a.n(); ++j) {
        CHECK(a.f_ext(j) > j);
        CHECK(a.f_ext(j + 1) >= a.f_ext(j));
    }
    for (long j = -3; j < a.n(); ++j) {
        CHECK(a.g_ext(j) < j);
        CHECK(a.g_ext(j + 1) >= a.g_ext(j));
    }
    CHECK_THROWS_AS(a.f(6), std::out_of_range);

    const Nakayama b = Nakayama::cyclic({2, 4, 3, 3});
    for (long j = 1; j <= b.n(); ++j) {
        CHECK(b.f_ext(j + b.n()) == b.f_ext(j) + b.n());
        CHECK(b.g_ext(j + b.n()) == b.g_ext(j) + b.n());
    }
}

TEST_CASE("interval modules") {
    const Nakayama a = Nakayama::linear({4, 4, 3, 2, 1});
    CHECK(a.same_module(a.projective(1), Interval{1, 4}));
    CHECK(a.same_module(a.injective(5), Interval{2, 4}));
    CHECK(a.top_vertex(Interval{2, 3}) == 2);
    CHECK(a.soc_vertex(Interval{2, 3}) == 4);
    CHECK(a.dim_vector(Interval{2, 3}) == std::vector<long>({0, 1, 1, 1, 0}));
    CHECK(a.is_projective(Interval{1, 4}));
    CHECK_FALSE(a.is_projective(Interval{2, 3}));
    CHECK(a.is_injective(Interval{1, 1}));  // I(1) is simple here
    CHECK_THROWS_AS(a.require_module(Interval{2, 5}), std::invalid_argument);

    const Nakayama b = Nakayama::cyclic({3, 3, 3});
    CHECK(b.same_module(Interval{1, 2}, Interval{4, 2}));
    CHECK(b.soc_vertex(Interval{3, 2}) == 1);  // wraps around the cycle
}

TEST_CASE("round trip through the text form") {
    CHECK(Nakayama::linear({4, 4, 3, 2, 1}).str() == "linear:4,4,3,2,1");
    CHECK(Nakayama::cyclic({2, 3, 3}).str() == "cyclic:2,3,3");
}
