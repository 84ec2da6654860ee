#include <cmath>
#include <stdexcept>
#include <vector>

#include "coalgame/approx.hpp"
#include "coalgame/game.hpp"
#include "coalgame/generate.hpp"
#include "coalgame/group_values.hpp"
#include "coalgame/player_values.hpp"
#include "coalgame/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using coalgame::Coalition;
using coalgame::Estimate;
using coalgame::Game;
using coalgame::GameOracle;
using coalgame::Rational;
using testutil::C;
using testutil::R;

TEST_SUITE("approx") {
  TEST_CASE("rng is the pinned deterministic generator") {
    CHECK(std::string(coalgame::kGeneratorName) == "xoshiro256**");
    coalgame::Xoshiro256 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    // next_below stays in range and is not constant.
    coalgame::Xoshiro256 c(7);
    bool varied = false;
    std::uint64_t first = c.next_below(10);
    for (int i = 0; i < 50; ++i) {
      std::uint64_t x = c.next_below(10);
      CHECK(x < 10);
      varied |= x != first;
    }
    CHECK(varied);
  }

  TEST_CASE("welford estimate matches the textbook mean and SE") {
    Estimate e;
    for (double x : {2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0}) e.add_sample(x);
    CHECK(e.samples == 8);
    CHECK(e.value == doctest::Approx(5.0));
    // Sample variance 32/7; SE = sqrt(32/7/8).
    CHECK(e.standard_error == doctest::Approx(std::sqrt(32.0 / 7.0 / 8.0)));
    CHECK(e.m2 == doctest::Approx(32.0));
  }

  TEST_CASE("merging two streams equals one combined stream") {
    std::vector<double> xs;
    coalgame::Xoshiro256 rng(11);
    for (int i = 0; i < 200; ++i)
      xs.push_back(static_cast<double>(rng.next_below(1000)) / 7.0);

    Estimate whole;
    for (double x : xs) whole.add_sample(x);
    Estimate left, right;
    for (int i = 0; i < 80; ++i) left.add_sample(xs[i]);
    for (int i = 80; i < 200; ++i) right.add_sample(xs[i]);
    Estimate merged = coalgame::merge(left, right);
    CHECK(merged.samples == whole.samples);
    CHECK(merged.value == doctest::Approx(whole.value).epsilon(1e-12));
    CHECK(merged.m2 == doctest::Approx(whole.m2).epsilon(1e-9));
    CHECK(merged.standard_error ==
          doctest::Approx(whole.standard_error).epsilon(1e-9));

    Estimate empty;
    Estimate same = coalgame::merge(whole, empty);
    CHECK(same.samples == whole.samples);
    CHECK(same.value == whole.value);
  }

  TEST_CASE("estimators are deterministic under a fixed seed") {
    Game g = coalgame::generate_game(6, coalgame::GameFamily::Uniform, 31);
    GameOracle oracle = coalgame::oracle_from_game(g);
    Estimate a = coalgame::approx_shapley(oracle, 2, 5000, 9);
    Estimate b = coalgame::approx_shapley(oracle, 2, 5000, 9);
    CHECK(a.value == b.value);
    CHECK(a.standard_error == b.standard_error);
    Estimate c = coalgame::approx_union_shapley(oracle, C({1, 4}), 5000, 9);
    Estimate d = coalgame::approx_union_shapley(oracle, C({1, 4}), 5000, 9);
    CHECK(c.value == d.value);
    CHECK(c.standard_error == d.standard_error);
  }

  TEST_CASE("zero-variance games are estimated exactly") {
    // Additive game: every marginal contribution of player i is v({i}).
    Game additive = testutil::game_of_dividends(
        4, {{0b0001, R(3)}, {0b0010, R(5)}, {0b0100, R(-2)}, {0b1000, R(1, 2)}});
    GameOracle oracle = coalgame::oracle_from_game(additive);
    Estimate e = coalgame::approx_shapley(oracle, 1, 200, 77);
    CHECK(e.value == 5.0);
    CHECK(e.standard_error == 0.0);
  }

  TEST_CASE("estimates land near the exact values") {
    Game g = coalgame::generate_game(5, coalgame::GameFamily::UnanimityMix, 8);
    GameOracle oracle = coalgame::oracle_from_game(g);
    const std::uint64_t m = 20000;

    double exact_sv = coalgame::to_double(coalgame::shapley(g)[0]);
    Estimate sv = coalgame::approx_shapley(oracle, 0, m, 1234);
    CHECK(std::abs(sv.value - exact_sv) <= 4.0 * sv.standard_error + 1e-9);

    Coalition s = C({0, 3});
    double exact_us = coalgame::to_double(coalgame::union_shapley(g, s));
    Estimate us = coalgame::approx_union_shapley(oracle, s, m, 1234);
    CHECK(std::abs(us.value - exact_us) <= 4.0 * us.standard_error + 1e-9);

    // SE shrinks roughly like 1/sqrt(m): 25x the samples ≈ 5x smaller.
    Estimate small = coalgame::approx_shapley(oracle, 0, 2000, 5);
    Estimate large = coalgame::approx_shapley(oracle, 0, 50000, 5);
    CHECK(large.standard_error < small.standard_error);
    CHECK(large.standard_error > small.standard_error / 10.0);
  }

  TEST_CASE("sparse oracle agrees with the dense one") {
    std::vector<std::pair<Coalition, Rational>> terms{
        {C({0}), R(3)}, {C({1, 2}), R(5, 2)}, {C({0, 1, 2, 3}), R(-7, 3)}};
    Game dense = testutil::game_of_dividends(
        4, {{0b0001, R(3)}, {0b0110, R(5, 2)}, {0b1111, R(-7, 3)}});
    GameOracle sparse = coalgame::oracle_from_sparse_dividends(4, terms);
    GameOracle dense_oracle = coalgame::oracle_from_game(dense);
    for (std::uint64_t m = 0; m < dense.table_size(); ++m) {
      CHECK(sparse.worth(Coalition(m)) ==
            doctest::Approx(dense_oracle.worth(Coalition(m))).epsilon(1e-12));
    }
    CHECK(sparse.n == 4);
    // Sparse oracles reach beyond the dense 20-player ceiling.
    GameOracle wide = coalgame::oracle_from_sparse_dividends(
        40, {{C({0, 39}), R(1)}});
    CHECK(wide.worth(Coalition::full(40)) == 1.0);
    CHECK(wide.worth(C({0})) == 0.0);
  }

  TEST_CASE("input validation") {
    Game g = Game::unanimity(3, C({0, 1}));
    GameOracle oracle = coalgame::oracle_from_game(g);
    CHECK_THROWS_AS(coalgame::approx_shapley(oracle, 3, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(coalgame::approx_shapley(oracle, -1, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(coalgame::approx_shapley(oracle, 0, 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(coalgame::approx_union_shapley(oracle, Coalition(), 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(coalgame::approx_union_shapley(oracle, C({4}), 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(coalgame::oracle_from_sparse_dividends(0, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        coalgame::oracle_from_sparse_dividends(2, {{Coalition(), R(1)}}),
        std::invalid_argument);
    CHECK_THROWS_AS(coalgame::oracle_from_sparse_dividends(2, {{C({5}), R(1)}}),
                    std::invalid_argument);
  }
}
