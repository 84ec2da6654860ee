// Acceptance gate: each numbered criterion is a self-contained end-to-end
// check over the public API. Run as `coalgame_acceptance <criterion>`; the
// binary prints exactly one PASS/FAIL line and exits 0/1. Numeric tolerances
// and wall-clock budgets are fixed constants below — tests compare exact
// rationals wherever the engine is exact and use the pinned tolerances only
// around the Monte Carlo estimators.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "coalgame/approx.hpp"
#include "coalgame/axioms.hpp"
#include "coalgame/game_io.hpp"
#include "coalgame/generate.hpp"

#ifndef COALGAME_ACCEPTANCE_DATA_DIR
#error "COALGAME_ACCEPTANCE_DATA_DIR must point at the test data directory"
#endif

namespace {

using coalgame::Coalition;
using coalgame::DividendVector;
using coalgame::Game;
using coalgame::GroupValueKind;
using coalgame::Rational;

using Clock = std::chrono::steady_clock;

Rational rat(long num, long den = 1) { return coalgame::make_rational(num, den); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(std::string what) {
    if (ok) detail = std::move(what);  // keep the first failure
    ok = false;
  }
};

void expect(Outcome& out, bool condition, const std::string& what) {
  if (!condition) out.fail(what);
}

void expect_eq(Outcome& out, const Rational& got, const Rational& want,
               const std::string& where) {
  if (got != want) {
    out.fail(where + ": got " + coalgame::to_fraction_string(got) + ", want " +
             coalgame::to_fraction_string(want));
  }
}

std::string data_path(const char* file) {
  return std::string(COALGAME_ACCEPTANCE_DATA_DIR) + "/" + file;
}

// --- criterion 1 -----------------------------------------------------------
// Loading the canonical three-player game file and tabulating the four
// group values reproduces all 28 published numbers exactly, within 1 second.

Outcome criterion1() {
  Outcome out;
  coalgame::LoadedGame lg = coalgame::load_game_file(data_path("table1.json"));
  const Game& g = lg.game();
  expect(out, g.player_count() == 3, "expected a three-player game file");

  struct Expected {
    GroupValueKind kind;
    std::array<Rational, 7> row;  // by coalition mask 1..7
  };
  const Expected table[] = {
      {GroupValueKind::UnionShapley,
       {rat(4), rat(5), rat(8), rat(8), rat(10), rat(11), rat(13)}},
      {GroupValueKind::MergeShapley,
       {rat(4), rat(5), rat(17, 2), rat(8), rat(23, 2), rat(25, 2), rat(17)}},
      {GroupValueKind::InteractionIndex,
       {rat(4), rat(5), rat(3, 2), rat(8), rat(7, 2), rat(7, 2), rat(3)}},
      {GroupValueKind::IntersectionShapley,
       {rat(4), rat(5), rat(1), rat(8), rat(2), rat(2), rat(1)}},
  };
  int checked = 0;
  for (const Expected& e : table) {
    coalgame::GroupValueTable t = coalgame::full_table(g, e.kind);
    for (std::uint64_t m = 1; m <= 7; ++m) {
      expect_eq(out, t.value(Coalition(m)), e.row[m - 1],
                std::string(coalgame::to_string(e.kind)) + " at mask " +
                    std::to_string(m));
      ++checked;
    }
  }
  expect(out, checked == 28, "expected 28 table entries");
  return out;
}

// --- criterion 2 -----------------------------------------------------------
// The two disjoint pairs game: overlap-free unions add up, intersections and
// interactions vanish across pairs, exactly as published.

Outcome criterion2() {
  Outcome out;
  coalgame::LoadedGame lg = coalgame::load_game_file(data_path("example1.json"));
  const Game& g = lg.game();
  expect(out, g.player_count() == 4, "expected a four-player game file");
  DividendVector d = coalgame::dividends(g);
  Coalition within = lg.labels.parse_coalition("A,B");   // one pair
  Coalition across = lg.labels.parse_coalition("A,C");   // straddles both

  expect_eq(out, coalgame::union_shapley(d, within), rat(1, 2), "US within a pair");
  expect_eq(out, coalgame::union_shapley(d, across), rat(1), "US across pairs");
  expect_eq(out, coalgame::merge_shapley(d, within), rat(1), "MS within a pair");
  expect_eq(out, coalgame::merge_shapley(d, across), rat(1), "MS across pairs");
  expect_eq(out, coalgame::interaction_index(d, across), rat(0), "II across pairs");
  expect_eq(out, coalgame::interaction_index(d, within), rat(1), "II within a pair");
  expect_eq(out, coalgame::intersection_shapley(d, within), rat(1, 2),
            "IS within a pair");
  expect_eq(out, coalgame::intersection_shapley(d, across), rat(0),
            "IS across pairs");
  expect_eq(out, g.worth(within), rat(1), "worth of a pair");
  expect_eq(out, g.worth(across), rat(0), "worth across pairs");
  return out;
}

// --- criterion 3 -----------------------------------------------------------
// Closed forms on the symmetric unanimity game of the grand coalition, for
// every coalition of every n in 2..8.

Outcome criterion3() {
  Outcome out;
  for (int n = 2; n <= 8; ++n) {
    Game g = Game::unanimity(n, Coalition::full(n));
    DividendVector d = coalgame::dividends(g);
    for (std::uint64_t m = 1; m < g.table_size(); ++m) {
      Coalition s(m);
      const int k = s.size();
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      expect_eq(out, coalgame::union_shapley(d, s), rat(1, n), "US " + at);
      expect_eq(out, coalgame::intersection_shapley(d, s), rat(1, n), "IS " + at);
      expect_eq(out, coalgame::merge_shapley(d, s), rat(1, n - k + 1), "MS " + at);
      expect_eq(out, coalgame::interaction_index(d, s), rat(1, n - k + 1),
                "II " + at);
      expect_eq(out, coalgame::sum_of_shapley(d, s), rat(k, n), "sum-SV " + at);
      expect_eq(out, coalgame::scaled_intersection_shapley(d, s), rat(k, n),
                "scaled-IS " + at);
      expect_eq(out, coalgame::coalition_worth(g, s), rat(k == n ? 1 : 0),
                "worth " + at);
      expect_eq(out, coalgame::coalition_dividend(d, s), rat(k == n ? 1 : 0),
                "dividend " + at);
    }
  }
  return out;
}

// --- criterion 4 -----------------------------------------------------------
// The two-player game worth 1 everywhere: the pair's interaction index is
// exactly -1 even though the game is monotone, and the monotonicity check
// reports that with a replayable witness.

Outcome criterion4() {
  Outcome out;
  Game g(2, {rat(0), rat(1), rat(1), rat(1)});
  expect(out, coalgame::is_monotone(g), "the all-ones game is monotone");
  expect_eq(out, coalgame::interaction_index(g, Coalition::full(2)), rat(-1),
            "II of the pair");

  coalgame::GroupValueFn ii =
      coalgame::builtin_group_value(GroupValueKind::InteractionIndex);
  coalgame::AxiomReport r = coalgame::check_monotonicity(ii, g);
  expect(out, r.verdict == coalgame::Verdict::Fail,
         "monotonicity must fail for the interaction index here");
  expect(out, r.witness.has_value(), "failure must carry a witness");
  if (r.witness) {
    expect_eq(out, r.witness->lhs, rat(-1), "witness lhs");
    expect(out, coalgame::recheck_witness(r, ii), "witness must replay");
  }
  return out;
}

// --- criterion 5 -----------------------------------------------------------
// Oracle equivalence on 200 seeded games of up to 8 players: for every
// non-empty coalition the dividend-form values equal the independent
// worth-form computations, and the merge value equals the Shapley value of
// the fused player in the explicitly merged game. Budget: 60 s.

Outcome criterion5() {
  Outcome out;
  auto corpus = coalgame::generate_corpus(200, 8, 20240817);
  expect(out, corpus.size() == 200, "corpus size");
  for (std::size_t gi = 0; gi < corpus.size() && out.ok; ++gi) {
    const Game& g = corpus[gi];
    DividendVector d = coalgame::dividends(g);
    for (std::uint64_t m = 1; m < g.table_size(); ++m) {
      Coalition s(m);
      const std::string at = "game " + std::to_string(gi) + " mask " +
                             std::to_string(m);
      expect_eq(out, coalgame::union_shapley(d, s),
                coalgame::union_shapley_worth_form(g, s), "US " + at);
      expect_eq(out, coalgame::intersection_shapley(d, s),
                coalgame::intersection_shapley_worth_form(g, s), "IS " + at);
      expect_eq(out, coalgame::merge_shapley(d, s),
                coalgame::merge_shapley_worth_form(g, s), "MS(weights) " + at);
      expect_eq(out, coalgame::merge_shapley(d, s),
                coalgame::merge_shapley_via_merge(g, s), "MS(merged) " + at);
      expect_eq(out, coalgame::interaction_index(d, s),
                coalgame::interaction_index_worth_form(g, s), "II " + at);
      expect_eq(out, coalgame::sum_of_shapley(d, s),
                coalgame::sum_of_shapley_via_players(g, s), "sum-SV " + at);
      if (!out.ok) break;
    }
  }
  return out;
}

// --- criterion 6 -----------------------------------------------------------
// Structural identities on the same 200-game corpus: inclusion-exclusion
// recovery of the union value, the pairwise union/intersection split, union
// values as potential differences, dividends summing to v(N), and Shapley
// efficiency.

Outcome criterion6() {
  Outcome out;
  auto corpus = coalgame::generate_corpus(200, 8, 20240817);
  for (std::size_t gi = 0; gi < corpus.size() && out.ok; ++gi) {
    const Game& g = corpus[gi];
    const int n = g.player_count();
    DividendVector d = coalgame::dividends(g);
    coalgame::PlayerValues sv = coalgame::shapley(d);
    const std::string at = " (game " + std::to_string(gi) + ")";

    Rational dividend_sum;
    for (const Rational& x : d.dividends()) dividend_sum += x;
    expect_eq(out, dividend_sum, g.worth(g.grand_coalition()),
              "dividends must sum to v(N)" + at);

    Rational sv_sum;
    for (const Rational& x : sv) sv_sum += x;
    expect_eq(out, sv_sum, g.worth(g.grand_coalition()),
              "Shapley efficiency" + at);

    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Coalition pair = Coalition::singleton(i).with(j);
        expect_eq(out, coalgame::union_shapley(d, pair),
                  sv[i] + sv[j] - coalgame::intersection_shapley(d, pair),
                  "pairwise union/intersection split" + at);
      }
    }

    Rational pot = coalgame::potential(d);
    for (std::uint64_t m = 1; m < g.table_size(); ++m) {
      Coalition s(m);
      expect_eq(out, coalgame::union_via_inclusion_exclusion(d, s),
                coalgame::union_shapley(d, s),
                "inclusion-exclusion recovery" + at);
      Rational rest_potential =
          s == g.grand_coalition()
              ? Rational(0)
              : coalgame::potential(coalgame::remove_players(g, s).game);
      expect_eq(out, coalgame::union_shapley(d, s), pot - rest_potential,
                "union value as a potential difference" + at);
      if (!out.ok) break;
    }
  }
  return out;
}

// --- criterion 7 -----------------------------------------------------------
// Ordering-weight identities: exhaustively over every coalition (and pair)
// for n up to 8, plus 1000 sampled pairs at n = 12.

Outcome criterion7() {
  Outcome out;
  for (int n = 1; n <= 8; ++n) {
    coalgame::AxiomReport r = coalgame::check_weight_identities(n);
    expect(out, r.verdict == coalgame::Verdict::Pass,
           "exhaustive weight identities at n=" + std::to_string(n));
  }
  coalgame::AxiomReport sampled =
      coalgame::check_weight_identities_sampled(12, 1000, 20240817);
  expect(out, sampled.verdict == coalgame::Verdict::Pass,
         "sampled weight identities at n=12");
  return out;
}

// --- criterion 8 -----------------------------------------------------------
// The axiom matrix over a 50-game corpus (n ≤ 6) matches the published
// pass/fail pattern cell for cell, and every failing cell carries a witness
// that replays.

Outcome criterion8() {
  Outcome out;
  auto corpus = coalgame::generate_corpus(50, 6, 1);
  auto values = coalgame::builtin_group_values();
  auto axioms = coalgame::standard_axioms();
  coalgame::AxiomMatrix m = coalgame::run_axiom_matrix(corpus, values, axioms, 1);

  // Rows: worth, dividend, sum-shapley, union-shapley, intersection-shapley,
  // merge-shapley, interaction-index, scaled-intersection. Columns:
  // linearity, symmetry, null-player, dummy-player, dummifying-player,
  // weak-monotonicity, monotonicity, potential, balanced-contributions,
  // null-player-out, shapley-consistency.
  const std::array<const char*, 8> expected = {
      "PPPPFPPFFPF", "PPFFPPFFFPF", "PPPPFPPFFPP", "PPPPFPPPPPP",
      "PPFFPPFFFPP", "PPPPFPPFFPP", "PPFFPPFFFPP", "PPFFPPFFFPP",
  };
  for (std::size_t v = 0; v < expected.size() && out.ok; ++v) {
    for (std::size_t a = 0; a < m.axioms.size(); ++a) {
      const coalgame::MatrixCell& cell = m.cells[v][a];
      const bool want_fail = expected[v][a] == 'F';
      const std::string at = m.value_names[v] + " / " +
                             std::string(coalgame::to_string(m.axioms[a]));
      expect(out, cell.pass_count + cell.fail_count > 0, "vacuous cell: " + at);
      if (want_fail) {
        expect(out, cell.verdict == coalgame::Verdict::Fail,
               "expected a failure: " + at);
        expect(out, cell.first_failure.has_value() &&
                        cell.first_failure->witness.has_value(),
               "failure without witness: " + at);
        if (cell.first_failure) {
          expect(out, coalgame::recheck_witness(*cell.first_failure, values[v]),
                 "witness does not replay: " + at);
        }
      } else {
        expect(out, cell.verdict == coalgame::Verdict::Pass,
               "unexpected verdict: " + at);
      }
    }
  }
  return out;
}

// --- criterion 9 -----------------------------------------------------------
// Monte Carlo estimators: (a) the per-sample expectation, computed by
// enumerating all n! orderings with the same double arithmetic the samplers
// use, matches the exact value to a relative error of 1e-12; (b) at
// m = 100000 samples, at least 95 of 100 independent trials land within
// 3 reported standard errors of the exact value. Budget: 120 s.

constexpr double kExpectationRelTol = 1e-12;
constexpr int kTrialsPerEstimator = 100;
constexpr int kMinHits = 95;
constexpr std::uint64_t kSamplesPerTrial = 100000;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

Outcome criterion9() {
  Outcome out;
  std::vector<Game> games;
  for (int i = 0; i < 10; ++i) {
    int n = 2 + i % 5;  // 2..6 players
    games.push_back(coalgame::generate_game(
        n, static_cast<coalgame::GameFamily>(i % 3), 900 + i));
  }

  int shapley_hits = 0;
  int union_hits = 0;
  for (std::size_t gi = 0; gi < games.size(); ++gi) {
    const Game& g = games[gi];
    const int n = g.player_count();
    coalgame::GameOracle oracle = coalgame::oracle_from_game(g);
    const int player = 0;
    Coalition s = Coalition::singleton(0).with(1);

    // (a) exact per-sample expectation by full enumeration of orderings.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    double shapley_total = 0.0;
    double union_total = 0.0;
    long perms = 0;
    do {
      Coalition before;
      for (int i : order) {
        if (i == player) break;
        before = before.with(i);
      }
      shapley_total +=
          oracle.worth(before.with(player)) - oracle.worth(before);

      Coalition prefix;
      double union_sample = 0.0;
      for (int k = 1; k <= n; ++k) {
        prefix = prefix.with(order[k - 1]);
        if (!prefix.intersects(s)) continue;
        union_sample += (oracle.worth(prefix) - oracle.worth(prefix.minus(s))) /
                        static_cast<double>(k);
      }
      union_total += union_sample;
      ++perms;
    } while (std::next_permutation(order.begin(), order.end()));

    const double exact_sv = coalgame::to_double(coalgame::shapley(g)[player]);
    const double exact_us = coalgame::to_double(coalgame::union_shapley(g, s));
    const double mean_sv = shapley_total / static_cast<double>(perms);
    const double mean_us = union_total / static_cast<double>(perms);
    if (rel_err(mean_sv, exact_sv) > kExpectationRelTol) {
      out.fail("ordering-average of marginal samples is off at game " +
               std::to_string(gi) + ": " + std::to_string(mean_sv) + " vs " +
               std::to_string(exact_sv));
    }
    if (rel_err(mean_us, exact_us) > kExpectationRelTol) {
      out.fail("ordering-average of union samples is off at game " +
               std::to_string(gi) + ": " + std::to_string(mean_us) + " vs " +
               std::to_string(exact_us));
    }

    // (b) coverage: ten independent trials per game and estimator.
    for (int trial = 0; trial < kTrialsPerEstimator / 10; ++trial) {
      std::uint64_t seed = 7000 + 100 * gi + static_cast<std::uint64_t>(trial);
      coalgame::Estimate sv =
          coalgame::approx_shapley(oracle, player, kSamplesPerTrial, seed);
      if (std::abs(sv.value - exact_sv) <= 3.0 * sv.standard_error)
        ++shapley_hits;
      coalgame::Estimate us =
          coalgame::approx_union_shapley(oracle, s, kSamplesPerTrial, seed + 1);
      if (std::abs(us.value - exact_us) <= 3.0 * us.standard_error)
        ++union_hits;
    }
  }
  if (shapley_hits < kMinHits) {
    out.fail("marginal-sampling coverage too low: " +
             std::to_string(shapley_hits) + "/100 within 3 SE");
  }
  if (union_hits < kMinHits) {
    out.fail("union-sampling coverage too low: " + std::to_string(union_hits) +
             "/100 within 3 SE");
  }
  return out;
}

// --- criterion 10 ----------------------------------------------------------
// Scale: a dense 20-player game — full dividend transform plus the full
// Shapley vector — inside 30 s, with efficiency holding exactly.

Outcome criterion10() {
  Outcome out;
  Game g = coalgame::generate_game(20, coalgame::GameFamily::Positive, 4);
  DividendVector d = coalgame::dividends(g);
  coalgame::PlayerValues sv = coalgame::shapley(d);
  expect(out, sv.size() == 20, "twenty Shapley values");
  Rational total;
  for (const Rational& x : sv) total += x;
  expect_eq(out, total, g.worth(g.grand_coalition()), "efficiency at n=20");
  // Spot-check the transform: the dividend of the grand coalition must
  // invert back through the alternating sum over a few coalitions.
  expect_eq(out, d.dividend(Coalition::singleton(7)),
            g.worth(Coalition::singleton(7)), "singleton dividend");
  return out;
}

struct Criterion {
  const char* description;
  Outcome (*run)();
  double budget_seconds;  // 0 = no budget pinned
};

const Criterion kCriteria[] = {
    {"three-player game file reproduces the published 28-entry table", criterion1, 1.0},
    {"disjoint-pairs game matches the published group values", criterion2, 0.0},
    {"symmetric unanimity closed forms for n=2..8", criterion3, 0.0},
    {"all-ones pair: interaction -1 and a monotonicity counterexample", criterion4, 0.0},
    {"dividend forms match worth forms on 200 seeded games", criterion5, 60.0},
    {"structural identities hold on 200 seeded games", criterion6, 0.0},
    {"ordering-weight identities, exhaustive n<=8 and sampled n=12", criterion7, 0.0},
    {"axiom matrix over 50 games matches the published pattern", criterion8, 0.0},
    {"estimators: enumerated expectation and 3-SE coverage", criterion9, 120.0},
    {"20-player dividends and Shapley at full scale", criterion10, 30.0},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <criterion 1..10>\n", argv[0]);
    return 2;
  }
  const int index = std::atoi(argv[1]);
  if (index < 1 || index > 10) {
    std::fprintf(stderr, "criterion must be between 1 and 10\n");
    return 2;
  }
  const Criterion& c = kCriteria[index - 1];

  const auto start = Clock::now();
  Outcome out;
  try {
    out = c.run();
  } catch (const std::exception& e) {
    out.fail(std::string("unexpected exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (out.ok && c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
    std::ostringstream msg;
    msg << "exceeded the " << c.budget_seconds << " s budget (took " << seconds
        << " s)";
    out.fail(msg.str());
  }

  std::printf("criterion %d: %s (%.2fs) %s%s%s\n", index,
              out.ok ? "PASS" : "FAIL", seconds, c.description,
              out.detail.empty() ? "" : " — ", out.detail.c_str());
  return out.ok ? 0 : 1;
}
