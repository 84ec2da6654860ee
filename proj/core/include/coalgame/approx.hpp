#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "coalgame/game.hpp"
#include "coalgame/rng.hpp"

namespace coalgame {

/// Black-box access to a game for sampling: a player count (up to 64 — no
/// dense table is required) and a worth callback with worth(∅) = 0.
/// Estimators work in doubles; exactness is the dense engine's business.
struct GameOracle {
  int n = 0;
  std::function<double(Coalition)> worth;
};

/// Snapshots a dense game's worth table as doubles.
GameOracle oracle_from_game(const Game& g);

/// Oracle over a sparse dividend list: worth(T) = Σ_{S ⊆ T} Δ(S). Supports
/// up to 64 players; evaluation is linear in the number of terms.
GameOracle oracle_from_sparse_dividends(
    int n, std::vector<std::pair<Coalition, Rational>> terms);

/// A Monte Carlo estimate with enough state (Welford mean/M2) to be merged
/// with estimates from other sample streams.
struct Estimate {
  double value = 0.0;           // sample mean
  std::uint64_t samples = 0;
  double standard_error = 0.0;  // sqrt(m2/(samples-1)/samples); 0 below 2 samples
  double m2 = 0.0;              // Σ (x - mean)², kept so merge() is exact

  void add_sample(double x);
};

/// Combines two estimates as if their sample streams had been one (Chan's
/// parallel update). merge(merge(a,b),c) == merge(a,merge(b,c)) up to
/// floating-point rounding.
Estimate merge(const Estimate& a, const Estimate& b);

/// Shapley value of one player by uniform random orderings: each sample is
/// the player's marginal contribution to the players drawn before it.
Estimate approx_shapley(const GameOracle& oracle, int player,
                        std::uint64_t samples, std::uint64_t seed);

/// Union value of a coalition by uniform random orderings. Each ordering
/// contributes Σ_{k=1..n} (v(P_k) - v(P_k∖S))/k where P_k is the length-k
/// prefix; P_k is a uniformly random size-k coalition, which makes the
/// sample mean an unbiased estimator of the exact union value.
Estimate approx_union_shapley(const GameOracle& oracle, Coalition s,
                              std::uint64_t samples, std::uint64_t seed);

}  // namespace coalgame
