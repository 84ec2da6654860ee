#include "coalgame/approx.hpp"

#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace coalgame {

GameOracle oracle_from_game(const Game& g) {
  auto table = std::make_shared<std::vector<double>>();
  table->reserve(g.table_size());
  for (const Rational& w : g.worths()) table->push_back(to_double(w));
  return GameOracle{g.player_count(),
                    [table](Coalition s) { return (*table)[s.mask()]; }};
}

GameOracle oracle_from_sparse_dividends(int n,
                                        std::vector<std::pair<Coalition, Rational>> terms) {
  if (n < 1 || n > 64) throw std::invalid_argument("oracle player count must be in [1, 64]");
  auto converted = std::make_shared<std::vector<std::pair<Coalition, double>>>();
  converted->reserve(terms.size());
  for (const auto& [coalition, coeff] : terms) {
    if (coalition.is_empty())
      throw std::invalid_argument("sparse dividend terms must use non-empty coalitions");
    if (!Coalition::full(n).contains_all(coalition))
      throw std::invalid_argument("sparse dividend term outside the player set");
    converted->emplace_back(coalition, to_double(coeff));
  }
  return GameOracle{n, [converted](Coalition s) {
                      double total = 0.0;
                      for (const auto& [coalition, coeff] : *converted)
                        if (s.contains_all(coalition)) total += coeff;
                      return total;
                    }};
}

void Estimate::add_sample(double x) {
  ++samples;
  const double delta = x - value;
  value += delta / static_cast<double>(samples);
  m2 += delta * (x - value);
  standard_error =
      samples > 1 ? std::sqrt(m2 / static_cast<double>(samples - 1) /
                              static_cast<double>(samples))
                  : 0.0;
}

Estimate merge(const Estimate& a, const Estimate& b) {
  if (a.samples == 0) return b;
  if (b.samples == 0) return a;
  Estimate out;
  out.samples = a.samples + b.samples;
  const double delta = b.value - a.value;
  const double na = static_cast<double>(a.samples);
  const double nb = static_cast<double>(b.samples);
  const double n = na + nb;
  out.value = a.value + delta * nb / n;
  out.m2 = a.m2 + b.m2 + delta * delta * na * nb / n;
  out.standard_error =
      out.samples > 1 ? std::sqrt(out.m2 / (n - 1.0) / n) : 0.0;
  return out;
}

namespace {

void check_oracle(const GameOracle& oracle) {
  if (oracle.n < 1 || oracle.n > 64 || !oracle.worth)
    throw std::invalid_argument("game oracle must have 1..64 players and a worth callback");
}

void shuffle_order(std::vector<int>& order, Xoshiro256& rng) {
  // Fisher-Yates with rejection-sampled draws: every permutation is equally
  // likely, independent of platform.
  for (std::size_t k = order.size(); k > 1; --k) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(k));
    std::swap(order[k - 1], order[j]);
  }
}

}  // namespace

Estimate approx_shapley(const GameOracle& oracle, int player, std::uint64_t samples,
                        std::uint64_t seed) {
  check_oracle(oracle);
  if (player < 0 || player >= oracle.n)
    throw std::invalid_argument("player index out of range");
  if (samples == 0) throw std::invalid_argument("sample count must be positive");

  Xoshiro256 rng(seed);
  std::vector<int> order(oracle.n);
  std::iota(order.begin(), order.end(), 0);
  Estimate est;
  for (std::uint64_t k = 0; k < samples; ++k) {
    shuffle_order(order, rng);
    Coalition before;
    for (int i : order) {
      if (i == player) break;
      before = before.with(i);
    }
    est.add_sample(oracle.worth(before.with(player)) - oracle.worth(before));
  }
  return est;
}

Estimate approx_union_shapley(const GameOracle& oracle, Coalition s, std::uint64_t samples,
                              std::uint64_t seed) {
  check_oracle(oracle);
  if (s.is_empty()) throw std::invalid_argument("coalition must be non-empty");
  if (!Coalition::full(oracle.n).contains_all(s))
    throw std::invalid_argument("coalition is not within the player set");
  if (samples == 0) throw std::invalid_argument("sample count must be positive");

  Xoshiro256 rng(seed);
  std::vector<int> order(oracle.n);
  std::iota(order.begin(), order.end(), 0);
  Estimate est;
  for (std::uint64_t k = 0; k < samples; ++k) {
    shuffle_order(order, rng);
    Coalition prefix;
    double sample = 0.0;
    for (int k_prefix = 1; k_prefix <= oracle.n; ++k_prefix) {
      prefix = prefix.with(order[k_prefix - 1]);
      if (!prefix.intersects(s)) continue;  // v(P) - v(P∖S) vanishes
      sample += (oracle.worth(prefix) - oracle.worth(prefix.minus(s))) /
                static_cast<double>(k_prefix);
    }
    est.add_sample(sample);
  }
  return est;
}

}  // namespace coalgame
