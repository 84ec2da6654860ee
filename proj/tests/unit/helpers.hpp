#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "coalgame/game.hpp"
#include "coalgame/rational.hpp"
#include "coalgame/transforms.hpp"

namespace testutil {

inline coalgame::Rational R(long num, long den = 1) {
  return coalgame::make_rational(num, den);
}

/// Coalition literal: C({0, 2}) = players 0 and 2.
inline coalgame::Coalition C(std::initializer_list<int> players) {
  coalgame::Coalition s;
  for (int p : players) s = s.with(p);
  return s;
}

inline std::vector<int> members_of(coalgame::Coalition s) {
  std::vector<int> out;
  for (int p : s.members()) out.push_back(p);
  return out;
}

/// Game from a sparse {mask -> dividend} list.
inline coalgame::Game game_of_dividends(
    int n, std::vector<std::pair<std::uint64_t, coalgame::Rational>> terms) {
  std::vector<coalgame::Rational> d(std::size_t{1} << n);
  for (auto& [mask, value] : terms) d.at(mask) += value;
  return coalgame::game_from_dividends(coalgame::DividendVector(n, std::move(d)));
}

/// Game from a dense worth list (index = coalition mask).
inline coalgame::Game game_of_worths(int n, std::vector<coalgame::Rational> worths) {
  return coalgame::Game(n, std::move(worths));
}

// ---------------------------------------------------------------------------
// Naive oracles, deliberately written along different lines than the
// library: direct alternating sums and permutation enumeration instead of
// the in-place subset transform and size-bucketed weights.
// ---------------------------------------------------------------------------

/// Δ(S) = Σ_{T ⊆ S} (-1)^{|S|-|T|} v(T), straight from the definition.
inline coalgame::Rational naive_dividend(const coalgame::Game& g, coalgame::Coalition s) {
  coalgame::Rational total;
  coalgame::for_each_subset(s, [&](coalgame::Coalition t) {
    coalgame::Rational term = g.worth(t);
    if ((s.size() - t.size()) % 2 == 1) term = -term;
    total += term;
  });
  return total;
}

/// Average marginal contribution over every ordering of the players.
inline std::vector<coalgame::Rational> shapley_by_permutations(const coalgame::Game& g) {
  const int n = g.player_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<coalgame::Rational> acc(n);
  long count = 0;
  do {
    coalgame::Coalition prefix;
    for (int i : order) {
      acc[i] += g.worth(prefix.with(i)) - g.worth(prefix);
      prefix = prefix.with(i);
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (auto& value : acc) value /= count;
  return acc;
}

/// Banzhaf by direct marginal averaging over all coalitions of the rest.
inline std::vector<coalgame::Rational> banzhaf_by_enumeration(const coalgame::Game& g) {
  const int n = g.player_count();
  std::vector<coalgame::Rational> out(n);
  for (int i = 0; i < n; ++i) {
    coalgame::Coalition rest = g.grand_coalition().without(i);
    coalgame::Rational total;
    coalgame::for_each_subset(rest, [&](coalgame::Coalition t) {
      total += g.worth(t.with(i)) - g.worth(t);
    });
    out[i] = total / coalgame::make_rational(1L << (n - 1));
  }
  return out;
}

}  // namespace testutil
