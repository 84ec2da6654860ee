#include "coalgame/transforms.hpp"

#include <stdexcept>

namespace coalgame {

DividendVector::DividendVector(int n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || n > Game::kMaxPlayers)
    throw std::invalid_argument("player count must be in [1, " +
                                std::to_string(Game::kMaxPlayers) + "]");
  if (values_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("dividend table must have exactly 2^n entries");
  // GMP comparisons assume canonical form; sanitize caller-built rationals.
  for (Rational& v : values_) v.canonicalize();
  if (values_[0] != 0)
    throw std::invalid_argument("the empty coalition always has dividend 0");
}

const Rational& DividendVector::dividend(Coalition s) const {
  if (s.mask() >= values_.size())
    throw std::invalid_argument("coalition is not within the player set");
  return values_[s.mask()];
}

DividendVector dividends(const Game& g) {
  std::vector<Rational> d(g.worths().begin(), g.worths().end());
  const std::size_t size = d.size();
  for (int i = 0; i < g.player_count(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < size; ++m) {
      if (m & bit) d[m] -= d[m ^ bit];
    }
  }
  return DividendVector(g.player_count(), std::move(d));
}

Game game_from_dividends(const DividendVector& d) {
  std::vector<Rational> w(d.dividends().begin(), d.dividends().end());
  const std::size_t size = w.size();
  for (int i = 0; i < d.player_count(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = 0; m < size; ++m) {
      if (m & bit) w[m] += w[m ^ bit];
    }
  }
  return Game(d.player_count(), std::move(w));
}

Rational potential(const DividendVector& d) {
  // Bucket by coalition size so each 1/k division happens once.
  std::vector<Rational> by_size(d.player_count() + 1);
  for (std::uint64_t m = 1; m < d.dividends().size(); ++m)
    by_size[Coalition(m).size()] += d.dividends()[m];
  Rational total;
  for (int k = 1; k <= d.player_count(); ++k) total += by_size[k] / k;
  return total;
}

Rational potential(const Game& g) { return potential(dividends(g)); }

}  // namespace coalgame
