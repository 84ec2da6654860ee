#include "coalgame/player_values.hpp"

#include <stdexcept>

namespace coalgame {

BetaWeights::BetaWeights(std::vector<Rational> by_size) : by_size_(std::move(by_size)) {
  if (by_size_.empty() || by_size_.size() > Game::kMaxPlayers)
    throw std::invalid_argument("beta weights need one entry per coalition size 1..n");
  // GMP comparisons assume canonical form; sanitize caller-built rationals.
  for (Rational& w : by_size_) w.canonicalize();
}

BetaWeights BetaWeights::shapley(int n) {
  std::vector<Rational> w;
  w.reserve(n);
  for (int t = 1; t <= n; ++t) w.push_back(shapley_weight(n, t));
  return BetaWeights(std::move(w));
}

BetaWeights BetaWeights::banzhaf(int n) {
  if (n < 1) throw std::invalid_argument("player count must be positive");
  Rational w(1, mpz_class(mpz_class(1) << (n - 1)));
  return BetaWeights(std::vector<Rational>(n, w));
}

BetaWeights BetaWeights::zero(int n) {
  if (n < 1) throw std::invalid_argument("player count must be positive");
  return BetaWeights(std::vector<Rational>(n));
}

const Rational& BetaWeights::weight_for_size(int t) const {
  if (t < 1 || t > player_count())
    throw std::invalid_argument("coalition size out of range for beta weights");
  return by_size_[t - 1];
}

Rational shapley_weight(int n, int t) {
  if (n < 1 || t < 1 || t > n) throw std::invalid_argument("shapley_weight needs 1 <= t <= n");
  Rational w(factorial(t - 1) * factorial(n - t), factorial(n));
  w.canonicalize();  // raw num/den construction does not reduce
  return w;
}

PlayerValues shapley(const DividendVector& d) {
  const int n = d.player_count();
  PlayerValues out(n);
  // Per player, bucket the dividend mass by coalition size so the division
  // by |T| happens n times, not 2^n times.
  std::vector<Rational> by_size(n + 1);
  for (int i = 0; i < n; ++i) {
    for (auto& b : by_size) b = 0;
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = bit; m < d.dividends().size(); ++m) {
      if (m & bit) by_size[Coalition(m).size()] += d.dividends()[m];
    }
    for (int t = 1; t <= n; ++t) out[i] += by_size[t] / t;
  }
  return out;
}

PlayerValues shapley(const Game& g) { return shapley(dividends(g)); }

PlayerValues shapley_marginal(const Game& g) {
  return semivalue(g, BetaWeights::shapley(g.player_count()));
}

PlayerValues banzhaf(const Game& g) {
  return semivalue(g, BetaWeights::banzhaf(g.player_count()));
}

PlayerValues semivalue(const Game& g, const BetaWeights& beta) {
  const int n = g.player_count();
  if (beta.player_count() != n)
    throw std::invalid_argument("beta weights sized for a different player count");
  PlayerValues out(n);
  std::vector<Rational> by_size(n + 1);
  for (int i = 0; i < n; ++i) {
    for (auto& b : by_size) b = 0;
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t m = bit; m < g.table_size(); ++m) {
      if (m & bit)
        by_size[Coalition(m).size()] += g.worths()[m] - g.worths()[m ^ bit];
    }
    for (int t = 1; t <= n; ++t) out[i] += beta.weight_for_size(t) * by_size[t];
  }
  return out;
}

}  // namespace coalgame
