#pragma once

#include "coalgame/transforms.hpp"

namespace coalgame {

/// One rational per player, indexed by player.
using PlayerValues = std::vector<Rational>;

/// Per-coalition-size weights β for semivalues. weight_for_size(t) is the
/// weight a coalition of size t carries (stored at index t-1, matching the
/// classic domain {0..n-1}). No normalization is imposed — Banzhaf's
/// constant family does not sum marginal weights to 1 and is still a valid
/// semivalue here.
class BetaWeights {
 public:
  /// by_size[t-1] is the weight for size t; length is the player count.
  explicit BetaWeights(std::vector<Rational> by_size);

  /// β(t) = (t-1)!(n-t)!/n! — the random-order weights.
  static BetaWeights shapley(int n);
  /// β(t) = 1/2^{n-1}, constant.
  static BetaWeights banzhaf(int n);
  static BetaWeights zero(int n);

  int player_count() const { return static_cast<int>(by_size_.size()); }
  const Rational& weight_for_size(int t) const;

 private:
  std::vector<Rational> by_size_;
};

/// (t-1)!(n-t)!/n! — probability that, in a uniformly random ordering, a
/// fixed size-t coalition is exactly "some player plus their predecessors".
Rational shapley_weight(int n, int t);

/// Shapley value, dividend form: φ_i = Σ_{T ∋ i} Δ(T)/|T|. The default
/// (and fast) path.
PlayerValues shapley(const Game& g);
PlayerValues shapley(const DividendVector& d);

/// Shapley value as the weighted sum of marginal contributions
/// Σ_{T ∋ i} (|T|-1)!(n-|T|)!/n! · (v(T) - v(T∖{i})). Kept as an
/// independent oracle path; must agree with shapley() exactly.
PlayerValues shapley_marginal(const Game& g);

/// Banzhaf value: β(t) = 1/2^{n-1} semivalue.
PlayerValues banzhaf(const Game& g);

/// ψ_i = Σ_{T ∋ i} β(|T|) · (v(T) - v(T∖{i})).
PlayerValues semivalue(const Game& g, const BetaWeights& beta);

}  // namespace coalgame
