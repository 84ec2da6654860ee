#pragma once

#include "coalgame/game.hpp"

namespace coalgame {

/// Harsanyi dividends of a game — the Möbius transform of its worth table:
///   Δ(S) = Σ_{T ⊆ S} (-1)^{|S|-|T|} v(T).
/// A separate type from Game so dividend tables cannot be passed where
/// worths are expected; Δ(∅) = 0 always holds.
class DividendVector {
 public:
  /// values must have exactly 2^n entries with values[0] == 0.
  DividendVector(int n, std::vector<Rational> values);

  int player_count() const { return n_; }
  Coalition grand_coalition() const { return Coalition::full(n_); }
  const Rational& dividend(Coalition s) const;
  std::span<const Rational> dividends() const { return values_; }

  friend bool operator==(const DividendVector&, const DividendVector&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

/// Fast in-place subset Möbius transform, O(n·2^n) exact operations.
DividendVector dividends(const Game& g);

/// Inverse (zeta) transform: v(S) = Σ_{T ⊆ S} Δ(T). Exact round-trip with
/// dividends().
Game game_from_dividends(const DividendVector& d);

/// P(N, v) = Σ over non-empty T of Δ(T)/|T|.
Rational potential(const Game& g);
Rational potential(const DividendVector& d);

}  // namespace coalgame
