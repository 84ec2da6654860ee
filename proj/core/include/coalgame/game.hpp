#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalgame/coalition.hpp"
#include "coalgame/rational.hpp"

namespace coalgame {

/// Dense coalitional game (N, v): a player count n and a worth table with
/// one exact rational per coalition, indexed by coalition mask. Immutable
/// after construction; v(∅) = 0 is enforced. Player identity is the index
/// 0..n-1 — labels are a presentation-layer concern (PlayerLabeling).
class Game {
 public:
  /// Dense tables hold 2^n rationals; 20 keeps that comfortably in memory.
  static constexpr int kMaxPlayers = 20;

  /// worths must have exactly 2^n entries with worths[0] == 0.
  /// Throws std::invalid_argument otherwise or if n is out of [1, 20].
  Game(int n, std::vector<Rational> worths);

  static Game zero(int n);
  /// Unanimity game u_s: worth 1 on supersets of s, 0 elsewhere.
  /// s must be non-empty and within the player range.
  static Game unanimity(int n, Coalition s);

  int player_count() const { return n_; }
  Coalition grand_coalition() const { return Coalition::full(n_); }
  std::size_t table_size() const { return worths_.size(); }

  const Rational& worth(Coalition s) const;
  std::span<const Rational> worths() const { return worths_; }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> worths_;
};

/// Σ_k coeff_k · game_k. All games must share one player count; an empty
/// term list is rejected (there is no player count to give the result).
Game linear_combine(std::span<const std::pair<Rational, const Game*>> terms);

Game operator+(const Game& a, const Game& b);
Game operator-(const Game& a, const Game& b);
Game operator*(const Rational& c, const Game& g);

/// Image of a coalition under a relabeling: {perm[i] : i ∈ s}.
Coalition apply_permutation(Coalition s, std::span<const int> perm);

/// Relabels players: perm[i] is the new index of player i, so the result h
/// satisfies h(π(T)) = g(T). perm must be a bijection on 0..n-1.
Game permute_game(const Game& g, std::span<const int> perm);

/// A game with some players deleted. Survivors are re-packed to contiguous
/// indices (keeping their relative order); the index maps translate
/// coalitions between the two worlds.
struct Subgame {
  Game game;
  std::vector<int> to_original;  // subgame player -> original player

  /// Subgame coalition -> coalition over the original players.
  Coalition embed(Coalition sub) const;
  /// Original-world coalition -> subgame coalition; deleted players are
  /// dropped.
  Coalition compress(Coalition original) const;
};

/// Deletes the players in `removed` (restriction of v to N∖removed).
/// At least one player must survive.
Subgame remove_players(const Game& g, Coalition removed);

/// A game where a whole coalition has been fused into one player ⊕ that can
/// only act as a bloc: worth(T) = v(T) for ⊕ ∉ T, and
/// worth(T ∪ {⊕}) = v(T ∪ S) for T over the survivors.
struct MergedGame {
  Game game;
  int merged_player;             // index of ⊕ in the new game (always last)
  std::vector<int> to_original;  // survivor index -> original player

  Coalition embed_survivors(Coalition survivors) const;
};

/// Fuses the non-empty coalition `merged` into a single player.
MergedGame merged_game(const Game& g, Coalition merged);

/// v(S ∪ {i}) = v(S) for every S not containing i.
bool is_null_player(const Game& g, int player);
/// v(S ∪ {i}) = v(S) + v({i}) for every S not containing i.
bool is_dummy_player(const Game& g, int player);
/// All Harsanyi dividends are ≥ 0.
bool is_positive(const Game& g);
/// v(S) ≤ v(T) whenever S ⊆ T.
bool is_monotone(const Game& g);

/// CLI-facing player names. The engine itself is purely index-based; labels
/// exist to parse and print coalitions like "A,C". Labels must be unique,
/// non-empty and comma-free.
class PlayerLabeling {
 public:
  explicit PlayerLabeling(std::vector<std::string> labels);
  /// "p1", "p2", ...
  static PlayerLabeling numbered(int n);

  int player_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int player) const;
  /// Throws std::invalid_argument on an unknown label.
  int index_of(std::string_view label) const;

  /// Parses "A,C" (order-insensitive, surrounding spaces tolerated; repeats
  /// collapse). The empty string is the empty coalition.
  Coalition parse_coalition(std::string_view text) const;
  /// Members joined with "," in increasing player order.
  std::string format_coalition(Coalition s) const;

 private:
  std::vector<std::string> labels_;
};

}  // namespace coalgame
