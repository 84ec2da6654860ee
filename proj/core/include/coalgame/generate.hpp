#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "coalgame/game.hpp"

namespace coalgame {

/// Seeded random game families. Identical (n, family, seed) triples produce
/// identical games on every platform (fixed xoshiro256** draws).
enum class GameFamily {
  /// Every non-empty coalition gets a uniform dividend num/den with
  /// num ∈ [0, 100], den ∈ [1, 4]; worths follow by the zeta transform.
  /// Always a positive game.
  Positive,
  /// Every non-empty coalition gets a uniform worth num/den with
  /// num ∈ [-100, 100], den ∈ [1, 4].
  Uniform,
  /// 2n unanimity terms c·u_S with random non-empty S, c = num/den,
  /// num ∈ [-10, 10] ∖ {0}, den ∈ [1, 3].
  UnanimityMix,
};

std::string_view to_string(GameFamily family);
std::optional<GameFamily> parse_game_family(std::string_view name);

Game generate_game(int n, GameFamily family, std::uint64_t seed);

/// Extends g by one extra player (index n) whose marginal contribution to
/// every coalition is exactly singleton_worth — a dummy player, and a null
/// player when singleton_worth is 0.
Game append_dummy_player(const Game& g, const Rational& singleton_worth);

/// Deterministic mixed corpus for axiom sweeps: a handful of canonical
/// small games that witness known axiom failures (an all-ones game, a
/// single unanimity game with an idle player, two textbook examples), then
/// seeded games cycling the three families with 2..max_players players.
/// Every third generated game gets an extra null player and every fourth an
/// extra dummy player so player-classification axioms are never vacuous.
std::vector<Game> generate_corpus(int count, int max_players, std::uint64_t seed);

/// Same mix without the canonical prefix, restricted to one family.
std::vector<Game> generate_family_corpus(int count, int max_players, GameFamily family,
                                         std::uint64_t seed);

}  // namespace coalgame
