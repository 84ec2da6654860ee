#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coalgame/game.hpp"
#include "coalgame/transforms.hpp"

namespace coalgame {

/// One c·u_S term of a dividend expansion: coalition S (non-empty) carries
/// dividend c.
struct DividendTerm {
  Coalition coalition;
  Rational coefficient;
};

/// A game parsed from a JSON game file. Files with at most Game::kMaxPlayers
/// players always materialize the dense table; dividend- and unanimity-based
/// files also keep their sparse terms and may describe up to 64 players, in
/// which case only the sparse form exists (enough for sampling estimators).
struct LoadedGame {
  PlayerLabeling labels;
  std::optional<Game> dense;
  std::optional<std::vector<DividendTerm>> sparse;

  int player_count() const { return labels.player_count(); }
  /// The dense table; throws when the file has too many players for one.
  const Game& game() const;
};

/// Parses the game-file format:
///
///   {
///     "format": 1,                      // optional
///     "players": ["a", "b", ...],       // unique non-empty labels
///     "worths":    { "a": n, "a,b": n, ... }   // every non-empty coalition
///   | "dividends": { "a,b": n, ... }           // sparse; missing keys are 0
///   | "unanimity": [ {"coalition": "a,b", "coefficient": n}, ... ]
///   }
///
/// with exactly one of the three bodies. Every n is a JSON integer or a
/// string — "3", "-7/2", "0.125" — parsed exactly; raw JSON floats are
/// rejected (a binary double rarely means the decimal it displays as — quote
/// decimals as strings instead). Repeated unanimity coalitions are summed;
/// a coalition spelled twice in a worth or dividend map is an error.
LoadedGame parse_game_json(const std::string& text);

/// parse_game_json over the contents of `path`.
LoadedGame load_game_file(const std::string& path);

/// Serializers for the same format (two-space indent; coalition keys in
/// size-then-mask order). Exact integers emit as JSON numbers when they fit
/// in the JSON integer range, everything else as fraction strings.
std::string game_file_worths_json(const Game& g, const PlayerLabeling& labels);
/// Writes only the non-zero dividends.
std::string game_file_dividends_json(const Game& g, const PlayerLabeling& labels);
/// Writes the non-zero dividends as unanimity terms.
std::string game_file_unanimity_json(const Game& g, const PlayerLabeling& labels);

}  // namespace coalgame
