#include "coalgame/generate.hpp"

#include <stdexcept>

#include "coalgame/rng.hpp"
#include "coalgame/transforms.hpp"

namespace coalgame {

std::string_view to_string(GameFamily family) {
  switch (family) {
    case GameFamily::Positive: return "positive";
    case GameFamily::Uniform: return "uniform";
    case GameFamily::UnanimityMix: return "unanimity-mix";
  }
  return "?";
}

std::optional<GameFamily> parse_game_family(std::string_view name) {
  for (GameFamily family :
       {GameFamily::Positive, GameFamily::Uniform, GameFamily::UnanimityMix}) {
    if (to_string(family) == name) return family;
  }
  return std::nullopt;
}

namespace {

Rational draw_signed(Xoshiro256& rng, long magnitude, long max_den) {
  long num = static_cast<long>(rng.next_below(2 * magnitude + 1)) - magnitude;
  long den = 1 + static_cast<long>(rng.next_below(max_den));
  return make_rational(num, den);
}

}  // namespace

Game generate_game(int n, GameFamily family, std::uint64_t seed) {
  if (n < 1 || n > Game::kMaxPlayers)
    throw std::invalid_argument("player count must be in [1, " +
                                std::to_string(Game::kMaxPlayers) + "]");
  Xoshiro256 rng(seed);
  const std::size_t size = std::size_t{1} << n;
  switch (family) {
    case GameFamily::Positive: {
      std::vector<Rational> d(size);
      for (std::size_t m = 1; m < size; ++m) {
        long num = static_cast<long>(rng.next_below(101));
        long den = 1 + static_cast<long>(rng.next_below(4));
        d[m] = make_rational(num, den);
      }
      return game_from_dividends(DividendVector(n, std::move(d)));
    }
    case GameFamily::Uniform: {
      std::vector<Rational> w(size);
      for (std::size_t m = 1; m < size; ++m) w[m] = draw_signed(rng, 100, 4);
      return Game(n, std::move(w));
    }
    case GameFamily::UnanimityMix: {
      std::vector<Rational> d(size);
      for (int k = 0; k < 2 * n; ++k) {
        Coalition s(1 + rng.next_below(size - 1));
        long num = static_cast<long>(rng.next_below(20));
        num = num < 10 ? num - 10 : num - 9;  // [-10,-1] ∪ [1,10]
        long den = 1 + static_cast<long>(rng.next_below(3));
        d[s.mask()] += make_rational(num, den);
      }
      return game_from_dividends(DividendVector(n, std::move(d)));
    }
  }
  throw std::logic_error("unreachable game family");
}

Game append_dummy_player(const Game& g, const Rational& singleton_worth) {
  const int n = g.player_count();
  if (n + 1 > Game::kMaxPlayers)
    throw std::invalid_argument("appending a player would exceed the dense player limit");
  std::vector<Rational> w(std::size_t{1} << (n + 1));
  const std::uint64_t bit = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < g.table_size(); ++m) {
    w[m] = g.worths()[m];
    w[m | bit] = g.worths()[m] + singleton_worth;
  }
  return Game(n + 1, std::move(w));
}

namespace {

// v = 2u_{1} + 3u_{2} + 5u_{3} + 2u_{1,3} + 2u_{2,3} + 3u_{1,2,3}: a small
// three-player game whose eight group values all differ pairwise somewhere.
Game three_player_showcase() {
  std::vector<Rational> d(8);
  d[0b001] = 2;
  d[0b010] = 3;
  d[0b100] = 5;
  d[0b101] = 2;
  d[0b110] = 2;
  d[0b111] = 3;
  return game_from_dividends(DividendVector(3, std::move(d)));
}

// u_{1,2} + u_{3,4}: two disjoint pairs, the classic game separating
// "union of contributions" from "synergy".
Game two_pairs() {
  std::vector<Rational> d(16);
  d[0b0011] = 1;
  d[0b1100] = 1;
  return game_from_dividends(DividendVector(4, std::move(d)));
}

// Worth 1 for every non-empty coalition: monotone but not positive
// (the pair dividend is -1).
Game all_ones_pair() {
  return Game(2, {Rational(0), Rational(1), Rational(1), Rational(1)});
}

}  // namespace

std::vector<Game> generate_corpus(int count, int max_players, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("corpus size must be positive");
  if (max_players < 2 || max_players > Game::kMaxPlayers)
    throw std::invalid_argument("corpus max_players must be in [2, " +
                                std::to_string(Game::kMaxPlayers) + "]");
  std::vector<Game> corpus;
  corpus.reserve(count);

  // Canonical witnesses first. Between them they exercise every known
  // axiom failure: a null player (idle second player), a dummy that is not
  // null, a monotone game that is not positive, and games whose group
  // values genuinely differ.
  corpus.push_back(all_ones_pair());
  corpus.push_back(Game::unanimity(2, Coalition::singleton(0)));
  corpus.push_back(Game::unanimity(2, Coalition::full(2)));
  if (max_players >= 3) corpus.push_back(three_player_showcase());
  if (max_players >= 4) corpus.push_back(two_pairs());

  int i = 0;
  while (static_cast<int>(corpus.size()) < count) {
    const int n = 2 + i % (max_players - 1);
    const GameFamily family = static_cast<GameFamily>(i % 3);
    Game g = generate_game(n, family, seed + static_cast<std::uint64_t>(i));
    if (i % 3 == 0 && n < max_players) {
      g = append_dummy_player(g, Rational(0));  // null player
    } else if (i % 4 == 0 && n < max_players) {
      g = append_dummy_player(g, Rational(1));  // dummy, not null
    }
    corpus.push_back(std::move(g));
    ++i;
  }
  corpus.resize(count, Game::zero(1));  // trims the canonical prefix if count is tiny
  return corpus;
}

std::vector<Game> generate_family_corpus(int count, int max_players, GameFamily family,
                                         std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("corpus size must be positive");
  if (max_players < 2 || max_players > Game::kMaxPlayers)
    throw std::invalid_argument("corpus max_players must be in [2, " +
                                std::to_string(Game::kMaxPlayers) + "]");
  std::vector<Game> corpus;
  corpus.reserve(count);
  for (int i = 0; static_cast<int>(corpus.size()) < count; ++i) {
    const int n = 2 + i % (max_players - 1);
    Game g = generate_game(n, family, seed + static_cast<std::uint64_t>(i));
    if (i % 3 == 0 && n < max_players) {
      g = append_dummy_player(g, Rational(0));
    } else if (i % 4 == 0 && n < max_players) {
      g = append_dummy_player(g, Rational(1));
    }
    corpus.push_back(std::move(g));
  }
  return corpus;
}

}  // namespace coalgame
