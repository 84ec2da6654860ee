#include "coalgame/game.hpp"

#include <algorithm>
#include <stdexcept>

#include "coalgame/transforms.hpp"

namespace coalgame {

namespace {

void require_in_range(const Game& g, Coalition s, const char* what) {
  if (!g.grand_coalition().contains_all(s))
    throw std::invalid_argument(std::string(what) + ": coalition is not within the player set");
}

void require_player(const Game& g, int player) {
  if (player < 0 || player >= g.player_count())
    throw std::invalid_argument("player index out of range");
}

}  // namespace

Game::Game(int n, std::vector<Rational> worths) : n_(n), worths_(std::move(worths)) {
  if (n < 1 || n > kMaxPlayers)
    throw std::invalid_argument("player count must be in [1, " + std::to_string(kMaxPlayers) + "]");
  if (worths_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("worth table must have exactly 2^n entries");
  // GMP comparisons assume canonical form; sanitize caller-built rationals.
  for (Rational& w : worths_) w.canonicalize();
  if (worths_[0] != 0)
    throw std::invalid_argument("the empty coalition must have worth 0");
}

Game Game::zero(int n) {
  return Game(n, std::vector<Rational>(std::size_t{1} << n));
}

Game Game::unanimity(int n, Coalition s) {
  if (s.is_empty()) throw std::invalid_argument("unanimity game needs a non-empty coalition");
  if (!Coalition::full(n).contains_all(s))
    throw std::invalid_argument("unanimity coalition is not within the player set");
  std::vector<Rational> w(std::size_t{1} << n);
  for (std::uint64_t m = s.mask(); m < w.size(); ++m) {
    if (Coalition(m).contains_all(s)) w[m] = 1;
  }
  return Game(n, std::move(w));
}

const Rational& Game::worth(Coalition s) const {
  if (s.mask() >= worths_.size())
    throw std::invalid_argument("coalition is not within the player set");
  return worths_[s.mask()];
}

Game linear_combine(std::span<const std::pair<Rational, const Game*>> terms) {
  if (terms.empty()) throw std::invalid_argument("linear_combine needs at least one term");
  const int n = terms.front().second->player_count();
  std::vector<Rational> w(std::size_t{1} << n);
  for (const auto& [coeff, game] : terms) {
    if (game->player_count() != n)
      throw std::invalid_argument("linear_combine: games have different player counts");
    for (std::size_t m = 0; m < w.size(); ++m) w[m] += coeff * game->worths()[m];
  }
  return Game(n, std::move(w));
}

Game operator+(const Game& a, const Game& b) {
  std::pair<Rational, const Game*> terms[] = {{1, &a}, {1, &b}};
  return linear_combine(terms);
}

Game operator-(const Game& a, const Game& b) {
  std::pair<Rational, const Game*> terms[] = {{1, &a}, {-1, &b}};
  return linear_combine(terms);
}

Game operator*(const Rational& c, const Game& g) {
  std::pair<Rational, const Game*> terms[] = {{c, &g}};
  return linear_combine(terms);
}

Coalition apply_permutation(Coalition s, std::span<const int> perm) {
  Coalition out;
  for (int i : s.members()) {
    if (i >= static_cast<int>(perm.size()))
      throw std::invalid_argument("coalition member outside the permutation's domain");
    out = out.with(perm[i]);
  }
  return out;
}

Game permute_game(const Game& g, std::span<const int> perm) {
  const int n = g.player_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permutation length must equal the player count");
  std::vector<bool> seen(n, false);
  for (int image : perm) {
    if (image < 0 || image >= n || seen[image])
      throw std::invalid_argument("not a permutation of 0..n-1");
    seen[image] = true;
  }
  std::vector<Rational> w(g.table_size());
  for (std::uint64_t m = 0; m < g.table_size(); ++m)
    w[apply_permutation(Coalition(m), perm).mask()] = g.worths()[m];
  return Game(n, std::move(w));
}

Coalition Subgame::embed(Coalition sub) const {
  Coalition out;
  for (int j : sub.members()) out = out.with(to_original[j]);
  return out;
}

Coalition Subgame::compress(Coalition original) const {
  Coalition out;
  for (int j = 0; j < static_cast<int>(to_original.size()); ++j) {
    if (original.contains(to_original[j])) out = out.with(j);
  }
  return out;
}

Subgame remove_players(const Game& g, Coalition removed) {
  require_in_range(g, removed, "remove_players");
  Coalition survivors = g.grand_coalition().minus(removed);
  if (survivors.is_empty())
    throw std::invalid_argument("remove_players: at least one player must survive");
  std::vector<int> to_original;
  for (int i : survivors.members()) to_original.push_back(i);

  const int m = static_cast<int>(to_original.size());
  std::vector<Rational> w(std::size_t{1} << m);
  Subgame out{Game::zero(m), std::move(to_original)};
  for (std::uint64_t sub = 0; sub < w.size(); ++sub)
    w[sub] = g.worth(out.embed(Coalition(sub)));
  out.game = Game(m, std::move(w));
  return out;
}

Coalition MergedGame::embed_survivors(Coalition survivors) const {
  Coalition out;
  for (int j : survivors.members()) out = out.with(to_original[j]);
  return out;
}

MergedGame merged_game(const Game& g, Coalition merged) {
  require_in_range(g, merged, "merged_game");
  if (merged.is_empty()) throw std::invalid_argument("merged_game needs a non-empty coalition");

  std::vector<int> to_original;
  for (int i : g.grand_coalition().minus(merged).members()) to_original.push_back(i);
  const int survivors = static_cast<int>(to_original.size());
  const int n_new = survivors + 1;  // ⊕ takes the last index

  MergedGame out{Game::zero(1), survivors, std::move(to_original)};
  std::vector<Rational> w(std::size_t{1} << n_new);
  for (std::uint64_t m = 0; m < w.size(); ++m) {
    Coalition t(m);
    Coalition original = out.embed_survivors(t.without(out.merged_player));
    if (t.contains(out.merged_player)) original = original | merged;
    w[m] = g.worth(original);
  }
  out.game = Game(n_new, std::move(w));
  return out;
}

bool is_null_player(const Game& g, int player) {
  require_player(g, player);
  Coalition rest = g.grand_coalition().without(player);
  bool ok = true;
  for_each_subset(rest, [&](Coalition s) {
    if (g.worth(s.with(player)) != g.worth(s)) ok = false;
  });
  return ok;
}

bool is_dummy_player(const Game& g, int player) {
  require_player(g, player);
  const Rational& solo = g.worth(Coalition::singleton(player));
  Coalition rest = g.grand_coalition().without(player);
  bool ok = true;
  for_each_subset(rest, [&](Coalition s) {
    if (g.worth(s.with(player)) != g.worth(s) + solo) ok = false;
  });
  return ok;
}

bool is_positive(const Game& g) {
  DividendVector d = dividends(g);
  return std::all_of(d.dividends().begin(), d.dividends().end(),
                     [](const Rational& x) { return x >= 0; });
}

bool is_monotone(const Game& g) {
  // Checking every cover relation S ⊂ S∪{i} suffices.
  for (std::uint64_t m = 0; m < g.table_size(); ++m) {
    for (int i = 0; i < g.player_count(); ++i) {
      if (Coalition(m).contains(i)) continue;
      if (g.worths()[m] > g.worth(Coalition(m).with(i))) return false;
    }
  }
  return true;
}

PlayerLabeling::PlayerLabeling(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("at least one player label is required");
  if (labels_.size() > 64) throw std::invalid_argument("at most 64 players are supported");
  for (const auto& label : labels_) {
    if (label.empty()) throw std::invalid_argument("player labels must be non-empty");
    if (label.find(',') != std::string::npos)
      throw std::invalid_argument("player label '" + label + "' contains a comma");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("duplicate player label '" + labels_[i] + "'");
}

PlayerLabeling PlayerLabeling::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  return PlayerLabeling(std::move(labels));
}

const std::string& PlayerLabeling::label(int player) const {
  if (player < 0 || player >= player_count())
    throw std::invalid_argument("player index out of range");
  return labels_[player];
}

int PlayerLabeling::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown player label '" + std::string(label) + "'");
}

Coalition PlayerLabeling::parse_coalition(std::string_view text) const {
  Coalition out;
  std::size_t pos = 0;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  if (trim(text).empty()) return out;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view piece = trim(text.substr(pos, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - pos));
    if (piece.empty()) throw std::invalid_argument("empty player label in coalition string");
    out = out.with(index_of(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string PlayerLabeling::format_coalition(Coalition s) const {
  std::string out;
  for (int i : s.members()) {
    if (!out.empty()) out += ",";
    out += label(i);
  }
  return out;
}

}  // namespace coalgame
