#include "coalgame/game_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace coalgame {

namespace {

using nlohmann::ordered_json;

Rational number_from_json(const ordered_json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned() && value.get<std::uint64_t>() > INT64_MAX)
      return parse_rational(value.dump());
    return make_rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  if (value.is_number_float())
    throw std::invalid_argument(
        where + ": raw JSON floats are inexact; quote the value as a string, e.g. \"" +
        value.dump() + "\"");
  throw std::invalid_argument(where + ": expected an integer or a fraction string, got " +
                              value.dump());
}

PlayerLabeling labels_from_json(const ordered_json& doc) {
  if (!doc.contains("players") || !doc["players"].is_array())
    throw std::invalid_argument("game file needs a \"players\" array");
  std::vector<std::string> labels;
  for (const auto& entry : doc["players"]) {
    if (!entry.is_string())
      throw std::invalid_argument("\"players\" entries must be strings");
    labels.push_back(entry.get<std::string>());
  }
  return PlayerLabeling(std::move(labels));
}

LoadedGame from_worths(const PlayerLabeling& labels, const ordered_json& body) {
  const int n = labels.player_count();
  if (n > Game::kMaxPlayers)
    throw std::invalid_argument("a \"worths\" table supports at most " +
                                std::to_string(Game::kMaxPlayers) + " players");
  if (!body.is_object()) throw std::invalid_argument("\"worths\" must be an object");
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<Rational> worths(size);
  std::vector<bool> seen(size, false);
  for (const auto& [key, value] : body.items()) {
    Coalition s = labels.parse_coalition(key);
    if (s.is_empty())
      throw std::invalid_argument("\"worths\" key \"" + key +
                                  "\" names the empty coalition, whose worth is fixed at 0");
    if (seen[s.mask()])
      throw std::invalid_argument("coalition \"" + key + "\" appears twice in \"worths\"");
    seen[s.mask()] = true;
    worths[s.mask()] = number_from_json(value, "worths[\"" + key + "\"]");
  }
  for (std::uint64_t m = 1; m < size; ++m) {
    if (!seen[m])
      throw std::invalid_argument("\"worths\" is missing coalition \"" +
                                  labels.format_coalition(Coalition(m)) + "\"");
  }
  return LoadedGame{labels, Game(n, std::move(worths)), std::nullopt};
}

LoadedGame from_terms(const PlayerLabeling& labels, std::vector<DividendTerm> terms) {
  const int n = labels.player_count();
  std::optional<Game> dense;
  if (n <= Game::kMaxPlayers) {
    std::vector<Rational> d(std::uint64_t{1} << n);
    for (const DividendTerm& term : terms) d[term.coalition.mask()] += term.coefficient;
    dense = game_from_dividends(DividendVector(n, std::move(d)));
  }
  return LoadedGame{labels, std::move(dense), std::move(terms)};
}

LoadedGame from_dividends(const PlayerLabeling& labels, const ordered_json& body) {
  if (!body.is_object()) throw std::invalid_argument("\"dividends\" must be an object");
  std::vector<DividendTerm> terms;
  std::unordered_map<std::uint64_t, std::string> seen;
  for (const auto& [key, value] : body.items()) {
    Coalition s = labels.parse_coalition(key);
    if (s.is_empty())
      throw std::invalid_argument("\"dividends\" key \"" + key +
                                  "\" names the empty coalition, whose dividend is fixed at 0");
    auto [it, inserted] = seen.emplace(s.mask(), key);
    if (!inserted)
      throw std::invalid_argument("coalitions \"" + it->second + "\" and \"" + key +
                                  "\" in \"dividends\" are the same coalition");
    terms.push_back({s, number_from_json(value, "dividends[\"" + key + "\"]")});
  }
  return from_terms(labels, std::move(terms));
}

LoadedGame from_unanimity(const PlayerLabeling& labels, const ordered_json& body) {
  if (!body.is_array()) throw std::invalid_argument("\"unanimity\" must be an array");
  std::vector<DividendTerm> terms;
  std::unordered_map<std::uint64_t, std::size_t> index_of;
  for (const auto& entry : body) {
    if (!entry.is_object() || !entry.contains("coalition") || !entry.contains("coefficient"))
      throw std::invalid_argument(
          "\"unanimity\" entries must be {\"coalition\": ..., \"coefficient\": ...} objects");
    for (const auto& [key, unused] : entry.items()) {
      (void)unused;
      if (key != "coalition" && key != "coefficient")
        throw std::invalid_argument("unknown key \"" + key + "\" in a \"unanimity\" entry");
    }
    if (!entry["coalition"].is_string())
      throw std::invalid_argument("\"coalition\" must be a string");
    const std::string spelled = entry["coalition"].get<std::string>();
    Coalition s = labels.parse_coalition(spelled);
    if (s.is_empty())
      throw std::invalid_argument("unanimity coalition \"" + spelled + "\" is empty");
    Rational c = number_from_json(entry["coefficient"], "unanimity[\"" + spelled + "\"]");
    auto [it, inserted] = index_of.emplace(s.mask(), terms.size());
    if (inserted)
      terms.push_back({s, std::move(c)});
    else
      terms[it->second].coefficient += c;  // repeated coalitions accumulate
  }
  return from_terms(labels, std::move(terms));
}

}  // namespace

const Game& LoadedGame::game() const {
  if (!dense)
    throw std::invalid_argument(
        "this game has too many players for a dense table; only sampling estimators "
        "can handle it");
  return *dense;
}

LoadedGame parse_game_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("game file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("game file must be a JSON object");

  static const char* kBodies[] = {"worths", "dividends", "unanimity"};
  for (const auto& [key, unused] : doc.items()) {
    (void)unused;
    if (key == "format" || key == "players" || key == kBodies[0] || key == kBodies[1] ||
        key == kBodies[2])
      continue;
    throw std::invalid_argument("unknown game-file key \"" + key + "\"");
  }
  if (doc.contains("format") &&
      (!doc["format"].is_number_integer() || doc["format"].get<std::int64_t>() != 1))
    throw std::invalid_argument("unsupported game-file format version");

  PlayerLabeling labels = labels_from_json(doc);
  int bodies = 0;
  for (const char* name : kBodies) bodies += doc.contains(name) ? 1 : 0;
  if (bodies != 1)
    throw std::invalid_argument(
        "game file needs exactly one of \"worths\", \"dividends\", \"unanimity\"");

  if (doc.contains("worths")) return from_worths(labels, doc["worths"]);
  if (doc.contains("dividends")) return from_dividends(labels, doc["dividends"]);
  return from_unanimity(labels, doc["unanimity"]);
}

LoadedGame load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open game file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_game_json(buffer.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

namespace {

ordered_json number_to_json(const Rational& value) {
  if (value.get_den() == 1 && value.get_num().fits_slong_p())
    return ordered_json(static_cast<std::int64_t>(value.get_num().get_si()));
  return ordered_json(to_fraction_string(value));
}

ordered_json players_to_json(const Game& g, const PlayerLabeling& labels) {
  if (labels.player_count() != g.player_count())
    throw std::invalid_argument("labeling does not match the game's player count");
  ordered_json players = ordered_json::array();
  for (int i = 0; i < g.player_count(); ++i) players.push_back(labels.label(i));
  return players;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string game_file_worths_json(const Game& g, const PlayerLabeling& labels) {
  ordered_json doc;
  doc["format"] = 1;
  doc["players"] = players_to_json(g, labels);
  ordered_json body = ordered_json::object();
  for (Coalition s : all_coalitions_by_size(g.player_count())) {
    if (s.is_empty()) continue;
    body[labels.format_coalition(s)] = number_to_json(g.worth(s));
  }
  doc["worths"] = std::move(body);
  return dump(doc);
}

std::string game_file_dividends_json(const Game& g, const PlayerLabeling& labels) {
  ordered_json doc;
  doc["format"] = 1;
  doc["players"] = players_to_json(g, labels);
  DividendVector d = dividends(g);
  ordered_json body = ordered_json::object();
  for (Coalition s : all_coalitions_by_size(g.player_count())) {
    if (s.is_empty() || d.dividend(s) == 0) continue;
    body[labels.format_coalition(s)] = number_to_json(d.dividend(s));
  }
  doc["dividends"] = std::move(body);
  return dump(doc);
}

std::string game_file_unanimity_json(const Game& g, const PlayerLabeling& labels) {
  ordered_json doc;
  doc["format"] = 1;
  doc["players"] = players_to_json(g, labels);
  DividendVector d = dividends(g);
  ordered_json body = ordered_json::array();
  for (Coalition s : all_coalitions_by_size(g.player_count())) {
    if (s.is_empty() || d.dividend(s) == 0) continue;
    ordered_json term;
    term["coalition"] = labels.format_coalition(s);
    term["coefficient"] = number_to_json(d.dividend(s));
    body.push_back(std::move(term));
  }
  doc["unanimity"] = std::move(body);
  return dump(doc);
}

}  // namespace coalgame
