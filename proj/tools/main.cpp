#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coalgame/approx.hpp"
#include "coalgame/axioms.hpp"
#include "coalgame/game_io.hpp"
#include "coalgame/generate.hpp"

namespace {

using namespace coalgame;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAxiomFailure = 2;

// ---------------------------------------------------------------------------
// Formatting helpers
// ---------------------------------------------------------------------------

/// "5/2 (2.5)" — or just "5" when the decimal rendering adds nothing.
std::string exact_and_decimal(const Rational& r) {
  std::string frac = to_fraction_string(r);
  std::string dec = to_decimal_string(r);
  if (dec == frac) return frac;
  return frac + " (" + dec + ")";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void print_aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows,
                   const std::vector<std::size_t>& gaps_before) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t gap : gaps_before)
      if (gap == r) os << "\n";
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) os << "  ";
      os << rows[r][i];
      if (i + 1 < rows[r].size())
        os << std::string(width[i] - rows[r][i].size(), ' ');
    }
    os << "\n";
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string piece = text.substr(pos, comma - pos);
    while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
    while (!piece.empty() && piece.back() == ' ') piece.pop_back();
    if (!piece.empty()) out.push_back(std::move(piece));
    pos = comma + 1;
  }
  return out;
}

PlayerLabeling labels_for(const PlayerLabeling* file_labels, int n) {
  if (file_labels && file_labels->player_count() == n) return *file_labels;
  return PlayerLabeling::numbered(n);
}

// ---------------------------------------------------------------------------
// Weight files: {"p": [[1], [p12, p22], ...]} — row t has entries p(1..t, t).
// ---------------------------------------------------------------------------

Rational weight_number(const ordered_json& value) {
  if (value.is_number_integer()) return make_rational(value.get<std::int64_t>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float())
    throw std::invalid_argument(
        "weights file: raw JSON floats are inexact; quote the value as a string");
  throw std::invalid_argument("weights file: expected an integer or a fraction string");
}

SemivalueWeights load_weights_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open weights file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ordered_json doc;
  try {
    doc = ordered_json::parse(buffer.str());
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(path + ": not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_array())
    throw std::invalid_argument(path + ": weights file must be {\"p\": [[...], ...]}");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : doc["p"]) {
    if (!row.is_array()) throw std::invalid_argument(path + ": \"p\" rows must be arrays");
    std::vector<Rational> parsed;
    for (const auto& entry : row) parsed.push_back(weight_number(entry));
    rows.push_back(std::move(parsed));
  }
  // Read the size before the move: argument evaluation order is unspecified.
  const int n = static_cast<int>(rows.size());
  return SemivalueWeights(n, std::move(rows));
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct ComputeOptions {
  std::string game_path;
  std::string value;
  std::string coalition;
  std::string weights_path;
  std::string format = "text";
};

int run_compute(const ComputeOptions& opt) {
  LoadedGame loaded = load_game_file(opt.game_path);
  const Game& g = loaded.game();
  Coalition s = loaded.labels.parse_coalition(opt.coalition);
  if (s.is_empty()) throw std::invalid_argument("--coalition must name at least one player");

  Rational result;
  if (opt.value == "shapley" || opt.value == "banzhaf") {
    if (s.size() != 1)
      throw std::invalid_argument(opt.value +
                                  " is a player value; give a single player "
                                  "(group readings: sum-shapley, union-shapley, ...)");
    if (!opt.weights_path.empty())
      throw std::invalid_argument("--weights applies only to the custom kinds");
    PlayerValues values = opt.value == "shapley" ? shapley(g) : banzhaf(g);
    result = values[s.lowest()];
  } else {
    std::optional<GroupValueKind> kind = parse_group_value_kind(opt.value);
    if (!kind) throw std::invalid_argument("unknown value name '" + opt.value + "'");
    const bool custom =
        *kind == GroupValueKind::CustomSemivalue || *kind == GroupValueKind::CustomSynergistic;
    if (custom && opt.weights_path.empty())
      throw std::invalid_argument("'" + opt.value + "' needs --weights FILE");
    if (!custom && !opt.weights_path.empty())
      throw std::invalid_argument("--weights applies only to the custom kinds");
    std::optional<SemivalueWeights> weights;
    if (custom) weights = load_weights_file(opt.weights_path);
    result = group_value(g, s, *kind, weights ? &*weights : nullptr);
  }

  std::string coalition_text = loaded.labels.format_coalition(s);
  if (opt.format == "text") {
    std::cout << opt.value << "(" << coalition_text << ") = " << exact_and_decimal(result)
              << "\n";
  } else if (opt.format == "csv") {
    std::cout << "value,coalition,exact,decimal\n"
              << csv_escape(opt.value) << "," << csv_escape(coalition_text) << ","
              << csv_escape(to_fraction_string(result)) << ","
              << csv_escape(to_decimal_string(result)) << "\n";
  } else {
    ordered_json doc;
    doc["format"] = 1;
    doc["value"] = opt.value;
    doc["coalition"] = coalition_text;
    doc["exact"] = to_fraction_string(result);
    doc["decimal"] = to_decimal_string(result);
    std::cout << doc.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct TableOptions {
  std::string game_path;
  std::string values = "all";
  std::string weights_path;
  std::string format = "text";
};

int run_table(const TableOptions& opt) {
  LoadedGame loaded = load_game_file(opt.game_path);
  const Game& g = loaded.game();

  std::vector<std::string> names;
  if (opt.values == "all" || opt.values.empty()) {
    for (GroupValueKind kind : named_group_value_kinds())
      names.push_back(std::string(to_string(kind)));
  } else {
    names = split_list(opt.values);
    if (names.empty()) throw std::invalid_argument("--value names no values");
  }

  std::optional<SemivalueWeights> weights;
  std::vector<GroupValueTable> columns;
  for (const std::string& name : names) {
    if (name == "shapley" || name == "banzhaf")
      throw std::invalid_argument(
          name + " is a player value; its group readings are sum-shapley, union-shapley, ...");
    std::optional<GroupValueKind> kind = parse_group_value_kind(name);
    if (!kind) throw std::invalid_argument("unknown value name '" + name + "'");
    const bool custom =
        *kind == GroupValueKind::CustomSemivalue || *kind == GroupValueKind::CustomSynergistic;
    if (custom && !weights) {
      if (opt.weights_path.empty())
        throw std::invalid_argument("'" + name + "' needs --weights FILE");
      weights = load_weights_file(opt.weights_path);
    }
    columns.push_back(full_table(g, *kind, custom ? &*weights : nullptr));
  }

  std::vector<Coalition> order;
  for (Coalition s : all_coalitions_by_size(g.player_count()))
    if (!s.is_empty()) order.push_back(s);

  if (opt.format == "text") {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> gaps;
    std::vector<std::string> header = {"coalition"};
    header.insert(header.end(), names.begin(), names.end());
    rows.push_back(std::move(header));
    int last_size = 1;
    for (Coalition s : order) {
      if (s.size() != last_size) {
        gaps.push_back(rows.size());
        last_size = s.size();
      }
      std::vector<std::string> row = {loaded.labels.format_coalition(s)};
      for (const GroupValueTable& column : columns)
        row.push_back(exact_and_decimal(column.value(s)));
      rows.push_back(std::move(row));
    }
    print_aligned(std::cout, rows, gaps);
  } else if (opt.format == "csv") {
    std::cout << "coalition";
    for (const std::string& name : names) std::cout << "," << csv_escape(name);
    std::cout << "\n";
    for (Coalition s : order) {
      std::cout << csv_escape(loaded.labels.format_coalition(s));
      for (const GroupValueTable& column : columns)
        std::cout << "," << csv_escape(to_fraction_string(column.value(s)));
      std::cout << "\n";
    }
  } else {
    ordered_json doc;
    doc["format"] = 1;
    ordered_json players = ordered_json::array();
    for (int i = 0; i < g.player_count(); ++i) players.push_back(loaded.labels.label(i));
    doc["players"] = std::move(players);
    doc["values"] = names;
    ordered_json out_rows = ordered_json::array();
    for (Coalition s : order) {
      ordered_json row;
      row["coalition"] = loaded.labels.format_coalition(s);
      row["size"] = s.size();
      ordered_json cells = ordered_json::array();
      for (const GroupValueTable& column : columns)
        cells.push_back(to_fraction_string(column.value(s)));
      row["cells"] = std::move(cells);
      out_rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(out_rows);
    std::cout << doc.dump(2) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// axioms
// ---------------------------------------------------------------------------

struct AxiomsOptions {
  std::string game_path;
  std::string values = "all";
  std::string axioms = "all";
  std::string weights_path;
  int corpus_size = 30;
  int max_players = 5;
  std::string family;
  std::uint64_t seed = 1;
  std::string format = "text";
};

ordered_json game_to_json(const Game& g, const PlayerLabeling& labels) {
  return ordered_json::parse(game_file_worths_json(g, labels));
}

/// Weight-identity witnesses park the player count in `player` next to a
/// placeholder game, so the label domain must cover whichever is larger.
int witness_label_count(const Witness& w) {
  return std::max(w.game.player_count(), w.player ? *w.player : 0);
}

ordered_json witness_to_json(const Witness& w, const PlayerLabeling* file_labels) {
  ordered_json doc;
  doc["description"] = w.description;
  PlayerLabeling game_labels = labels_for(file_labels, w.game.player_count());
  PlayerLabeling labels = labels_for(file_labels, witness_label_count(w));
  doc["game"] = game_to_json(w.game, game_labels);
  if (w.second_game) doc["second_game"] = game_to_json(*w.second_game, game_labels);
  if (w.scalar) doc["scalar"] = to_fraction_string(*w.scalar);
  if (w.permutation) doc["permutation"] = *w.permutation;
  if (w.s) doc["s"] = labels.format_coalition(*w.s);
  if (w.t) doc["t"] = labels.format_coalition(*w.t);
  if (w.player) {
    // weight-identity witnesses reuse this field for the player count
    if (*w.player < labels.player_count())
      doc["player"] = labels.label(*w.player);
    else
      doc["player"] = *w.player;
  }
  doc["lhs"] = to_fraction_string(w.lhs);
  doc["rhs"] = to_fraction_string(w.rhs);
  return doc;
}

std::string witness_game_text(const Game& g, const PlayerLabeling& labels) {
  DividendVector d = dividends(g);
  std::string out;
  for (Coalition s : all_coalitions_by_size(g.player_count())) {
    if (s.is_empty() || d.dividend(s) == 0) continue;
    if (!out.empty()) out += " ";
    out += "d(" + labels.format_coalition(s) + ")=" + to_fraction_string(d.dividend(s));
  }
  return out.empty() ? "the zero game" : out;
}

int run_axioms(const AxiomsOptions& opt) {
  std::vector<Game> corpus;
  std::optional<PlayerLabeling> file_labels;
  if (!opt.game_path.empty()) {
    LoadedGame loaded = load_game_file(opt.game_path);
    corpus.push_back(loaded.game());
    file_labels = loaded.labels;
  } else if (!opt.family.empty()) {
    std::optional<GameFamily> family = parse_game_family(opt.family);
    if (!family) throw std::invalid_argument("unknown family '" + opt.family + "'");
    corpus = generate_family_corpus(opt.corpus_size, opt.max_players, *family, opt.seed);
  } else {
    corpus = generate_corpus(opt.corpus_size, opt.max_players, opt.seed);
  }

  std::vector<GroupValueFn> values;
  if (opt.values == "all" || opt.values.empty()) {
    values = builtin_group_values();
  } else {
    std::optional<SemivalueWeights> weights;
    for (const std::string& name : split_list(opt.values)) {
      std::optional<GroupValueKind> kind = parse_group_value_kind(name);
      if (!kind) throw std::invalid_argument("unknown value name '" + name + "'");
      const bool custom = *kind == GroupValueKind::CustomSemivalue ||
                          *kind == GroupValueKind::CustomSynergistic;
      if (custom) {
        if (!weights) {
          if (opt.weights_path.empty())
            throw std::invalid_argument("'" + name + "' needs --weights FILE");
          weights = load_weights_file(opt.weights_path);
        }
        values.push_back(custom_group_value(name, *kind, *weights));
      } else {
        values.push_back(builtin_group_value(*kind));
      }
    }
    if (values.empty()) throw std::invalid_argument("--value names no values");
  }

  std::vector<Axiom> axioms;
  if (opt.axioms == "all" || opt.axioms.empty()) {
    axioms.assign(standard_axioms().begin(), standard_axioms().end());
  } else {
    for (const std::string& name : split_list(opt.axioms)) {
      std::optional<Axiom> axiom = parse_axiom(name);
      if (!axiom) throw std::invalid_argument("unknown axiom name '" + name + "'");
      axioms.push_back(*axiom);
    }
    if (axioms.empty()) throw std::invalid_argument("--axioms names no axioms");
  }

  AxiomMatrix matrix = run_axiom_matrix(corpus, values, axioms, opt.seed);
  const PlayerLabeling* labels_ptr = file_labels ? &*file_labels : nullptr;

  if (opt.format == "text") {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"value"};
    for (Axiom axiom : matrix.axioms) header.push_back(std::string(to_string(axiom)));
    rows.push_back(std::move(header));
    for (std::size_t vi = 0; vi < matrix.value_names.size(); ++vi) {
      std::vector<std::string> row = {matrix.value_names[vi]};
      for (std::size_t ai = 0; ai < matrix.axioms.size(); ++ai) {
        const MatrixCell& cell = matrix.cells[vi][ai];
        row.push_back(cell.verdict == Verdict::Fail
                          ? "FAIL"
                          : (cell.verdict == Verdict::Pass ? "pass" : "vacuous"));
      }
      rows.push_back(std::move(row));
    }
    print_aligned(std::cout, rows, {});
    std::cout << "\n"
              << corpus.size() << (corpus.size() == 1 ? " game" : " games")
              << "; FAIL cells carry a concrete counterexample:\n";
    bool any = false;
    for (std::size_t vi = 0; vi < matrix.value_names.size(); ++vi) {
      for (std::size_t ai = 0; ai < matrix.axioms.size(); ++ai) {
        const MatrixCell& cell = matrix.cells[vi][ai];
        if (!cell.first_failure || !cell.first_failure->witness) continue;
        any = true;
        const Witness& w = *cell.first_failure->witness;
        PlayerLabeling game_labels = labels_for(labels_ptr, w.game.player_count());
        PlayerLabeling labels = labels_for(labels_ptr, witness_label_count(w));
        std::cout << "  " << matrix.value_names[vi] << " / "
                  << to_string(matrix.axioms[ai]) << ": " << w.description << "\n"
                  << "    game: " << witness_game_text(w.game, game_labels);
        if (w.s) std::cout << "  S={" << labels.format_coalition(*w.s) << "}";
        if (w.t) std::cout << "  T={" << labels.format_coalition(*w.t) << "}";
        if (w.player && *w.player < labels.player_count())
          std::cout << "  player=" << labels.label(*w.player);
        else if (w.player)
          std::cout << "  n=" << *w.player;
        std::cout << "  lhs=" << to_fraction_string(w.lhs)
                  << "  rhs=" << to_fraction_string(w.rhs) << "\n";
      }
    }
    if (!any) std::cout << "  (none)\n";
  } else if (opt.format == "csv") {
    std::cout << "value,axiom,verdict,pass,vacuous,fail\n";
    for (std::size_t vi = 0; vi < matrix.value_names.size(); ++vi) {
      for (std::size_t ai = 0; ai < matrix.axioms.size(); ++ai) {
        const MatrixCell& cell = matrix.cells[vi][ai];
        std::cout << csv_escape(matrix.value_names[vi]) << ","
                  << to_string(matrix.axioms[ai]) << "," << to_string(cell.verdict) << ","
                  << cell.pass_count << "," << cell.vacuous_count << "," << cell.fail_count
                  << "\n";
      }
    }
  } else {
    ordered_json doc;
    doc["format"] = 1;
    doc["games"] = corpus.size();
    doc["seed"] = opt.seed;
    doc["values"] = matrix.value_names;
    ordered_json axiom_names = ordered_json::array();
    for (Axiom axiom : matrix.axioms) axiom_names.push_back(std::string(to_string(axiom)));
    doc["axioms"] = std::move(axiom_names);
    ordered_json cells = ordered_json::array();
    ordered_json failures = ordered_json::array();
    for (std::size_t vi = 0; vi < matrix.value_names.size(); ++vi) {
      ordered_json row = ordered_json::array();
      for (std::size_t ai = 0; ai < matrix.axioms.size(); ++ai) {
        const MatrixCell& cell = matrix.cells[vi][ai];
        ordered_json entry;
        entry["verdict"] = std::string(to_string(cell.verdict));
        entry["pass"] = cell.pass_count;
        entry["vacuous"] = cell.vacuous_count;
        entry["fail"] = cell.fail_count;
        row.push_back(std::move(entry));
        if (cell.first_failure && cell.first_failure->witness) {
          ordered_json failure;
          failure["value"] = matrix.value_names[vi];
          failure["axiom"] = std::string(to_string(matrix.axioms[ai]));
          failure["witness"] = witness_to_json(*cell.first_failure->witness, labels_ptr);
          failures.push_back(std::move(failure));
        }
      }
      cells.push_back(std::move(row));
    }
    doc["matrix"] = std::move(cells);
    doc["failures"] = std::move(failures);
    std::cout << doc.dump(2) << "\n";
  }
  return matrix.any_failure() ? kExitAxiomFailure : kExitOk;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenOptions {
  int n = 0;
  std::string family = "positive";
  std::uint64_t seed = 1;
};

int run_gen(const GenOptions& opt) {
  std::optional<GameFamily> family = parse_game_family(opt.family);
  if (!family) throw std::invalid_argument("unknown family '" + opt.family + "'");
  Game g = generate_game(opt.n, *family, opt.seed);
  PlayerLabeling labels = PlayerLabeling::numbered(opt.n);
  // Emit each family in its natural representation: positive games are
  // sparse in dividends, the unanimity mix in unanimity terms.
  switch (*family) {
    case GameFamily::Positive: std::cout << game_file_dividends_json(g, labels); break;
    case GameFamily::Uniform: std::cout << game_file_worths_json(g, labels); break;
    case GameFamily::UnanimityMix: std::cout << game_file_unanimity_json(g, labels); break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// approx
// ---------------------------------------------------------------------------

struct ApproxOptions {
  std::string game_path;
  std::string value;
  std::string coalition;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string format = "json";
};

int run_approx(const ApproxOptions& opt) {
  LoadedGame loaded = load_game_file(opt.game_path);
  GameOracle oracle;
  if (loaded.sparse) {
    std::vector<std::pair<Coalition, Rational>> terms;
    for (const DividendTerm& term : *loaded.sparse)
      terms.emplace_back(term.coalition, term.coefficient);
    oracle = oracle_from_sparse_dividends(loaded.player_count(), std::move(terms));
  } else {
    oracle = oracle_from_game(loaded.game());
  }

  Coalition s = loaded.labels.parse_coalition(opt.coalition);
  if (s.is_empty()) throw std::invalid_argument("--coalition must name at least one player");

  Estimate estimate;
  if (opt.value == "shapley") {
    if (s.size() != 1)
      throw std::invalid_argument("shapley is a player value; give a single player");
    estimate = approx_shapley(oracle, s.lowest(), opt.samples, opt.seed);
  } else if (opt.value == "union-shapley") {
    estimate = approx_union_shapley(oracle, s, opt.samples, opt.seed);
  } else {
    throw std::invalid_argument("approx supports --value shapley or union-shapley");
  }

  std::string coalition_text = loaded.labels.format_coalition(s);
  if (opt.format == "text") {
    std::cout << opt.value << "(" << coalition_text << ") ~ " << estimate.value
              << "  (standard error " << estimate.standard_error << ", " << estimate.samples
              << " samples, seed " << opt.seed << ", " << kGeneratorName << ")\n";
  } else if (opt.format == "json") {
    ordered_json doc;
    doc["format"] = 1;
    doc["value"] = opt.value;
    doc["coalition"] = coalition_text;
    doc["samples"] = estimate.samples;
    doc["seed"] = opt.seed;
    doc["generator"] = std::string(kGeneratorName);
    doc["estimate"] = estimate.value;
    doc["standard_error"] = estimate.standard_error;
    std::cout << doc.dump(2) << "\n";
  } else {
    throw std::invalid_argument("approx supports --format text or json");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coalgame — exact coalitional-game values, group values, and axiom checks"};
  app.require_subcommand(1);

  ComputeOptions compute_opt;
  CLI::App* compute = app.add_subcommand(
      "compute", "One value of one coalition, in exact arithmetic");
  compute->add_option("--game", compute_opt.game_path, "game file (JSON)")->required();
  compute
      ->add_option("--value", compute_opt.value,
                   "shapley | banzhaf | worth | dividend | sum-shapley | union-shapley | "
                   "intersection-shapley | merge-shapley | interaction-index | "
                   "scaled-intersection | semivalue:custom | synergistic:custom")
      ->required();
  compute->add_option("--coalition", compute_opt.coalition, "comma-separated player labels")
      ->required();
  compute->add_option("--weights", compute_opt.weights_path,
                      "weights file for the custom kinds");
  compute->add_option("--format", compute_opt.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  TableOptions table_opt;
  CLI::App* table = app.add_subcommand(
      "table", "All coalitions x selected values, grouped by coalition size");
  table->add_option("--game", table_opt.game_path, "game file (JSON)")->required();
  table->add_option("--value", table_opt.values,
                    "comma-separated value names, or 'all' (default)");
  table->add_option("--weights", table_opt.weights_path, "weights file for the custom kinds");
  table->add_option("--format", table_opt.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  AxiomsOptions axioms_opt;
  CLI::App* axioms = app.add_subcommand(
      "axioms", "Axiom matrix over a game file or a seeded corpus (exit 2 on any failure)");
  axioms->add_option("--game", axioms_opt.game_path,
                     "game file; omit to run on a generated corpus");
  axioms->add_option("--value", axioms_opt.values,
                     "comma-separated value names, or 'all' (default)");
  axioms->add_option("--axioms", axioms_opt.axioms,
                     "comma-separated axiom names, or 'all' (default: the standard matrix); "
                     "extras: efficiency, potential-consistency, weight-identities");
  axioms->add_option("--weights", axioms_opt.weights_path,
                     "weights file for the custom kinds");
  axioms->add_option("--samples", axioms_opt.corpus_size, "corpus size (default 30)")
      ->check(CLI::PositiveNumber);
  axioms->add_option("--n", axioms_opt.max_players, "corpus max players (default 5)")
      ->check(CLI::Range(2, 20));
  axioms->add_option("--family", axioms_opt.family,
                     "positive | uniform | unanimity-mix (default: mixed corpus)");
  axioms->add_option("--seed", axioms_opt.seed, "corpus + check seed (default 1)");
  axioms->add_option("--format", axioms_opt.format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Write a seeded random game file to stdout");
  gen->add_option("--n", gen_opt.n, "player count")->required()->check(CLI::Range(1, 20));
  gen->add_option("--family", gen_opt.family, "positive | uniform | unanimity-mix");
  gen->add_option("--seed", gen_opt.seed, "seed (default 1)");

  ApproxOptions approx_opt;
  CLI::App* approx = app.add_subcommand(
      "approx", "Monte Carlo estimate of shapley or union-shapley");
  approx->add_option("--game", approx_opt.game_path, "game file (JSON)")->required();
  approx->add_option("--value", approx_opt.value, "shapley | union-shapley")->required();
  approx->add_option("--coalition", approx_opt.coalition, "comma-separated player labels")
      ->required();
  approx->add_option("--samples", approx_opt.samples, "sample count (default 100000)")
      ->check(CLI::PositiveNumber);
  approx->add_option("--seed", approx_opt.seed, "seed (default 1)");
  approx->add_option("--format", approx_opt.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (compute->parsed()) return run_compute(compute_opt);
    if (table->parsed()) return run_table(table_opt);
    if (axioms->parsed()) return run_axioms(axioms_opt);
    if (gen->parsed()) return run_gen(gen_opt);
    if (approx->parsed()) return run_approx(approx_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
