#include "coalgame/axioms.hpp"

#include <array>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "coalgame/generate.hpp"
#include "coalgame/rng.hpp"

namespace coalgame {

GroupValueTable GroupValueFn::table(const Game& g) const {
  if (eval_table) return eval_table(g);
  GroupValueTable out;
  out.n = g.player_count();
  out.by_mask.resize(g.table_size());
  for (std::uint64_t m = 1; m < g.table_size(); ++m) out.by_mask[m] = eval(g, Coalition(m));
  return out;
}

GroupValueFn builtin_group_value(GroupValueKind kind) {
  if (kind == GroupValueKind::CustomSemivalue || kind == GroupValueKind::CustomSynergistic)
    throw std::invalid_argument("custom kinds need custom_group_value() with weights");
  return GroupValueFn{
      std::string(to_string(kind)),
      [kind](const Game& g, Coalition s) { return group_value(g, s, kind); },
      [kind](const Game& g) { return full_table(g, kind); }};
}

GroupValueFn custom_group_value(std::string name, GroupValueKind custom_kind,
                                SemivalueWeights weights) {
  if (custom_kind != GroupValueKind::CustomSemivalue &&
      custom_kind != GroupValueKind::CustomSynergistic)
    throw std::invalid_argument("custom_group_value expects one of the custom kinds");
  auto w = std::make_shared<SemivalueWeights>(std::move(weights));
  return GroupValueFn{
      std::move(name),
      [custom_kind, w](const Game& g, Coalition s) {
        return group_value(g, s, custom_kind, w.get());
      },
      [custom_kind, w](const Game& g) { return full_table(g, custom_kind, w.get()); }};
}

std::vector<GroupValueFn> builtin_group_values() {
  std::vector<GroupValueFn> out;
  for (GroupValueKind kind : named_group_value_kinds()) out.push_back(builtin_group_value(kind));
  return out;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Efficiency: return "efficiency";
    case Axiom::Linearity: return "linearity";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::NullPlayer: return "null-player";
    case Axiom::DummyPlayer: return "dummy-player";
    case Axiom::DummifyingPlayer: return "dummifying-player";
    case Axiom::WeakMonotonicity: return "weak-monotonicity";
    case Axiom::Monotonicity: return "monotonicity";
    case Axiom::BalancedContributions: return "balanced-contributions";
    case Axiom::Potential: return "potential";
    case Axiom::PotentialConsistency: return "potential-consistency";
    case Axiom::NullPlayerOut: return "null-player-out";
    case Axiom::ShapleyConsistency: return "shapley-consistency";
    case Axiom::WeightIdentities: return "weight-identities";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom axiom :
       {Axiom::Efficiency, Axiom::Linearity, Axiom::Symmetry, Axiom::NullPlayer,
        Axiom::DummyPlayer, Axiom::DummifyingPlayer, Axiom::WeakMonotonicity,
        Axiom::Monotonicity, Axiom::BalancedContributions, Axiom::Potential,
        Axiom::PotentialConsistency, Axiom::NullPlayerOut, Axiom::ShapleyConsistency,
        Axiom::WeightIdentities}) {
    if (to_string(axiom) == name) return axiom;
  }
  return std::nullopt;
}

std::span<const Axiom> standard_axioms() {
  static constexpr std::array<Axiom, 11> axioms = {
      Axiom::Linearity,      Axiom::Symmetry,        Axiom::NullPlayer,
      Axiom::DummyPlayer,    Axiom::DummifyingPlayer, Axiom::WeakMonotonicity,
      Axiom::Monotonicity,   Axiom::Potential,        Axiom::BalancedContributions,
      Axiom::NullPlayerOut,  Axiom::ShapleyConsistency,
  };
  return axioms;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::VacuousPass: return "vacuous-pass";
    case Verdict::Fail: return "fail";
  }
  return "?";
}

namespace {

AxiomReport base_report(Axiom axiom, const GroupValueFn& f) {
  AxiomReport r;
  r.axiom = axiom;
  r.value_name = f.name;
  return r;
}

void set_failure(AxiomReport& r, Witness w) {
  r.verdict = Verdict::Fail;
  r.witness = std::move(w);
}

void set_vacuous(AxiomReport& r, std::string note) {
  r.verdict = Verdict::VacuousPass;
  r.note = std::move(note);
}

std::vector<int> null_players(const Game& g) {
  std::vector<int> out;
  for (int i = 0; i < g.player_count(); ++i)
    if (is_null_player(g, i)) out.push_back(i);
  return out;
}

std::vector<int> dummy_players(const Game& g) {
  std::vector<int> out;
  for (int i = 0; i < g.player_count(); ++i)
    if (is_dummy_player(g, i)) out.push_back(i);
  return out;
}

/// φ_S(N,v) − φ_{S∖T}(N∖T, v), with the φ_∅ = 0 convention. Used by both
/// the balanced-contributions check and witness replay so the two cannot
/// drift apart.
Rational balanced_contribution_side(const GroupValueFn& f, const Game& g, Coalition s,
                                    Coalition t) {
  Rational first = f(g, s);
  Coalition rest = s.minus(t);
  if (rest.is_empty()) return first;
  Subgame sub = remove_players(g, t);
  return first - f(sub.game, sub.compress(rest));
}

/// The reconstruction game u_φ with u_φ(S) = Σ_{i∈S} f((S, v|_S), {i}).
Game reconstruction_game(const GroupValueFn& f, const Game& g) {
  const int n = g.player_count();
  std::vector<Rational> u(g.table_size());
  for (std::uint64_t m = 1; m < g.table_size(); ++m) {
    Subgame sub = remove_players(g, g.grand_coalition().minus(Coalition(m)));
    for (int j = 0; j < sub.game.player_count(); ++j)
      u[m] += f(sub.game, Coalition::singleton(j));
  }
  return Game(n, std::move(u));
}

/// Σ_{T ⊇ Q within N} (|T|-1)!(n-|T|)!/n! by literal superset enumeration.
Rational ordering_weight_sum(int n, Coalition q) {
  std::vector<long> count(n + 1, 0);
  for_each_superset_within(q, Coalition::full(n), [&](Coalition t) { ++count[t.size()]; });
  Rational sum;
  for (int t = q.size(); t <= n; ++t)
    if (count[t] > 0) sum += count[t] * shapley_weight(n, t);
  return sum;
}

/// Σ over Q∖S ⊆ T ⊆ N∖S of |T|!(n-|T|-|S|)!/(n-|S|+1)!.
Rational merge_weight_sum(int n, Coalition q, Coalition s) {
  std::vector<long> count(n + 1, 0);
  for_each_superset_within(q.minus(s), Coalition::full(n).minus(s),
                           [&](Coalition t) { ++count[t.size()]; });
  Rational sum;
  for (int t = q.minus(s).size(); t <= n - s.size(); ++t)
    if (count[t] > 0) sum += count[t] * merge_weight(n, s.size(), t);
  return sum;
}

Rational weight_identity_expected(Coalition q, Coalition s, bool merge_form) {
  if (merge_form) return Rational(1, q.minus(s).size() + 1);  // |Q|-|S∩Q|+1 = |Q∖S|+1
  return Rational(1, q.size());
}

}  // namespace

AxiomReport check_efficiency(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::Efficiency, f);
  Rational total;
  for (int i = 0; i < g.player_count(); ++i) total += f(g, Coalition::singleton(i));
  const Rational& grand = g.worth(g.grand_coalition());
  if (total != grand) {
    Witness w{.description = "singleton values sum to " + to_fraction_string(total) +
                             " but the grand coalition is worth " + to_fraction_string(grand),
              .game = g,
              .lhs = total,
              .rhs = grand};
    w.s = g.grand_coalition();
    set_failure(r, std::move(w));
  }
  return r;
}

AxiomReport check_symmetry(const GroupValueFn& f, const Game& g, std::span<const int> perm) {
  AxiomReport r = base_report(Axiom::Symmetry, f);
  Game permuted = permute_game(g, perm);
  GroupValueTable original = f.table(g);
  GroupValueTable relabeled = f.table(permuted);
  for (std::uint64_t m = 1; m < g.table_size(); ++m) {
    Coalition s(m);
    Coalition image = apply_permutation(s, perm);
    if (original.value(s) != relabeled.value(image)) {
      Witness w{.description = "value changes under relabeling",
                .game = g,
                .lhs = original.value(s),
                .rhs = relabeled.value(image)};
      w.permutation = std::vector<int>(perm.begin(), perm.end());
      w.s = s;
      set_failure(r, std::move(w));
      return r;
    }
  }
  return r;
}

AxiomReport check_linearity(const GroupValueFn& f, const Game& a, const Game& b,
                            const Rational& c) {
  AxiomReport r = base_report(Axiom::Linearity, f);
  if (a.player_count() != b.player_count())
    throw std::invalid_argument("linearity check needs games over the same players");
  Game sum = a + b;
  Game scaled = c * a;
  GroupValueTable ta = f.table(a);
  GroupValueTable tb = f.table(b);
  GroupValueTable tsum = f.table(sum);
  GroupValueTable tscaled = f.table(scaled);
  for (std::uint64_t m = 1; m < a.table_size(); ++m) {
    Coalition s(m);
    Rational expected = ta.value(s) + tb.value(s);
    if (tsum.value(s) != expected) {
      Witness w{.description = "additivity fails", .game = a, .lhs = tsum.value(s),
                .rhs = expected};
      w.second_game = b;
      w.s = s;
      set_failure(r, std::move(w));
      return r;
    }
  }
  for (std::uint64_t m = 1; m < a.table_size(); ++m) {
    Coalition s(m);
    Rational expected = c * ta.value(s);
    if (tscaled.value(s) != expected) {
      Witness w{.description = "homogeneity fails for factor " + to_fraction_string(c),
                .game = a, .lhs = tscaled.value(s), .rhs = expected};
      w.scalar = c;
      w.s = s;
      set_failure(r, std::move(w));
      return r;
    }
  }
  return r;
}

AxiomReport check_null_player(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::NullPlayer, f);
  std::vector<int> nulls = null_players(g);
  if (nulls.empty()) {
    set_vacuous(r, "the game has no null player");
    return r;
  }
  GroupValueTable t = f.table(g);
  for (int i : nulls) {
    Coalition solo = Coalition::singleton(i);
    if (t.value(solo) != 0) {
      Witness w{.description = "null player has non-zero singleton value", .game = g,
                .lhs = t.value(solo), .rhs = Rational(0)};
      w.s = solo;
      w.player = i;
      set_failure(r, std::move(w));
      return r;
    }
    Coalition rest = g.grand_coalition().without(i);
    for (std::uint64_t m = 1; m < g.table_size(); ++m) {
      Coalition s(m);
      if (!rest.contains_all(s)) continue;
      if (t.value(s.with(i)) != t.value(s)) {
        Witness w{.description = "adding a null player changes the group's value",
                  .game = g, .lhs = t.value(s.with(i)), .rhs = t.value(s)};
        w.s = s;
        w.player = i;
        set_failure(r, std::move(w));
        return r;
      }
    }
  }
  return r;
}

AxiomReport check_dummy_player(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::DummyPlayer, f);
  std::vector<int> dummies = dummy_players(g);
  if (dummies.empty()) {
    set_vacuous(r, "the game has no dummy player");
    return r;
  }
  GroupValueTable t = f.table(g);
  for (int i : dummies) {
    Coalition solo = Coalition::singleton(i);
    const Rational& solo_worth = g.worth(solo);
    if (t.value(solo) != solo_worth) {
      Witness w{.description = "dummy player's value differs from their singleton worth",
                .game = g, .lhs = t.value(solo), .rhs = solo_worth};
      w.s = solo;
      w.player = i;
      set_failure(r, std::move(w));
      return r;
    }
    Coalition rest = g.grand_coalition().without(i);
    for (std::uint64_t m = 1; m < g.table_size(); ++m) {
      Coalition s(m);
      if (!rest.contains_all(s)) continue;
      Rational expected = t.value(s) + solo_worth;
      if (t.value(s.with(i)) != expected) {
        Witness w{.description = "adding a dummy player does not add their singleton worth",
                  .game = g, .lhs = t.value(s.with(i)), .rhs = expected};
        w.s = s;
        w.player = i;
        set_failure(r, std::move(w));
        return r;
      }
    }
  }
  return r;
}

AxiomReport check_dummifying_player(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::DummifyingPlayer, f);
  std::vector<int> dummies = dummy_players(g);
  if (dummies.empty()) {
    set_vacuous(r, "the game has no dummy player");
    return r;
  }
  GroupValueTable t = f.table(g);
  for (int i : dummies) {
    Coalition solo = Coalition::singleton(i);
    const Rational& solo_worth = g.worth(solo);
    if (t.value(solo) != solo_worth) {
      Witness w{.description = "dummy player's value differs from their singleton worth",
                .game = g, .lhs = t.value(solo), .rhs = solo_worth};
      w.s = solo;
      w.player = i;
      set_failure(r, std::move(w));
      return r;
    }
    Coalition rest = g.grand_coalition().without(i);
    for (std::uint64_t m = 1; m < g.table_size(); ++m) {
      Coalition s(m);
      if (!rest.contains_all(s)) continue;
      if (t.value(s.with(i)) != 0) {
        Witness w{.description =
                      "a non-singleton group containing a dummy player has non-zero value",
                  .game = g, .lhs = t.value(s.with(i)), .rhs = Rational(0)};
        w.s = s;
        w.player = i;
        set_failure(r, std::move(w));
        return r;
      }
    }
  }
  return r;
}

namespace {

AxiomReport check_nonnegative(Axiom axiom, const GroupValueFn& f, const Game& g,
                              bool applicable, const char* vacuous_note) {
  AxiomReport r;
  r.axiom = axiom;
  r.value_name = f.name;
  if (!applicable) {
    set_vacuous(r, vacuous_note);
    return r;
  }
  GroupValueTable t = f.table(g);
  for (std::uint64_t m = 1; m < g.table_size(); ++m) {
    Coalition s(m);
    if (t.value(s) < 0) {
      Witness w{.description = "negative group value", .game = g, .lhs = t.value(s),
                .rhs = Rational(0)};
      w.s = s;
      set_failure(r, std::move(w));
      return r;
    }
  }
  return r;
}

}  // namespace

AxiomReport check_weak_monotonicity(const GroupValueFn& f, const Game& g) {
  return check_nonnegative(Axiom::WeakMonotonicity, f, g, is_positive(g),
                           "the game is not positive");
}

AxiomReport check_monotonicity(const GroupValueFn& f, const Game& g) {
  return check_nonnegative(Axiom::Monotonicity, f, g, is_monotone(g),
                           "the game is not monotone");
}

AxiomReport check_balanced_contributions(const GroupValueFn& f, const Game& g, Coalition s,
                                         Coalition t) {
  AxiomReport r = base_report(Axiom::BalancedContributions, f);
  if (s.is_empty() || t.is_empty())
    throw std::invalid_argument("balanced contributions needs non-empty coalitions");
  Rational lhs = balanced_contribution_side(f, g, s, t);
  Rational rhs = balanced_contribution_side(f, g, t, s);
  if (lhs != rhs) {
    Witness w{.description = "the two groups affect each other's values differently",
              .game = g, .lhs = lhs, .rhs = rhs};
    w.s = s;
    w.t = t;
    set_failure(r, std::move(w));
  }
  return r;
}

AxiomReport check_balanced_contributions(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::BalancedContributions, f);
  GroupValueTable full = f.table(g);
  // Cache one subgame (and its value table) per removed coalition — every
  // pair (S, T) reuses the tables for removed = T and removed = S.
  std::vector<std::optional<std::pair<Subgame, GroupValueTable>>> cache(g.table_size());
  auto shrunk_value = [&](Coalition removed, Coalition members) -> Rational {
    if (members.is_empty()) return Rational(0);
    auto& slot = cache[removed.mask()];
    if (!slot) {
      Subgame sub = remove_players(g, removed);
      GroupValueTable table = f.table(sub.game);
      slot.emplace(std::move(sub), std::move(table));
    }
    return slot->second.value(slot->first.compress(members));
  };
  for (std::uint64_t ms = 1; ms < g.table_size(); ++ms) {
    for (std::uint64_t mt = 1; mt < g.table_size(); ++mt) {
      Coalition s(ms), t(mt);
      Rational lhs = full.value(s) - shrunk_value(t, s.minus(t));
      Rational rhs = full.value(t) - shrunk_value(s, t.minus(s));
      if (lhs != rhs) {
        Witness w{.description = "the two groups affect each other's values differently",
                  .game = g, .lhs = lhs, .rhs = rhs};
        w.s = s;
        w.t = t;
        set_failure(r, std::move(w));
        return r;
      }
    }
  }
  return r;
}

AxiomReport check_potential(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::Potential, f);
  Game u = reconstruction_game(f, g);
  DividendVector du = dividends(u);
  GroupValueTable t = f.table(g);
  for (std::uint64_t m = 1; m < g.table_size(); ++m) {
    Coalition s(m);
    Rational expected = union_shapley(du, s);
    if (t.value(s) != expected) {
      Witness w{.description =
                    "value differs from the union value of its reconstruction game",
                .game = g, .lhs = t.value(s), .rhs = expected};
      w.s = s;
      set_failure(r, std::move(w));
      return r;
    }
  }
  return r;
}

AxiomReport check_potential_consistency(const Game& g) {
  AxiomReport r;
  r.axiom = Axiom::PotentialConsistency;
  r.value_name = "union-shapley";
  DividendVector d = dividends(g);
  Rational p = potential(d);
  for (std::uint64_t m = 1; m < g.table_size(); ++m) {
    Coalition s(m);
    Rational expected =
        s == g.grand_coalition() ? p : p - potential(remove_players(g, s).game);
    Rational actual = union_shapley(d, s);
    if (actual != expected) {
      Witness w{.description = "union value differs from the potential difference",
                .game = g, .lhs = actual, .rhs = expected};
      w.s = s;
      set_failure(r, std::move(w));
      return r;
    }
  }
  return r;
}

AxiomReport check_null_player_out(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::NullPlayerOut, f);
  std::vector<int> nulls = null_players(g);
  if (nulls.empty()) {
    set_vacuous(r, "the game has no null player");
    return r;
  }
  if (g.player_count() == 1) {
    set_vacuous(r, "removing the only player leaves nothing to compare");
    return r;
  }
  GroupValueTable t = f.table(g);
  for (int i : nulls) {
    Subgame sub = remove_players(g, Coalition::singleton(i));
    GroupValueTable ts = f.table(sub.game);
    Coalition rest = g.grand_coalition().without(i);
    for (std::uint64_t m = 1; m < g.table_size(); ++m) {
      Coalition s(m);
      if (!rest.contains_all(s)) continue;
      if (t.value(s) != ts.value(sub.compress(s))) {
        Witness w{.description = "removing a null player changed a surviving group's value",
                  .game = g, .lhs = t.value(s), .rhs = ts.value(sub.compress(s))};
        w.s = s;
        w.player = i;
        set_failure(r, std::move(w));
        return r;
      }
    }
  }
  return r;
}

AxiomReport check_shapley_consistency(const GroupValueFn& f, const Game& g) {
  AxiomReport r = base_report(Axiom::ShapleyConsistency, f);
  PlayerValues sv = shapley(g);
  for (int i = 0; i < g.player_count(); ++i) {
    Rational actual = f(g, Coalition::singleton(i));
    if (actual != sv[i]) {
      Witness w{.description = "singleton value differs from the Shapley value",
                .game = g, .lhs = actual, .rhs = sv[i]};
      w.s = Coalition::singleton(i);
      w.player = i;
      set_failure(r, std::move(w));
      return r;
    }
  }
  return r;
}

namespace {

AxiomReport weight_identities_report() {
  AxiomReport r;
  r.axiom = Axiom::WeightIdentities;
  r.value_name = "ordering-weights";
  return r;
}

bool weight_identity_case(AxiomReport& r, int n, Coalition q, std::optional<Coalition> s) {
  bool merge_form = s.has_value();
  Rational sum = merge_form ? merge_weight_sum(n, q, *s) : ordering_weight_sum(n, q);
  Rational expected = weight_identity_expected(q, merge_form ? *s : Coalition::empty(),
                                               merge_form);
  if (sum == expected) return true;
  Witness w{.description = merge_form ? "merge ordering-weight identity fails"
                                      : "ordering-weight identity fails",
            .game = Game::zero(1), .lhs = sum, .rhs = expected};
  w.s = q;
  w.t = s;
  w.player = n;  // records n; the placeholder game does not carry it
  set_failure(r, std::move(w));
  return false;
}

}  // namespace

AxiomReport check_weight_identities(int n) {
  AxiomReport r = weight_identities_report();
  if (n < 1 || n > 12)
    throw std::invalid_argument("exhaustive weight identities support n in [1, 12]");
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t q = 1; q < size; ++q) {
    if (!weight_identity_case(r, n, Coalition(q), std::nullopt)) return r;
  }
  for (std::uint64_t s = 1; s < size; ++s) {
    for (std::uint64_t q = 0; q < size; ++q) {
      if (!weight_identity_case(r, n, Coalition(q), Coalition(s))) return r;
    }
  }
  return r;
}

AxiomReport check_weight_identities_sampled(int n, int pairs, std::uint64_t seed) {
  AxiomReport r = weight_identities_report();
  if (n < 1 || n > 16)
    throw std::invalid_argument("sampled weight identities support n in [1, 16]");
  if (pairs < 1) throw std::invalid_argument("sample count must be positive");
  Xoshiro256 rng(seed);
  const std::uint64_t size = std::uint64_t{1} << n;
  for (int k = 0; k < pairs; ++k) {
    Coalition q(1 + rng.next_below(size - 1));
    if (!weight_identity_case(r, n, q, std::nullopt)) return r;
    Coalition s(1 + rng.next_below(size - 1));
    Coalition q2(rng.next_below(size));
    if (!weight_identity_case(r, n, q2, s)) return r;
  }
  return r;
}

bool recheck_witness(const AxiomReport& report, const GroupValueFn& f) {
  if (!report.failed()) return true;
  if (!report.witness) return false;
  const Witness& w = *report.witness;
  Rational lhs, rhs;
  switch (report.axiom) {
    case Axiom::Efficiency: {
      for (int i = 0; i < w.game.player_count(); ++i)
        lhs += f(w.game, Coalition::singleton(i));
      rhs = w.game.worth(w.game.grand_coalition());
      break;
    }
    case Axiom::Linearity: {
      if (!w.s) return false;
      if (w.second_game) {
        lhs = f(w.game + *w.second_game, *w.s);
        rhs = f(w.game, *w.s) + f(*w.second_game, *w.s);
      } else if (w.scalar) {
        lhs = f(*w.scalar * w.game, *w.s);
        rhs = *w.scalar * f(w.game, *w.s);
      } else {
        return false;
      }
      break;
    }
    case Axiom::Symmetry: {
      if (!w.s || !w.permutation) return false;
      lhs = f(w.game, *w.s);
      rhs = f(permute_game(w.game, *w.permutation),
              apply_permutation(*w.s, *w.permutation));
      break;
    }
    case Axiom::NullPlayer: {
      if (!w.s || !w.player) return false;
      if (*w.s == Coalition::singleton(*w.player)) {
        lhs = f(w.game, *w.s);
        rhs = 0;
      } else {
        lhs = f(w.game, w.s->with(*w.player));
        rhs = f(w.game, *w.s);
      }
      break;
    }
    case Axiom::DummyPlayer: {
      if (!w.s || !w.player) return false;
      const Rational& solo = w.game.worth(Coalition::singleton(*w.player));
      if (*w.s == Coalition::singleton(*w.player)) {
        lhs = f(w.game, *w.s);
        rhs = solo;
      } else {
        lhs = f(w.game, w.s->with(*w.player));
        rhs = f(w.game, *w.s) + solo;
      }
      break;
    }
    case Axiom::DummifyingPlayer: {
      if (!w.s || !w.player) return false;
      if (*w.s == Coalition::singleton(*w.player)) {
        lhs = f(w.game, *w.s);
        rhs = w.game.worth(*w.s);
      } else {
        lhs = f(w.game, w.s->with(*w.player));
        rhs = 0;
      }
      break;
    }
    case Axiom::WeakMonotonicity:
    case Axiom::Monotonicity: {
      if (!w.s) return false;
      lhs = f(w.game, *w.s);
      rhs = 0;
      break;
    }
    case Axiom::BalancedContributions: {
      if (!w.s || !w.t) return false;
      lhs = balanced_contribution_side(f, w.game, *w.s, *w.t);
      rhs = balanced_contribution_side(f, w.game, *w.t, *w.s);
      break;
    }
    case Axiom::Potential: {
      if (!w.s) return false;
      lhs = f(w.game, *w.s);
      rhs = union_shapley(reconstruction_game(f, w.game), *w.s);
      break;
    }
    case Axiom::PotentialConsistency: {
      if (!w.s) return false;
      lhs = union_shapley(w.game, *w.s);
      rhs = *w.s == w.game.grand_coalition()
                ? potential(w.game)
                : potential(w.game) - potential(remove_players(w.game, *w.s).game);
      break;
    }
    case Axiom::NullPlayerOut: {
      if (!w.s || !w.player) return false;
      Subgame sub = remove_players(w.game, Coalition::singleton(*w.player));
      lhs = f(w.game, *w.s);
      rhs = f(sub.game, sub.compress(*w.s));
      break;
    }
    case Axiom::ShapleyConsistency: {
      if (!w.s || !w.player) return false;
      lhs = f(w.game, *w.s);
      rhs = shapley(w.game)[*w.player];
      break;
    }
    case Axiom::WeightIdentities: {
      if (!w.s || !w.player) return false;
      const int n = *w.player;
      bool merge_form = w.t.has_value();
      lhs = merge_form ? merge_weight_sum(n, *w.s, *w.t) : ordering_weight_sum(n, *w.s);
      rhs = weight_identity_expected(*w.s, merge_form ? *w.t : Coalition::empty(), merge_form);
      break;
    }
  }
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

const MatrixCell& AxiomMatrix::cell(std::size_t value_index, Axiom axiom) const {
  for (std::size_t ai = 0; ai < axioms.size(); ++ai) {
    if (axioms[ai] == axiom) return cells.at(value_index).at(ai);
  }
  throw std::invalid_argument("axiom is not part of this matrix");
}

bool AxiomMatrix::any_failure() const {
  for (const auto& row : cells)
    for (const auto& cell : row)
      if (cell.verdict == Verdict::Fail) return true;
  return false;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
}

std::vector<AxiomReport> run_one_axiom(Axiom axiom, const GroupValueFn& f, const Game& g,
                                       std::uint64_t seed, std::size_t game_index) {
  switch (axiom) {
    case Axiom::Efficiency:
      return {check_efficiency(f, g)};
    case Axiom::Linearity: {
      Game partner =
          generate_game(g.player_count(), GameFamily::Uniform, mix_seed(seed, game_index));
      static const Rational scalars[3] = {Rational(2), Rational(-3), Rational(1, 2)};
      return {check_linearity(f, g, partner, scalars[game_index % 3])};
    }
    case Axiom::Symmetry: {
      std::vector<AxiomReport> out;
      const int n = g.player_count();
      std::vector<int> perm(n);
      if (n >= 2) {  // a fixed transposition of the outermost players
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm.front(), perm.back());
        out.push_back(check_symmetry(f, g, perm));
      }
      Xoshiro256 rng(mix_seed(seed, game_index));
      for (int k = 0; k < 2; ++k) {
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t j = perm.size(); j > 1; --j)
          std::swap(perm[j - 1], perm[rng.next_below(j)]);
        out.push_back(check_symmetry(f, g, perm));
      }
      return out;
    }
    case Axiom::NullPlayer:
      return {check_null_player(f, g)};
    case Axiom::DummyPlayer:
      return {check_dummy_player(f, g)};
    case Axiom::DummifyingPlayer:
      return {check_dummifying_player(f, g)};
    case Axiom::WeakMonotonicity:
      return {check_weak_monotonicity(f, g)};
    case Axiom::Monotonicity:
      return {check_monotonicity(f, g)};
    case Axiom::BalancedContributions:
      return {check_balanced_contributions(f, g)};
    case Axiom::Potential:
      return {check_potential(f, g)};
    case Axiom::PotentialConsistency: {
      AxiomReport r = check_potential_consistency(g);
      r.value_name = f.name;
      return {std::move(r)};
    }
    case Axiom::NullPlayerOut:
      return {check_null_player_out(f, g)};
    case Axiom::ShapleyConsistency:
      return {check_shapley_consistency(f, g)};
    case Axiom::WeightIdentities: {
      AxiomReport r = g.player_count() <= 8
                          ? check_weight_identities(g.player_count())
                          : check_weight_identities_sampled(g.player_count(), 200,
                                                            mix_seed(seed, game_index));
      r.value_name = f.name;
      return {std::move(r)};
    }
  }
  throw std::logic_error("unreachable axiom");
}

}  // namespace

AxiomMatrix run_axiom_matrix(std::span<const Game> corpus, std::span<const GroupValueFn> values,
                             std::span<const Axiom> axioms, std::uint64_t seed) {
  if (corpus.empty()) throw std::invalid_argument("axiom matrix needs at least one game");
  if (values.empty()) throw std::invalid_argument("axiom matrix needs at least one value");
  AxiomMatrix matrix;
  for (const GroupValueFn& f : values) matrix.value_names.push_back(f.name);
  matrix.axioms.assign(axioms.begin(), axioms.end());
  matrix.cells.resize(values.size(), std::vector<MatrixCell>(axioms.size()));
  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    for (std::size_t ai = 0; ai < axioms.size(); ++ai) {
      MatrixCell& cell = matrix.cells[vi][ai];
      for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        for (AxiomReport& report :
             run_one_axiom(axioms[ai], values[vi], corpus[gi], seed, gi)) {
          switch (report.verdict) {
            case Verdict::Pass: ++cell.pass_count; break;
            case Verdict::VacuousPass: ++cell.vacuous_count; break;
            case Verdict::Fail:
              ++cell.fail_count;
              if (!cell.first_failure) cell.first_failure = std::move(report);
              break;
          }
        }
      }
      if (cell.fail_count > 0)
        cell.verdict = Verdict::Fail;
      else if (cell.pass_count > 0)
        cell.verdict = Verdict::Pass;
      else
        cell.verdict = Verdict::VacuousPass;
    }
  }
  return matrix;
}

}  // namespace coalgame
