#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "coalgame/player_values.hpp"

namespace coalgame {

/// Triangular weight collection p(q, t) for 1 ≤ q ≤ t ≤ n. Group semivalues
/// weight a dividend Δ(T) by p(|S∩T|, |T|); synergistic semivalues use the
/// diagonal slice p(|S|, |T|). Weights must be non-negative with p(1,1) = 1;
/// both are enforced at construction so evaluation never re-validates.
class SemivalueWeights {
 public:
  /// rows[t-1] holds p(1..t, t), so row t-1 has exactly t entries.
  SemivalueWeights(int n, std::vector<std::vector<Rational>> rows);

  static SemivalueWeights from_formula(int n, const std::function<Rational(int q, int t)>& p);

  /// p(q,t) = 1/t — yields the union value / intersection value pair.
  static SemivalueWeights union_shapley(int n);
  /// p(q,t) = 1/(t-q+1) — yields the merge value / interaction index pair.
  static SemivalueWeights merge_shapley(int n);
  /// p(q,t) = q/t — yields the Shapley-sum / scaled-intersection pair.
  static SemivalueWeights shapley_sum(int n);
  /// p(q,t) = [q == t] — yields the worth / dividend pair.
  static SemivalueWeights coalition_worth(int n);

  int player_count() const { return static_cast<int>(rows_.size()); }
  const Rational& p(int q, int t) const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// t!(n-t-s)!/(n-s+1)! — the ordering weight behind the merge value: the
/// merged bloc joins a uniformly random order of N∖S ∪ {⊕} after exactly
/// the members of T.
Rational merge_weight(int n, int s, int t);

// ---------------------------------------------------------------------------
// The eight named group values. Dividend forms are the default computation
// path; each takes the transform output directly so a caller scoring many
// coalitions pays for the transform once. The Game overloads are one-shot
// conveniences. s must be non-empty and within the player set.
// ---------------------------------------------------------------------------

/// US(S) = Σ_{T∩S≠∅} Δ(T)/|T| — what S's members jointly add, double counting
/// removed: the value of the union of their contributions.
Rational union_shapley(const DividendVector& d, Coalition s);
/// IS(S) = Σ_{T⊇S} Δ(T)/|T| — the value of the overlap: mass S's members
/// can only claim together.
Rational intersection_shapley(const DividendVector& d, Coalition s);
/// MS(S) = Σ_{T∩S≠∅} Δ(T)/(|T|-|S∩T|+1) — the Shapley value S would get
/// acting as one merged player.
Rational merge_shapley(const DividendVector& d, Coalition s);
/// II(S) = Σ_{T⊇S} Δ(T)/(|T|-|S|+1) — signed synergy among S's members.
Rational interaction_index(const DividendVector& d, Coalition s);
/// ΣSV(S) = Σ_{i∈S} φ_i = Σ_{T∩S≠∅} (|S∩T|/|T|)·Δ(T).
Rational sum_of_shapley(const DividendVector& d, Coalition s);
/// Δ(S) itself, as a group value.
Rational coalition_dividend(const DividendVector& d, Coalition s);
/// v(S) itself, as a group value.
Rational coalition_worth(const Game& g, Coalition s);
/// |S| · IS(S).
Rational scaled_intersection_shapley(const DividendVector& d, Coalition s);

Rational union_shapley(const Game& g, Coalition s);
Rational intersection_shapley(const Game& g, Coalition s);
Rational merge_shapley(const Game& g, Coalition s);
Rational interaction_index(const Game& g, Coalition s);
Rational sum_of_shapley(const Game& g, Coalition s);
Rational coalition_dividend(const Game& g, Coalition s);
Rational scaled_intersection_shapley(const Game& g, Coalition s);

/// Group semivalue: Σ_{T∩S≠∅} p(|S∩T|, |T|) · Δ(T).
Rational group_semivalue(const DividendVector& d, Coalition s, const SemivalueWeights& w);
/// Synergistic semivalue: Σ_{T⊇S} p(|S|, |T|) · Δ(T).
Rational synergistic_semivalue(const DividendVector& d, Coalition s, const SemivalueWeights& w);
Rational group_semivalue(const Game& g, Coalition s, const SemivalueWeights& w);
Rational synergistic_semivalue(const Game& g, Coalition s, const SemivalueWeights& w);

/// US(S) = Σ over non-empty T ⊆ S of (-1)^{|T|-1} · IS(T): the union value
/// recovered from intersection values by inclusion-exclusion.
Rational union_via_inclusion_exclusion(const DividendVector& d, Coalition s);

// ---------------------------------------------------------------------------
// Worth-form oracles: independent computations straight from the worth
// table, O(2^n · 2^|S|)-ish but transform-free. Must agree exactly with the
// dividend forms; the test suite and acceptance gate hold them to that.
// ---------------------------------------------------------------------------

/// Σ_T (|T|-1)!(n-|T|)!/n! · (v(T) - v(T∖S)).
Rational union_shapley_worth_form(const Game& g, Coalition s);
/// Σ_{T⊇S} (|T|-1)!(n-|T|)!/n! · Σ_{R⊆S} (-1)^{|R|} v(T∖R).
Rational intersection_shapley_worth_form(const Game& g, Coalition s);
/// Σ_{T⊆N∖S} |T|!(n-|T|-|S|)!/(n-|S|+1)! · (v(T∪S) - v(T)).
Rational merge_shapley_worth_form(const Game& g, Coalition s);
/// Shapley value of the merged player ⊕ in merged_game(g, s).
Rational merge_shapley_via_merge(const Game& g, Coalition s);
/// Σ_{T⊆N∖S} |T|!(n-|T|-|S|)!/(n-|S|+1)! · Σ_{R⊆S} (-1)^{|S|-|R|} v(T∪R).
Rational interaction_index_worth_form(const Game& g, Coalition s);
/// Adds up the members' Shapley values the pedestrian way.
Rational sum_of_shapley_via_players(const Game& g, Coalition s);

// ---------------------------------------------------------------------------
// Uniform dispatch and full tables.
// ---------------------------------------------------------------------------

enum class GroupValueKind {
  Worth,
  Dividend,
  ShapleySum,
  UnionShapley,
  IntersectionShapley,
  MergeShapley,
  InteractionIndex,
  ScaledIntersection,
  CustomSemivalue,     // group semivalue with caller-supplied weights
  CustomSynergistic,   // synergistic semivalue with caller-supplied weights
};

/// CLI-facing names: "worth", "dividend", "sum-shapley", "union-shapley",
/// "intersection-shapley", "merge-shapley", "interaction-index",
/// "scaled-intersection", "semivalue:custom", "synergistic:custom".
std::string_view to_string(GroupValueKind kind);
std::optional<GroupValueKind> parse_group_value_kind(std::string_view name);
/// The eight named kinds, in canonical table order.
std::span<const GroupValueKind> named_group_value_kinds();

/// Single-point dispatch. Custom kinds require weights (with
/// weights->player_count() >= the game's); named kinds ignore them.
Rational group_value(const Game& g, Coalition s, GroupValueKind kind,
                     const SemivalueWeights* weights = nullptr);
/// Same, with the transform already done (d must be dividends(g); g is
/// consulted only for Worth).
Rational group_value(const Game& g, const DividendVector& d, Coalition s,
                     GroupValueKind kind, const SemivalueWeights* weights = nullptr);

/// One value for every non-empty coalition, indexed by mask (entry 0 unused).
struct GroupValueTable {
  int n = 0;
  std::vector<Rational> by_mask;

  const Rational& value(Coalition s) const;
};

/// Evaluates the selected value on every non-empty coalition; the dividend
/// transform runs once and is shared across all 2^n - 1 queries.
GroupValueTable full_table(const Game& g, GroupValueKind kind,
                           const SemivalueWeights* weights = nullptr);

}  // namespace coalgame
