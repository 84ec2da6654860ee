#pragma once

#include <functional>
#include <optional>
#include <string>

#include "coalgame/group_values.hpp"

namespace coalgame {

/// A group value under test: a display name plus an evaluator that must
/// work for ANY player count — axiom checks evaluate the value on subgames
/// and on freshly built games. eval_table, when set, scores every non-empty
/// coalition of one game at once (the checks lean on it heavily); when
/// absent it falls back to an eval() loop.
struct GroupValueFn {
  std::string name;
  std::function<Rational(const Game&, Coalition)> eval;
  std::function<GroupValueTable(const Game&)> eval_table;

  Rational operator()(const Game& g, Coalition s) const { return eval(g, s); }
  GroupValueTable table(const Game& g) const;
};

/// Wraps one of the named kinds (weights derived from the formula at
/// whatever player count shows up).
GroupValueFn builtin_group_value(GroupValueKind kind);
/// Wraps caller-supplied weights. The weights must cover at least as many
/// players as any game the function will see.
GroupValueFn custom_group_value(std::string name, GroupValueKind custom_kind,
                                SemivalueWeights weights);
/// All eight named values, in canonical order.
std::vector<GroupValueFn> builtin_group_values();

enum class Axiom {
  Efficiency,             // Σ_i φ_{i}(v) = v(N)
  Linearity,              // additivity + rational homogeneity
  Symmetry,               // φ_{π(S)}(πv) = φ_S(v)
  NullPlayer,             // null i: φ_{S∪{i}} = φ_S, φ_{i} = 0
  DummyPlayer,            // dummy i: φ_{S∪{i}} = φ_S + v({i}), φ_{i} = v({i})
  DummifyingPlayer,       // dummy i: φ_{S∪{i}} = 0 for S ≠ ∅, φ_{i} = v({i})
  WeakMonotonicity,       // positive game ⇒ φ_S ≥ 0
  Monotonicity,           // monotone game ⇒ φ_S ≥ 0
  BalancedContributions,  // φ_S(v) - φ_S(v without T) = φ_T(v) - φ_T(v without S)
  Potential,              // f(v,S) equals the union value of the reconstruction u_φ
  PotentialConsistency,   // US(v,S) = P(v) - P(v without S); value-independent
  NullPlayerOut,          // deleting a null player changes no surviving value
  ShapleyConsistency,     // φ_{{i}} = Shapley_i for every player
  WeightIdentities,       // ordering-weight sum identities; game-independent
};

std::string_view to_string(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);
/// The axioms of the standard matrix, in display order.
std::span<const Axiom> standard_axioms();

enum class Verdict { Pass, VacuousPass, Fail };
std::string_view to_string(Verdict verdict);

/// The data needed to replay a violated equation: the games and indices at
/// the violation point plus both sides as computed. recheck_witness()
/// re-evaluates the equation from this alone.
struct Witness {
  std::string description;
  Game game;
  std::optional<Game> second_game;           // linearity
  std::optional<Rational> scalar;            // linearity
  std::optional<std::vector<int>> permutation;  // symmetry
  std::optional<Coalition> s;
  std::optional<Coalition> t;
  std::optional<int> player;
  Rational lhs;
  Rational rhs;
};

struct AxiomReport {
  Axiom axiom = Axiom::Efficiency;
  std::string value_name;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;  // set exactly when verdict == Fail
  std::string note;                // e.g. why a pass is vacuous

  bool failed() const { return verdict == Verdict::Fail; }
};

// ---------------------------------------------------------------------------
// Individual checks. Each quantifies over ALL applicable coalitions, pairs,
// or players of the given game (fine for n up to ~8) and stops at the first
// violation, which is recorded as a witness.
// ---------------------------------------------------------------------------

/// Σ over singletons of f = v(N).
AxiomReport check_efficiency(const GroupValueFn& f, const Game& g);
/// f(πv, π(S)) = f(v, S) for every S, for the given permutation.
AxiomReport check_symmetry(const GroupValueFn& f, const Game& g, std::span<const int> perm);
/// f(v+w, S) = f(v,S)+f(w,S) and f(c·v, S) = c·f(v,S) for every S.
AxiomReport check_linearity(const GroupValueFn& f, const Game& a, const Game& b,
                            const Rational& c);
/// For each null player i: f(v, S∪{i}) = f(v, S) for all S ∌ i, and
/// f(v, {i}) = 0. Vacuous when the game has no null player.
AxiomReport check_null_player(const GroupValueFn& f, const Game& g);
/// For each dummy player i: f(v, S∪{i}) = f(v, S) + v({i}) for all S ∌ i,
/// and f(v, {i}) = v({i}). Vacuous when the game has no dummy player.
AxiomReport check_dummy_player(const GroupValueFn& f, const Game& g);
/// For each dummy player i: f(v, {i}) = v({i}) and f(v, S∪{i}) = 0 for every
/// non-empty S ∌ i — a dummy contributes no synergy, so any larger group
/// containing one is worth nothing as a group. Vacuous without dummies.
AxiomReport check_dummifying_player(const GroupValueFn& f, const Game& g);
/// Positive game ⇒ every coalition's value ≥ 0. Vacuous when g is not
/// positive.
AxiomReport check_weak_monotonicity(const GroupValueFn& f, const Game& g);
/// Monotone game ⇒ every coalition's value ≥ 0. Vacuous when g is not
/// monotone.
AxiomReport check_monotonicity(const GroupValueFn& f, const Game& g);
/// f(v,S) - f(v|_{N∖T}, S∖T) = f(v,T) - f(v|_{N∖S}, T∖S) for one pair of
/// non-empty coalitions, with f(·, ∅) read as 0.
AxiomReport check_balanced_contributions(const GroupValueFn& f, const Game& g, Coalition s,
                                         Coalition t);
/// ... for every pair of non-empty coalitions.
AxiomReport check_balanced_contributions(const GroupValueFn& f, const Game& g);
/// Reconstruction: build u_φ with u_φ(S) = Σ_{i∈S} f((S, v|_S), {i}) from
/// singleton values on subgames, then require f(v, S) to equal the union
/// value of u_φ at S for every S. The executable form of "f admits a
/// potential".
AxiomReport check_potential(const GroupValueFn& f, const Game& g);
/// Union value vs. potential difference: US(v, S) = P(v) - P(v|_{N∖S}) for
/// every proper non-empty S, and US(v, N) = P(v). Value-independent.
AxiomReport check_potential_consistency(const Game& g);
/// Deleting a null player leaves every surviving coalition's value
/// unchanged. Vacuous when the game has no null player.
AxiomReport check_null_player_out(const GroupValueFn& f, const Game& g);
/// f(v, {i}) equals the Shapley value of i for every player.
AxiomReport check_shapley_consistency(const GroupValueFn& f, const Game& g);
/// Exhaustive ordering-weight identities on n players:
///   Σ_{T ⊇ Q} (|T|-1)!(n-|T|)!/n! = 1/|Q| for every non-empty Q, and
///   Σ_{Q∖S ⊆ T ⊆ N∖S} |T|!(n-|T|-|S|)!/(n-|S|+1)! = 1/(|Q|-|S∩Q|+1)
///   for every Q and non-empty S. O(4^n)-ish; use the sampled variant
///   beyond n ≈ 10.
AxiomReport check_weight_identities(int n);
AxiomReport check_weight_identities_sampled(int n, int pairs, std::uint64_t seed);

/// Replays a failed report's witness equation through f: returns true when
/// the recomputed sides equal the stored lhs/rhs exactly and still differ.
/// Pass/vacuous reports return true trivially.
bool recheck_witness(const AxiomReport& report, const GroupValueFn& f);

// ---------------------------------------------------------------------------
// Matrix driver.
// ---------------------------------------------------------------------------

/// One (value, axiom) cell aggregated over a corpus: Fail if any game
/// failed (keeping the first failure's report), VacuousPass if every game
/// was vacuous, Pass otherwise.
struct MatrixCell {
  Verdict verdict = Verdict::VacuousPass;
  std::optional<AxiomReport> first_failure;
  int pass_count = 0;
  int vacuous_count = 0;
  int fail_count = 0;
};

struct AxiomMatrix {
  std::vector<std::string> value_names;
  std::vector<Axiom> axioms;
  std::vector<std::vector<MatrixCell>> cells;  // [value][axiom]

  const MatrixCell& cell(std::size_t value_index, Axiom axiom) const;
  bool any_failure() const;
};

/// Runs every axiom on every value over the whole corpus. Linearity pairs
/// each game with a seeded partner of the same size; symmetry draws seeded
/// permutations (plus a fixed swap). Everything is deterministic in `seed`.
AxiomMatrix run_axiom_matrix(std::span<const Game> corpus, std::span<const GroupValueFn> values,
                             std::span<const Axiom> axioms, std::uint64_t seed);

}  // namespace coalgame
