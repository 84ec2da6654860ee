#include "coalgame/group_values.hpp"

#include <array>
#include <stdexcept>

namespace coalgame {

namespace {

void require_group(const Coalition s, int n, const char* what) {
  if (s.is_empty())
    throw std::invalid_argument(std::string(what) + ": coalition must be non-empty");
  if (!Coalition::full(n).contains_all(s))
    throw std::invalid_argument(std::string(what) + ": coalition is not within the player set");
}

}  // namespace

SemivalueWeights::SemivalueWeights(int n, std::vector<std::vector<Rational>> rows)
    : rows_(std::move(rows)) {
  if (n < 1 || n > Game::kMaxPlayers)
    throw std::invalid_argument("player count must be in [1, " +
                                std::to_string(Game::kMaxPlayers) + "]");
  if (rows_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("semivalue weights need one row per coalition size 1..n");
  for (int t = 1; t <= n; ++t) {
    if (rows_[t - 1].size() != static_cast<std::size_t>(t))
      throw std::invalid_argument("weight row for size " + std::to_string(t) +
                                  " must have exactly " + std::to_string(t) + " entries");
    for (Rational& w : rows_[t - 1]) {
      w.canonicalize();  // GMP comparisons assume canonical form
      if (w < 0) throw std::invalid_argument("semivalue weights must be non-negative");
    }
  }
  if (rows_[0][0] != 1)
    throw std::invalid_argument("semivalue weights must have p(1,1) = 1");
}

SemivalueWeights SemivalueWeights::from_formula(
    int n, const std::function<Rational(int q, int t)>& p) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n);
  for (int t = 1; t <= n; ++t) {
    std::vector<Rational> row;
    row.reserve(t);
    for (int q = 1; q <= t; ++q) row.push_back(p(q, t));
    rows.push_back(std::move(row));
  }
  return SemivalueWeights(n, std::move(rows));
}

SemivalueWeights SemivalueWeights::union_shapley(int n) {
  return from_formula(n, [](int, int t) { return Rational(1, t); });
}

SemivalueWeights SemivalueWeights::merge_shapley(int n) {
  return from_formula(n, [](int q, int t) { return Rational(1, t - q + 1); });
}

SemivalueWeights SemivalueWeights::shapley_sum(int n) {
  return from_formula(n, [](int q, int t) { return make_rational(q, t); });
}

SemivalueWeights SemivalueWeights::coalition_worth(int n) {
  return from_formula(n, [](int q, int t) { return Rational(q == t ? 1 : 0); });
}

const Rational& SemivalueWeights::p(int q, int t) const {
  if (t < 1 || t > player_count() || q < 1 || q > t)
    throw std::invalid_argument("semivalue weight index out of range (need 1 <= q <= t <= n)");
  return rows_[t - 1][q - 1];
}

Rational merge_weight(int n, int s, int t) {
  if (s < 1 || s > n || t < 0 || t > n - s)
    throw std::invalid_argument("merge_weight needs 1 <= s <= n and 0 <= t <= n-s");
  Rational w(factorial(t) * factorial(n - t - s), factorial(n - s + 1));
  w.canonicalize();  // raw num/den construction does not reduce
  return w;
}

// --- dividend forms ---------------------------------------------------------

Rational union_shapley(const DividendVector& d, Coalition s) {
  require_group(s, d.player_count(), "union_shapley");
  std::vector<Rational> by_size(d.player_count() + 1);
  for (std::uint64_t m = 1; m < d.dividends().size(); ++m) {
    Coalition t(m);
    if (t.intersects(s)) by_size[t.size()] += d.dividends()[m];
  }
  Rational out;
  for (int t = 1; t <= d.player_count(); ++t) out += by_size[t] / t;
  return out;
}

Rational intersection_shapley(const DividendVector& d, Coalition s) {
  require_group(s, d.player_count(), "intersection_shapley");
  std::vector<Rational> by_size(d.player_count() + 1);
  for_each_superset_within(s, d.grand_coalition(), [&](Coalition t) {
    by_size[t.size()] += d.dividend(t);
  });
  Rational out;
  for (int t = s.size(); t <= d.player_count(); ++t) out += by_size[t] / t;
  return out;
}

Rational merge_shapley(const DividendVector& d, Coalition s) {
  require_group(s, d.player_count(), "merge_shapley");
  // The weight 1/(|T|-|S∩T|+1) depends only on how many of T's members lie
  // outside S, so bucket by that count.
  std::vector<Rational> by_outside(d.player_count() + 1);
  for (std::uint64_t m = 1; m < d.dividends().size(); ++m) {
    Coalition t(m);
    if (t.intersects(s)) by_outside[t.minus(s).size()] += d.dividends()[m];
  }
  Rational out;
  for (int r = 0; r <= d.player_count(); ++r) out += by_outside[r] / (r + 1);
  return out;
}

Rational interaction_index(const DividendVector& d, Coalition s) {
  require_group(s, d.player_count(), "interaction_index");
  std::vector<Rational> by_size(d.player_count() + 1);
  for_each_superset_within(s, d.grand_coalition(), [&](Coalition t) {
    by_size[t.size()] += d.dividend(t);
  });
  Rational out;
  for (int t = s.size(); t <= d.player_count(); ++t) out += by_size[t] / (t - s.size() + 1);
  return out;
}

Rational sum_of_shapley(const DividendVector& d, Coalition s) {
  require_group(s, d.player_count(), "sum_of_shapley");
  std::vector<Rational> by_size(d.player_count() + 1);
  for (std::uint64_t m = 1; m < d.dividends().size(); ++m) {
    Coalition t(m);
    int q = (t & s).size();
    if (q > 0) by_size[t.size()] += q * d.dividends()[m];
  }
  Rational out;
  for (int t = 1; t <= d.player_count(); ++t) out += by_size[t] / t;
  return out;
}

Rational coalition_dividend(const DividendVector& d, Coalition s) {
  require_group(s, d.player_count(), "coalition_dividend");
  return d.dividend(s);
}

Rational coalition_worth(const Game& g, Coalition s) {
  require_group(s, g.player_count(), "coalition_worth");
  return g.worth(s);
}

Rational scaled_intersection_shapley(const DividendVector& d, Coalition s) {
  return s.size() * intersection_shapley(d, s);
}

Rational union_shapley(const Game& g, Coalition s) { return union_shapley(dividends(g), s); }
Rational intersection_shapley(const Game& g, Coalition s) {
  return intersection_shapley(dividends(g), s);
}
Rational merge_shapley(const Game& g, Coalition s) { return merge_shapley(dividends(g), s); }
Rational interaction_index(const Game& g, Coalition s) {
  return interaction_index(dividends(g), s);
}
Rational sum_of_shapley(const Game& g, Coalition s) { return sum_of_shapley(dividends(g), s); }
Rational coalition_dividend(const Game& g, Coalition s) {
  return coalition_dividend(dividends(g), s);
}
Rational scaled_intersection_shapley(const Game& g, Coalition s) {
  return scaled_intersection_shapley(dividends(g), s);
}

Rational group_semivalue(const DividendVector& d, Coalition s, const SemivalueWeights& w) {
  require_group(s, d.player_count(), "group_semivalue");
  if (w.player_count() < d.player_count())
    throw std::invalid_argument("semivalue weights cover fewer players than the game");
  // Bucket Δ-mass by (|S∩T|, |T|) so each weight multiplies one sum.
  const int n = d.player_count();
  std::vector<std::vector<Rational>> buckets(n + 1, std::vector<Rational>(n + 1));
  for (std::uint64_t m = 1; m < d.dividends().size(); ++m) {
    Coalition t(m);
    int q = (t & s).size();
    if (q > 0) buckets[q][t.size()] += d.dividends()[m];
  }
  Rational out;
  for (int q = 1; q <= n; ++q)
    for (int t = q; t <= n; ++t)
      if (buckets[q][t] != 0) out += w.p(q, t) * buckets[q][t];
  return out;
}

Rational synergistic_semivalue(const DividendVector& d, Coalition s, const SemivalueWeights& w) {
  require_group(s, d.player_count(), "synergistic_semivalue");
  if (w.player_count() < d.player_count())
    throw std::invalid_argument("semivalue weights cover fewer players than the game");
  std::vector<Rational> by_size(d.player_count() + 1);
  for_each_superset_within(s, d.grand_coalition(), [&](Coalition t) {
    by_size[t.size()] += d.dividend(t);
  });
  Rational out;
  for (int t = s.size(); t <= d.player_count(); ++t)
    if (by_size[t] != 0) out += w.p(s.size(), t) * by_size[t];
  return out;
}

Rational group_semivalue(const Game& g, Coalition s, const SemivalueWeights& w) {
  return group_semivalue(dividends(g), s, w);
}
Rational synergistic_semivalue(const Game& g, Coalition s, const SemivalueWeights& w) {
  return synergistic_semivalue(dividends(g), s, w);
}

Rational union_via_inclusion_exclusion(const DividendVector& d, Coalition s) {
  require_group(s, d.player_count(), "union_via_inclusion_exclusion");
  Rational out;
  for_each_subset(s, [&](Coalition t) {
    if (t.is_empty()) return;
    Rational term = intersection_shapley(d, t);
    if ((t.size() - 1) % 2 == 0)
      out += term;
    else
      out -= term;
  });
  return out;
}

// --- worth-form oracles ------------------------------------------------------

Rational union_shapley_worth_form(const Game& g, Coalition s) {
  require_group(s, g.player_count(), "union_shapley_worth_form");
  const int n = g.player_count();
  std::vector<Rational> by_size(n + 1);
  for (std::uint64_t m = 1; m < g.table_size(); ++m) {
    Coalition t(m);
    if (!t.intersects(s)) continue;  // v(T) - v(T∖S) vanishes
    by_size[t.size()] += g.worths()[m] - g.worth(t.minus(s));
  }
  Rational out;
  for (int t = 1; t <= n; ++t) out += shapley_weight(n, t) * by_size[t];
  return out;
}

Rational intersection_shapley_worth_form(const Game& g, Coalition s) {
  require_group(s, g.player_count(), "intersection_shapley_worth_form");
  const int n = g.player_count();
  std::vector<Rational> by_size(n + 1);
  for_each_superset_within(s, g.grand_coalition(), [&](Coalition t) {
    Rational inner;
    for_each_subset(s, [&](Coalition r) {
      if (r.size() % 2 == 0)
        inner += g.worth(t.minus(r));
      else
        inner -= g.worth(t.minus(r));
    });
    by_size[t.size()] += inner;
  });
  Rational out;
  for (int t = s.size(); t <= n; ++t) out += shapley_weight(n, t) * by_size[t];
  return out;
}

Rational merge_shapley_worth_form(const Game& g, Coalition s) {
  require_group(s, g.player_count(), "merge_shapley_worth_form");
  const int n = g.player_count();
  std::vector<Rational> by_size(n + 1);
  for_each_subset(g.grand_coalition().minus(s), [&](Coalition t) {
    by_size[t.size()] += g.worth(t | s) - g.worth(t);
  });
  Rational out;
  for (int t = 0; t <= n - s.size(); ++t) out += merge_weight(n, s.size(), t) * by_size[t];
  return out;
}

Rational merge_shapley_via_merge(const Game& g, Coalition s) {
  require_group(s, g.player_count(), "merge_shapley_via_merge");
  MergedGame merged = merged_game(g, s);
  return shapley(merged.game)[merged.merged_player];
}

Rational interaction_index_worth_form(const Game& g, Coalition s) {
  require_group(s, g.player_count(), "interaction_index_worth_form");
  const int n = g.player_count();
  std::vector<Rational> by_size(n + 1);
  for_each_subset(g.grand_coalition().minus(s), [&](Coalition t) {
    Rational inner;
    for_each_subset(s, [&](Coalition r) {
      if ((s.size() - r.size()) % 2 == 0)
        inner += g.worth(t | r);
      else
        inner -= g.worth(t | r);
    });
    by_size[t.size()] += inner;
  });
  Rational out;
  for (int t = 0; t <= n - s.size(); ++t) out += merge_weight(n, s.size(), t) * by_size[t];
  return out;
}

Rational sum_of_shapley_via_players(const Game& g, Coalition s) {
  require_group(s, g.player_count(), "sum_of_shapley_via_players");
  PlayerValues sv = shapley(g);
  Rational out;
  for (int i : s.members()) out += sv[i];
  return out;
}

// --- dispatch ----------------------------------------------------------------

std::string_view to_string(GroupValueKind kind) {
  switch (kind) {
    case GroupValueKind::Worth: return "worth";
    case GroupValueKind::Dividend: return "dividend";
    case GroupValueKind::ShapleySum: return "sum-shapley";
    case GroupValueKind::UnionShapley: return "union-shapley";
    case GroupValueKind::IntersectionShapley: return "intersection-shapley";
    case GroupValueKind::MergeShapley: return "merge-shapley";
    case GroupValueKind::InteractionIndex: return "interaction-index";
    case GroupValueKind::ScaledIntersection: return "scaled-intersection";
    case GroupValueKind::CustomSemivalue: return "semivalue:custom";
    case GroupValueKind::CustomSynergistic: return "synergistic:custom";
  }
  return "?";
}

std::optional<GroupValueKind> parse_group_value_kind(std::string_view name) {
  for (GroupValueKind kind :
       {GroupValueKind::Worth, GroupValueKind::Dividend, GroupValueKind::ShapleySum,
        GroupValueKind::UnionShapley, GroupValueKind::IntersectionShapley,
        GroupValueKind::MergeShapley, GroupValueKind::InteractionIndex,
        GroupValueKind::ScaledIntersection, GroupValueKind::CustomSemivalue,
        GroupValueKind::CustomSynergistic}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::span<const GroupValueKind> named_group_value_kinds() {
  static constexpr std::array<GroupValueKind, 8> kinds = {
      GroupValueKind::Worth,          GroupValueKind::Dividend,
      GroupValueKind::ShapleySum,     GroupValueKind::UnionShapley,
      GroupValueKind::IntersectionShapley, GroupValueKind::MergeShapley,
      GroupValueKind::InteractionIndex,    GroupValueKind::ScaledIntersection,
  };
  return kinds;
}

Rational group_value(const Game& g, const DividendVector& d, Coalition s, GroupValueKind kind,
                     const SemivalueWeights* weights) {
  switch (kind) {
    case GroupValueKind::Worth: return coalition_worth(g, s);
    case GroupValueKind::Dividend: return coalition_dividend(d, s);
    case GroupValueKind::ShapleySum: return sum_of_shapley(d, s);
    case GroupValueKind::UnionShapley: return union_shapley(d, s);
    case GroupValueKind::IntersectionShapley: return intersection_shapley(d, s);
    case GroupValueKind::MergeShapley: return merge_shapley(d, s);
    case GroupValueKind::InteractionIndex: return interaction_index(d, s);
    case GroupValueKind::ScaledIntersection: return scaled_intersection_shapley(d, s);
    case GroupValueKind::CustomSemivalue:
      if (!weights) throw std::invalid_argument("semivalue:custom requires weights");
      return group_semivalue(d, s, *weights);
    case GroupValueKind::CustomSynergistic:
      if (!weights) throw std::invalid_argument("synergistic:custom requires weights");
      return synergistic_semivalue(d, s, *weights);
  }
  throw std::logic_error("unreachable group value kind");
}

Rational group_value(const Game& g, Coalition s, GroupValueKind kind,
                     const SemivalueWeights* weights) {
  return group_value(g, dividends(g), s, kind, weights);
}

const Rational& GroupValueTable::value(Coalition s) const {
  if (s.is_empty()) throw std::invalid_argument("group value tables cover non-empty coalitions");
  if (s.mask() >= by_mask.size())
    throw std::invalid_argument("coalition is not within the player set");
  return by_mask[s.mask()];
}

GroupValueTable full_table(const Game& g, GroupValueKind kind, const SemivalueWeights* weights) {
  GroupValueTable out;
  out.n = g.player_count();
  out.by_mask.resize(g.table_size());
  DividendVector d = dividends(g);
  for (std::uint64_t m = 1; m < g.table_size(); ++m)
    out.by_mask[m] = group_value(g, d, Coalition(m), kind, weights);
  return out;
}

}  // namespace coalgame
