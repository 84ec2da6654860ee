#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace coalgame {

/// A set of players encoded as a bitmask: bit i set <=> player i is in the
/// set. Up to 64 players; dense worth tables are restricted further by
/// Game::kMaxPlayers. Coalitions are value types and all operations are O(1)
/// or O(popcount).
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

  static constexpr Coalition empty() { return Coalition{}; }
  static constexpr Coalition singleton(int player) {
    return Coalition{std::uint64_t{1} << player};
  }
  /// The grand coalition {0, .., n-1}.
  static constexpr Coalition full(int n) {
    return n >= 64 ? Coalition{~std::uint64_t{0}}
                   : Coalition{(std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool is_empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  constexpr bool contains(int player) const { return (mask_ >> player) & 1u; }
  /// True when sub is a subset of *this.
  constexpr bool contains_all(Coalition sub) const {
    return (sub.mask_ & mask_) == sub.mask_;
  }
  constexpr bool intersects(Coalition other) const {
    return (mask_ & other.mask_) != 0;
  }

  constexpr Coalition with(int player) const {
    return Coalition{mask_ | (std::uint64_t{1} << player)};
  }
  constexpr Coalition without(int player) const {
    return Coalition{mask_ & ~(std::uint64_t{1} << player)};
  }
  /// Set difference.
  constexpr Coalition minus(Coalition other) const {
    return Coalition{mask_ & ~other.mask_};
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition{a.mask_ | b.mask_};
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition{a.mask_ & b.mask_};
  }

  /// Smallest player index in the set. Undefined on the empty coalition.
  constexpr int lowest() const {
    assert(!is_empty());
    return std::countr_zero(mask_);
  }

  friend constexpr bool operator==(Coalition, Coalition) = default;

  /// Iterates the member player indices in increasing order:
  ///   for (int i : coalition.members()) ...
  class MemberRange {
   public:
    class iterator {
     public:
      constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
      constexpr int operator*() const { return std::countr_zero(rest_); }
      constexpr iterator& operator++() {
        rest_ &= rest_ - 1;
        return *this;
      }
      friend constexpr bool operator==(iterator, iterator) = default;

     private:
      std::uint64_t rest_;
    };
    constexpr explicit MemberRange(std::uint64_t mask) : mask_(mask) {}
    constexpr iterator begin() const { return iterator{mask_}; }
    constexpr iterator end() const { return iterator{0}; }

   private:
    std::uint64_t mask_;
  };
  constexpr MemberRange members() const { return MemberRange{mask_}; }

 private:
  std::uint64_t mask_ = 0;
};

/// Visits every subset of s, including the empty set and s itself
/// (2^|s| calls). Order: s, then descending by mask value.
template <typename F>
constexpr void for_each_subset(Coalition s, F&& visit) {
  std::uint64_t sub = s.mask();
  while (true) {
    visit(Coalition{sub});
    if (sub == 0) break;
    sub = (sub - 1) & s.mask();
  }
}

/// Visits every T with base ⊆ T ⊆ universe (2^|universe∖base| calls).
template <typename F>
constexpr void for_each_superset_within(Coalition base, Coalition universe,
                                        F&& visit) {
  assert(universe.contains_all(base));
  Coalition free = universe.minus(base);
  for_each_subset(free, [&](Coalition extra) { visit(base | extra); });
}

/// All 2^n - 1 non-empty coalitions of n players, ordered by size and then
/// by mask — the canonical row order for printed tables.
inline std::vector<Coalition> all_coalitions_by_size(int n) {
  std::vector<Coalition> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (int k = 1; k <= n; ++k) {
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      if (std::popcount(m) == k) out.push_back(Coalition{m});
    }
  }
  return out;
}

}  // namespace coalgame
