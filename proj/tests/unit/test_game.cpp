#include <stdexcept>
#include <utility>
#include <vector>

#include "coalgame/game.hpp"
#include "doctest.h"
#include "helpers.hpp"

using coalgame::Coalition;
using coalgame::Game;
using coalgame::Rational;
using testutil::C;
using testutil::R;

TEST_SUITE("game") {
  TEST_CASE("construction validates its input") {
    CHECK_THROWS_AS(Game(0, {R(0)}), std::invalid_argument);
    CHECK_THROWS_AS(Game(21, {R(0)}), std::invalid_argument);  // above kMaxPlayers
    CHECK_THROWS_AS(Game(2, {R(0), R(1), R(2)}), std::invalid_argument);  // wrong size
    CHECK_THROWS_AS(Game(1, {R(1), R(1)}), std::invalid_argument);        // v(∅) != 0
    Game g(2, {R(0), R(1), R(2), R(5)});
    CHECK(g.player_count() == 2);
    CHECK(g.table_size() == 4);
    CHECK(g.worth(C({0})) == 1);
    CHECK(g.worth(C({1})) == 2);
    CHECK(g.worth(C({0, 1})) == 5);
    CHECK_THROWS_AS((void)g.worth(C({2})), std::invalid_argument);
  }

  TEST_CASE("zero and unanimity games") {
    Game z = Game::zero(3);
    for (const Rational& w : z.worths()) CHECK(w == 0);

    Game u = Game::unanimity(3, C({0, 2}));
    CHECK(u.worth(C({0, 2})) == 1);
    CHECK(u.worth(Coalition::full(3)) == 1);
    CHECK(u.worth(C({0})) == 0);
    CHECK(u.worth(C({0, 1})) == 0);
    CHECK(u.worth(C({1, 2})) == 0);

    CHECK_THROWS_AS(Game::unanimity(3, Coalition()), std::invalid_argument);
    CHECK_THROWS_AS(Game::unanimity(2, C({2})), std::invalid_argument);
  }

  TEST_CASE("game arithmetic is pointwise") {
    Game a = Game::unanimity(2, C({0}));
    Game b = Game::unanimity(2, C({0, 1}));
    Game sum = a + b;
    CHECK(sum.worth(C({0})) == 1);
    CHECK(sum.worth(C({1})) == 0);
    CHECK(sum.worth(C({0, 1})) == 2);
    Game diff = sum - b;
    CHECK(diff == a);
    Game scaled = R(3, 2) * b;
    CHECK(scaled.worth(C({0, 1})) == R(3, 2));
    CHECK(scaled.worth(C({0})) == 0);
  }

  TEST_CASE("linear_combine") {
    Game a = Game::unanimity(2, C({0}));
    Game b = Game::unanimity(2, C({1}));
    std::vector<std::pair<Rational, const Game*>> terms{{R(2), &a}, {R(-1), &b}};
    Game g = coalgame::linear_combine(terms);
    CHECK(g.worth(C({0})) == 2);
    CHECK(g.worth(C({1})) == -1);
    CHECK(g.worth(C({0, 1})) == 1);

    std::vector<std::pair<Rational, const Game*>> empty;
    CHECK_THROWS_AS(coalgame::linear_combine(empty), std::invalid_argument);

    Game wrong = Game::unanimity(3, C({0}));
    std::vector<std::pair<Rational, const Game*>> mixed{{R(1), &a}, {R(1), &wrong}};
    CHECK_THROWS_AS(coalgame::linear_combine(mixed), std::invalid_argument);
  }

  TEST_CASE("permutation relabels worths") {
    // 3-player game with a distinct worth per coalition.
    Game g(3, {R(0), R(1), R(2), R(3), R(4), R(5), R(6), R(7)});
    std::vector<int> perm{2, 0, 1};  // 0->2, 1->0, 2->1
    CHECK(coalgame::apply_permutation(C({0, 1}), perm) == C({2, 0}));
    Game h = coalgame::permute_game(g, perm);
    // h(π(T)) = g(T) for every coalition T.
    for (std::uint64_t m = 0; m < g.table_size(); ++m) {
      Coalition t{m};
      CHECK(h.worth(coalgame::apply_permutation(t, perm)) == g.worth(t));
    }
    std::vector<int> bad{0, 0, 1};
    CHECK_THROWS_AS(coalgame::permute_game(g, bad), std::invalid_argument);
    std::vector<int> short_perm{1, 0};
    CHECK_THROWS_AS(coalgame::permute_game(g, short_perm), std::invalid_argument);
  }

  TEST_CASE("remove_players restricts the game") {
    Game g(3, {R(0), R(1), R(2), R(3), R(4), R(5), R(6), R(7)});
    coalgame::Subgame sub = coalgame::remove_players(g, C({1}));
    CHECK(sub.game.player_count() == 2);
    CHECK(sub.to_original == std::vector<int>{0, 2});
    CHECK(sub.embed(C({1})) == C({2}));
    CHECK(sub.compress(C({0, 1, 2})) == C({0, 1}));
    // Restriction: worth of a survivor coalition is unchanged.
    CHECK(sub.game.worth(C({0})) == g.worth(C({0})));
    CHECK(sub.game.worth(C({1})) == g.worth(C({2})));
    CHECK(sub.game.worth(C({0, 1})) == g.worth(C({0, 2})));
    CHECK_THROWS_AS(coalgame::remove_players(g, Coalition::full(3)),
                    std::invalid_argument);
  }

  TEST_CASE("merged_game fuses a bloc into one player") {
    Game g(3, {R(0), R(1), R(2), R(3), R(4), R(5), R(6), R(7)});
    coalgame::MergedGame mg = coalgame::merged_game(g, C({0, 2}));
    CHECK(mg.game.player_count() == 2);
    CHECK(mg.merged_player == 1);  // ⊕ is last
    CHECK(mg.to_original == std::vector<int>{1});
    // Without ⊕: restriction to survivors.
    CHECK(mg.game.worth(C({0})) == g.worth(C({1})));
    // With ⊕: the bloc acts as a whole.
    CHECK(mg.game.worth(C({1})) == g.worth(C({0, 2})));
    CHECK(mg.game.worth(C({0, 1})) == g.worth(Coalition::full(3)));
    CHECK_THROWS_AS(coalgame::merged_game(g, Coalition()), std::invalid_argument);
  }

  TEST_CASE("player classification predicates") {
    // The second player is null: worths ignore it entirely.
    Game with_null(2, {R(0), R(4), R(0), R(4)});
    CHECK(coalgame::is_null_player(with_null, 1));
    CHECK_FALSE(coalgame::is_null_player(with_null, 0));
    CHECK(coalgame::is_dummy_player(with_null, 1));  // null ⇒ dummy

    // Dummy but not null: v(S∪{1}) = v(S) + 3.
    Game with_dummy(2, {R(0), R(4), R(3), R(7)});
    CHECK(coalgame::is_dummy_player(with_dummy, 1));
    CHECK_FALSE(coalgame::is_null_player(with_dummy, 1));

    // Synergy breaks dummyhood.
    Game synergy(2, {R(0), R(4), R(3), R(9)});
    CHECK_FALSE(coalgame::is_dummy_player(synergy, 1));

    CHECK(coalgame::is_positive(Game::unanimity(3, C({0, 1}))));
    Game with_neg = Game::unanimity(2, C({0})) - Game::unanimity(2, C({0, 1}));
    CHECK_FALSE(coalgame::is_positive(with_neg));

    CHECK(coalgame::is_monotone(Game::unanimity(3, C({0, 1}))));
    CHECK(coalgame::is_monotone(with_dummy));
    Game dipping(2, {R(0), R(4), R(3), R(2)});
    CHECK_FALSE(coalgame::is_monotone(dipping));
    // Positive but checking the converse direction: monotone yet not positive.
    Game mono_not_pos(2, {R(0), R(2), R(2), R(3)});
    CHECK(coalgame::is_monotone(mono_not_pos));
    CHECK_FALSE(coalgame::is_positive(mono_not_pos));
  }

  TEST_CASE("games compare by value") {
    Game a = Game::unanimity(2, C({0}));
    Game b = Game::unanimity(2, C({0}));
    CHECK(a == b);
    CHECK(a != Game::unanimity(2, C({1})));
  }
}
