#include <doctest.h>

#include <map>
#include <random>

#include "test_util.hpp"
#include "wordle/marking.hpp"
#include "wordle/oracles.hpp"
#include "wordle/reductions.hpp"
#include "wordle/strategies.hpp"

using namespace wordle;

TEST_CASE("any_feasible picks the lowest feasible index") {
  Dictionary d = oracles::dictionary_from_ids(2, {Word{0, 0}, Word{1, 1}});
  CHECK(next_guess(Policy{}, d, FeasibleSet::full(d)) == 0);
  BitSet second(d.size());
  second.set(1);
  CHECK(next_guess(Policy{}, d, FeasibleSet(d, second)) == 1);
  CHECK_THROWS_AS(next_guess(Policy{}, d, FeasibleSet(d, BitSet(d.size()))), Error);
}

TEST_CASE("greedy_minimax on the complete-graph gadget") {
  Dictionary d = graph_to_wordle(complete_graph(5));
  FeasibleSet all = FeasibleSet::full(d);
  std::size_t best = 0, best_size = d.size() + 1;
  for (std::size_t g = 0; g < d.size(); ++g) {
    std::map<Marking, std::size_t> blocks;
    for (std::size_t s = 0; s < d.size(); ++s) ++blocks[mark(d.word(s), d.word(g))];
    std::size_t worst = 0;
    for (const auto& [m, n] : blocks) worst = std::max(worst, n);
    CHECK(largest_reply_class(all, d.word(g)) == worst);
    if (worst < best_size) best = g, best_size = worst;
  }
  CHECK(next_guess(Policy{PolicyKind::greedy_minimax}, d, all) == best);
  CHECK(next_guess(Policy{PolicyKind::greedy_minimax, 3}, d, all) == best);
}

TEST_CASE("greedy may pick an infeasible word") {
  Dictionary d = testing_util::letters_dictionary({"AAB", "AAC", "AAD", "BCD"});
  BitSet three(d.size());
  for (std::size_t i = 0; i < 3; ++i) three.set(i);
  CHECK(next_guess(Policy{PolicyKind::greedy_minimax}, d, FeasibleSet(d, three)) == 3);
  CHECK(next_guess(Policy{PolicyKind::any_feasible}, d, FeasibleSet(d, three)) == 0);
}

TEST_CASE("any_feasible wins within sigma guesses and the shrink law holds") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t sigma = 1 + rng() % 5, k = 1 + rng() % 4;
    Dictionary d = oracles::random_dictionary(rng, sigma, k, 1 + rng() % 60);
    for (std::size_t s = 0; s < d.size(); ++s) {
      Transcript t = run_policy(Policy{}, d, d.word(s));
      CHECK(t.guesses <= sigma);
      CHECK(t.guesses_feasible);
      CHECK(t.history.won());
      CHECK(t.shrink.size() + 1 == t.guesses);
      for (const auto& step : t.shrink) CHECK(step.law_holds());
    }
  }
}

TEST_CASE("greedy runs finish") {
  std::mt19937_64 rng(22);
  Dictionary d = oracles::random_dictionary(rng, 4, 4, 80);
  for (std::size_t s = 0; s < d.size(); ++s) {
    Transcript t = run_policy(Policy{PolicyKind::greedy_minimax}, d, d.word(s));
    CHECK(t.history.won());
  }
}

TEST_CASE("surviving symbols and the shrink law predicate") {
  Dictionary d = testing_util::letters_dictionary({"AB", "AC", "BC"});
  auto s = surviving_symbols(FeasibleSet::full(d));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == std::vector<Symbol>{0, 1});
  CHECK(s[1] == std::vector<Symbol>{1, 2});
  ShrinkStep ok{{{0, 1}, {1, 2}}, {{0}, {2}}};
  CHECK(ok.law_holds());
  ShrinkStep bad{{{0, 1}, {1, 2, 3}}, {{0}, {1, 2, 3}}};
  CHECK_FALSE(bad.law_holds());
}
