#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "wordle/marking.hpp"
#include "wordle/oracles.hpp"
#include "wordle/reductions.hpp"
#include "wordle/solver.hpp"

using namespace wordle;
using namespace wordle::oracles;

TEST_CASE("set cover and almost set cover") {
  SetFamily f = make_set_family(3, {{1, 2}, {2, 3}});
  CHECK(brute_force_asc(f, 1));
  CHECK_FALSE(brute_force_set_cover(f, 1));
  CHECK(brute_force_set_cover(f, 2));
  SetFamily two = make_set_family(2, {{1}, {2}});
  CHECK_FALSE(brute_force_set_cover(two, 1));
  CHECK(brute_force_asc(two, 1));
  SetFamily three = make_set_family(3, {{1}, {2}, {3}});
  CHECK_FALSE(brute_force_asc(three, 1));
  CHECK(brute_force_asc(three, 2));
  for (const auto& fam : enumerate_families(3, 3)) CHECK(brute_force_asc(fam, fam.sets.size()));
}

TEST_CASE("caps raise CapExceeded") {
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t i = 1; i <= 21; ++i) sets.push_back({i});
  SetFamily big = make_set_family(21, sets);
  try {
    brute_force_set_cover(big, 2);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  CHECK_THROWS_AS(brute_force_gamma(circulant_graph(17, {1, 2})), Error);
  std::mt19937_64 rng(1);
  Dictionary d = random_dictionary(rng, 3, 3, 13);
  CHECK_THROWS_AS(brute_force_decide(d, 2, GuessMode::full_dictionary), Error);
  CHECK_THROWS_AS(brute_force_decide(d, 4, GuessMode::full_dictionary, Caps{.max_words = 20}), Error);
}

TEST_CASE("domination numbers") {
  CHECK(brute_force_gamma(complete_graph(5)) == 1);
  for (std::size_t n = 7; n <= 10; ++n) CHECK(brute_force_gamma(circulant_graph(n, {1, 2})) == 2);
  CHECK(brute_force_gamma(circulant_graph(11, {1, 2})) == 3);
  CHECK(brute_force_gamma(make_graph(3, {{0, 1}, {1, 2}})) == 1);
  CHECK(brute_force_gamma(make_graph(4, {})) == 4);
}

TEST_CASE("count_marking agrees with mark") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const std::size_t sigma = 1 + rng() % 4, k = 1 + rng() % 6;
    Word s, g;
    for (std::size_t j = 0; j < k; ++j) {
      s.symbols.push_back(static_cast<Symbol>(rng() % sigma));
      g.symbols.push_back(static_cast<Symbol>(rng() % sigma));
    }
    CHECK(count_marking(s, g) == mark(s, g));
  }
  using testing_util::W;
  CHECK(testing_util::digits(count_marking(W("ABBEY"), W("ALGAE"))) == "20001");
  CHECK(testing_util::digits(count_marking(W("ABBEY"), W("KEEPS"))) == "01000");
}

TEST_CASE("brute_force_decide examples") {
  Dictionary two = dictionary_from_ids(2, {Word{0, 0}, Word{1, 1}});
  CHECK_FALSE(brute_force_decide(two, 0, GuessMode::full_dictionary));
  CHECK_FALSE(brute_force_decide(two, 1, GuessMode::full_dictionary));
  CHECK(brute_force_decide(two, 2, GuessMode::full_dictionary));
  CHECK(brute_force_decide(two, 2, GuessMode::feasible_only));
  Dictionary one = dictionary_from_ids(3, {Word{1, 2}});
  CHECK(brute_force_decide(one, 1, GuessMode::feasible_only));
  CHECK_FALSE(brute_force_decide(one, 0, GuessMode::feasible_only));
}

TEST_CASE("solver matches the brute force on small random dictionaries") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    Dictionary d = random_dictionary(rng, 2 + rng() % 3, 1 + rng() % 3, 1 + rng() % 9);
    VerificationReport r = verify_solver_oracle(d, 3);
    CAPTURE(r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("claim verifiers on worked instances") {
  auto f12 = make_set_family(3, {{1, 2}, {2, 3}});
  auto r1 = verify_thm1(f12, 1);
  CHECK(r1.pass);
  CHECK(r1.measured.at("almost_set_cover") == 1);
  CHECK(r1.measured.at("wordle") == 1);
  auto r2 = verify_thm1(make_set_family(3, {{1}, {2}, {3}}), 1);
  CHECK(r2.pass);
  CHECK(r2.measured.at("wordle") == 0);
  auto r3 = verify_thm1(make_set_family(1, {{1}}), 1);
  CHECK(r3.skipped);

  auto l1 = verify_lemma1(f12, 2);
  CHECK(l1.pass);
  CHECK(l1.measured.at("set_cover") == 1);
  auto l2 = verify_lemma1(make_set_family(2, {{1}, {2}}), 1);
  CHECK(l2.pass);
  CHECK(l2.measured.at("set_cover") == 0);
  CHECK(l2.measured.at("almost_set_cover") == 0);

  auto k5 = verify_thm2(complete_graph(5));
  CHECK(k5.pass);
  CHECK(k5.measured.at("gamma") == 1);
  CHECK(k5.measured.at("w_min") >= 1);
  CHECK(k5.measured.at("w_min") <= 5);
  auto c7 = verify_thm2(circulant_graph(7, {1, 2}));
  CHECK(c7.pass);
  CHECK(c7.measured.at("gamma") == 2);

  auto lemma3 = verify_lemma3(graph_to_wordle(complete_graph(5)));
  CHECK(lemma3.pass);
  CHECK(lemma3.measured.at("max_guesses") <= 5);
  auto single = verify_lemma3(dictionary_from_ids(1, {Word{0, 0}}));
  CHECK(single.pass);
  CHECK(single.measured.at("max_guesses") == 1);
}

TEST_CASE("family enumeration") {
  auto fams = enumerate_families(2, 2);
  // Subsets of {1,2}: {}, {1}, {2}, {1,2}; families with full union of size 1..2.
  // n=1: {{1}}, {{},{1}}; n=2: {{1,2}}, {{},{1,2}}, {{1},{2}}, {{1},{1,2}}, {{2},{1,2}}.
  CHECK(fams.size() == 7);
  for (const auto& f : fams) CHECK_NOTHROW(make_set_family(f.universe, f.sets));
}

TEST_CASE("gadget fails when the whole universe is a set next to a singleton") {
  // {1,2} alone is a cover, but the all-ones guess leaves 1,s1 and 1,_ with
  // the same reply, and no other first guess does better.
  SetFamily f = make_set_family(2, {{1}, {1, 2}});
  CHECK(brute_force_asc(f, 1));
  GadgetInstance g = asc_to_wordle(f, 1);
  CHECK_FALSE(brute_force_decide(g.dictionary, 2, GuessMode::full_dictionary));
  CHECK(brute_force_decide(g.dictionary, 3, GuessMode::full_dictionary));
  VerificationReport r = verify_thm1(f, 1);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witness.empty());
  // With one more allowed set the equivalence holds again.
  CHECK(verify_thm1(f, 2).pass);
}

TEST_CASE("small sweeps") {
  CHECK(sweep_lemma1(3, 2, {1, 2}).ok());
  SweepResult t = sweep_thm1(3, 2, {1, 2});
  CHECK(t.failed == 5);
  for (const auto& r : t.failures) {
    CAPTURE(r.instance);
    CHECK(r.measured.at("almost_set_cover") == 1);
    CHECK(r.measured.at("wordle") == 0);
    CHECK(r.instance.find("c=1") != std::string::npos);
  }
  auto s = sweep_lemma3(7, 10, 4, 3, 30);
  CHECK(s.ok());
  CHECK(s.instances == 10);
}
