#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "test_util.hpp"
#include "wordle/feasibility.hpp"
#include "wordle/marking.hpp"

using namespace wordle;
using testing_util::digits;
using testing_util::W;

TEST_CASE("example games: single markings") {
  CHECK(digits(mark(W("ABBEY"), W("ALGAE"))) == "20001");
  CHECK(digits(mark(W("KEBAB"), W("ABBEY"))) == "11210");
  CHECK(digits(mark(W("HIPPY"), W("GUMMY"))) == "00002");
  CHECK(mark(W("HIPPY"), W("HIPPY")).is_all_green());
}

TEST_CASE("simulate_game replays the first example game") {
  std::vector<Word> guesses{W("ALGAE"), W("KEEPS"), W("ORBIT"), W("BRIBE"), W("ABBOT"), W("ABBEY")};
  History h = simulate_game(W("ABBEY"), guesses);
  std::vector<std::string> got;
  for (const auto& s : h.steps) got.push_back(digits(s.marking));
  CHECK(got == std::vector<std::string>{"20001", "01000", "00200", "10011", "22200", "22222"});
  CHECK(h.won());
}

TEST_CASE("simulate_game stops early and flags the win") {
  std::vector<Word> guesses{W("CRANE")};
  History lost = simulate_game(W("HIPPY"), guesses);
  REQUIRE(lost.size() == 1);
  CHECK(digits(lost.steps[0].marking) == "00000");
  CHECK_FALSE(lost.won());

  std::vector<Word> twice{W("HIPPY"), W("CRANE")};
  History won = simulate_game(W("HIPPY"), twice);
  CHECK(won.size() == 1);
  CHECK(won.won());
}

TEST_CASE("incompatible words") {
  CHECK_THROWS_AS(mark(W("ABC"), W("AB")), Error);
  CHECK_THROWS_AS(mark_one_pass_literal(W("ABC"), W("AB")), Error);
  CHECK_THROWS_AS(mark_code(W("AB").span(), W("ABC").span()), Error);
}

TEST_CASE("literal one-pass procedure") {
  auto ok = mark_one_pass_literal(W("ABBEY"), W("ALGAE"));
  REQUIRE(std::holds_alternative<Marking>(ok));
  CHECK(digits(std::get<Marking>(ok)) == "20001");

  // i=0: w=C, p[0]=X, S={2} so p[2] turns yellow; i=2: w[2]=p[2]=C wants green.
  auto clash = mark_one_pass_literal(W("CAC"), W("XYC"));
  REQUIRE(std::holds_alternative<OnePassConflict>(clash));
  CHECK(std::get<OnePassConflict>(clash) == OnePassConflict{2, MarkColor::yellow, MarkColor::green});
  CHECK(digits(mark(W("CAC"), W("XYC"))) == "002");

  auto same = mark_one_pass_literal(W("HIPPY"), W("HIPPY"));
  REQUIRE(std::holds_alternative<Marking>(same));
  CHECK(std::get<Marking>(same).is_all_green());
}

namespace {

std::size_t count_of(const Word& w, Symbol c) { return static_cast<std::size_t>(std::count(w.symbols.begin(), w.symbols.end(), c)); }

}  // namespace

TEST_CASE("exhaustive laws for sigma <= 3, k <= 4") {
  std::size_t pairs = 0, conflicts = 0;
  for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto words = all_words(sigma, k);
      for (const Word& w : words) {
        for (const Word& p : words) {
          ++pairs;
          Marking m = mark(w, p);
          REQUIRE(m.size() == k);
          CHECK(m.is_all_green() == (w == p));
          CHECK(mark_code(w.span(), p.span()) == m.code());
          for (Symbol c = 0; c < sigma; ++c) {
            std::size_t greens = 0, yellows = 0;
            for (std::size_t j = 0; j < k; ++j) {
              if (p[j] != c) continue;
              greens += m[j] == MarkColor::green;
              yellows += m[j] == MarkColor::yellow;
              if (m[j] == MarkColor::green) CHECK(w[j] == c);
            }
            std::size_t matched = 0;
            for (std::size_t j = 0; j < k; ++j) matched += (w[j] == c && p[j] == c);
            CHECK(greens == matched);
            CHECK(greens + yellows == std::min(count_of(w, c), count_of(p, c)));
          }
          auto literal = mark_one_pass_literal(w, p);
          if (auto* lm = std::get_if<Marking>(&literal)) {
            CHECK(*lm == m);
          } else {
            ++conflicts;
          }
        }
      }
    }
  }
  CHECK(pairs > 0);
  CHECK(conflicts > 0);
}

TEST_CASE("marking is equivariant under symbol relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t sigma = 2 + rng() % 5, k = 1 + rng() % 6;
    std::vector<Symbol> perm(sigma);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Word w, p, pw, pp;
    for (std::size_t i = 0; i < k; ++i) {
      w.symbols.push_back(static_cast<Symbol>(rng() % sigma));
      p.symbols.push_back(static_cast<Symbol>(rng() % sigma));
      pw.symbols.push_back(perm[w[i]]);
      pp.symbols.push_back(perm[p[i]]);
    }
    CHECK(mark(pw, pp) == mark(w, p));
  }
}

TEST_CASE("simulate_game replays the other two example games") {
  auto rows = [](const char* secret, std::vector<const char*> gs) {
    std::vector<Word> guesses;
    for (const char* g : gs) guesses.push_back(W(g));
    std::vector<std::string> out;
    for (const auto& s : simulate_game(W(secret), guesses).steps) out.push_back(digits(s.marking));
    return out;
  };
  CHECK(rows("KEBAB", {"ABBEY", "BABES", "KEEPS", "KEBAB"}) ==
        std::vector<std::string>{"11210", "11210", "22000", "22222"});
  CHECK(rows("HIPPY", {"CRANE", "BOILS", "GUMMY", "KIDDY", "JIFFY", "FIZZY"}) ==
        std::vector<std::string>{"00000", "00100", "00002", "02002", "02002", "02002"});
}
