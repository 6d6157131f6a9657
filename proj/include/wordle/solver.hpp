#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "wordle/core.hpp"
#include "wordle/feasibility.hpp"

namespace wordle {

/// Where candidate guesses come from at each node of the search.
enum class GuessMode {
  full_dictionary,  ///< any dictionary word, feasible or not
  feasible_only,    ///< only words still feasible at that node
};

struct SolveOptions {
  GuessMode guess_mode = GuessMode::full_dictionary;
  bool memo_enabled = true;
  std::optional<std::uint64_t> node_budget;
  /// Worker threads for the root candidate scan. Results do not depend on it.
  unsigned threads = 1;
};

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Winning strategy certificate. `guess` is played at this node; if it is
/// still feasible, the all-green reply ends the game (`wins_on_green`). Every
/// other reply that some feasible secret can produce has one child, keyed by
/// the parallel `markings` entry.
struct StrategyTree {
  std::size_t guess = 0;  // dictionary index
  bool wins_on_green = false;
  std::vector<Marking> markings;
  std::vector<StrategyTree> children;

  const StrategyTree* child(const Marking& m) const;
  std::size_t depth() const;
};

/// Exact adversarial search over feasible sets with memoization.
///
/// A Solver is bound to one dictionary; the first query fixes a root feasible
/// set (the whole dictionary unless given) and the memo is reused by later
/// queries on the same root. Queries on a different root rebuild the tables.
class Solver {
 public:
  explicit Solver(const Dictionary& d, SolveOptions opts = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  bool decide(std::size_t max_guesses);
  bool decide(const FeasibleSet& f, std::size_t max_guesses);

  /// Lowest dictionary index p such that every reply class of f under p can
  /// be finished in max_guesses - 1 more guesses.
  std::optional<std::size_t> best_guess(const FeasibleSet& f, std::size_t max_guesses);

  std::optional<StrategyTree> strategy_tree(std::size_t max_guesses);
  std::optional<StrategyTree> strategy_tree(const FeasibleSet& f, std::size_t max_guesses);

  /// Least l with decide(f, l). Never exceeds the alphabet size.
  std::size_t w_min();
  std::size_t w_min(const FeasibleSet& f);

  const SolveStats& stats() const noexcept { return stats_; }
  const SolveOptions& options() const noexcept { return opts_; }

 private:
  struct Context;

  Context& root(const FeasibleSet& f);

  const Dictionary* dict_;
  SolveOptions opts_;
  SolveStats stats_;
  std::unique_ptr<Context> ctx_;
};

bool decide(const Dictionary& d, std::size_t max_guesses, const SolveOptions& opts = {});
std::optional<Word> best_guess(const Dictionary& d, const FeasibleSet& f, std::size_t max_guesses,
                               const SolveOptions& opts = {});
std::optional<StrategyTree> strategy_tree(const Dictionary& d, std::size_t max_guesses,
                                          const SolveOptions& opts = {});
std::size_t w_min(const Dictionary& d, const SolveOptions& opts = {});

/// Answers yes without searching when the alphabet has at most max_guesses
/// symbols; otherwise runs decide(). `searched`, when given, reports which.
bool decide_constant_alphabet(const Dictionary& d, std::size_t max_guesses, const SolveOptions& opts = {},
                              bool* searched = nullptr);

/// Plays the tree against `secret`; returns the number of guesses used, or
/// nullopt if the tree has no branch for a reply or never reaches the secret.
std::optional<std::size_t> replay_strategy(const Dictionary& d, const StrategyTree& tree, const Word& secret);

/// True when replay wins against every word of f within max_guesses.
bool strategy_wins_all(const Dictionary& d, const StrategyTree& tree, const FeasibleSet& f,
                       std::size_t max_guesses);

}  // namespace wordle
