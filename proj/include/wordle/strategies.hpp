#pragma once

#include <cstddef>
#include <vector>

#include "wordle/core.hpp"
#include "wordle/feasibility.hpp"

namespace wordle {

enum class PolicyKind {
  any_feasible,    ///< lowest-index feasible word
  greedy_minimax,  ///< dictionary word minimizing the largest reply class
};

struct Policy {
  PolicyKind kind = PolicyKind::any_feasible;
  unsigned threads = 1;  // greedy scan only
};

/// Dictionary index of the policy's next guess. Ties go to the lowest index.
std::size_t next_guess(const Policy& policy, const Dictionary& d, const FeasibleSet& f);

/// Size of the largest class of partition_by_marking(f, guess).
std::size_t largest_reply_class(const FeasibleSet& f, const Word& guess);

/// Surviving symbols per position among the feasible words, before and after
/// one guess of a run.
struct ShrinkStep {
  std::vector<std::vector<Symbol>> before;
  std::vector<std::vector<Symbol>> after;

  /// Each position is pinned to one symbol or lost at least one symbol.
  bool law_holds() const;
};

struct Transcript {
  std::size_t guesses = 0;
  History history;
  std::vector<ShrinkStep> shrink;
  /// Whether every emitted guess was exact-feasible when played.
  bool guesses_feasible = true;
};

/// Plays the policy against `secret` until it is found, filtering with exact
/// feasibility after every reply.
Transcript run_policy(const Policy& policy, const Dictionary& d, const Word& secret);

/// Sorted distinct symbols at each position among the members of f.
std::vector<std::vector<Symbol>> surviving_symbols(const FeasibleSet& f);

}  // namespace wordle
