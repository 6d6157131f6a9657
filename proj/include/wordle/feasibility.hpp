#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "wordle/bitset.hpp"
#include "wordle/core.hpp"

namespace wordle {

/// Subset of a dictionary's words, by index. Holds a non-owning pointer: the
/// dictionary must outlive the set.
class FeasibleSet {
 public:
  FeasibleSet(const Dictionary& d, BitSet members);
  static FeasibleSet full(const Dictionary& d);

  const Dictionary& dictionary() const noexcept { return *dict_; }
  const BitSet& members() const noexcept { return members_; }
  std::size_t count() const noexcept { return members_.count(); }
  bool empty() const noexcept { return members_.none(); }
  bool contains(std::size_t index) const noexcept { return members_.test(index); }
  std::vector<std::size_t> indices() const { return members_.indices(); }

  bool operator==(const FeasibleSet& o) const { return dict_ == o.dict_ && members_ == o.members_; }

 private:
  const Dictionary* dict_;
  BitSet members_;
};

enum class FeasibilityMode { exact, positional };

/// Candidate is feasible iff re-marking it against every past guess
/// reproduces the observed marking.
bool is_feasible_exact(const Word& candidate, const History& h);

/// The four positional rules, checked per history step:
///  1. a symbol whose every occurrence in the guess is gray is absent;
///  2. a yellow symbol is not at its yellow position;
///  3. a green symbol is at its green position;
///  4. a yellow symbol occurs at some other position.
/// Rule 1 is restricted to all-gray symbols; a gray duplicate of a symbol that
/// is also green or yellow in the same guess only caps multiplicity.
bool is_feasible_positional(const Word& candidate, const History& h);

FeasibleSet filter_feasible(const Dictionary& d, const History& h,
                            FeasibilityMode mode = FeasibilityMode::exact);

/// Blocks keyed by mark(word, guess); disjoint and covering `f`.
std::map<Marking, FeasibleSet> partition_by_marking(const FeasibleSet& f, const Word& guess);

/// One (guess, marking, candidate) triple on which the two modes disagree.
struct DivergenceCase {
  Word secret;
  Word guess;
  Marking marking;
  Word candidate;
  bool exact = false;
  bool positional = false;
};

struct DivergenceReport {
  std::size_t sigma = 0;
  std::size_t k = 0;
  std::size_t triples_checked = 0;
  std::size_t positional_only = 0;  // positional-feasible, exact-infeasible
  std::size_t exact_only = 0;  // exact-feasible, positional-infeasible
  std::size_t dictionaries_checked = 0;
  std::size_t dictionaries_diverging = 0;
  std::vector<DivergenceCase> samples;
};

/// Compares both feasibility modes on every single-step history over
/// Sigma^k (secret, guess in Sigma^k) and every candidate, then counts the
/// dictionaries of at most `max_dictionary` words in which some in-dictionary
/// history makes the filtered sets differ.
DivergenceReport scan_feasibility_divergence(std::size_t sigma, std::size_t k, std::size_t max_dictionary,
                                             std::size_t max_samples = 16);

/// Every word of Sigma^k in lexicographic id order.
std::vector<Word> all_words(std::size_t sigma, std::size_t k);

}  // namespace wordle
