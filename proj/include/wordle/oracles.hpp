#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wordle/core.hpp"
#include "wordle/reductions.hpp"
#include "wordle/solver.hpp"

// Brute-force references. Nothing here calls into the solver's search or the
// marking module; the claim verifiers call both sides explicitly.
namespace wordle::oracles {

struct Caps {
  std::size_t max_sets = 20;       // set-cover enumeration
  std::size_t max_vertices = 16;   // dominating-set enumeration
  std::size_t max_words = 12;      // game-tree transliteration
  std::size_t max_guesses = 3;
};

bool brute_force_set_cover(const SetFamily& f, std::size_t c, const Caps& caps = {});
bool brute_force_asc(const SetFamily& f, std::size_t c, const Caps& caps = {});
std::size_t brute_force_gamma(const Graph& g, const Caps& caps = {});

/// Marking computed guess-left-to-right from per-symbol counts; an
/// independent route to the same feedback as wordle::mark.
Marking count_marking(const Word& secret, const Word& guess);

/// Direct transliteration of the recursive game search: every guess, every
/// secret, recompute the surviving words, recurse. No memo, no class
/// deduplication. Guessing the secret itself ends the game.
bool brute_force_decide(const Dictionary& d, std::size_t max_guesses, GuessMode mode, const Caps& caps = {});

struct VerificationReport {
  std::string claim;
  std::string instance;
  std::map<std::string, std::int64_t> measured;
  bool pass = false;
  bool skipped = false;
  std::string witness;             // set on failure
  std::vector<std::string> trace;  // claim-specific diagnostics
  std::chrono::nanoseconds elapsed{0};
};

std::string describe(const SetFamily& f);

VerificationReport verify_lemma1(const SetFamily& f, std::size_t c, const Caps& caps = {});
/// Skipped (not failed) when the construction collides.
VerificationReport verify_thm1(const SetFamily& f, std::size_t c, const Caps& caps = {});
/// Uses graph_to_wordle(g) unless `dictionary` substitutes another one.
VerificationReport verify_thm2(const Graph& g, const Dictionary* dictionary = nullptr, const Caps& caps = {},
                               const std::string& name = "graph");
VerificationReport verify_lemma3(const Dictionary& d, const std::string& name = "dictionary");
/// Solver decide vs brute_force_decide for every l in 0..max_guesses, both modes.
VerificationReport verify_solver_oracle(const Dictionary& d, std::size_t max_guesses, const Caps& caps = {},
                                        const std::string& name = "dictionary");

/// Every family of distinct subsets of {1..n} (n <= max_n, empty set
/// included) with 1..max_sets members and full union, in a fixed order.
std::vector<SetFamily> enumerate_families(std::size_t max_n, std::size_t max_sets);

/// Random dictionary with `size` distinct words over sigma symbols named
/// A, B, C, ... (size is clamped to sigma^k).
Dictionary random_dictionary(std::mt19937_64& rng, std::size_t sigma, std::size_t k, std::size_t size);

/// Dictionary over symbols A, B, C, ... from explicit id words.
Dictionary dictionary_from_ids(std::size_t sigma, std::vector<Word> words);

/// Aggregate of many verifier runs; keeps the failing reports.
struct SweepResult {
  std::string claim;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<VerificationReport> failures;
  std::chrono::nanoseconds elapsed{0};

  void add(VerificationReport r);
  bool ok() const { return failed == 0; }
  VerificationReport summary() const;
};

SweepResult sweep_lemma1(std::size_t max_n, std::size_t max_sets, const std::vector<std::size_t>& c_values);
SweepResult sweep_thm1(std::size_t max_n, std::size_t max_sets, const std::vector<std::size_t>& c_values);
/// K5 and the circulants C_n(1,2) for each n in circulant_sizes.
SweepResult sweep_thm2(const std::vector<std::size_t>& circulant_sizes);
/// `count` random dictionaries with sigma in 1..max_sigma, k in 1..max_k and
/// up to max_size words.
SweepResult sweep_lemma3(std::uint64_t seed, std::size_t count, std::size_t max_sigma, std::size_t max_k,
                         std::size_t max_size);
/// Every dictionary of at most max_words words over Sigma^k for
/// sigma <= max_sigma, k <= max_k, checked for l <= max_guesses; then
/// `random_count` random instances of 7..12 words (sigma <= 4, k <= 3, l <= 3).
SweepResult sweep_solver_oracle(std::size_t max_sigma, std::size_t max_k, std::size_t max_words,
                                std::size_t max_guesses, std::uint64_t seed, std::size_t random_count);

}  // namespace wordle::oracles
