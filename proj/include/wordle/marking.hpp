#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "wordle/core.hpp"

namespace wordle {

/// Feedback for `guess` when `secret` is hidden. Greens are assigned first;
/// then each non-green secret position, in ascending order, yellow-marks the
/// leftmost still-unmarked guess position holding the same symbol. Everything
/// left over is gray.
Marking mark(const Word& secret, const Word& guess);

/// Same as mark(), returning Marking::code() without allocating. k must be at
/// most Marking::kMaxCodeLength.
std::uint64_t mark_code(std::span<const Symbol> secret, std::span<const Symbol> guess);

/// Raised by the literal single-sweep procedure when a green assignment hits a
/// position that an earlier step already marked yellow. Positions are 0-based.
struct OnePassConflict {
  std::size_t position;
  MarkColor prior_color;
  MarkColor attempted_color;

  bool operator==(const OnePassConflict&) const = default;
};

/// Single sweep over secret indices: green when w[i] = p[i], otherwise yellow
/// on the smallest unmarked j with p[j] = w[i]. Returns the first conflict if
/// the sweep tries to re-mark a position.
std::variant<Marking, OnePassConflict> mark_one_pass_literal(const Word& secret, const Word& guess);

/// Replays guesses against a secret, stopping after the first all-green row.
History simulate_game(const Word& secret, std::span<const Word> guesses);

}  // namespace wordle
