#include "wordle/marking.hpp"

#include <array>
#include <string>

namespace wordle {

namespace {

void check_compatible(std::size_t secret_len, std::size_t guess_len) {
  if (secret_len != guess_len || secret_len == 0) {
    throw Error(ErrorCode::IncompatibleWords, "secret has length " + std::to_string(secret_len) +
                                                  ", guess has length " + std::to_string(guess_len));
  }
}

// Writes colors into `out` (length k). `used` is scratch of length k.
template <class ColorSpan, class UsedSpan>
void mark_into(std::span<const Symbol> secret, std::span<const Symbol> guess, ColorSpan out, UsedSpan used) {
  const std::size_t k = secret.size();
  for (std::size_t i = 0; i < k; ++i) {
    bool g = secret[i] == guess[i];
    out[i] = g ? MarkColor::green : MarkColor::gray;
    used[i] = g;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (secret[i] == guess[i]) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (!used[j] && guess[j] == secret[i]) {
        used[j] = true;
        out[j] = MarkColor::yellow;
        break;
      }
    }
  }
}

}  // namespace

Marking mark(const Word& secret, const Word& guess) {
  check_compatible(secret.size(), guess.size());
  const std::size_t k = secret.size();
  std::vector<MarkColor> colors(k);
  std::vector<char> used(k);
  mark_into(secret.span(), guess.span(), std::span<MarkColor>(colors), std::span<char>(used));
  return Marking(std::move(colors));
}

std::uint64_t mark_code(std::span<const Symbol> secret, std::span<const Symbol> guess) {
  check_compatible(secret.size(), guess.size());
  const std::size_t k = secret.size();
  if (k > Marking::kMaxCodeLength) throw Error(ErrorCode::IncompatibleWords, "word too long for marking codes");
  std::array<MarkColor, Marking::kMaxCodeLength> colors{};
  std::array<char, Marking::kMaxCodeLength> used{};
  mark_into(secret, guess, std::span<MarkColor>(colors.data(), k), std::span<char>(used.data(), k));
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < k; ++i) code = code * 3 + static_cast<std::uint64_t>(colors[i]);
  return code;
}

std::variant<Marking, OnePassConflict> mark_one_pass_literal(const Word& secret, const Word& guess) {
  check_compatible(secret.size(), guess.size());
  const std::size_t k = secret.size();
  std::vector<std::optional<MarkColor>> marks(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (secret[i] == guess[i]) {
      if (marks[i] && *marks[i] != MarkColor::green)
        return OnePassConflict{i, *marks[i], MarkColor::green};
      marks[i] = MarkColor::green;
      continue;
    }
    // min(S_i) with S_i = { j : p[j] = w[i], p[j] unmarked }
    for (std::size_t j = 0; j < k; ++j) {
      if (!marks[j] && guess[j] == secret[i]) {
        marks[j] = MarkColor::yellow;
        break;
      }
    }
  }
  std::vector<MarkColor> colors(k);
  for (std::size_t j = 0; j < k; ++j) colors[j] = marks[j].value_or(MarkColor::gray);
  return Marking(std::move(colors));
}

History simulate_game(const Word& secret, std::span<const Word> guesses) {
  History h;
  for (const Word& g : guesses) {
    Marking m = mark(secret, g);
    bool win = m.is_all_green();
    h.steps.push_back({g, std::move(m)});
    if (win) break;
  }
  return h;
}

}  // namespace wordle
