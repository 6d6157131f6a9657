#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wordle/error.hpp"

namespace wordle {

/// Dense symbol id. Dictionary words use ids below the alphabet size; guesses
/// typed by a user may carry "foreign" ids at or above it (letters the
/// dictionary never uses).
using Symbol = std::uint32_t;

/// Ordered set of distinct, non-empty symbol names. Id i names symbols()[i].
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const;
  std::optional<Symbol> find(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> ids_;
};

struct Word {
  std::vector<Symbol> symbols;

  Word() = default;
  explicit Word(std::vector<Symbol> s) : symbols(std::move(s)) {}
  Word(std::initializer_list<Symbol> s) : symbols(s) {}

  std::size_t size() const noexcept { return symbols.size(); }
  Symbol operator[](std::size_t i) const { return symbols[i]; }
  std::span<const Symbol> span() const noexcept { return symbols; }

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

enum class DictionaryFormat { chars, tokens };

/// Immutable list of distinct equal-length words over an alphabet.
class Dictionary {
 public:
  /// Validates the invariants: non-empty, uniform length, ids in range, no
  /// duplicates.
  Dictionary(Alphabet alphabet, std::vector<Word> words);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t sigma() const noexcept { return alphabet_.size(); }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return words_.size(); }
  const Word& word(std::size_t index) const { return words_.at(index); }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::optional<std::size_t> index_of(const Word& w) const;

  /// Encodes text as a word of this dictionary's alphabet. With
  /// `allow_foreign`, unknown symbols receive distinct ids >= sigma() instead
  /// of raising InvalidSymbol; the length must still equal k().
  Word encode(std::string_view text, DictionaryFormat format,
              bool allow_foreign = false) const;
  /// Renders a word; foreign ids print as "?".
  std::string render(const Word& w, DictionaryFormat format) const;
  /// Renders in chars format when every symbol name is one character,
  /// otherwise in tokens format.
  std::string render(const Word& w) const;
  bool single_char_symbols() const noexcept;

  std::string serialize(DictionaryFormat format) const;

 private:
  Alphabet alphabet_;
  std::size_t k_ = 0;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// Splits a line into symbol names: UTF-8 code points (chars) or
/// comma-separated, whitespace-trimmed tokens (tokens).
std::vector<std::string> split_symbols(std::string_view line, DictionaryFormat format);

/// One word per line. The alphabet is the sorted set of distinct symbols seen.
Dictionary parse_dictionary(std::string_view text, DictionaryFormat format);
Dictionary load_dictionary(const std::string& path, DictionaryFormat format);
DictionaryFormat parse_format(std::string_view name);

enum class MarkColor : std::uint8_t { gray = 0, yellow = 1, green = 2 };

char to_digit(MarkColor c) noexcept;

/// Per-position feedback for one guess.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<MarkColor> colors) : colors_(std::move(colors)) {}

  static Marking all_green(std::size_t k);
  /// Inverse of code(); k fixes the number of digits.
  static Marking from_code(std::uint64_t code, std::size_t k);

  std::size_t size() const noexcept { return colors_.size(); }
  MarkColor operator[](std::size_t i) const { return colors_[i]; }
  const std::vector<MarkColor>& colors() const noexcept { return colors_; }
  bool is_all_green() const noexcept;

  /// Base-3 value of the digit string, most significant digit first. Only
  /// defined for k <= kMaxCodeLength.
  std::uint64_t code() const;

  auto operator<=>(const Marking&) const = default;
  bool operator==(const Marking&) const = default;

  static constexpr std::size_t kMaxCodeLength = 40;

 private:
  std::vector<MarkColor> colors_;
};

std::string marking_to_digits(const Marking& m);
Marking parse_marking(std::string_view text, std::size_t k);

struct HistoryStep {
  Word guess;
  Marking marking;
};

struct History {
  std::vector<HistoryStep> steps;

  std::size_t size() const noexcept { return steps.size(); }
  bool empty() const noexcept { return steps.empty(); }
  /// True when the last step is all green.
  bool won() const noexcept;
};

}  // namespace wordle
