#include "wordle/core.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace wordle {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DuplicateWord: return "DuplicateWord";
    case ErrorCode::EmptyDictionary: return "EmptyDictionary";
    case ErrorCode::InvalidSymbol: return "InvalidSymbol";
    case ErrorCode::MarkingParseError: return "MarkingParseError";
    case ErrorCode::IncompatibleWords: return "IncompatibleWords";
    case ErrorCode::EmptyFeasibleSet: return "EmptyFeasibleSet";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotFourRegular: return "NotFourRegular";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
  }
  return "Unknown";
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error(ErrorCode::InvalidSymbol, "empty symbol name");
    if (!ids_.emplace(names_[i], static_cast<Symbol>(i)).second)
      throw Error(ErrorCode::InvalidSymbol, "repeated symbol name '" + names_[i] + "'");
  }
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= names_.size()) throw Error(ErrorCode::InvalidSymbol, "symbol id out of range");
  return names_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Symbol s : w.symbols) {
    h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Dictionary::Dictionary(Alphabet alphabet, std::vector<Word> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
  if (words_.empty()) throw Error(ErrorCode::EmptyDictionary, "dictionary has no words");
  k_ = words_.front().size();
  if (k_ == 0) throw Error(ErrorCode::LengthMismatch, "words must be non-empty");
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word& w = words_[i];
    if (w.size() != k_) {
      throw Error(ErrorCode::LengthMismatch, "word " + std::to_string(i + 1) + " has length " +
                                                 std::to_string(w.size()) + ", expected " +
                                                 std::to_string(k_));
    }
    for (Symbol s : w.symbols) {
      if (s >= alphabet_.size())
        throw Error(ErrorCode::InvalidSymbol, "word " + std::to_string(i + 1) + " uses an unknown symbol");
    }
    if (!index_.emplace(w, i).second)
      throw Error(ErrorCode::DuplicateWord, "duplicate word '" + render(w) + "'");
  }
}

std::optional<std::size_t> Dictionary::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Word Dictionary::encode(std::string_view text, DictionaryFormat format, bool allow_foreign) const {
  std::vector<std::string> names = split_symbols(text, format);
  if (names.size() != k_) {
    throw Error(ErrorCode::LengthMismatch, "'" + std::string(text) + "' has " +
                                               std::to_string(names.size()) + " symbols, expected " +
                                               std::to_string(k_));
  }
  std::vector<std::string> foreign;
  Word w;
  w.symbols.reserve(k_);
  for (const auto& name : names) {
    if (auto id = alphabet_.find(name)) {
      w.symbols.push_back(*id);
      continue;
    }
    if (!allow_foreign) throw Error(ErrorCode::InvalidSymbol, "unknown symbol '" + name + "'");
    auto it = std::find(foreign.begin(), foreign.end(), name);
    if (it == foreign.end()) {
      foreign.push_back(name);
      it = foreign.end() - 1;
    }
    w.symbols.push_back(static_cast<Symbol>(alphabet_.size() + (it - foreign.begin())));
  }
  return w;
}

std::string Dictionary::render(const Word& w, DictionaryFormat format) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (format == DictionaryFormat::tokens && i > 0) out += ',';
    out += w[i] < alphabet_.size() ? alphabet_.name(w[i]) : std::string("?");
  }
  return out;
}

bool Dictionary::single_char_symbols() const noexcept {
  return std::all_of(alphabet_.names().begin(), alphabet_.names().end(),
                     [](const std::string& n) { return split_symbols(n, DictionaryFormat::chars).size() == 1; });
}

std::string Dictionary::render(const Word& w) const {
  return render(w, single_char_symbols() ? DictionaryFormat::chars : DictionaryFormat::tokens);
}

std::string Dictionary::serialize(DictionaryFormat format) const {
  if (format == DictionaryFormat::chars && !single_char_symbols())
    throw Error(ErrorCode::InvalidSymbol, "chars format needs single-character symbols");
  std::string out;
  for (const Word& w : words_) {
    out += render(w, format);
    out += '\n';
  }
  return out;
}

namespace {

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xe) return 3;
  if ((lead >> 3) == 0x1e) return 4;
  return 1;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> split_symbols(std::string_view line, DictionaryFormat format) {
  std::vector<std::string> out;
  if (format == DictionaryFormat::chars) {
    for (std::size_t i = 0; i < line.size();) {
      std::size_t n = std::min(utf8_length(static_cast<unsigned char>(line[i])), line.size() - i);
      out.emplace_back(line.substr(i, n));
      i += n;
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string_view tok = trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (tok.empty()) throw Error(ErrorCode::InvalidSymbol, "empty token in '" + std::string(line) + "'");
    out.emplace_back(tok);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Dictionary parse_dictionary(std::string_view text, DictionaryFormat format) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) rows.push_back(split_symbols(line, format));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (rows.empty()) throw Error(ErrorCode::EmptyDictionary, "no words in input");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) {
      throw Error(ErrorCode::LengthMismatch, "line " + std::to_string(i + 1) + " has " +
                                                 std::to_string(rows[i].size()) + " symbols, expected " +
                                                 std::to_string(rows[0].size()));
    }
  }
  std::set<std::string> distinct;
  for (const auto& row : rows) distinct.insert(row.begin(), row.end());
  Alphabet alphabet(std::vector<std::string>(distinct.begin(), distinct.end()));
  std::vector<Word> words;
  words.reserve(rows.size());
  for (const auto& row : rows) {
    Word w;
    for (const auto& name : row) w.symbols.push_back(*alphabet.find(name));
    words.push_back(std::move(w));
  }
  return Dictionary(std::move(alphabet), std::move(words));
}

Dictionary load_dictionary(const std::string& path, DictionaryFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInstance, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dictionary(ss.str(), format);
}

DictionaryFormat parse_format(std::string_view name) {
  if (name == "chars") return DictionaryFormat::chars;
  if (name == "tokens") return DictionaryFormat::tokens;
  throw Error(ErrorCode::InvalidInstance, "unknown dictionary format '" + std::string(name) + "'");
}

char to_digit(MarkColor c) noexcept { return static_cast<char>('0' + static_cast<int>(c)); }

Marking Marking::all_green(std::size_t k) { return Marking(std::vector<MarkColor>(k, MarkColor::green)); }

Marking Marking::from_code(std::uint64_t code, std::size_t k) {
  std::vector<MarkColor> colors(k);
  for (std::size_t i = k; i-- > 0;) {
    colors[i] = static_cast<MarkColor>(code % 3);
    code /= 3;
  }
  return Marking(std::move(colors));
}

bool Marking::is_all_green() const noexcept {
  return std::all_of(colors_.begin(), colors_.end(), [](MarkColor c) { return c == MarkColor::green; });
}

std::uint64_t Marking::code() const {
  if (colors_.size() > kMaxCodeLength)
    throw Error(ErrorCode::IncompatibleWords, "marking too long to encode");
  std::uint64_t code = 0;
  for (MarkColor c : colors_) code = code * 3 + static_cast<std::uint64_t>(c);
  return code;
}

std::string marking_to_digits(const Marking& m) {
  std::string out;
  out.reserve(m.size());
  for (MarkColor c : m.colors()) out += to_digit(c);
  return out;
}

Marking parse_marking(std::string_view text, std::size_t k) {
  if (text.size() != k) {
    throw Error(ErrorCode::MarkingParseError, "'" + std::string(text) + "' has " + std::to_string(text.size()) +
                                                  " digits, expected " + std::to_string(k));
  }
  std::vector<MarkColor> colors;
  colors.reserve(k);
  for (char ch : text) {
    if (ch < '0' || ch > '2')
      throw Error(ErrorCode::MarkingParseError, std::string("unexpected character '") + ch + "'");
    colors.push_back(static_cast<MarkColor>(ch - '0'));
  }
  return Marking(std::move(colors));
}

bool History::won() const noexcept { return !steps.empty() && steps.back().marking.is_all_green(); }

}  // namespace wordle
