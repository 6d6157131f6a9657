#include "wordle/feasibility.hpp"

#include <algorithm>
#include <functional>

#include "wordle/marking.hpp"

namespace wordle {

FeasibleSet::FeasibleSet(const Dictionary& d, BitSet members) : dict_(&d), members_(std::move(members)) {
  if (members_.size() != d.size()) throw Error(ErrorCode::IncompatibleWords, "feasible set size differs from dictionary");
}

FeasibleSet FeasibleSet::full(const Dictionary& d) { return FeasibleSet(d, BitSet(d.size(), true)); }

namespace {

void check_step(const Word& candidate, const HistoryStep& step) {
  if (step.guess.size() != candidate.size() || step.marking.size() != candidate.size())
    throw Error(ErrorCode::IncompatibleWords, "history step length differs from candidate length");
}

bool contains_symbol(const Word& w, Symbol s) {
  return std::find(w.symbols.begin(), w.symbols.end(), s) != w.symbols.end();
}

bool positional_step(const Word& cand, const HistoryStep& step) {
  const Word& g = step.guess;
  const Marking& m = step.marking;
  const std::size_t k = cand.size();
  for (std::size_t t = 0; t < k; ++t) {
    const Symbol c = g[t];
    switch (m[t]) {
      case MarkColor::green:
        if (cand[t] != c) return false;  // 3
        break;
      case MarkColor::yellow: {
        if (cand[t] == c) return false;  // 2
        bool elsewhere = false;          // 4
        for (std::size_t s = 0; s < k; ++s) elsewhere |= (s != t && cand[s] == c);
        if (!elsewhere) return false;
        break;
      }
      case MarkColor::gray: {
        bool only_gray = true;  // 1
        for (std::size_t s = 0; s < k; ++s) only_gray &= !(g[s] == c && m[s] != MarkColor::gray);
        if (only_gray && contains_symbol(cand, c)) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

bool is_feasible_exact(const Word& candidate, const History& h) {
  for (const auto& step : h.steps) {
    check_step(candidate, step);
    if (mark(candidate, step.guess) != step.marking) return false;
  }
  return true;
}

bool is_feasible_positional(const Word& candidate, const History& h) {
  for (const auto& step : h.steps) {
    check_step(candidate, step);
    if (!positional_step(candidate, step)) return false;
  }
  return true;
}

FeasibleSet filter_feasible(const Dictionary& d, const History& h, FeasibilityMode mode) {
  BitSet bits(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Word& w = d.word(i);
    bool ok = mode == FeasibilityMode::exact ? is_feasible_exact(w, h) : is_feasible_positional(w, h);
    if (ok) bits.set(i);
  }
  return FeasibleSet(d, std::move(bits));
}

std::map<Marking, FeasibleSet> partition_by_marking(const FeasibleSet& f, const Word& guess) {
  const Dictionary& d = f.dictionary();
  if (guess.size() != d.k()) throw Error(ErrorCode::IncompatibleWords, "guess length differs from dictionary k");
  std::map<Marking, BitSet> bits;
  f.members().for_each([&](std::size_t i) {
    auto [it, _] = bits.try_emplace(mark(d.word(i), guess), d.size());
    it->second.set(i);
  });
  std::map<Marking, FeasibleSet> blocks;
  for (auto& [m, b] : bits) blocks.emplace(m, FeasibleSet(d, std::move(b)));
  return blocks;
}

std::vector<Word> all_words(std::size_t sigma, std::size_t k) {
  std::vector<Word> out;
  std::vector<Symbol> cur(k, 0);
  if (sigma == 0 || k == 0) return out;
  while (true) {
    out.emplace_back(cur);
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++cur[pos] < sigma) break;
      cur[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

DivergenceReport scan_feasibility_divergence(std::size_t sigma, std::size_t k, std::size_t max_dictionary,
                                             std::size_t max_samples) {
  DivergenceReport report;
  report.sigma = sigma;
  report.k = k;
  const std::vector<Word> words = all_words(sigma, k);
  const std::size_t n = words.size();
  if (n > 64) throw Error(ErrorCode::CapExceeded, "divergence scan limited to 64 words");

  // diverge[g * n + s] has bit c set when candidate c disagrees after (g, mark(s, g)).
  std::vector<std::uint64_t> diverge(n * n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t s = 0; s < n; ++s) {
      History h;
      h.steps.push_back({words[g], mark(words[s], words[g])});
      for (std::size_t c = 0; c < n; ++c) {
        ++report.triples_checked;
        bool exact = is_feasible_exact(words[c], h);
        bool positional = is_feasible_positional(words[c], h);
        if (exact == positional) continue;
        (positional ? report.positional_only : report.exact_only) += 1;
        diverge[g * n + s] |= std::uint64_t{1} << c;
        if (report.samples.size() < max_samples)
          report.samples.push_back({words[s], words[g], h.steps[0].marking, words[c], exact, positional});
      }
    }
  }

  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t start, std::uint64_t mask) {
    if (!chosen.empty()) {
      ++report.dictionaries_checked;
      bool differs = false;
      for (std::size_t g : chosen) {
        for (std::size_t s : chosen) differs |= (diverge[g * n + s] & mask) != 0;
      }
      if (differs) ++report.dictionaries_diverging;
    }
    if (chosen.size() == max_dictionary) return;
    for (std::size_t i = start; i < n; ++i) {
      chosen.push_back(i);
      walk(i + 1, mask | (std::uint64_t{1} << i));
      chosen.pop_back();
    }
  };
  walk(0, 0);
  return report;
}

}  // namespace wordle
