#include "wordle/strategies.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wordle/marking.hpp"

namespace wordle {

std::size_t largest_reply_class(const FeasibleSet& f, const Word& guess) {
  const Dictionary& d = f.dictionary();
  std::vector<std::uint64_t> codes;
  codes.reserve(f.count());
  f.members().for_each([&](std::size_t i) { codes.push_back(mark_code(d.word(i).span(), guess.span())); });
  std::sort(codes.begin(), codes.end());
  std::size_t best = 0;
  for (std::size_t i = 0; i < codes.size();) {
    std::size_t j = i;
    while (j < codes.size() && codes[j] == codes[i]) ++j;
    best = std::max(best, j - i);
    i = j;
  }
  return best;
}

namespace {

std::size_t greedy(const Dictionary& d, const FeasibleSet& f, unsigned threads) {
  const std::size_t n = d.size();
  std::vector<std::size_t> score(n);
  if (threads <= 1) {
    for (std::size_t g = 0; g < n; ++g) score[g] = largest_reply_class(f, d.word(g));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t g = next.fetch_add(1); g < n; g = next.fetch_add(1)) score[g] = largest_reply_class(f, d.word(g));
      });
    }
  }
  return static_cast<std::size_t>(std::min_element(score.begin(), score.end()) - score.begin());
}

}  // namespace

std::size_t next_guess(const Policy& policy, const Dictionary& d, const FeasibleSet& f) {
  if (f.empty()) throw Error(ErrorCode::EmptyFeasibleSet, "no feasible words left");
  if (policy.kind == PolicyKind::any_feasible || f.count() == 1) return f.members().first();
  return greedy(d, f, policy.threads);
}

std::vector<std::vector<Symbol>> surviving_symbols(const FeasibleSet& f) {
  const Dictionary& d = f.dictionary();
  std::vector<std::vector<Symbol>> out(d.k());
  f.members().for_each([&](std::size_t i) {
    for (std::size_t p = 0; p < d.k(); ++p) out[p].push_back(d.word(i)[p]);
  });
  for (auto& col : out) {
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
  }
  return out;
}

bool ShrinkStep::law_holds() const {
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (after[i].size() != 1 && after[i].size() + 1 > before[i].size()) return false;
    if (!std::includes(before[i].begin(), before[i].end(), after[i].begin(), after[i].end())) return false;
  }
  return true;
}

Transcript run_policy(const Policy& policy, const Dictionary& d, const Word& secret) {
  if (!d.index_of(secret)) throw Error(ErrorCode::InvalidInstance, "secret is not a dictionary word");
  Transcript t;
  FeasibleSet f = FeasibleSet::full(d);
  while (true) {
    const std::size_t g = next_guess(policy, d, f);
    t.guesses_feasible &= f.contains(g);
    Marking m = mark(secret, d.word(g));
    const bool win = m.is_all_green();
    t.history.steps.push_back({d.word(g), std::move(m)});
    ++t.guesses;
    if (win) break;
    // Filter the current set by the latest step; earlier steps already hold.
    History last{{t.history.steps.back()}};
    BitSet next(d.size());
    f.members().for_each([&](std::size_t i) {
      if (is_feasible_exact(d.word(i), last)) next.set(i);
    });
    FeasibleSet after(d, std::move(next));
    t.shrink.push_back({surviving_symbols(f), surviving_symbols(after)});
    f = std::move(after);
  }
  return t;
}

}  // namespace wordle
