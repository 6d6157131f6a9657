#include "wordle/solver.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

#include "wordle/marking.hpp"

namespace wordle {

namespace {

using Clock = std::chrono::steady_clock;

// Everything known about one feasible set: losing for every l <= max_false,
// winning for every l >= min_true.
struct Bounds {
  std::uint32_t max_false = 0;
  std::uint32_t min_true = std::numeric_limits<std::uint32_t>::max();
};

struct ReplyClass {
  std::uint64_t code;
  BitSet members;
};

struct Split {
  std::size_t candidate;  // position in the guess pool
  std::size_t largest = 0;
  std::vector<ReplyClass> classes;
};

}  // namespace

const StrategyTree* StrategyTree::child(const Marking& m) const {
  for (std::size_t i = 0; i < markings.size(); ++i)
    if (markings[i] == m) return &children[i];
  return nullptr;
}

std::size_t StrategyTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

struct Solver::Context {
  const Dictionary& dict;
  const SolveOptions& opts;
  BitSet root_members;
  std::vector<std::size_t> secrets;  // local index -> dictionary index
  std::vector<std::size_t> pool;     // guess pool position -> dictionary index
  std::vector<std::size_t> pool_of_local;  // local index -> pool position
  std::vector<std::uint64_t> codes;  // pool.size() x secrets.size()
  std::uint64_t green = 0;

  std::unordered_map<BitSet, Bounds, BitSetHash> memo;
  std::shared_mutex memo_mu;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> hits{0};

  Context(const Dictionary& d, const SolveOptions& o, const FeasibleSet& f) : dict(d), opts(o), root_members(f.members()) {
    if (d.k() > Marking::kMaxCodeLength)
      throw Error(ErrorCode::IncompatibleWords, "solver supports words of at most 40 symbols");
    secrets = f.indices();
    if (opts.guess_mode == GuessMode::full_dictionary) {
      pool.resize(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) pool[i] = i;
      pool_of_local = secrets;
    } else {
      pool = secrets;
      pool_of_local.resize(secrets.size());
      for (std::size_t i = 0; i < secrets.size(); ++i) pool_of_local[i] = i;
    }
    const std::size_t m = secrets.size();
    codes.resize(pool.size() * m);
    for (std::size_t p = 0; p < pool.size(); ++p) {
      const Word& g = d.word(pool[p]);
      for (std::size_t r = 0; r < m; ++r) codes[p * m + r] = mark_code(d.word(secrets[r]).span(), g.span());
    }
    green = Marking::all_green(d.k()).code();
  }

  BitSet local(const FeasibleSet& f) const {
    BitSet out(secrets.size());
    for (std::size_t r = 0; r < secrets.size(); ++r)
      if (f.contains(secrets[r])) out.set(r);
    return out;
  }

  void tick() {
    std::uint64_t n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (opts.node_budget && n > *opts.node_budget)
      throw Error(ErrorCode::BudgetExceeded, "node budget of " + std::to_string(*opts.node_budget) + " exhausted");
  }

  // Largest per-position count of surviving symbols. Guessing feasible words
  // only, each position either pins its symbol or loses one, so this many
  // guesses always suffice.
  std::size_t symbol_ceiling(const BitSet& s) const {
    std::size_t best = 1;
    std::vector<Symbol> column;
    for (std::size_t i = 0; i < dict.k(); ++i) {
      column.clear();
      s.for_each([&](std::size_t r) { column.push_back(dict.word(secrets[r])[i]); });
      std::sort(column.begin(), column.end());
      best = std::max<std::size_t>(best, std::unique(column.begin(), column.end()) - column.begin());
    }
    return best;
  }

  std::vector<std::size_t> candidates(const BitSet& s) const {
    if (opts.guess_mode == GuessMode::full_dictionary) {
      std::vector<std::size_t> all(pool.size());
      for (std::size_t p = 0; p < pool.size(); ++p) all[p] = p;
      return all;
    }
    std::vector<std::size_t> out;
    s.for_each([&](std::size_t r) { out.push_back(pool_of_local[r]); });
    return out;
  }

  bool guess_in(std::size_t p, const BitSet& s) const {
    const std::size_t m = secrets.size();
    bool in = false;
    s.for_each([&](std::size_t r) { in |= codes[p * m + r] == green; });
    return in;
  }

  // Reply classes of s under pool guess p, largest first (ties by code).
  // Returns nullopt for a guess that cannot make progress: one class, and the
  // guess itself is not a member.
  std::optional<Split> split(std::size_t p, const BitSet& s) const {
    const std::size_t m = secrets.size();
    std::vector<std::pair<std::uint64_t, std::size_t>> tagged;
    s.for_each([&](std::size_t r) { tagged.emplace_back(codes[p * m + r], r); });
    std::sort(tagged.begin(), tagged.end());
    Split out{p, 0, {}};
    for (std::size_t i = 0; i < tagged.size();) {
      std::size_t j = i;
      ReplyClass c{tagged[i].first, BitSet(m)};
      for (; j < tagged.size() && tagged[j].first == tagged[i].first; ++j) c.members.set(tagged[j].second);
      out.largest = std::max(out.largest, j - i);
      out.classes.push_back(std::move(c));
      i = j;
    }
    if (out.classes.size() == 1 && out.classes[0].code != green) return std::nullopt;
    std::stable_sort(out.classes.begin(), out.classes.end(),
                     [](const ReplyClass& a, const ReplyClass& b) { return a.members.count() > b.members.count(); });
    return out;
  }

  bool wins(const Split& sp, std::uint32_t l) {
    if (l == 2) return sp.largest == 1;
    for (const auto& c : sp.classes) {
      if (c.code == green) continue;
      if (!solve(c.members, l - 1)) return false;
    }
    return true;
  }

  bool solve(const BitSet& s, std::uint32_t l) {
    tick();
    const std::size_t n = s.count();
    if (l == 0) return false;
    if (n == 1) return true;
    if (l == 1) return false;

    if (opts.memo_enabled) {
      std::shared_lock lock(memo_mu);
      auto it = memo.find(s);
      if (it != memo.end()) {
        bool known_true = l >= it->second.min_true;
        if (known_true || l <= it->second.max_false) {
          hits.fetch_add(1, std::memory_order_relaxed);
          return known_true;
        }
      }
    }

    bool result = search(s, l);

    if (opts.memo_enabled) {
      std::unique_lock lock(memo_mu);
      Bounds& b = memo[s];
      if (result)
        b.min_true = std::min(b.min_true, l);
      else
        b.max_false = std::max(b.max_false, l);
    }
    return result;
  }

  bool search(const BitSet& s, std::uint32_t l) {
    if (symbol_ceiling(s) <= l) return true;
    std::vector<Split> splits;
    for (std::size_t p : candidates(s)) {
      if (auto sp = split(p, s)) {
        if (l == 2 && sp->largest == 1) return true;
        splits.push_back(std::move(*sp));
      }
    }
    if (l == 2) return false;
    std::stable_sort(splits.begin(), splits.end(),
                     [](const Split& a, const Split& b) { return a.largest < b.largest; });
    for (const auto& sp : splits)
      if (wins(sp, l)) return true;
    return false;
  }

  // Lowest pool position that wins s in l, scanning in index order. With
  // allow_idle, a guess that leaves s unsplit counts when s is winnable in
  // l - 1.
  std::optional<std::size_t> first_winner(const BitSet& s, std::uint32_t l, unsigned threads, bool allow_idle) {
    if (l == 0) return std::nullopt;
    std::vector<std::size_t> cands = candidates(s);
    auto try_one = [&](std::size_t p) {
      if (s.count() == 1) return guess_in(p, s) || (allow_idle && l >= 2);
      if (l == 1) return false;
      auto sp = split(p, s);
      if (!sp) return allow_idle && solve(s, l - 1);
      return wins(*sp, l);
    };
    if (threads <= 1) {
      for (std::size_t p : cands)
        if (try_one(p)) return p;
      return std::nullopt;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{cands.size()};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < cands.size(); i = next.fetch_add(1)) {
          if (i >= best.load()) break;
          if (try_one(cands[i])) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
          }
        }
      } catch (...) {
        std::lock_guard g(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(cands.size());
      }
    };
    std::vector<std::jthread> pool_threads;
    for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(worker);
    pool_threads.clear();
    if (failure) std::rethrow_exception(failure);
    if (best.load() == cands.size()) return std::nullopt;
    return cands[best.load()];
  }

  StrategyTree build(const BitSet& s, std::uint32_t l) {
    StrategyTree node;
    const std::size_t m = secrets.size();
    if (s.count() == 1) {
      node.guess = secrets[s.first()];
      node.wins_on_green = true;
      return node;
    }
    auto p = first_winner(s, l, 1, false);
    if (!p) throw Error(ErrorCode::InvalidInstance, "strategy requested for a losing position");
    node.guess = pool[*p];
    node.wins_on_green = guess_in(*p, s);
    std::vector<std::pair<std::uint64_t, std::size_t>> tagged;
    s.for_each([&](std::size_t r) { tagged.emplace_back(codes[*p * m + r], r); });
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 0; i < tagged.size();) {
      BitSet cls(m);
      std::size_t j = i;
      for (; j < tagged.size() && tagged[j].first == tagged[i].first; ++j) cls.set(tagged[j].second);
      if (tagged[i].first != green) {
        node.markings.push_back(Marking::from_code(tagged[i].first, dict.k()));
        node.children.push_back(build(cls, l - 1));
      }
      i = j;
    }
    return node;
  }
};

Solver::Solver(const Dictionary& d, SolveOptions opts) : dict_(&d), opts_(opts) {
  if (opts_.node_budget && *opts_.node_budget == 0)
    throw Error(ErrorCode::InvalidInstance, "node budget must be positive");
}

Solver::~Solver() = default;

Solver::Context& Solver::root(const FeasibleSet& f) {
  if (&f.dictionary() != dict_) throw Error(ErrorCode::IncompatibleWords, "feasible set belongs to another dictionary");
  if (f.empty()) throw Error(ErrorCode::EmptyFeasibleSet, "no feasible words");
  if (!ctx_ || !(ctx_->root_members == f.members())) ctx_ = std::make_unique<Context>(*dict_, opts_, f);
  return *ctx_;
}

namespace {

template <class F>
auto timed(SolveStats& stats, std::atomic<std::uint64_t>& nodes, std::atomic<std::uint64_t>& hits, F&& f) {
  auto start = Clock::now();
  struct Sync {
    SolveStats& s;
    std::atomic<std::uint64_t>& n;
    std::atomic<std::uint64_t>& h;
    Clock::time_point t0;
    ~Sync() {
      s.nodes_expanded = n.load();
      s.memo_hits = h.load();
      s.elapsed += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    }
  } sync{stats, nodes, hits, start};
  return f();
}

}  // namespace

bool Solver::decide(std::size_t max_guesses) { return decide(FeasibleSet::full(*dict_), max_guesses); }

bool Solver::decide(const FeasibleSet& f, std::size_t max_guesses) {
  Context& c = root(f);
  auto l = static_cast<std::uint32_t>(max_guesses);
  return timed(stats_, c.nodes, c.hits, [&] {
    BitSet s = c.local(f);
    if (opts_.threads > 1 && l >= 2 && s.count() > 1) return c.first_winner(s, l, opts_.threads, false).has_value();
    return c.solve(s, l);
  });
}

std::optional<std::size_t> Solver::best_guess(const FeasibleSet& f, std::size_t max_guesses) {
  Context& c = root(f);
  return timed(stats_, c.nodes, c.hits, [&]() -> std::optional<std::size_t> {
    auto p = c.first_winner(c.local(f), static_cast<std::uint32_t>(max_guesses), std::max(1u, opts_.threads), true);
    if (!p) return std::nullopt;
    return c.pool[*p];
  });
}

std::optional<StrategyTree> Solver::strategy_tree(std::size_t max_guesses) {
  return strategy_tree(FeasibleSet::full(*dict_), max_guesses);
}

std::optional<StrategyTree> Solver::strategy_tree(const FeasibleSet& f, std::size_t max_guesses) {
  if (!decide(f, max_guesses)) return std::nullopt;
  Context& c = root(f);
  return timed(stats_, c.nodes, c.hits, [&] { return c.build(c.local(f), static_cast<std::uint32_t>(max_guesses)); });
}

std::size_t Solver::w_min() { return w_min(FeasibleSet::full(*dict_)); }

std::size_t Solver::w_min(const FeasibleSet& f) {
  for (std::size_t l = 1;; ++l)
    if (decide(f, l)) return l;
}

bool decide(const Dictionary& d, std::size_t max_guesses, const SolveOptions& opts) {
  return Solver(d, opts).decide(max_guesses);
}

std::optional<Word> best_guess(const Dictionary& d, const FeasibleSet& f, std::size_t max_guesses,
                               const SolveOptions& opts) {
  auto idx = Solver(d, opts).best_guess(f, max_guesses);
  if (!idx) return std::nullopt;
  return d.word(*idx);
}

std::optional<StrategyTree> strategy_tree(const Dictionary& d, std::size_t max_guesses, const SolveOptions& opts) {
  return Solver(d, opts).strategy_tree(max_guesses);
}

std::size_t w_min(const Dictionary& d, const SolveOptions& opts) { return Solver(d, opts).w_min(); }

bool decide_constant_alphabet(const Dictionary& d, std::size_t max_guesses, const SolveOptions& opts, bool* searched) {
  if (d.sigma() <= max_guesses && max_guesses >= 1) {
    if (searched) *searched = false;
    return true;
  }
  if (searched) *searched = true;
  return decide(d, max_guesses, opts);
}

std::optional<std::size_t> replay_strategy(const Dictionary& d, const StrategyTree& tree, const Word& secret) {
  const StrategyTree* node = &tree;
  for (std::size_t turn = 1;; ++turn) {
    Marking m = mark(secret, d.word(node->guess));
    if (m.is_all_green()) return node->wins_on_green ? std::optional<std::size_t>(turn) : std::nullopt;
    node = node->child(m);
    if (!node) return std::nullopt;
  }
}

bool strategy_wins_all(const Dictionary& d, const StrategyTree& tree, const FeasibleSet& f, std::size_t max_guesses) {
  bool ok = true;
  f.members().for_each([&](std::size_t i) {
    auto turns = replay_strategy(d, tree, d.word(i));
    ok &= turns.has_value() && *turns <= max_guesses;
  });
  return ok;
}

}  // namespace wordle
