#include "wordle/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "wordle/feasibility.hpp"
#include "wordle/strategies.hpp"

namespace wordle::oracles {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::uint64_t> set_masks(const SetFamily& f) {
  if (f.universe > 64) throw Error(ErrorCode::CapExceeded, "brute force limited to universes of 64 elements");
  std::vector<std::uint64_t> masks;
  for (const auto& s : f.sets) {
    std::uint64_t m = 0;
    for (std::size_t u : s) m |= std::uint64_t{1} << (u - 1);
    masks.push_back(m);
  }
  return masks;
}

// Smallest number of uncovered elements over sub-families of at most c sets.
std::size_t min_uncovered(const SetFamily& f, std::size_t c, const Caps& caps) {
  if (f.sets.size() > caps.max_sets)
    throw Error(ErrorCode::CapExceeded, std::to_string(f.sets.size()) + " sets exceed the cap of " +
                                            std::to_string(caps.max_sets));
  const auto masks = set_masks(f);
  const std::uint64_t all = f.universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.universe) - 1;
  std::size_t best = f.universe;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << masks.size()); ++pick) {
    if (static_cast<std::size_t>(std::popcount(pick)) > c) continue;
    std::uint64_t cover = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (pick >> i & 1) cover |= masks[i];
    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(all & ~cover)));
  }
  return best;
}

std::vector<std::size_t> min_dominating_set(const Graph& g, const Caps& caps) {
  if (g.n > caps.max_vertices)
    throw Error(ErrorCode::CapExceeded, std::to_string(g.n) + " vertices exceed the cap of " +
                                            std::to_string(caps.max_vertices));
  std::vector<std::uint64_t> closed(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (std::size_t u : g.adjacency[v]) closed[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t all = (std::uint64_t{1} << g.n) - 1;
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> choose = [&](std::size_t start, std::size_t left,
                                                                            std::uint64_t dom) {
    if (left == 0) return dom == all;
    for (std::size_t v = start; v < g.n; ++v) {
      pick.push_back(v);
      if (choose(v + 1, left - 1, dom | closed[v])) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 0; size <= g.n; ++size) {
    pick.clear();
    if (choose(0, size, 0)) return pick;
  }
  return pick;
}

std::string join_ids(const std::vector<std::size_t>& ids, std::size_t offset = 1) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i] + offset);
  return out + "}";
}

struct Stopwatch {
  Clock::time_point t0 = Clock::now();
  std::chrono::nanoseconds lap() const { return Clock::now() - t0; }
};

}  // namespace

bool brute_force_set_cover(const SetFamily& f, std::size_t c, const Caps& caps) {
  return min_uncovered(f, c, caps) == 0;
}

bool brute_force_asc(const SetFamily& f, std::size_t c, const Caps& caps) { return min_uncovered(f, c, caps) <= 1; }

std::size_t brute_force_gamma(const Graph& g, const Caps& caps) { return min_dominating_set(g, caps).size(); }

Marking count_marking(const Word& secret, const Word& guess) {
  if (secret.size() != guess.size()) throw Error(ErrorCode::IncompatibleWords, "length mismatch");
  const std::size_t k = secret.size();
  std::map<Symbol, std::size_t> spare;  // secret symbols not matched in place
  for (std::size_t i = 0; i < k; ++i)
    if (secret[i] != guess[i]) ++spare[secret[i]];
  std::vector<MarkColor> colors(k, MarkColor::gray);
  for (std::size_t j = 0; j < k; ++j) {
    if (secret[j] == guess[j]) {
      colors[j] = MarkColor::green;
    } else if (auto it = spare.find(guess[j]); it != spare.end() && it->second > 0) {
      --it->second;
      colors[j] = MarkColor::yellow;
    }
  }
  return Marking(std::move(colors));
}

namespace {

bool transliterated(const std::vector<Word>& words, const std::vector<std::size_t>& current, std::size_t l,
                    GuessMode mode) {
  if (l == 0) return false;
  if (current.size() == 1) return true;
  std::vector<std::size_t> guesses;
  if (mode == GuessMode::feasible_only) {
    guesses = current;
  } else {
    for (std::size_t i = 0; i < words.size(); ++i) guesses.push_back(i);
  }
  for (std::size_t p : guesses) {
    bool potential = true;
    for (std::size_t w : current) {
      if (w == p) continue;
      const Marking m = count_marking(words[w], words[p]);
      std::vector<std::size_t> next;
      for (std::size_t q : current)
        if (count_marking(words[q], words[p]) == m) next.push_back(q);
      if (!transliterated(words, next, l - 1, mode)) {
        potential = false;
        break;
      }
    }
    if (potential) return true;
  }
  return false;
}

}  // namespace

bool brute_force_decide(const Dictionary& d, std::size_t max_guesses, GuessMode mode, const Caps& caps) {
  if (d.size() > caps.max_words || max_guesses > caps.max_guesses) {
    throw Error(ErrorCode::CapExceeded, "brute-force game search capped at " + std::to_string(caps.max_words) +
                                            " words and " + std::to_string(caps.max_guesses) + " guesses");
  }
  std::vector<std::size_t> all(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) all[i] = i;
  return transliterated(d.words(), all, max_guesses, mode);
}

std::string describe(const SetFamily& f) {
  std::ostringstream os;
  os << "n=" << f.universe << " F={";
  for (std::size_t i = 0; i < f.sets.size(); ++i) {
    os << (i ? "," : "") << "{";
    for (std::size_t j = 0; j < f.sets[i].size(); ++j) os << (j ? "," : "") << f.sets[i][j];
    os << "}";
  }
  os << "}";
  return os.str();
}

VerificationReport verify_lemma1(const SetFamily& f, std::size_t c, const Caps& caps) {
  Stopwatch sw;
  VerificationReport r;
  r.claim = "lemma1";
  r.instance = describe(f) + " c=" + std::to_string(c);
  const bool sc = brute_force_set_cover(f, c, caps);
  const SetFamily doubled = setcover_to_asc(f);
  const bool asc = brute_force_asc(doubled, c, caps);
  r.measured = {{"set_cover", sc}, {"almost_set_cover", asc}, {"c", static_cast<std::int64_t>(c)}};
  r.pass = sc == asc;
  if (!r.pass) r.witness = r.instance + " doubled " + describe(doubled);
  r.elapsed = sw.lap();
  return r;
}

VerificationReport verify_thm1(const SetFamily& f, std::size_t c, const Caps& caps) {
  Stopwatch sw;
  VerificationReport r;
  r.claim = "thm1";
  r.instance = describe(f) + " c=" + std::to_string(c);
  std::optional<GadgetInstance> gadget;
  try {
    gadget.emplace(asc_to_wordle(f, c));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DuplicateWord) throw;
    r.skipped = true;
    r.pass = true;
    r.trace.push_back(std::string("construction collides: ") + e.what());
    r.elapsed = sw.lap();
    return r;
  }
  const bool asc = brute_force_asc(f, c, caps);
  Solver solver(gadget->dictionary, SolveOptions{.guess_mode = GuessMode::full_dictionary});
  const bool game = solver.decide(gadget->max_guesses);
  r.measured = {{"almost_set_cover", asc},
                {"wordle", game},
                {"words", static_cast<std::int64_t>(gadget->dictionary.size())},
                {"max_guesses", static_cast<std::int64_t>(gadget->max_guesses)}};
  bool sound = true;
  if (game) {
    auto tree = solver.strategy_tree(gadget->max_guesses);
    sound = tree && strategy_wins_all(gadget->dictionary, *tree, FeasibleSet::full(gadget->dictionary),
                                      gadget->max_guesses);
    r.measured["strategy_sound"] = sound;
  }
  r.pass = asc == game && sound;
  if (!r.pass) r.witness = r.instance + " dictionary:\n" + gadget->dictionary.serialize(DictionaryFormat::tokens);
  r.elapsed = sw.lap();
  return r;
}

VerificationReport verify_thm2(const Graph& g, const Dictionary* dictionary, const Caps& caps,
                               const std::string& name) {
  Stopwatch sw;
  VerificationReport r;
  r.claim = "thm2";
  r.instance = name + " n=" + std::to_string(g.n) + (dictionary ? " (substituted dictionary)" : "");
  std::optional<Dictionary> built;
  if (!dictionary) dictionary = &built.emplace(graph_to_wordle(g));
  const auto dom = min_dominating_set(g, caps);
  const std::size_t gamma = dom.size();
  Solver solver(*dictionary, SolveOptions{.guess_mode = GuessMode::full_dictionary});
  const std::size_t w = solver.w_min();
  auto tree = solver.strategy_tree(w);
  const bool sound = tree && strategy_wins_all(*dictionary, *tree, FeasibleSet::full(*dictionary), w);
  r.measured = {{"gamma", static_cast<std::int64_t>(gamma)},
                {"w_min", static_cast<std::int64_t>(w)},
                {"words", static_cast<std::int64_t>(dictionary->size())},
                {"strategy_sound", sound}};
  r.pass = gamma <= w && w <= gamma + 4 && sound;
  r.trace.push_back("minimum dominating set " + join_ids(dom));
  if (!r.pass) {
    r.witness = "gamma=" + std::to_string(gamma) + " via " + join_ids(dom) + ", W=" + std::to_string(w) +
                " on dictionary:\n" + dictionary->serialize(DictionaryFormat::tokens);
  }
  r.elapsed = sw.lap();
  return r;
}

VerificationReport verify_lemma3(const Dictionary& d, const std::string& name) {
  Stopwatch sw;
  VerificationReport r;
  r.claim = "lemma3";
  r.instance = name + " |D|=" + std::to_string(d.size()) + " k=" + std::to_string(d.k()) +
               " sigma=" + std::to_string(d.sigma());
  std::size_t worst = 0, worst_secret = 0, violations = 0, infeasible = 0;
  std::optional<std::size_t> first_bad;
  for (std::size_t s = 0; s < d.size(); ++s) {
    Transcript t = run_policy(Policy{PolicyKind::any_feasible}, d, d.word(s));
    if (t.guesses > worst) {
      worst = t.guesses;
      worst_secret = s;
    }
    bool law = std::all_of(t.shrink.begin(), t.shrink.end(), [](const ShrinkStep& st) { return st.law_holds(); });
    violations += !law;
    infeasible += !t.guesses_feasible;
    if ((!law || !t.guesses_feasible || t.guesses > d.sigma()) && !first_bad) first_bad = s;
  }
  // S(i) size trace for the slowest secret.
  Transcript t = run_policy(Policy{PolicyKind::any_feasible}, d, d.word(worst_secret));
  for (std::size_t step = 0; step < t.shrink.size(); ++step) {
    std::string line = "secret " + d.render(d.word(worst_secret)) + " guess " + std::to_string(step + 1) + " " +
                       d.render(t.history.steps[step].guess) + " |S(i)|:";
    for (std::size_t i = 0; i < d.k(); ++i)
      line += " " + std::to_string(t.shrink[step].before[i].size()) + "->" +
              std::to_string(t.shrink[step].after[i].size());
    r.trace.push_back(std::move(line));
  }
  r.measured = {{"max_guesses", static_cast<std::int64_t>(worst)},
                {"sigma", static_cast<std::int64_t>(d.sigma())},
                {"shrink_violations", static_cast<std::int64_t>(violations)},
                {"infeasible_guesses", static_cast<std::int64_t>(infeasible)}};
  r.pass = worst <= d.sigma() && violations == 0 && infeasible == 0;
  if (first_bad) r.witness = "secret " + d.render(d.word(*first_bad));
  r.elapsed = sw.lap();
  return r;
}

VerificationReport verify_solver_oracle(const Dictionary& d, std::size_t max_guesses, const Caps& caps,
                                        const std::string& name) {
  Stopwatch sw;
  VerificationReport r;
  r.claim = "solver-oracle";
  r.instance = name + " |D|=" + std::to_string(d.size()) + " k=" + std::to_string(d.k()) +
               " sigma=" + std::to_string(d.sigma());
  std::int64_t mismatches = 0, positives = 0, unsound = 0, checked = 0;
  for (GuessMode mode : {GuessMode::full_dictionary, GuessMode::feasible_only}) {
    Solver solver(d, SolveOptions{.guess_mode = mode});
    for (std::size_t l = 0; l <= max_guesses; ++l) {
      const bool fast = solver.decide(l);
      const bool slow = brute_force_decide(d, l, mode, caps);
      ++checked;
      if (fast != slow) {
        ++mismatches;
        if (r.witness.empty()) {
          r.witness = std::string(mode == GuessMode::full_dictionary ? "full" : "feasible") + " l=" +
                      std::to_string(l) + " solver=" + std::to_string(fast) + " oracle=" + std::to_string(slow) +
                      " dictionary:\n" + d.serialize(DictionaryFormat::tokens);
        }
      }
      if (fast) {
        ++positives;
        auto tree = solver.strategy_tree(l);
        if (!tree || !strategy_wins_all(d, *tree, FeasibleSet::full(d), l)) ++unsound;
      }
    }
  }
  r.measured = {{"checked", checked}, {"mismatches", mismatches}, {"positives", positives}, {"unsound_trees", unsound}};
  r.pass = mismatches == 0 && unsound == 0;
  r.elapsed = sw.lap();
  return r;
}

std::vector<SetFamily> enumerate_families(std::size_t max_n, std::size_t max_sets) {
  std::vector<SetFamily> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t subsets = std::size_t{1} << n;
    const std::size_t full = subsets - 1;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> walk = [&](std::size_t start) {
      if (!pick.empty()) {
        std::size_t cover = 0;
        for (std::size_t m : pick) cover |= m;
        if (cover == full) {
          std::vector<std::vector<std::size_t>> sets;
          for (std::size_t m : pick) {
            std::vector<std::size_t> s;
            for (std::size_t u = 0; u < n; ++u)
              if (m >> u & 1) s.push_back(u + 1);
            sets.push_back(std::move(s));
          }
          out.push_back(make_set_family(n, std::move(sets)));
        }
      }
      if (pick.size() == max_sets) return;
      for (std::size_t m = start; m < subsets; ++m) {
        pick.push_back(m);
        walk(m + 1);
        pick.pop_back();
      }
    };
    walk(0);
  }
  return out;
}

Dictionary dictionary_from_ids(std::size_t sigma, std::vector<Word> words) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sigma; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
  return Dictionary(Alphabet(std::move(names)), std::move(words));
}

Dictionary random_dictionary(std::mt19937_64& rng, std::size_t sigma, std::size_t k, std::size_t size) {
  if (sigma == 0 || sigma > 26) throw Error(ErrorCode::InvalidInstance, "random dictionaries use 1..26 symbols");
  double space = 1;
  for (std::size_t i = 0; i < k; ++i) space *= static_cast<double>(sigma);
  size = std::min<std::size_t>(size, static_cast<std::size_t>(std::min(space, 1e9)));
  std::uniform_int_distribution<Symbol> pick(0, static_cast<Symbol>(sigma - 1));
  std::set<Word> seen;
  std::vector<Word> words;
  while (words.size() < size) {
    Word w;
    for (std::size_t i = 0; i < k; ++i) w.symbols.push_back(pick(rng));
    if (seen.insert(w).second) words.push_back(std::move(w));
  }
  return dictionary_from_ids(sigma, std::move(words));
}

void SweepResult::add(VerificationReport r) {
  ++instances;
  elapsed += r.elapsed;
  if (r.skipped) {
    ++skipped;
  } else if (r.pass) {
    ++passed;
  } else {
    ++failed;
    failures.push_back(std::move(r));
  }
}

VerificationReport SweepResult::summary() const {
  VerificationReport r;
  r.claim = claim;
  r.instance = "sweep";
  r.measured = {{"instances", static_cast<std::int64_t>(instances)},
                {"passed", static_cast<std::int64_t>(passed)},
                {"failed", static_cast<std::int64_t>(failed)},
                {"skipped", static_cast<std::int64_t>(skipped)}};
  r.pass = ok();
  if (!failures.empty()) r.witness = failures.front().instance;
  r.elapsed = elapsed;
  return r;
}

SweepResult sweep_lemma1(std::size_t max_n, std::size_t max_sets, const std::vector<std::size_t>& c_values) {
  SweepResult out{.claim = "lemma1"};
  for (const auto& f : enumerate_families(max_n, max_sets))
    for (std::size_t c : c_values) out.add(verify_lemma1(f, c));
  return out;
}

SweepResult sweep_thm1(std::size_t max_n, std::size_t max_sets, const std::vector<std::size_t>& c_values) {
  SweepResult out{.claim = "thm1"};
  for (const auto& f : enumerate_families(max_n, max_sets))
    for (std::size_t c : c_values) out.add(verify_thm1(f, c));
  return out;
}

SweepResult sweep_thm2(const std::vector<std::size_t>& circulant_sizes) {
  SweepResult out{.claim = "thm2"};
  out.add(verify_thm2(complete_graph(5), nullptr, {}, "K5"));
  for (std::size_t n : circulant_sizes)
    out.add(verify_thm2(circulant_graph(n, {1, 2}), nullptr, {}, "C" + std::to_string(n) + "(1,2)"));
  return out;
}

SweepResult sweep_lemma3(std::uint64_t seed, std::size_t count, std::size_t max_sigma, std::size_t max_k,
                         std::size_t max_size) {
  SweepResult out{.claim = "lemma3"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> sig(1, max_sigma), len(1, max_k), sz(1, max_size);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t sigma = sig(rng), k = len(rng), size = sz(rng);
    out.add(verify_lemma3(random_dictionary(rng, sigma, k, size), "random#" + std::to_string(i)));
  }
  return out;
}

SweepResult sweep_solver_oracle(std::size_t max_sigma, std::size_t max_k, std::size_t max_words,
                                std::size_t max_guesses, std::uint64_t seed, std::size_t random_count) {
  SweepResult out{.claim = "solver-oracle"};
  for (std::size_t sigma = 1; sigma <= max_sigma; ++sigma) {
    for (std::size_t k = 1; k <= max_k; ++k) {
      const std::vector<Word> space = all_words(sigma, k);
      std::vector<Word> pick;
      std::function<void(std::size_t)> walk = [&](std::size_t start) {
        if (!pick.empty()) {
          out.add(verify_solver_oracle(dictionary_from_ids(sigma, pick), max_guesses, {},
                                       "sigma=" + std::to_string(sigma) + " k=" + std::to_string(k)));
        }
        if (pick.size() == max_words) return;
        for (std::size_t i = start; i < space.size(); ++i) {
          pick.push_back(space[i]);
          walk(i + 1);
          pick.pop_back();
        }
      };
      walk(0);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> sig(2, 4), len(1, 3), sz(7, 12);
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t sigma = sig(rng), k = len(rng);
    Dictionary d = random_dictionary(rng, sigma, k, sz(rng));
    out.add(verify_solver_oracle(d, 3, {}, "random#" + std::to_string(i)));
  }
  return out;
}

}  // namespace wordle::oracles
