#include "wordle/reductions.hpp"

#include <algorithm>
#include <set>

namespace wordle {

SetFamily make_set_family(std::size_t universe, std::vector<std::vector<std::size_t>> sets) {
  if (universe == 0) throw Error(ErrorCode::InvalidInstance, "universe must be non-empty");
  std::vector<bool> covered(universe + 1, false);
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t u : s) {
      if (u < 1 || u > universe)
        throw Error(ErrorCode::InvalidInstance, "element " + std::to_string(u) + " outside 1.." + std::to_string(universe));
      covered[u] = true;
    }
  }
  for (std::size_t u = 1; u <= universe; ++u) {
    if (!covered[u]) throw Error(ErrorCode::InvalidInstance, "element " + std::to_string(u) + " is in no set");
  }
  return SetFamily{universe, std::move(sets)};
}

Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g{n, std::vector<std::vector<std::size_t>>(n)};
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::InvalidInstance, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidInstance, "self loop at vertex " + std::to_string(u + 1));
    if (!seen.insert(std::minmax(u, v)).second)
      throw Error(ErrorCode::InvalidInstance,
                  "repeated edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
  return g;
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& offsets) {
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t o : offsets) {
      std::size_t u = (v + o) % n;
      if (u != v) edges.insert(std::minmax(u, v));
    }
  return make_graph(n, {edges.begin(), edges.end()});
}

SetFamily setcover_to_asc(const SetFamily& f) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(f.sets.size());
  for (const auto& s : f.sets) {
    std::vector<std::size_t> doubled;
    for (std::size_t u : s) {
      doubled.push_back(2 * u - 1);
      doubled.push_back(2 * u);
    }
    sets.push_back(std::move(doubled));
  }
  return make_set_family(2 * f.universe, std::move(sets));
}

namespace {

// Alphabet sorted by name, the same order parse_dictionary produces.
Alphabet sorted_alphabet(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  return Alphabet(std::move(names));
}

}  // namespace

GadgetInstance asc_to_wordle(const SetFamily& f, std::size_t c) {
  if (c < 1) throw Error(ErrorCode::InvalidInstance, "c must be at least 1");
  const std::size_t n = f.universe;
  std::vector<std::string> names{std::string(kBottomSymbol), std::string(kOneSymbol)};
  for (std::size_t i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  Alphabet alphabet = sorted_alphabet(names);
  const Symbol bottom = *alphabet.find(kBottomSymbol);
  const Symbol one = *alphabet.find(kOneSymbol);

  std::vector<Word> words;
  for (std::size_t i = 1; i <= n; ++i) {
    const Symbol si = *alphabet.find("s" + std::to_string(i));
    Word w(std::vector<Symbol>(n, si));
    w.symbols[i - 1] = one;
    words.push_back(std::move(w));
  }
  for (const auto& s : f.sets) {
    Word w(std::vector<Symbol>(n, bottom));
    for (std::size_t u : s) w.symbols[u - 1] = one;
    words.push_back(std::move(w));
  }
  return GadgetInstance{Dictionary(std::move(alphabet), std::move(words)), c + 1};
}

Dictionary graph_to_wordle(const Graph& g) {
  for (std::size_t v = 0; v < g.n; ++v) {
    if (g.degree(v) != 4) {
      throw Error(ErrorCode::NotFourRegular,
                  "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.n; ++v) names.push_back(std::to_string(v + 1));
  Alphabet alphabet = sorted_alphabet(names);
  std::vector<Symbol> id(g.n);
  for (std::size_t v = 0; v < g.n; ++v) id[v] = *alphabet.find(std::to_string(v + 1));

  std::vector<Word> words;
  for (std::size_t v = 0; v < g.n; ++v) {
    Word w{id[v]};
    for (std::size_t u : g.adjacency[v]) w.symbols.push_back(id[u]);
    words.push_back(std::move(w));
  }
  for (std::size_t v = 0; v < g.n; ++v) words.emplace_back(std::vector<Symbol>(5, id[v]));
  return Dictionary(std::move(alphabet), std::move(words));
}

}  // namespace wordle
