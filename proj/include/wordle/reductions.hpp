#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordle/core.hpp"

namespace wordle {

/// Family of subsets of the universe {1..universe}. Sets are kept sorted and
/// the union must be the whole universe.
struct SetFamily {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;
};

/// Sorts and dedupes every set and checks the family invariants.
SetFamily make_set_family(std::size_t universe, std::vector<std::vector<std::size_t>> sets);

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
/// Files and symbol names use 1-based vertex ids.
struct Graph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t degree(std::size_t v) const { return adjacency.at(v).size(); }
};

/// Builds a graph from 0-based edges; rejects loops and repeated edges.
Graph make_graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
Graph complete_graph(std::size_t n);
/// Vertex v is adjacent to v +- o (mod n) for each offset o.
Graph circulant_graph(std::size_t n, const std::vector<std::size_t>& offsets);

/// Duplicates every element u into u+ = 2u-1 and u- = 2u.
SetFamily setcover_to_asc(const SetFamily& f);

struct GadgetInstance {
  Dictionary dictionary;
  std::size_t max_guesses;
};

/// Element-words and set-words over {_, 1, s1..sn}: the element word of u_i
/// has 1 at position i and s<i> elsewhere; the set word of S has 1 on members
/// and _ elsewhere. max_guesses = c + 1. Duplicate sets, or n = 1, collide
/// and raise DuplicateWord.
GadgetInstance asc_to_wordle(const SetFamily& f, std::size_t c);

/// For each vertex v of a 4-regular graph: (v, neighbors ascending) and
/// (v, v, v, v, v). Words of the first kind come first.
Dictionary graph_to_wordle(const Graph& g);

inline constexpr std::string_view kBottomSymbol = "_";
inline constexpr std::string_view kOneSymbol = "1";

}  // namespace wordle
