#include "wordle/json_io.hpp"

#include <fstream>
#include <sstream>

namespace wordle {

using nlohmann::json;

json strategy_to_json(const Dictionary& d, const StrategyTree& tree) {
  json children = json::object();
  if (tree.wins_on_green) children[marking_to_digits(Marking::all_green(d.k()))] = "win";
  for (std::size_t i = 0; i < tree.children.size(); ++i)
    children[marking_to_digits(tree.markings[i])] = strategy_to_json(d, tree.children[i]);
  return json{{"guess", d.render(d.word(tree.guess), DictionaryFormat::tokens)}, {"children", children}};
}

StrategyTree strategy_from_json(const Dictionary& d, const json& j) {
  StrategyTree t;
  Word g = d.encode(j.at("guess").get<std::string>(), DictionaryFormat::tokens);
  auto idx = d.index_of(g);
  if (!idx) throw Error(ErrorCode::InvalidInstance, "strategy guess is not a dictionary word");
  t.guess = *idx;
  for (const auto& [digits, child] : j.at("children").items()) {
    Marking m = parse_marking(digits, d.k());
    if (child.is_string()) {
      if (!m.is_all_green() || child.get<std::string>() != "win")
        throw Error(ErrorCode::InvalidInstance, "only the all-green reply may be a win leaf");
      t.wins_on_green = true;
      continue;
    }
    t.markings.push_back(std::move(m));
    t.children.push_back(strategy_from_json(d, child));
  }
  return t;
}

json stats_to_json(const SolveStats& stats) {
  return json{{"nodes_expanded", stats.nodes_expanded},
              {"memo_hits", stats.memo_hits},
              {"elapsed_ms", std::chrono::duration<double, std::milli>(stats.elapsed).count()}};
}

json report_to_json(const oracles::VerificationReport& r) {
  json j{{"claim", r.claim},
         {"instance", r.instance},
         {"measured", r.measured},
         {"verdict", r.skipped ? "skipped" : (r.pass ? "pass" : "fail")},
         {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.trace.empty()) j["trace"] = r.trace;
  return j;
}

SetFamily parse_set_family(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
    return make_set_family(j.at("universe").get<std::size_t>(),
                           j.at("sets").get<std::vector<std::vector<std::size_t>>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInstance, std::string("set family JSON: ") + e.what());
  }
}

json set_family_to_json(const SetFamily& f) { return json{{"universe", f.universe}, {"sets", f.sets}}; }

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::InvalidInstance, "edge list must start with 'n m'");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw Error(ErrorCode::InvalidInstance, "expected " + std::to_string(m) + " edges");
    if (u < 1 || v < 1 || u > n || v > n)
      throw Error(ErrorCode::InvalidInstance, "edge endpoint outside 1.." + std::to_string(n));
    edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  return make_graph(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < g.n; ++v)
    for (std::size_t u : g.adjacency[v])
      if (v < u) edges.emplace_back(v, u);
  out << g.n << ' ' << edges.size() << '\n';
  for (auto [v, u] : edges) out << v + 1 << ' ' << u + 1 << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInstance, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidInstance, "cannot write " + path);
  out << contents;
}

}  // namespace wordle
