#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordle/json_io.hpp"
#include "wordle/oracles.hpp"
#include "wordle/reductions.hpp"
#include "wordle/service.hpp"
#include "wordle/solver.hpp"

using namespace wordle;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kFalse = 1, kUsage = 2, kBudget = 3 };

struct DictArgs {
  std::string path;
  std::string format = "auto";
};

void add_dict_options(CLI::App* app, DictArgs& a, bool required = true) {
  auto* o = app->add_option("--dict", a.path, "dictionary file, one word per line");
  if (required) o->required();
  o->check(CLI::ExistingFile);
  app->add_option("--format", a.format, "chars, tokens, or auto (tokens for *.tok)")
      ->check(CLI::IsMember({"auto", "chars", "tokens"}));
}

DictionaryFormat resolve_format(const DictArgs& a) {
  if (a.format == "auto")
    return std::filesystem::path(a.path).extension() == ".tok" ? DictionaryFormat::tokens : DictionaryFormat::chars;
  return parse_format(a.format);
}

Dictionary load(const DictArgs& a) { return load_dictionary(a.path, resolve_format(a)); }

GuessMode parse_mode(const std::string& s) {
  return s == "feasible" ? GuessMode::feasible_only : GuessMode::full_dictionary;
}

void print_reports(const std::vector<oracles::VerificationReport>& rs) {
  for (const auto& r : rs) std::cout << report_to_json(r).dump() << '\n';
}

int verdict(bool ok) { return ok ? kOk : kFalse; }

int emit_sweep(const oracles::SweepResult& s) {
  print_reports(s.failures);
  print_reports({s.summary()});
  return verdict(s.ok());
}

std::string sidecar_path(const std::string& out) { return out + ".meta.json"; }

// ---- solve / wmin ----

struct SolveArgs {
  DictArgs dict;
  std::size_t max_guesses = 0;
  std::string guess_mode = "full";
  std::string emit_strategy;
  std::uint64_t budget = 0;
  unsigned threads = 1;
};

SolveOptions solve_options(const SolveArgs& a) {
  SolveOptions o{.guess_mode = parse_mode(a.guess_mode), .threads = a.threads};
  if (a.budget) o.node_budget = a.budget;
  return o;
}

int run_solve(const SolveArgs& a) {
  Dictionary d = load(a.dict);
  Solver solver(d, solve_options(a));
  const bool yes = solver.decide(a.max_guesses);
  std::cout << (yes ? "YES" : "NO") << '\n' << stats_to_json(solver.stats()).dump() << '\n';
  if (yes && !a.emit_strategy.empty()) {
    auto tree = solver.strategy_tree(a.max_guesses);
    write_file(a.emit_strategy, strategy_to_json(d, *tree).dump(2) + "\n");
  }
  return verdict(yes);
}

int run_wmin(const SolveArgs& a) {
  Dictionary d = load(a.dict);
  Solver solver(d, solve_options(a));
  std::cout << solver.w_min() << '\n' << stats_to_json(solver.stats()).dump() << '\n';
  return kOk;
}

// ---- gen ----

struct GenArgs {
  std::string kind;
  std::string in;
  std::string out;
  std::size_t c = 1;
};

int run_gen(const GenArgs& a) {
  json meta{{"construction", a.kind}, {"source", a.in}};
  if (a.kind == "asc-from-setcover") {
    SetFamily f = parse_set_family(read_file(a.in));
    SetFamily g = setcover_to_asc(f);
    write_file(a.out, set_family_to_json(g).dump() + "\n");
    meta["source_instance"] = set_family_to_json(f);
    meta["universe"] = g.universe;
    meta["sets"] = g.sets.size();
  } else if (a.kind == "wordle-from-asc") {
    SetFamily f = parse_set_family(read_file(a.in));
    GadgetInstance g = asc_to_wordle(f, a.c);
    write_file(a.out, g.dictionary.serialize(DictionaryFormat::tokens));
    meta["source_instance"] = set_family_to_json(f);
    meta["c"] = a.c;
    meta["max_guesses"] = g.max_guesses;
    meta["words"] = g.dictionary.size();
    meta["k"] = g.dictionary.k();
    meta["sigma"] = g.dictionary.sigma();
  } else {
    Graph g = parse_edge_list(read_file(a.in));
    Dictionary d = graph_to_wordle(g);
    write_file(a.out, d.serialize(DictionaryFormat::tokens));
    meta["vertices"] = g.n;
    meta["words"] = d.size();
    meta["k"] = d.k();
    meta["sigma"] = d.sigma();
  }
  write_file(sidecar_path(a.out), meta.dump(2) + "\n");
  std::cout << "wrote " << a.out << " and " << sidecar_path(a.out) << '\n';
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string claim;
  std::string instance;
  DictArgs dict;
  std::size_t c = 1;
  std::size_t max_guesses = 3;
  bool sweep = false;
  std::size_t max_n = 4;
  std::size_t max_sets = 3;
  std::vector<std::size_t> c_values{1, 2};
  std::vector<std::size_t> circulants{7, 8, 9, 10};
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_sigma = 6;
  std::size_t max_k = 5;
  std::size_t max_size = 200;
};

void need(bool ok, const std::string& what) {
  if (!ok) throw CLI::ValidationError(what);
}

int run_verify(const VerifyArgs& a) {
  using namespace oracles;
  if (a.claim == "lemma1" || a.claim == "thm1") {
    if (a.sweep) {
      return emit_sweep(a.claim == "lemma1" ? sweep_lemma1(a.max_n, a.max_sets, a.c_values)
                                            : sweep_thm1(a.max_n, a.max_sets, a.c_values));
    }
    need(!a.instance.empty(), "--instance or --sweep is required");
    SetFamily f = parse_set_family(read_file(a.instance));
    auto r = a.claim == "lemma1" ? verify_lemma1(f, a.c) : verify_thm1(f, a.c);
    print_reports({r});
    return verdict(r.pass);
  }
  if (a.claim == "thm2") {
    if (a.sweep) return emit_sweep(sweep_thm2(a.circulants));
    need(!a.instance.empty(), "--instance or --sweep is required");
    Graph g = parse_edge_list(read_file(a.instance));
    std::optional<Dictionary> d;
    if (!a.dict.path.empty()) d.emplace(load(a.dict));
    auto r = verify_thm2(g, d ? &*d : nullptr, {}, std::filesystem::path(a.instance).filename().string());
    print_reports({r});
    return verdict(r.pass);
  }
  if (a.claim == "lemma3") {
    if (a.sweep) return emit_sweep(sweep_lemma3(a.seed, a.count, a.max_sigma, a.max_k, a.max_size));
    need(!a.dict.path.empty(), "--dict or --sweep is required");
    auto r = verify_lemma3(load(a.dict), a.dict.path);
    print_reports({r});
    return verdict(r.pass);
  }
  // solver-oracle
  if (a.sweep) return emit_sweep(sweep_solver_oracle(3, 2, 6, 2, a.seed, 100));
  need(!a.dict.path.empty(), "--dict or --sweep is required");
  auto r = verify_solver_oracle(load(a.dict), a.max_guesses, {}, a.dict.path);
  print_reports({r});
  return verdict(r.pass);
}

// ---- assist ----

struct AssistArgs {
  DictArgs dict;
  std::size_t threshold = 64;
  std::uint64_t budget = 2'000'000;
};

void print_state(service::Assistant& a, const std::string& id) {
  auto list = a.list_feasible(id, 0);
  std::cout << "feasible " << list.total << '\n';
  auto s = a.get_suggestion(id);
  std::cout << "suggest " << s.word << (s.mode == service::SuggestionMode::exact ? " (exact)" : " (heuristic)")
            << '\n';
}

int run_assist(const AssistArgs& args) {
  std::map<std::string, std::shared_ptr<const Dictionary>> dicts;
  dicts["cli"] = std::make_shared<const Dictionary>(load(args.dict));
  service::Assistant a(std::move(dicts),
                       service::Config{.exact_threshold = args.threshold, .exact_budget = args.budget});
  const std::string id = a.create_session("cli").id;
  print_state(a, id);
  int status = kOk;
  std::string line;
  while (std::getline(std::cin, line)) {
    std::istringstream in(line);
    std::string guess, marking, extra;
    in >> guess >> marking >> extra;
    if (guess.empty()) continue;
    try {
      if (guess == "quit" || guess == "exit") break;
      if (guess == "undo") {
        a.undo_last(id);
      } else if (guess == "list") {
        for (const auto& w : a.list_feasible(id, SIZE_MAX).words) std::cout << w << '\n';
        continue;
      } else {
        if (marking.empty() || !extra.empty())
          throw service::ServiceError(400, "malformed_request", "expected '<guess> <marking digits>'");
        a.post_feedback(id, guess, marking);
      }
      print_state(a, id);
    } catch (const service::ServiceError& e) {
      std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
      if (e.status() == 400) status = kUsage;
    }
  }
  return status;
}

// ---- serve ----

struct ServeArgs {
  int port = 8080;
  std::string dict_dir;
  std::size_t threshold = 64;
  unsigned threads = 1;
};

int run_serve(const ServeArgs& a) {
  auto assistant = service::Assistant::from_directory(
      a.dict_dir, service::Config{.exact_threshold = a.threshold, .threads = a.threads});
  std::cerr << "serving " << assistant.dictionary_names().size() << " dictionaries on http://127.0.0.1:" << a.port
            << "/v1\n";
  service::serve(assistant, a.port);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Wordle solver, reductions and verifiers"};
  app.require_subcommand(1, 1);

  SolveArgs solve_args;
  auto add_solve_flags = [&](CLI::App* sub) {
    add_dict_options(sub, solve_args.dict);
    sub->add_option("--guess-mode", solve_args.guess_mode, "full or feasible")
        ->check(CLI::IsMember({"full", "feasible"}));
    sub->add_option("--budget", solve_args.budget, "node budget (0 = unlimited)");
    sub->add_option("--threads", solve_args.threads, "threads for the root scan")->check(CLI::PositiveNumber);
  };
  auto* solve = app.add_subcommand("solve", "decide whether the dictionary is won within L guesses");
  add_solve_flags(solve);
  solve->add_option("--max-guesses,-l", solve_args.max_guesses, "guess limit L")->required();
  solve->add_option("--emit-strategy", solve_args.emit_strategy, "write the winning strategy as JSON");
  auto* wmin = app.add_subcommand("wmin", "print the least guess limit that wins");
  add_solve_flags(wmin);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate reduction instances");
  gen->add_option("kind", gen_args.kind)
      ->required()
      ->check(CLI::IsMember({"asc-from-setcover", "wordle-from-asc", "wordle-from-graph"}));
  gen->add_option("--in,-i", gen_args.in, "set family JSON or edge list")->required()->check(CLI::ExistingFile);
  gen->add_option("--out,-o", gen_args.out, "output path; a .meta.json sidecar is written next to it")->required();
  gen->add_option("-c", gen_args.c, "cover size for wordle-from-asc");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a claim on an instance or a sweep");
  verify->add_option("claim", verify_args.claim)
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "lemma1", "lemma3", "solver-oracle"}));
  verify->add_option("--instance", verify_args.instance, "set family JSON or edge list")
      ->check(CLI::ExistingFile);
  add_dict_options(verify, verify_args.dict, false);
  verify->add_option("-c", verify_args.c, "cover size");
  verify->add_option("--max-guesses,-l", verify_args.max_guesses, "largest L for solver-oracle");
  verify->add_flag("--sweep", verify_args.sweep, "run the built-in sweep");
  verify->add_option("--max-n", verify_args.max_n, "sweep: largest universe");
  verify->add_option("--max-sets", verify_args.max_sets, "sweep: largest family");
  verify->add_option("--c-values", verify_args.c_values, "sweep: cover sizes");
  verify->add_option("--circulants", verify_args.circulants, "sweep: sizes n of C_n(1,2)");
  verify->add_option("--seed", verify_args.seed, "sweep: random seed");
  verify->add_option("--count", verify_args.count, "sweep: random dictionaries");
  verify->add_option("--max-sigma", verify_args.max_sigma);
  verify->add_option("--max-k", verify_args.max_k);
  verify->add_option("--max-size", verify_args.max_size);

  AssistArgs assist_args;
  auto* assist = app.add_subcommand("assist", "interactive helper reading '<guess> <marking>' lines from stdin");
  add_dict_options(assist, assist_args.dict);
  assist->add_option("--threshold", assist_args.threshold, "use exact search at or below this many feasible words");
  assist->add_option("--budget", assist_args.budget, "node budget for exact suggestions");

  ServeArgs serve_args;
  auto* serve = app.add_subcommand("serve", "run the local HTTP service");
  serve->add_option("--port", serve_args.port)->check(CLI::Range(1, 65535));
  serve->add_option("--dict-dir", serve_args.dict_dir, "directory of *.txt and *.tok dictionaries")
      ->required()
      ->check(CLI::ExistingDirectory);
  serve->add_option("--threshold", serve_args.threshold);
  serve->add_option("--threads", serve_args.threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*wmin) return run_wmin(solve_args);
    if (*gen) return run_gen(gen_args);
    if (*verify) return run_verify(verify_args);
    if (*assist) return run_assist(assist_args);
    return run_serve(serve_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded || e.code() == ErrorCode::CapExceeded ? kBudget : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
