#include "wordle/service.hpp"

#include <algorithm>
#include <filesystem>

#include <httplib.h>
#include <json.hpp>

#include "wordle/solver.hpp"
#include "wordle/strategies.hpp"

namespace wordle::service {

using nlohmann::json;

Suggestion suggest(const Dictionary& d, const FeasibleSet& f, const Config& config) {
  if (f.empty()) throw Error(ErrorCode::EmptyFeasibleSet, "no feasible words");
  const std::size_t count = f.count();
  if (count <= config.exact_threshold) {
    try {
      Solver solver(d, SolveOptions{.guess_mode = GuessMode::full_dictionary,
                                    .node_budget = config.exact_budget,
                                    .threads = config.threads});
      const std::size_t l = solver.w_min(f);
      if (auto g = solver.best_guess(f, l)) return {d.render(d.word(*g)), SuggestionMode::exact, count};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
    }
  }
  const std::size_t g = next_guess(Policy{PolicyKind::greedy_minimax, config.threads}, d, f);
  return {d.render(d.word(g)), SuggestionMode::heuristic, count};
}

Assistant::Session::Session(std::string i, std::shared_ptr<const Dictionary> d)
    : id(std::move(i)),
      dictionary(std::move(d)),
      feasible(FeasibleSet::full(*dictionary)),
      created(std::chrono::system_clock::now()),
      updated(created) {}

Assistant::Assistant(std::map<std::string, std::shared_ptr<const Dictionary>> dictionaries, Config config)
    : dictionaries_(std::move(dictionaries)), config_(config) {}

Assistant Assistant::from_directory(const std::string& dir, Config config) {
  namespace fs = std::filesystem;
  std::map<std::string, std::shared_ptr<const Dictionary>> dicts;
  if (!fs::is_directory(dir)) throw Error(ErrorCode::InvalidInstance, dir + " is not a directory");
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension().string();
    if (ext != ".txt" && ext != ".tok") continue;
    auto format = ext == ".txt" ? DictionaryFormat::chars : DictionaryFormat::tokens;
    dicts[entry.path().stem().string()] =
        std::make_shared<const Dictionary>(load_dictionary(entry.path().string(), format));
  }
  return Assistant(std::move(dicts), config);
}

std::vector<std::string> Assistant::dictionary_names() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : dictionaries_) names.push_back(name);
  return names;
}

std::shared_ptr<Assistant::Session> Assistant::find(const std::string& id) {
  std::shared_lock lock(sessions_mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "unknown_session", "no session '" + id + "'");
  return it->second;
}

SessionInfo Assistant::create_session(const std::string& dictionary) {
  auto it = dictionaries_.find(dictionary);
  if (it == dictionaries_.end())
    throw ServiceError(404, "unknown_dictionary", "no dictionary named '" + dictionary + "'");
  std::unique_lock lock(sessions_mu_);
  std::string id = "s" + std::to_string(next_id_++);
  auto session = std::make_shared<Session>(id, it->second);
  sessions_.emplace(id, session);
  return {id, it->second->k(), it->second->size()};
}

std::size_t Assistant::post_feedback(const std::string& id, const std::string& guess_text,
                                     const std::string& marking_text) {
  auto s = find(id);
  std::unique_lock lock(s->mu);
  const Dictionary& d = *s->dictionary;
  Word guess;
  try {
    guess = d.encode(guess_text, d.single_char_symbols() ? DictionaryFormat::chars : DictionaryFormat::tokens,
                     /*allow_foreign=*/true);
  } catch (const Error& e) {
    throw ServiceError(400, "malformed_guess", e.what());
  }
  Marking m;
  try {
    m = parse_marking(marking_text, d.k());
  } catch (const Error& e) {
    throw ServiceError(400, "malformed_marking", e.what());
  }
  History next = s->history;
  next.steps.push_back({std::move(guess), std::move(m)});
  FeasibleSet f = filter_feasible(d, next);
  if (f.empty()) {
    throw ServiceError(409, "inconsistent_feedback",
                       "no word is consistent with step " + std::to_string(next.size()) + " (" + guess_text + " " +
                           marking_text + ")");
  }
  s->history = std::move(next);
  s->feasible = std::move(f);
  s->updated = std::chrono::system_clock::now();
  return s->feasible.count();
}

Suggestion Assistant::get_suggestion(const std::string& id) {
  auto s = find(id);
  std::shared_lock lock(s->mu);
  return suggest(*s->dictionary, s->feasible, config_);
}

FeasibleList Assistant::list_feasible(const std::string& id, std::size_t limit) {
  auto s = find(id);
  std::shared_lock lock(s->mu);
  FeasibleList out{s->feasible.count(), {}};
  s->feasible.members().for_each([&](std::size_t i) {
    if (out.words.size() < limit) out.words.push_back(s->dictionary->render(s->dictionary->word(i)));
  });
  return out;
}

std::size_t Assistant::undo_last(const std::string& id) {
  auto s = find(id);
  std::unique_lock lock(s->mu);
  if (s->history.empty()) throw ServiceError(409, "nothing_to_undo", "session has no feedback to undo");
  s->history.steps.pop_back();
  s->feasible = filter_feasible(*s->dictionary, s->history);
  s->updated = std::chrono::system_clock::now();
  return s->feasible.count();
}

std::size_t Assistant::history_size(const std::string& id) {
  auto s = find(id);
  std::shared_lock lock(s->mu);
  return s->history.size();
}

namespace {

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

json parse_body(const httplib::Request& req) {
  try {
    json j = json::parse(req.body);
    if (!j.is_object()) throw ServiceError(400, "malformed_request", "body must be a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw ServiceError(400, "malformed_request", e.what());
  }
}

std::string field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end() || !it->is_string())
    throw ServiceError(400, "malformed_request", std::string("missing string field '") + name + "'");
  return it->get<std::string>();
}

template <class F>
httplib::Server::Handler guarded(F&& f) {
  return [f = std::forward<F>(f)](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const ServiceError& e) {
      reply(res, e.status(), json{{"error", e.code()}, {"detail", e.what()}});
    } catch (const std::exception& e) {
      reply(res, 500, json{{"error", "internal"}, {"detail", e.what()}});
    }
  };
}

}  // namespace

void install_routes(httplib::Server& server, Assistant& assistant) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Get("/v1/dictionaries", guarded([&](const httplib::Request&, httplib::Response& res) {
               reply(res, 200, json{{"dictionaries", assistant.dictionary_names()}});
             }));

  server.Post("/v1/sessions", guarded([&](const httplib::Request& req, httplib::Response& res) {
                SessionInfo info = assistant.create_session(field(parse_body(req), "dictionary"));
                reply(res, 200, json{{"session", info.id}, {"k", info.k}, {"size", info.size}});
              }));

  server.Post(R"(/v1/sessions/([^/]+)/feedback)", guarded([&](const httplib::Request& req, httplib::Response& res) {
                json body = parse_body(req);
                std::size_t n = assistant.post_feedback(req.matches[1], field(body, "guess"), field(body, "marking"));
                reply(res, 200, json{{"feasible", n}});
              }));

  server.Get(R"(/v1/sessions/([^/]+)/suggestion)", guarded([&](const httplib::Request& req, httplib::Response& res) {
               Suggestion s = assistant.get_suggestion(req.matches[1]);
               reply(res, 200,
                     json{{"word", s.word},
                          {"mode", s.mode == SuggestionMode::exact ? "exact" : "heuristic"},
                          {"feasible", s.feasible}});
             }));

  server.Get(R"(/v1/sessions/([^/]+)/feasible)", guarded([&](const httplib::Request& req, httplib::Response& res) {
               std::size_t limit = 100;
               if (req.has_param("limit")) {
                 try {
                   limit = std::stoul(req.get_param_value("limit"));
                 } catch (const std::exception&) {
                   throw ServiceError(400, "malformed_request", "limit must be a non-negative integer");
                 }
               }
               FeasibleList l = assistant.list_feasible(req.matches[1], limit);
               reply(res, 200, json{{"total", l.total}, {"words", l.words}});
             }));

  server.Post(R"(/v1/sessions/([^/]+)/undo)", guarded([&](const httplib::Request& req, httplib::Response& res) {
                reply(res, 200, json{{"feasible", assistant.undo_last(req.matches[1])}});
              }));
}

void serve(Assistant& assistant, int port) {
  httplib::Server server;
  install_routes(server, assistant);
  if (!server.listen("127.0.0.1", port)) throw Error(ErrorCode::InvalidInstance, "cannot listen on port " + std::to_string(port));
}

}  // namespace wordle::service
