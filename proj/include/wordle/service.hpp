#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "wordle/core.hpp"
#include "wordle/feasibility.hpp"

namespace httplib {
class Server;
}

namespace wordle::service {

struct Config {
  /// Exact search is used for suggestions at or below this many feasible words.
  std::size_t exact_threshold = 64;
  /// Node budget for one exact suggestion; on overrun the heuristic answers.
  std::uint64_t exact_budget = 2'000'000;
  unsigned threads = 1;
};

/// Error with an HTTP-style status and a stable machine-readable code.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string code, const std::string& detail)
      : std::runtime_error(detail), status_(status), code_(std::move(code)) {}
  int status() const noexcept { return status_; }
  const std::string& code() const noexcept { return code_; }

 private:
  int status_;
  std::string code_;
};

struct SessionInfo {
  std::string id;
  std::size_t k;
  std::size_t size;
};

enum class SuggestionMode { heuristic, exact };

struct Suggestion {
  std::string word;
  SuggestionMode mode;
  std::size_t feasible;
};

struct FeasibleList {
  std::size_t total;
  std::vector<std::string> words;
};

/// Picks the next guess for a feasible set: exact optimal (lowest index among
/// guesses achieving the minimum worst case) for small sets, greedy minimax
/// otherwise or when the exact search runs out of budget.
Suggestion suggest(const Dictionary& d, const FeasibleSet& f, const Config& config);

/// In-memory assisted-play sessions. Responses are pure functions of the
/// dictionary and the request sequence; session ids are sequential.
class Assistant {
 public:
  explicit Assistant(std::map<std::string, std::shared_ptr<const Dictionary>> dictionaries, Config config = {});

  /// Loads every *.txt (chars format) and *.tok (tokens format) file; the
  /// dictionary name is the file stem.
  static Assistant from_directory(const std::string& dir, Config config = {});

  std::vector<std::string> dictionary_names() const;

  SessionInfo create_session(const std::string& dictionary);
  std::size_t post_feedback(const std::string& session, const std::string& guess, const std::string& marking);
  Suggestion get_suggestion(const std::string& session);
  FeasibleList list_feasible(const std::string& session, std::size_t limit);
  std::size_t undo_last(const std::string& session);

  /// Current history length, for tests and diagnostics.
  std::size_t history_size(const std::string& session);

 private:
  struct Session {
    std::string id;
    std::shared_ptr<const Dictionary> dictionary;
    History history;
    FeasibleSet feasible;
    std::chrono::system_clock::time_point created;
    std::chrono::system_clock::time_point updated;
    std::shared_mutex mu;

    Session(std::string i, std::shared_ptr<const Dictionary> d);
  };

  std::shared_ptr<Session> find(const std::string& id);

  std::map<std::string, std::shared_ptr<const Dictionary>> dictionaries_;
  Config config_;
  std::shared_mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// Installs the JSON routes under /v1 on `server`.
void install_routes(httplib::Server& server, Assistant& assistant);

/// Blocks serving on localhost:port until the process stops.
void serve(Assistant& assistant, int port);

}  // namespace wordle::service
