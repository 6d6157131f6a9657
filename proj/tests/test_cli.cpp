#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path work() {
  static const fs::path dir = [] {
    fs::path p(TEST_WORK_DIR);
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path put(const std::string& name, const std::string& text) {
  fs::path p = work() / name;
  std::ofstream(p) << text;
  return p;
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  const fs::path in = put("stdin.txt", stdin_text);
  const fs::path out = work() / "stdout.txt", err = work() / "stderr.txt";
  const std::string cmd = std::string("'") + WORDLE_CLI_PATH + "' " + args + " < '" + in.string() + "' > '" +
                          out.string() + "' 2> '" + err.string() + "'";
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("solve and wmin") {
  const auto single = put("single.txt", "ABC\n");
  const auto two = put("two.txt", "AA\nBB\n");
  auto r = run("solve --dict " + single.string() + " --max-guesses 1");
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "YES");
  r = run("solve --dict " + two.string() + " -l 1");
  CHECK(r.code == 1);
  CHECK(first_line(r.out) == "NO");
  const fs::path strat = work() / "strategy.json";
  r = run("solve --dict " + two.string() + " -l 2 --emit-strategy " + strat.string());
  CHECK(r.code == 0);
  auto tree = nlohmann::json::parse(slurp(strat));
  CHECK(tree["guess"] == "A,A");
  CHECK(tree["children"]["22"] == "win");
  CHECK(tree["children"]["00"]["guess"] == "B,B");
  CHECK(first_line(run("wmin --dict " + single.string()).out) == "1");
  CHECK(first_line(run("wmin --dict " + two.string()).out) == "2");
  CHECK(first_line(run("wmin --dict " + two.string() + " --guess-mode feasible --threads 2").out) == "2");
}

TEST_CASE("usage and budget exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("solve").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("solve --dict /nonexistent/x.txt -l 1").code == 2);
  const auto bad = put("bad.txt", "ABC\nAB\n");
  CHECK(run("solve --dict " + bad.string() + " -l 1").code == 2);
  std::string many;
  for (char a = 'A'; a <= 'F'; ++a)
    for (char b = 'A'; b <= 'F'; ++b)
      for (char c = 'A'; c <= 'F'; ++c) many += std::string{a, b, c, '\n'};
  const auto big = put("big.txt", many);
  CHECK(run("solve --dict " + big.string() + " -l 3 --budget 5").code == 3);
}

TEST_CASE("gen writes dictionaries and sidecars") {
  const auto fam = put("family.json", R"({"universe": 3, "sets": [[1,2],[2,3]]})");
  const fs::path asc = work() / "asc.json";
  CHECK(run("gen asc-from-setcover --in " + fam.string() + " --out " + asc.string()).code == 0);
  auto j = nlohmann::json::parse(slurp(asc));
  CHECK(j["universe"] == 6);
  CHECK(j["sets"] == nlohmann::json::parse("[[1,2,3,4],[3,4,5,6]]"));
  CHECK(fs::exists(asc.string() + ".meta.json"));

  const fs::path gadget = work() / "gadget.tok";
  CHECK(run("gen wordle-from-asc --in " + fam.string() + " -c 1 --out " + gadget.string()).code == 0);
  CHECK(slurp(gadget) == "1,s1,s1\ns2,1,s2\ns3,s3,1\n1,1,_\n_,1,1\n");
  auto meta = nlohmann::json::parse(slurp(gadget.string() + ".meta.json"));
  CHECK(meta["max_guesses"] == 2);
  CHECK(meta["c"] == 1);
  // The gadget answer matches the verifier.
  CHECK(run("solve --dict " + gadget.string() + " -l 2").code == 0);
  auto v = run("verify thm1 --instance " + fam.string() + " -c 1");
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(first_line(v.out))["measured"]["wordle"] == 1);

  const auto k5 = put("k5.txt", "5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
  const fs::path dk5 = work() / "k5.tok";
  CHECK(run("gen wordle-from-graph --in " + k5.string() + " --out " + dk5.string()).code == 0);
  CHECK(first_line(slurp(dk5)) == "1,2,3,4,5");
  const std::string w = first_line(run("wmin --dict " + dk5.string()).out);
  CHECK(std::stoi(w) >= 1);
  CHECK(std::stoi(w) <= 5);

  const auto path = put("path.txt", "3 2\n1 2\n2 3\n");
  CHECK(run("gen wordle-from-graph --in " + path.string() + " --out " + (work() / "p.tok").string()).code == 2);
  const auto dup = put("dup.json", R"({"universe": 1, "sets": [[1]]})");
  CHECK(run("gen wordle-from-asc --in " + dup.string() + " -c 1 --out " + (work() / "d.tok").string()).code == 2);
}

TEST_CASE("verify subcommands") {
  const auto k5 = put("k5.txt", "5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
  auto r = run("verify thm2 --instance " + k5.string());
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(first_line(r.out));
  CHECK(j["verdict"] == "pass");
  CHECK(j["measured"]["gamma"] == 1);

  const auto fam = put("family2.json", R"({"universe": 2, "sets": [[1],[2]]})");
  CHECK(run("verify lemma1 --instance " + fam.string() + " -c 1").code == 0);
  CHECK(run("verify lemma1 --sweep --max-n 3 --max-sets 2").code == 0);
  CHECK(run("verify thm1 --sweep --max-n 3 --max-sets 2 --c-values 2").code == 0);
  CHECK(run("verify thm1 --sweep --max-n 3 --max-sets 2").code == 1);
  CHECK(run("verify lemma3 --sweep --count 10 --max-size 40").code == 0);
  CHECK(run("verify thm2 --sweep --circulants 7").code == 0);
  const auto small = put("small.txt", "AB\nBA\nAA\nCB\n");
  CHECK(run("verify solver-oracle --dict " + small.string() + " -l 3").code == 0);
  CHECK(run("verify lemma3 --dict " + small.string()).code == 0);
  CHECK(run("verify thm1").code == 2);
}

TEST_CASE("verify thm2 with a tampered dictionary fails") {
  const auto c11 = put("c11.txt", "11 22\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n11 1\n"
                                  "1 3\n2 4\n3 5\n4 6\n5 7\n6 8\n7 9\n8 10\n9 11\n10 1\n11 2\n");
  // Five of the 22 generated words; the other 17 are deleted.
  const auto tampered =
      put("c11_tampered.tok", "11,1,2,9,10\n8,8,8,8,8\n9,9,9,9,9\n10,10,10,10,10\n11,11,11,11,11\n");
  auto r = run("verify thm2 --instance " + c11.string() + " --dict " + tampered.string());
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(first_line(r.out));
  CHECK(j["verdict"] == "fail");
  CHECK(j["measured"]["gamma"] == 3);
  CHECK(j["measured"]["w_min"] == 2);
  CHECK(j.contains("witness"));
}

TEST_CASE("assist loop") {
  const auto dict = put("candidates.txt", "ABBEY\nANNEX\nAMAZE\nGAMES\nKEEPS\n");
  auto r = run("assist --dict " + dict.string(), "ALGAE 20001\nlist\nquit\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("feasible 5\n") != std::string::npos);
  CHECK(r.out.find("feasible 2\n") != std::string::npos);
  CHECK(r.out.find("ABBEY\nANNEX\n") != std::string::npos);

  r = run("assist --dict " + dict.string(), "ALGAE\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("malformed") != std::string::npos);

  const auto fig = put("fig.txt", "ABBEY\nANNEX\nAMAZE\nGAMES\nKEEPS\nORBIT\nBRIBE\nABBOT\nALGAE\nKEBAB\n");
  r = run("assist --dict " + fig.string(),
          "ALGAE 20001\nKEEPS 01000\nORBIT 00200\nBRIBE 10011\nABBOT 22200\nlist\n");
  CHECK(r.code == 0);
  CHECK(r.out.substr(r.out.rfind("feasible")) == "feasible 1\nsuggest ABBEY (exact)\nABBEY\n");
}
