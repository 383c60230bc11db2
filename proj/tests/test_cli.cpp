#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "table_io.hpp"

using namespace kdecomp;
using namespace kdecomp::cli;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p);
  f << content;
  return p;
}

}  // namespace

TEST_CASE("fundamental theorem shape through the CLI") {
  CliResult r = run({"decompose-laurent", "--n", "1", "--q", "0", "--table", "symbolic"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("K[q] x1") != std::string::npos);
  CHECK(r.out.find("K[q-1] x1") != std::string::npos);
  CHECK(r.out.find("NK[q] x2") != std::string::npos);
}

TEST_CASE("json output is exact and round-trips byte for byte") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"decompose-laurent", "--n", "2", "--q", "0", "--height", "2",
                                 "--format", "json"},
        std::vector<std::string>{"decompose-relative", "--n", "2", "--format", "json"},
        std::vector<std::string>{"nk-iter", "--n", "2", "--assume-conjecture", "--height", "2",
                                 "--format", "json"},
        std::vector<std::string>{"kregular", "--n", "1", "--table", "regular", "--format", "json"},
        std::vector<std::string>{"verify-fold", "--n", "2", "--height", "3", "--format", "json"},
        std::vector<std::string>{"verify-ft", "--n", "2", "--assume-conjecture", "--height", "2",
                                 "--format", "json"},
        std::vector<std::string>{"dihedral", "--q", "0", "--format", "json"},
        std::vector<std::string>{"homology-demo", "--format", "json"}}) {
    CliResult r = run(args);
    CHECK(r.exit_code == 0);
    nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("json serializes provenance words, subgroups, and groups exactly") {
  CliResult r = run({"decompose-laurent", "--n", "2", "--q", "0", "--height", "1", "--format",
                     "json"});
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["q"] == 0);
  CHECK(j["truncated"] == true);
  CHECK(j["height"] == 1);
  bool saw_k_word = false, saw_nil = false;
  for (auto& item : j["summands"]) {
    if (item["part"] == "k") {
      saw_k_word = true;
      CHECK(item["word"].is_string());
      CHECK(!item.contains("subgroup"));
      CHECK(item["symbol"]["kind"] == "K");
      CHECK(item["symbol"]["degree"].is_number_integer());
    } else {
      saw_nil = true;
      CHECK(item["subgroup"].is_array());
      CHECK(item["sign"].is_string());
      CHECK(item["beta"].is_array());
      CHECK(item["symbol"]["kind"] == "NK");
    }
  }
  CHECK(saw_k_word);
  CHECK(saw_nil);
}

TEST_CASE("identical invocations produce identical output") {
  std::vector<std::string> args{"verify-ft", "--n", "3", "--assume-conjecture", "--height", "3"};
  CliResult a = run(args);
  CliResult b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("exit codes: pass, verification failure, usage error") {
  CHECK(run({"verify-fold", "--n", "2", "--height", "3"}).exit_code == 0);
  CHECK(run({"kregular", "--n", "2", "--table", "regular"}).exit_code == 0);
  // Negative verdict: hypothesis not satisfied.
  CHECK(run({"kregular", "--n", "2", "--table", "symbolic"}).exit_code == 1);
  // Usage errors.
  CHECK(run({"decompose-laurent"}).exit_code == 2);              // missing --n
  CHECK(run({"decompose-laurent", "--n", "1", "--bogus"}).exit_code == 2);
  CHECK(run({"no-such-command"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  // Conjecture-gated commands without the flag.
  CliResult gated = run({"nk-iter", "--n", "2"});
  CHECK(gated.exit_code == 2);
  CHECK(gated.err.find("assume_conjecture") != std::string::npos);
  CHECK(run({"verify-ft", "--n", "2"}).exit_code == 2);
  CHECK(run({"verify-ft", "--n", "2", "--table", "regular"}).exit_code == 0);
}

TEST_CASE("ring table files: happy path") {
  std::string text = R"({
  "name": "demo",
  "regular": false,
  "K": { "0": {"rank": 1, "torsion": []}, "-1": "zero" },
  "NK": { "0": {"rank": 0, "torsion": [3]} }
})";
  auto path = write_temp("kdecomp_demo_table.json", text);
  CliResult r = run({"decompose-laurent", "--n", "1", "--q", "0", "--table", path.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("table: demo") != std::string::npos);
  CHECK(r.out.find("NK[q] x2 = Z/3") != std::string::npos);
  CHECK(r.out.find("K[q] x1 = Z") != std::string::npos);
  // K_{-1} is zero, so the K[q-1] summand disappears.
  CHECK(r.out.find("K[q-1]") == std::string::npos);
}

TEST_CASE("ring table files: diagnostics") {
  // Syntax error with line number.
  auto bad_json = write_temp("kdecomp_bad1.json", "{\n  \"name\": \"x\",\n  ]\n}");
  CliResult r1 = run({"decompose-laurent", "--n", "1", "--table", bad_json.string()});
  CHECK(r1.exit_code == 2);
  CHECK(r1.err.find(":3") != std::string::npos);

  // Field error: torsion chain violated.
  auto bad_chain = write_temp("kdecomp_bad2.json",
                              R"({"K": {"0": {"rank": 0, "torsion": [4, 6]}}})");
  CliResult r2 = run({"decompose-laurent", "--n", "1", "--table", bad_chain.string()});
  CHECK(r2.exit_code == 2);
  CHECK(r2.err.find("K.\"0\"") != std::string::npos);

  // Regular tables exclude nonzero NK entries.
  auto bad_regular = write_temp("kdecomp_bad3.json",
                                R"({"regular": true, "NK": {"0": "symbol"}})");
  CliResult r3 = run({"decompose-laurent", "--n", "1", "--table", bad_regular.string()});
  CHECK(r3.exit_code == 2);
  CHECK(r3.err.find("regular") != std::string::npos);

  // Unknown fields and malformed degree keys are named.
  auto bad_field = write_temp("kdecomp_bad4.json", R"({"NKX": {}})");
  CHECK(run({"decompose-laurent", "--n", "1", "--table", bad_field.string()}).exit_code == 2);
  auto bad_degree = write_temp("kdecomp_bad5.json", R"({"K": {"zero": "symbol"}})");
  CliResult r5 = run({"decompose-laurent", "--n", "1", "--table", bad_degree.string()});
  CHECK(r5.exit_code == 2);
  CHECK(r5.err.find("not an integer") != std::string::npos);

  CHECK(run({"decompose-laurent", "--n", "1", "--table", "/no/such/file.json"}).exit_code == 2);
}

TEST_CASE("dihedral verification through a concrete table entry") {
  std::string text = R"({"name": "standin", "NK": {"0": {"rank": 1, "torsion": [4]}}})";
  auto path = write_temp("kdecomp_standin.json", text);
  CliResult r = run({"dihedral", "--q", "0", "--table", path.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Z + Z/4") != std::string::npos);
  CHECK(r.out.find("verified: yes") != std::string::npos);

  CliResult sym = run({"dihedral", "--q", "0"});
  CHECK(sym.exit_code == 0);
  CHECK(sym.out.find("stand-in: none") != std::string::npos);
}

TEST_CASE("kregular through a file table names offending degrees") {
  std::string text = R"({"NK": {"0": "zero", "-1": {"rank": 0, "torsion": [2]}}})";
  auto path = write_temp("kdecomp_offend.json", text);
  CliResult r = run({"kregular", "--n", "2", "--table", path.string()});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("not satisfied") != std::string::npos);
  CHECK(r.out.find("-1") != std::string::npos);
}

TEST_CASE("help is success") {
  CHECK(run({"--help"}).exit_code == 0);
}
