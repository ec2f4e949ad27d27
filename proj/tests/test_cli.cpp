#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "crowell/json_io.hpp"
#include "crowell/presentation.hpp"
#include "doctest.h"

using namespace crowell;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr is discarded so expected
// error paths stay quiet in the test log.
CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kTool = CROWELL_TOOL_PATH;
const std::string kFixtures = CROWELL_FIXTURES_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  out.close();
  return p.string();
}

}  // namespace

TEST_CASE("present emits the canonical presentation deterministically") {
  CmdResult r = run_cmd(kTool + " present " + fixture("W.json"));
  CHECK(r.exit_code == 0);
  Presentation expect = build_presentation(fixtures().at("whitehead"));
  CHECK(r.out == presentation_to_json(expect) + "\n");
  CmdResult again = run_cmd(kTool + " present " + fixture("W.json"));
  CHECK(again.out == r.out);  // byte-identical reruns

  // stdin is spelled '-'
  CmdResult piped =
      run_cmd("cat " + fixture("W.json") + " | " + kTool + " present -");
  CHECK(piped.exit_code == 0);
  CHECK(piped.out == r.out);

  // --pretty output parses back to the same object
  CmdResult pretty =
      run_cmd(kTool + " present --pretty " + fixture("W.json"));
  CHECK(pretty.exit_code == 0);
  CHECK(presentation_from_json(pretty.out) == expect);
}

TEST_CASE("subcommands compose through pipes") {
  CmdResult w = run_cmd(kTool + " sublink " + fixture("W.json") +
                        " --drop 2 | " + kTool + " alexpoly -");
  CHECK(w.exit_code == 0);
  CHECK(w.out == "1\n");

  CmdResult l = run_cmd(kTool + " sublink " + fixture("L7_2_8.json") +
                        " --drop 2 | " + kTool + " alexpoly -");
  CHECK(l.exit_code == 0);
  CHECK(l.out == "1 - t1 + t1^2\n");
}

TEST_CASE("deletion and quotient answers carry the same invariants") {
  for (const std::string name : {"W.json", "L7_2_8.json"}) {
    for (int j : {1, 2}) {
      std::string flags = " --drop " + std::to_string(j);
      CmdResult deleted = run_cmd(kTool + " sublink " + fixture(name) + flags +
                                  " --mode diagram | " + kTool +
                                  " fingerprint -");
      CmdResult quotient = run_cmd(kTool + " sublink " + fixture(name) + flags +
                                   " --mode quotient | " + kTool +
                                   " fingerprint -");
      CAPTURE(name);
      CAPTURE(j);
      CHECK(deleted.exit_code == 0);
      CHECK(quotient.exit_code == 0);
      CHECK(deleted.out == quotient.out);
      CHECK(!deleted.out.empty());
    }
  }
}

TEST_CASE("color counts and difference reports print exact records") {
  std::string spec = fixture("gf3chi.json");
  CmdResult count = run_cmd(kTool + " color " + fixture("L7_2_8.json") +
                            " --spec " + spec);
  CHECK(count.exit_code == 0);
  CHECK(count.out ==
        "{\"spec\":\"n3.k1.[2].[1]\",\"modulus\":3,\"rank\":1,\"count\":9}\n");

  CmdResult report = run_cmd(kTool + " color " + fixture("L7_2_8.json") +
                             " --spec " + spec +
                             " --constraint 2=zero --report nonconstant:1");
  CHECK(report.exit_code == 0);
  CHECK(report.out == "{\"spec\":\"n3.k1.[2].[1]\",\"report\":\"nonconstant:1\","
                      "\"constraint\":\"2=zero\",\"count\":6}\n");

  CmdResult wnone = run_cmd(kTool + " color " + fixture("W.json") +
                            " --spec " + spec +
                            " --constraint 2=constant --report nonconstant:1");
  CHECK(wnone.exit_code == 0);
  CHECK(wnone.out ==
        "{\"spec\":\"n3.k1.[2].[1]\",\"report\":\"nonconstant:1\","
        "\"constraint\":\"2=constant\",\"count\":0}\n");

  // --list enumerates exactly `count` coloring objects
  CmdResult listed = run_cmd(kTool + " color " + fixture("W.json") +
                             " --spec " + spec + " --list");
  CHECK(listed.exit_code == 0);
  size_t records = 0;
  for (size_t at = 0; (at = listed.out.find("\"a1\"", at)) != std::string::npos;
       ++at) {
    ++records;
  }
  CHECK(records == 9);
}

TEST_CASE("check-equiv renders its verdict and exit code") {
  std::string ws = write_temp("crowell_test_ws.json",
                              run_cmd(kTool + " simplify " + fixture("W.json")).out);
  std::string ls = write_temp("crowell_test_ls.json",
                              run_cmd(kTool + " simplify " + fixture("L7_2_8.json")).out);

  CmdResult ok = run_cmd(kTool + " check-equiv " + ws + " " + ls + " " +
                         fixture("cert_W_L7_2_8.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"verdict\":\"VERIFIED\"") != std::string::npos);

  // swapping the targets breaks the grading, which is refutable: exit stays 0
  std::string swapped = write_temp(
      "crowell_test_swapped_cert.json",
      R"({"images": {"a3": "a7'", "a5": "a3'"}, "degree_bound": 4})");
  CmdResult refuted =
      run_cmd(kTool + " check-equiv " + ws + " " + ls + " " + swapped);
  CHECK(refuted.exit_code == 0);
  CHECK(refuted.out.find("\"verdict\":\"REFUTED\"") != std::string::npos);

  // a certificate needing a wider search window than allowed: exit 1
  std::string two_gen = write_temp(
      "crowell_test_two_gen.json",
      R"({"mu": 1, "generators": ["x", "y"], "phi": ["-1 + t1", "-1 + t1"],
          "rows": [["1 - t1", "-1 + t1"]]})");
  std::string shifted = write_temp(
      "crowell_test_shift_cert.json",
      R"({"images": {"x": "(1 - t1^4 + t1^5)*x - (t1^5 - t1^4)*y", "y": "y"},
          "degree_bound": 4})");
  CmdResult inconclusive =
      run_cmd(kTool + " check-equiv " + two_gen + " " + two_gen + " " + shifted);
  CHECK(inconclusive.exit_code == 1);
  CHECK(inconclusive.out.find("\"verdict\":\"INCONCLUSIVE\"") !=
        std::string::npos);

  std::string wide = write_temp(
      "crowell_test_wide_cert.json",
      R"({"images": {"x": "(1 - t1^4 + t1^5)*x - (t1^5 - t1^4)*y", "y": "y"},
          "degree_bound": 6})");
  CmdResult verified =
      run_cmd(kTool + " check-equiv " + two_gen + " " + two_gen + " " + wide);
  CHECK(verified.exit_code == 0);
  CHECK(verified.out.find("\"verdict\":\"VERIFIED\"") != std::string::npos);
}

TEST_CASE("permute matches the library relabeling") {
  CmdResult r = run_cmd(kTool + " permute " + fixture("W.json") +
                        " --sigma 2,1");
  CHECK(r.exit_code == 0);
  Diagram expect =
      permute_components(fixtures().at("whitehead"), {2, 1});
  CHECK(r.out == diagram_to_json(expect) + "\n");
}

TEST_CASE("a battery override changes the fingerprint's coverage") {
  std::string battery = write_temp(
      "crowell_test_battery.json",
      "[" +
          module_spec_to_json(FiniteModuleSpec::make(
              3, 1,
              {ZnMat::from_rows(3, {{2}}), ZnMat::from_rows(3, {{1}})})) +
          "]");
  CmdResult r = run_cmd("CROWELL_BATTERY=" + battery + " " + kTool +
                        " fingerprint " + fixture("W.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n3.k1.[2].[1]") != std::string::npos);
  // exactly one battery entry: one spec record in the array
  size_t records = 0;
  for (size_t at = 0; (at = r.out.find("\"spec\"", at)) != std::string::npos;
       ++at) {
    ++records;
  }
  CHECK(records == 1);

  // jobs do not change the bytes
  CmdResult serial = run_cmd(kTool + " fingerprint " + fixture("W.json"));
  CmdResult threaded =
      run_cmd(kTool + " fingerprint --jobs 4 " + fixture("W.json"));
  CHECK(serial.exit_code == 0);
  CHECK(serial.out == threaded.out);
}

TEST_CASE("lengths tabulates the coloring's element lengths") {
  std::string coloring = write_temp(
      "crowell_test_coloring.json",
      R"({"a1": 0, "a2": 1, "a3": 0, "a4": 1, "a5": -1, "a6": 0, "a7": 0})");
  CmdResult r = run_cmd(kTool + " lengths " + fixture("L7_2_8.json") +
                        " --spec " + fixture("gf3chi.json") + " --coloring " +
                        coloring);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"length\":1") != std::string::npos);

  // a vector violating the relations is a usage error
  std::string bad = write_temp(
      "crowell_test_bad_coloring.json",
      R"({"a1": 1, "a2": 0, "a3": 0, "a4": 0, "a5": 0, "a6": 0, "a7": 0})");
  CmdResult err = run_cmd(kTool + " lengths " + fixture("L7_2_8.json") +
                          " --spec " + fixture("gf3chi.json") + " --coloring " +
                          bad);
  CHECK(err.exit_code == 2);
}

TEST_CASE("exit codes distinguish usage from computation failures") {
  CHECK(run_cmd(kTool + " no-such-command").exit_code == 2);
  CHECK(run_cmd(kTool + " sublink " + fixture("W.json")).exit_code == 2);
  CHECK(run_cmd(kTool + " present /nonexistent/file.json").exit_code == 2);
  std::string garbage = write_temp("crowell_test_garbage.json", "{oops");
  CHECK(run_cmd(kTool + " present " + garbage).exit_code == 2);
  CHECK(run_cmd(kTool + " sublink " + fixture("W.json") + " --drop 9")
            .exit_code == 2);
  CHECK(run_cmd(kTool + " sublink " + fixture("W.json") +
                " --drop 1 --mode nonsense")
            .exit_code == 2);
  CHECK(run_cmd(kTool + " alexpoly " + fixture("W.json")).exit_code == 2);

  // a search window too large to allocate is a computation error
  CHECK(run_cmd(kTool + " simplify --window 200 " + fixture("L7_2_8.json"))
            .exit_code == 3);

  CHECK(run_cmd(kTool + " --help").exit_code == 0);
  CHECK(run_cmd(kTool + " present --help").exit_code == 0);
}
