// golden tests for the command line tool: spawns the binary and compares
// output against files under tests/golden
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << cmd << "\n";
    ++failures;
    return r;
  }
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "missing golden file: " << path << "\n";
    ++failures;
    return "";
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void expect_output(const std::string& label, const RunResult& r,
                   const std::string& expected, int expected_exit = 0) {
  if (r.exit_code != expected_exit) {
    std::cerr << "FAIL " << label << ": exit " << r.exit_code << " != "
              << expected_exit << "\n";
    ++failures;
    return;
  }
  if (trim(r.output) != trim(expected)) {
    std::cerr << "FAIL " << label << ":\n--- got ---\n" << r.output
              << "--- want ---\n" << expected << "\n";
    ++failures;
    return;
  }
  std::cout << "ok " << label << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: test_cli_golden <cli-path> <golden-dir>\n";
    return 2;
  }
  std::string cli = argv[1];
  std::string golden = argv[2];
  setenv("MONVAR_CACHE_DIR", "cli_golden_cache", 1);

  expect_output("decompose", run(cli + " decompose abcdxcbyezaed"),
                read_file(golden + "/decompose.txt"));
  expect_output("sw-build", run(cli + " sw build xtx"),
                read_file(golden + "/sw_build.txt"));
  // second invocation exercises the cache path
  expect_output("sw-build-cached", run(cli + " sw build xtx"),
                read_file(golden + "/sw_build.txt"));
  expect_output("gen-e", run(cli + " gen e 2"), read_file(golden + "/gen_e2.txt"));
  expect_output("gen-b", run(cli + " gen b 1"), read_file(golden + "/gen_b1.txt"));
  expect_output("gen-b-swapped", run(cli + " gen b 1 --zeta swap:0"),
                read_file(golden + "/gen_b1_swap.txt"));
  expect_output("gen-basis", run(cli + " gen basis N"),
                read_file(golden + "/basis_N.txt"));
  expect_output("decide-text", run(cli + " decide --variety N --identity 'xyzxy = yxzxy'"),
                "fails (criterion)");
  expect_output("derive",
                run(cli + " derive --system " + golden +
                    "/sigma1_system.txt --identity 'xyzxy = yxzxy'"),
                read_file(golden + "/derive_sigma1.txt"));

  {
    RunResult r = run(cli + " --json decide --variety M --identity 'xtyzxy = xtyzyx'");
    nlohmann::json j = nlohmann::json::parse(r.output, nullptr, false);
    if (r.exit_code != 0 || j.is_discarded() || j.at("holds") != true ||
        j.at("method") != "criterion") {
      std::cerr << "FAIL decide-json:\n" << r.output << "\n";
      ++failures;
    } else {
      std::cout << "ok decide-json\n";
    }
  }
  {
    RunResult r = run(cli + " check --sw xysxty --identity 'xyzxty = yxzxty'");
    if (r.exit_code != 1 || r.output.rfind("fails, witness:", 0) != 0) {
      std::cerr << "FAIL check-refuted:\n" << r.output << "\n";
      ++failures;
    } else {
      std::cout << "ok check-refuted\n";
    }
  }
  {
    RunResult r = run(cli + " --json decompose 'x[1'");
    if (r.exit_code != 2) {
      std::cerr << "FAIL parse-error-exit: exit " << r.exit_code << "\n";
      ++failures;
    } else {
      std::cout << "ok parse-error-exit\n";
    }
  }

  if (failures) std::cerr << failures << " golden check(s) failed\n";
  return failures ? 1 : 0;
}
