#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into the captured output when merge is set.
Run run(const std::string& args, bool merge = false) {
  std::string cmd = std::string(PQT_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze subcommand") {
  const auto r = run("analyze 2 13 --ell-bound 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("genus 2") != std::string::npos);
  CHECK(r.out.find("D(pq) = Z/7") != std::string::npos);
  CHECK(r.out.find("m3 (U_p-1, U_q+1, I_0): maximal") != std::string::npos);

  const auto json = run("analyze 2 13 --json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"kernel_order\": 7") != std::string::npos);

  const auto zero = run("analyze 2 3");
  CHECK(zero.exit_code == 0);
  CHECK(zero.out.find("warning: genus 0") != std::string::npos);
}

TEST_CASE("analyze rejects invalid pairs with a usage error") {
  const auto r = run("analyze 7 7", true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("distinct") != std::string::npos);
  CHECK(run("analyze 2 13 --ell-bound 2").exit_code == 2);
  CHECK(run("analyze 2").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("table1 subcommand prints rows and reports the extra pair") {
  const auto csv = run("table1");
  CHECK(csv.exit_code == 1);
  CHECK(csv.out.rfind("p,q,genus,in_S3,in_S5,in_S7,d_order,d_structure,k_order\r\n", 0) == 0);
  CHECK(csv.out.find("3,19,3,no,yes,yes,5,5,20\r\n") != std::string::npos);

  const auto diff = run("table1 --format json", true);
  CHECK(diff.out.find("(2, 23)") != std::string::npos);
  CHECK(diff.out.find("\"k_order_fixture\": 20") != std::string::npos);
  CHECK(run("table1 --format xml").exit_code == 2);
}

TEST_CASE("scan subcommand") {
  const auto empty = run("scan --p-max 2 --q-max 2");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "p,q,genus,in_S3,in_S5,in_S7,d_order,d_structure,k_order\r\n");

  const auto a = run("scan --p-max 40 --q-max 300 --threads 4");
  const auto b = run("scan --p-max 40 --q-max 300 --threads 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const auto low = run("scan --p-max 3 --q-max 20 --genus-max 1 --format json");
  CHECK(low.exit_code == 0);
  CHECK(low.out.find("\"pair\"") != std::string::npos);

  CHECK(run("scan --p-max 3").exit_code == 2);
  CHECK(run("scan --p-max 1 --q-max 5").exit_code == 2);
}

TEST_CASE("scan --out writes files and reports I/O errors") {
  const auto path = std::filesystem::temp_directory_path() / "pqt_cli_scan.csv";
  const auto r = run("scan --p-max 3 --q-max 20 --out " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("2,13,2,no,yes,yes,7,7,\r\n") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run("scan --p-max 3 --q-max 20 --out /nonexistent-dir/x.csv").exit_code == 3);
}
