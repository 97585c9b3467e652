// End-to-end checks of the command-line surface: file formats, determinism,
// exit codes, and the shape of every report.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stickyinsdel/stickyinsdel.hpp"

namespace stickyinsdel {
namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
  std::string diagnostics;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

CommandResult run_cli(const std::string& args) {
  static int call = 0;
  const std::string out_path = ::testing::TempDir() + "cli_stdout_" +
                               std::to_string(call) + ".txt";
  const std::string err_path = ::testing::TempDir() + "cli_stderr_" +
                               std::to_string(call) + ".txt";
  ++call;
  const std::string command = std::string(STICKYINSDEL_CLI_PATH) + " " + args +
                              " >" + out_path + " 2>" + err_path;
  const int status = std::system(command.c_str());
  CommandResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = slurp(out_path);
  result.diagnostics = slurp(err_path);
  return result;
}

std::string write_reads(const std::string& name,
                        const std::vector<std::string>& lines) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream out(path);
  for (const auto& line : lines) out << line << "\n";
  return path;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

TEST(CliTables, CsvBoxAndDegenerateBox) {
  CommandResult result = run_cli("tables --t-max 1 --s-max 1 --r-max 2");
  EXPECT_EQ(result.exit_code, 0);
  auto lines = split_lines(result.output);
  ASSERT_FALSE(lines.empty());
  EXPECT_EQ(lines.front(), "t,s,r,A,N");
  EXPECT_NE(result.output.find("1,1,2,7,5"), std::string::npos);

  CommandResult degenerate = run_cli("tables --t-max 0 --s-max 0 --r-max 1");
  EXPECT_EQ(degenerate.exit_code, 0);
  auto rows = split_lines(degenerate.output);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], "0,0,1,1,1");
}

TEST(CliTables, JsonMatchesSZeroFormula) {
  CommandResult result = run_cli("tables --t-max 2 --s-max 0 --r-max 3 --format json");
  ASSERT_EQ(result.exit_code, 0);
  const auto report = nlohmann::json::parse(result.output);
  bool saw_r3 = false;
  for (const auto& row : report.at("rows")) {
    const std::int64_t t = row.at("t");
    const std::int64_t r = row.at("r");
    ASSERT_EQ(row.at("s"), 0);
    ASSERT_EQ(row.at("N").get<std::string>(),
              (binomial(t + r - 1, r) + 1).str());
    saw_r3 = saw_r3 || r == 3;
  }
  EXPECT_TRUE(saw_r3);
}

TEST(CliSimulate, DeterministicAndInsideBall) {
  const std::string args = "simulate 00311120 --t 2 --s 1 --seed 7 --reads 8";
  CommandResult first = run_cli(args);
  CommandResult second = run_cli(args);
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.output, second.output);

  const Sequence x = parse_sequence("00311120");
  const ErrorBudget budget(2, 1);
  auto lines = split_lines(first.output);
  ASSERT_EQ(lines.size(), 8u);
  for (const auto& line : lines) {
    EXPECT_TRUE(ball_contains(x, parse_sequence(line, 4), budget)) << line;
  }
}

TEST(CliSimulate, DistinctSamplesWholeBall) {
  // Ball of 0011 at t=1,s=1 has A(1,1,2)=7 elements; ask for all of them.
  CommandResult result =
      run_cli("simulate 0011 --t 1 --s 1 --seed 3 --reads 7 --distinct");
  ASSERT_EQ(result.exit_code, 0);
  auto lines = split_lines(result.output);
  ASSERT_EQ(lines.size(), 7u);
  std::set<std::string> unique(lines.begin(), lines.end());
  EXPECT_EQ(unique.size(), 7u);

  CommandResult overfull =
      run_cli("simulate 0011 --t 1 --s 1 --reads 8 --distinct");
  EXPECT_NE(overfull.exit_code, 0);
  EXPECT_NE(overfull.diagnostics.find("distinct"), std::string::npos);
}

TEST(CliReconstruct, StrictRecoversCanonicalCase) {
  const std::string path = write_reads("reads_ok.txt", {"00011  # read 1",
                                                        "00111",
                                                        "",
                                                        "# trailing comment"});
  CommandResult result = run_cli("reconstruct --t 1 --s 0 --in " + path);
  EXPECT_EQ(result.exit_code, 0);
  auto lines = split_lines(result.output);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines.front(), "0011");

  CommandResult json_mode =
      run_cli("reconstruct --t 1 --s 0 --format json --in " + path);
  ASSERT_EQ(json_mode.exit_code, 0);
  const auto report = nlohmann::json::parse(json_mode.output);
  EXPECT_EQ(report.at("status"), "success");
  EXPECT_EQ(report.at("sequence"), "0011");
}

TEST(CliReconstruct, FailureUsesExitCodeTwo) {
  const std::string path = write_reads("reads_mixed.txt", {"001", "010"});
  CommandResult result = run_cli("reconstruct --t 1 --s 1 --in " + path);
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.diagnostics.find("composition-mismatch"), std::string::npos);

  const std::string dup = write_reads("reads_dup.txt", {"0011", "0011"});
  CommandResult duplicated = run_cli("reconstruct --t 1 --s 0 --in " + dup);
  EXPECT_EQ(duplicated.exit_code, 2);
  EXPECT_NE(duplicated.diagnostics.find("duplicate-reads"), std::string::npos);

  const std::string thin = write_reads("reads_thin.txt", {"0011", "00111"});
  CommandResult insufficient = run_cli("reconstruct --t 1 --s 1 --in " + thin);
  EXPECT_EQ(insufficient.exit_code, 2);
  EXPECT_NE(insufficient.diagnostics.find("insufficient-reads"), std::string::npos);
}

TEST(CliReconstruct, ExploratoryReportsBothWorstCaseCenters) {
  const ErrorBudget budget(1, 1);
  WorstCasePair pair = worst_case_pair(budget, 3, 1);
  auto common = intersection_brute(pair.first_center, pair.second_center, budget);
  Composition composition({0, 1, 2}, 3);
  std::vector<std::string> lines;
  for (const auto& w : common) {
    lines.push_back(to_text(decode(composition, w)));
  }
  const std::string path = write_reads("reads_ambiguous.txt", lines);

  CommandResult result =
      run_cli("reconstruct --t 1 --s 1 --mode exploratory --in " + path);
  EXPECT_EQ(result.exit_code, 0);
  auto candidates = split_lines(result.output);
  EXPECT_GE(candidates.size(), 2u);
  const std::string u0 = to_text(decode(composition, pair.first_center));
  const std::string v0 = to_text(decode(composition, pair.second_center));
  EXPECT_NE(std::find(candidates.begin(), candidates.end(), u0), candidates.end());
  EXPECT_NE(std::find(candidates.begin(), candidates.end(), v0), candidates.end());

  // Strict mode cannot pick a center from M-1 reads.
  CommandResult strict = run_cli("reconstruct --t 1 --s 1 --in " + path);
  EXPECT_EQ(strict.exit_code, 2);
}

TEST(CliVerify, SmallBoxPassesAndIsDeterministic) {
  const std::string args = "verify --t-max 1 --s-max 1 --r-max 3 --seed 11";
  CommandResult result = run_cli(args);
  EXPECT_EQ(result.exit_code, 0) << result.output;
  EXPECT_NE(result.output.find("recursion-vs-closed-form"), std::string::npos);
  EXPECT_NE(result.output.find("max-intersection-tightness"), std::string::npos);
  EXPECT_NE(result.output.find("s0-specialization"), std::string::npos);
  EXPECT_EQ(result.output.find("FAIL"), std::string::npos);

  CommandResult again = run_cli(args);
  EXPECT_EQ(result.output, again.output);
}

TEST(CliVerify, PaperSignFailsAtBaseCase) {
  CommandResult result =
      run_cli("verify --t-max 1 --s-max 1 --r-max 3 --paper-sign");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.output.find("FAIL"), std::string::npos);
  EXPECT_NE(result.output.find("(0 0 1)"), std::string::npos);
}

TEST(CliVerify, TightWorkBoundFailsLoudly) {
  CommandResult result =
      run_cli("verify --t-max 2 --s-max 2 --r-max 4 --work-bound 1000");
  EXPECT_EQ(result.exit_code, 1);
  EXPECT_NE(result.diagnostics.find("cap"), std::string::npos);
}

TEST(CliBench, CountersAgreeWithinBound) {
  CommandResult result = run_cli("bench --seed 5 --trials 2");
  EXPECT_EQ(result.exit_code, 0) << result.output;
  auto lines = split_lines(result.output);
  ASSERT_EQ(lines.size(), 7u);  // header + six budget rows
  EXPECT_EQ(lines.front(),
            "t,s,r,window,trials,naive_iters,opt_iters,max_opt_iters,"
            "opt_iter_bound,agree");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_NE(lines[i].find(",true"), std::string::npos) << lines[i];
  }
  EXPECT_NE(result.output.find("500,500,"), std::string::npos);

  CommandResult again = run_cli("bench --seed 5 --trials 2");
  EXPECT_EQ(result.output, again.output);  // timing goes to stderr only
}

}  // namespace
}  // namespace stickyinsdel
