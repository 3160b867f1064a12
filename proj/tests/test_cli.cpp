#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(WAYLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path tmp(const std::string& name) {
  fs::create_directories(WAYLAB_TEST_TMP);
  return fs::path(WAYLAB_TEST_TMP) / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, ScanProducesEightyOneRows) {
  const auto r = run("scan --alpha-min 0.6 --alpha-max 1.0 --steps 81");
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 82u);
  EXPECT_EQ(ls[0], "alpha,min_bound,nx,ny,nz");
  const auto& last = ls.back();
  const auto c1 = last.find(','), c2 = last.find(',', c1 + 1);
  EXPECT_EQ(last.substr(0, c1), "1");
  EXPECT_LE(std::stod(last.substr(c1 + 1, c2 - c1 - 1)), 1e-9);
}

TEST(Cli, ScanOutputsAreDeterministic) {
  const auto a = tmp("a.csv"), b = tmp("b.csv"), sa = tmp("a.svg"), sb = tmp("b.svg");
  ASSERT_EQ(run("scan --alpha-min 0.6 --alpha-max 1.0 --steps 9 --out " + a.string() + " --svg " + sa.string()).code, 0);
  ASSERT_EQ(run("scan --alpha-min 0.6 --alpha-max 1.0 --steps 9 --out " + b.string() + " --svg " + sb.string()).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(sa), slurp(sb));
  EXPECT_NE(slurp(sa).find("<svg"), std::string::npos);
}

TEST(Cli, RegionWritesCsvAndSvg) {
  const auto c = tmp("region.csv"), s = tmp("region.svg");
  ASSERT_EQ(run("region --alpha 0.9 --grid 41 --out " + c.string() + " --svg " + s.string()).code, 0);
  EXPECT_EQ(slurp(c).rfind("#alpha,0.9", 0), 0u);
  EXPECT_NE(slurp(s).find("<circle"), std::string::npos);
}

TEST(Cli, ExampleGenwayPasses) {
  const auto r = run("example ex4-genway");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"all_passed\": true"), std::string::npos);
}

TEST(Cli, ExampleWithParam) {
  const auto r = run("example u-alpha --param alpha=0.7");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.7"), std::string::npos);
}

TEST(Cli, CatalogListsEntries) {
  const auto r = run("catalog");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ex5-multimeter"), std::string::npos);
}

TEST(Cli, ValidationFailuresExitOne) {
  EXPECT_EQ(run("example nope").code, 1);
  EXPECT_EQ(run("example u-alpha --param alpha=3").code, 1);
  EXPECT_EQ(run("scan --alpha-min 0.6").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
  const auto bad = tmp("bad.json");
  write(bad, "{\"system_dim\": 2}");
  EXPECT_EQ(run("analyze --model " + bad.string()).code, 1);
  write(bad, "{ not json");
  EXPECT_EQ(run("analyze --model " + bad.string()).code, 1);
}

TEST(Cli, IoFailuresExitTwo) {
  EXPECT_EQ(run("analyze --model /nonexistent/model.json").code, 2);
  EXPECT_EQ(run("scan --alpha-min 0.6 --alpha-max 1.0 --steps 3 --out /nonexistent/dir/x.csv").code, 2);
}

TEST(Cli, AnalyzeAndAudit) {
  const auto model = tmp("cz.json"), q = tmp("q.json"), mm = tmp("mm.json"), st = tmp("states.json");
  write(model, R"({"system_dim": 2, "apparatus_dim": 2,
    "pointer": {"dim": 2, "outcomes": ["+", "-"],
                "effects": [[[0.5, 0.5], [0.5, 0.5]], [[0.5, -0.5], [-0.5, 0.5]]]},
    "coupling": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]],
    "probe": [0.7071067811865476, 0.7071067811865476]})");
  write(q, "[[1, 0], [0, 2]]");
  const auto r = run("analyze --model " + model.string() + " --quantity " + q.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("prop3"), std::string::npos);
  EXPECT_EQ(run("analyze --model " + model.string() + " --additive " + q.string() + " --multiplicative " + q.string()).code, 1);

  const auto ex = run("example ex5-multimeter");
  ASSERT_EQ(ex.code, 0);
  const auto start = ex.out.find("\"object\": ");
  ASSERT_NE(start, std::string::npos);
  // The object is the multimeter JSON; extract by brace matching.
  std::size_t i = ex.out.find('{', start), depth = 0, end = i;
  for (; end < ex.out.size(); ++end) {
    if (ex.out[end] == '{') ++depth;
    if (ex.out[end] == '}' && --depth == 0) break;
  }
  write(mm, ex.out.substr(i, end - i + 1));
  write(st, R"({"states": [{"label": "0", "vector": [1, 0]}, {"label": "1", "vector": [0, 1]}]})");
  const auto audit = run("multimeter-audit --model " + mm.string() + " --states " + st.string());
  ASSERT_EQ(audit.code, 0);
  EXPECT_NE(audit.out.find("\"orthogonality_ok\": true"), std::string::npos);
}
