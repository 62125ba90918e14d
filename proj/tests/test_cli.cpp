#include "hallprim/serialize.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace hallprim;

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(HALLPRIM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Last non-comment line of text output.
std::string result_line(const std::string& out) {
  std::string last;
  size_t start = 0;
  while (start < out.size()) {
    size_t end = out.find('\n', start);
    if (end == std::string::npos) end = out.size();
    std::string line = out.substr(start, end - start);
    if (!line.empty() && line[0] != '#') last = line;
    start = end + 1;
  }
  return last;
}

}  // namespace

TEST(Cli, DocumentedExamples) {
  auto a = run("hall primitive 2 --method center");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(result_line(a.out), "[2] + (1-q)[1,1]");
  auto b = run("hall polynomial 1 1 1,1");
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(result_line(b.out), "q + 1");
  auto c = run("fq hallnum --m 1 --q 2 --R 1,1 --sub 1 --quot 1");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(result_line(c.out), "3");
}

TEST(Cli, EnvelopeEchoesConventions) {
  auto r = run("fq z --m 2 --r 1 --q 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# command: fq z"), std::string::npos);
  EXPECT_NE(r.out.find("m=2"), std::string::npos);
  EXPECT_NE(r.out.find("q^{-2}"), std::string::npos);
  EXPECT_NE(r.out.find("# warning:"), std::string::npos);
}

TEST(Cli, WarnsAboutThirdPrimitive) {
  EXPECT_NE(run("hall primitive 3").out.find("# warning:"), std::string::npos);
  EXPECT_EQ(run("hall primitive 2").out.find("# warning:"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("hall polynomial 1 1 x").code, 2);
  EXPECT_EQ(run("fq hallnum --m 2 --q 2 --R '[1;2' --sub 0 --quot 0").code, 2);
  EXPECT_EQ(run("nosuch").code, 2);
  EXPECT_EQ(run("hall verify-primitive 3").code, 0);
  EXPECT_EQ(run("fq verify-primitive --m 2 --n 1 --q 2").code, 0);
  EXPECT_EQ(run("fq verify-central --m 2 --r 1 --q 2").code, 0);
  EXPECT_EQ(run("fq two-vertex --n 1 --q 2").code, 1);
}

TEST(Cli, JsonRoundTripsThroughReaders) {
  auto h = run("hall primitive 3 --json");
  ASSERT_EQ(h.code, 0);
  auto hj = nlohmann::json::parse(h.out);
  EXPECT_EQ(hall_elem_from_json(hj["result"]), primitive_center(3));
  EXPECT_FALSE(hj["warnings"].empty());
  auto s = run("symf c-in-p 3 --json");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(symfunc_from_json(nlohmann::json::parse(s.out)["result"]), c_in_p(3));
  auto c = run("symf p-from-c 4 --via compositions --json");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(cexpr_from_json(nlohmann::json::parse(c.out)["result"]), p_from_c_closed(4));
  auto z = run("fq z --m 2 --r 1 --q 3 --json");
  ASSERT_EQ(z.code, 0);
  auto zj = nlohmann::json::parse(z.out);
  EXPECT_EQ(num_hall_elem_from_json(zj["result"]), z_r_numeric(2, 1, 3));
  EXPECT_EQ(zj["conventions"]["m"], 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"symf hl-P 2,1", "hall coproduct 2,1", "fq enumerate --m 2 --deg 2 --q 2", "fq z --m 3 --r 1 --q 2 --json"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, LatexOutput) {
  auto r = run("hall primitive 2 --latex");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("I_{"), std::string::npos);
}
