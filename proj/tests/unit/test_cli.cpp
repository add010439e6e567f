#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/nlist.hpp"
#include "doctest.h"
#include "editdiam/error.hpp"
#include "oracles.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = editdiam::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sub(const char* name) { return oracle::catalogue(name).string(); }

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("editdiam_test_" + name);
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("n lists") {
  using editdiam::cli::parse_n_list;
  CHECK(parse_n_list("5") == std::vector<std::size_t>{5});
  CHECK(parse_n_list("2^4,3") == std::vector<std::size_t>{16, 3});
  CHECK(parse_n_list("3:6") == std::vector<std::size_t>{3, 4, 5, 6});
  CHECK(parse_n_list("16:256:x2") == std::vector<std::size_t>{16, 32, 64, 128, 256});
  CHECK_THROWS_AS(parse_n_list("x"), editdiam::InputError);
  CHECK_THROWS_AS(parse_n_list("5:3"), editdiam::InputError);
  CHECK_THROWS_AS(parse_n_list(""), editdiam::InputError);
}

TEST_CASE("dist") {
  Run r = run({"dist", "--x", "10002", "--y", "03004"});
  CHECK(r.code == 0);
  CHECK(r.out == "d_E = 2\ndoubled = 4\n");
  CHECK(r.err.empty());
  r = run({"--format", "csv", "dist", "--x", "000", "--y", "11", "--engine", "oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "doubled,d_E\n5,5/2\n");
  r = run({"dist", "--x", "a b c", "--y", "c b a"});
  CHECK(r.code == 0);
  CHECK(r.out.find("doubled = 4") != std::string::npos);
}

TEST_CASE("words and diam") {
  Run r = run({"words", "--sub", sub("tm.sub"), "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0010\n", 0) == 0);
  CHECK(r.out.find("# size=10 ") != std::string::npos);

  r = run({"words", "--sub", sub("fibonacci.sub"), "--profile", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,count\n1,2\n2,3\n3,4\n4,5\n5,6\n");

  r = run({"diam", "--sub", sub("tm.sub"), "--n", "8", "--header"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,doubled,exact,witness1,witness2,pairs,pruned\n8,6,1,", 0) == 0);
}

TEST_CASE("classify") {
  Run r = run({"classify", "--sub", sub("swap.sub")});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: FULL") != std::string::npos);
  r = run({"--format", "csv", "classify", "--sub", sub("tm.sub")});
  CHECK(r.code == 0);
  CHECK(r.out.find("# verdict=SUBLINEAR") != std::string::npos);
}

TEST_CASE("tm") {
  Run r = run({"tm", "--n-list", "1:3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,doubled_dE,bb,lower,upper\n1,2,0,", 0) == 0);
  const auto bfile = std::filesystem::temp_directory_path() / "editdiam_test_b.txt";
  r = run({"tm", "--n-list", "1:3", "--bfile", bfile.string()});
  CHECK(r.code == 0);
  std::ifstream in(bfile);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == "1 0\n2 1\n3 1\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == editdiam::cli::kUsage);
  CHECK(run({"frobnicate"}).code == editdiam::cli::kUsage);
  CHECK(run({"diam", "--sub", "/nonexistent.sub", "--n", "4"}).code == editdiam::cli::kUsage);
  const auto bad = temp_file("bad.sub", "0 -> 0 1\n1 0\n");
  Run r = run({"diam", "--sub", bad.string(), "--n", "4"});
  CHECK(r.code == editdiam::cli::kUsage);
  CHECK(r.err.find("2:") != std::string::npos);
  CHECK(r.out.empty());
  // Sampling without a seed is refused.
  CHECK(run({"diam", "--sub", sub("tm.sub"), "--n", "64", "--sample", "10"}).code == editdiam::cli::kUsage);
  CHECK(run({"rk", "--sub", sub("tm.sub"), "--k", "3"}).code == editdiam::cli::kUsage);
  CHECK(run({"curve", "--sub", sub("constant.sub"), "--n-list", "4,8"}).code == editdiam::cli::kDomain);
  CHECK(run({"--mem-cap", "64", "words", "--sub", sub("tm.sub"), "--n", "40"}).code == editdiam::cli::kResource);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"--version"}).code == 0);
}

TEST_CASE("sampled commands do not depend on the thread count") {
  const std::vector<std::vector<std::string>> cmds = {
      {"diam", "--sub", sub("tm.sub"), "--n", "64,300", "--sample", "100", "--seed", "5"},
      {"diam", "--sub", sub("tribonacci.sub"), "--n", "5000", "--sample", "10", "--seed", "5"},
      {"curve", "--sub", sub("tm.sub"), "--n-list", "16:128:x2", "--sample", "50", "--seed", "5"},
  };
  for (const auto& cmd : cmds) {
    std::vector<std::string> a{"--threads", "1"}, b{"--threads", "8"};
    a.insert(a.end(), cmd.begin(), cmd.end());
    b.insert(b.end(), cmd.begin(), cmd.end());
    const Run ra = run(a), rb = run(b);
    CHECK(ra.code == 0);
    CHECK(ra.out == rb.out);
    CHECK_FALSE(ra.out.empty());
  }
}

TEST_CASE("output file") {
  const auto out = std::filesystem::temp_directory_path() / "editdiam_test_out.csv";
  std::filesystem::remove(out);
  const Run r = run({"-o", out.string(), "dist", "--x", "01", "--y", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(out));
}
