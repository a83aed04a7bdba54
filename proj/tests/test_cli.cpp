#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rsf/cli.hpp"
#include "rsf/json_io.hpp"

using namespace rsf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rsf_cli_" + name)).string();
}

}  // namespace

TEST(Cli, OrderingExample) {
  Result r = call({"ordering", "--family", "A", "--rank", "3", "--word", "1,2,1,3,2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"ordering\":[[1,-1,0,0],[1,0,-1,0],[0,1,-1,0],[1,0,0,-1],[0,1,0,-1],[0,0,1,-1]],"
            "\"word\":[1,2,1,3,2,1]}\n");
}

TEST(Cli, ForwardZeroIsIdentity) {
  Result r = call({"forward", "--family", "A", "--rank", "2", "--input", "-"},
                  R"({"zeta":[["0","0"],["0","0"],["0","0"]]})");
  ASSERT_EQ(r.code, 0) << r.out;
  json j = json::parse(r.out);
  EXPECT_EQ(j["g"], json::parse(R"([["1","0","0"],["0","1","0"],["0","0","1"]])"));
}

TEST(Cli, CountWords) {
  EXPECT_EQ(call({"count-words", "--gl", "4"}).out, "{\"enumerated\":16,\"formula\":16}\n");
  EXPECT_EQ(call({"count-words", "--family", "A", "--rank", "3"}).out,
            "{\"enumerated\":16,\"formula\":16}\n");
  json b = json::parse(call({"count-words", "--family", "B", "--rank", "3"}).out);
  EXPECT_EQ(b["enumerated"], 42);
  EXPECT_EQ(b["square_hook"], 42);
  EXPECT_EQ(b["kraskiewicz_printed"], 30240);
}

TEST(Cli, InvertComposesWithForwardThroughFiles) {
  std::string zin = temp_path("zeta.json"), mid = temp_path("coords.json"), zout = temp_path("back.json");
  {
    std::ofstream f(zin);
    f << R"({"zeta":[["1","2+1*i"],["-1/2","3"],["0","1/3"],["2","-1"]],"h":["2","1/2","3","1/3"]})";
  }
  Result a = call({"forward", "--family", "C", "--rank", "2", "--input", zin, "--output", mid});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, "");
  Result b = call({"invert", "--family", "C", "--rank", "2", "--input", mid, "--output", zout});
  ASSERT_EQ(b.code, 0) << b.out;
  std::ifstream f1(zin), f2(zout);
  json want = json::parse(f1), got = json::parse(f2);
  EXPECT_EQ(got["zeta"], want["zeta"]);
  EXPECT_EQ(got["h"], want["h"]);
  for (const auto& p : {zin, mid, zout}) std::remove(p.c_str());
}

TEST(Cli, ExitCodes) {
  Result bad_family = call({"canonical-word", "--family", "E", "--rank", "3"});
  EXPECT_EQ(bad_family.code, 2);
  EXPECT_EQ(json::parse(bad_family.out)["error"]["kind"], "invalid_input");
  Result bad_word = call({"forward", "--family", "A", "--rank", "2", "--word", "1,2", "--input", "-"},
                         R"({"zeta":[]})");
  EXPECT_EQ(bad_word.code, 2);
  EXPECT_EQ(json::parse(bad_word.out)["error"]["kind"], "invalid_word");
  EXPECT_EQ(call({"forward", "--family", "A", "--rank", "2", "--input", "-"}, "{not json").code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"forward", "--family", "A", "--rank", "2"}).code, 2);
  Result exc = call({"invert", "--family", "A", "--rank", "2", "--input", "-"},
                    R"({"l":["5","1","7"],"u":["2","-1","3"]})");
  EXPECT_EQ(exc.code, 3);
  json e = json::parse(exc.out)["error"];
  EXPECT_EQ(e["kind"], "exceptional_set");
  EXPECT_TRUE(e["index"].is_number_integer());
  Result strat = call({"ldu", "--gl", "2", "--input", "-"}, "[[0,1],[1,0]]");
  EXPECT_EQ(strat.code, 3);
  EXPECT_EQ(json::parse(strat.out)["error"]["index"], 1);
}

TEST(Cli, LduRoutesAgree) {
  std::string m = R"({"matrix":[["2","1","0"],["4","3","1"],["-2","1","5+1*i"]]})";
  Result a = call({"ldu", "--gl", "3", "--input", "-"}, m);
  Result b = call({"ldu", "--gl", "3", "--minors", "--input", "-"}, m);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ValidateOrdering) {
  Result ok = call({"validate-ordering", "--gl", "3", "--input", "-"},
                   R"({"ordering":[[1,-1,0],[1,0,-1],[0,1,-1]]})");
  EXPECT_EQ(ok.out, "{\"valid\":true,\"word\":[1,2,1]}\n");
  Result bad = call({"validate-ordering", "--gl", "3", "--input", "-"},
                    R"({"ordering":[[1,0,-1],[1,-1,0],[0,1,-1]]})");
  EXPECT_EQ(bad.out, "{\"failed_at\":1,\"valid\":false}\n");
}

TEST(Cli, JacobianDualHaar) {
  std::string z = R"({"zeta":[["1","4"],["2","5"],["3","6"]]})";
  json j = json::parse(call({"jacobian", "--gl", "3", "--input", "-"}, z).out);
  EXPECT_EQ(j["formula"], "11");
  EXPECT_EQ(j["ad"], "11");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(json::parse(call({"haar-density", "--gl", "3", "--input", "-"}, z).out)["density"], "121");
  json d = json::parse(call({"dual", "--gl", "3", "--input", "-"}, z).out);
  EXPECT_EQ(d["eta"].size(), 3u);
  EXPECT_EQ(d["h_dual"].size(), 3u);
}

TEST(Cli, SelfCheckAndDeterminism) {
  Result a = call({"self-check"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(json::parse(a.out)["pass"], true);
  EXPECT_EQ(call({"self-check"}).out, a.out);
  std::string z = R"({"zeta":[["1","2"],["3","1/2"],["-1","1*i"],["0","2"]]})";
  EXPECT_EQ(call({"forward", "--family", "B", "--rank", "2", "--input", "-"}, z).out,
            call({"forward", "--family", "B", "--rank", "2", "--input", "-"}, z).out);
}

TEST(Cli, CanonicalWord) {
  EXPECT_EQ(call({"canonical-word", "--family", "C", "--rank", "3"}).out,
            "{\"word\":[1,2,1,2,3,2,1,2,3]}\n");
}
