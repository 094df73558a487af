#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using fuchslab::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  args.push_back("--no-timings");
  const Result r = invoke(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, ClassifyOddGroup) {
  const json r = invoke_json({"classify", "C3 x C3"});
  EXPECT_EQ(r["command"], "classify");
  EXPECT_EQ(r["group"], "C3^2");
  EXPECT_EQ(r["fully_realizable"], false);
  EXPECT_EQ(r["reason"], "THM11_ODD");
  EXPECT_TRUE(r["witness_recipe"].is_null());
  EXPECT_EQ(r["version"], fuchslab::cli::kVersion);
}

TEST(Cli, VerifyC12) {
  const json r = invoke_json({"verify", "C12"});
  EXPECT_EQ(r["counts"]["group_endos"], 12);
  EXPECT_EQ(r["counts"]["realized"], 12);
  EXPECT_EQ(r["fully_realizes"], true);
  EXPECT_EQ(r["witness_recipe"], "a24xC3(rank=0,c4=true)");
  EXPECT_EQ(r["ring"]["dim"], 5);
  EXPECT_EQ(r["ring"]["unit_group"], "C12");
}

TEST(Cli, VerifyWithExplicitRing) {
  const json ok = invoke_json({"verify", "C4", "--ring", "chain(k=2,j=3)"});
  EXPECT_EQ(ok["fully_realizes"], true);
  const json wrong = invoke_json({"verify", "C4", "--ring", "a24(rank=1,c4=true)"});
  EXPECT_EQ(wrong["unit_group_ok"], false);
  EXPECT_EQ(wrong["fully_realizes"], false);
  const json field = invoke_json({"verify", "C3 x C3"});
  EXPECT_EQ(field["fully_realizes"], false);
  EXPECT_TRUE(field["counts"]["realized"].is_null());
}

TEST(Cli, ConstructAndEndos) {
  const json c = invoke_json({"construct", "C2 x C4"});
  EXPECT_EQ(c["ring"]["dim"], 4);
  EXPECT_EQ(c["witness_recipe"], "a24(rank=1,c4=true)");
  const json s = invoke_json({"construct", "Cinf^2 x C2"});
  EXPECT_EQ(s["witness_recipe"], "symbolic:F2[Cinf^2] x a24(rank=1,c4=false)");
  EXPECT_TRUE(s["ring"].is_null());
  const json e = invoke_json({"endos", "C4"});
  EXPECT_EQ(e["counts"]["group_endos"], 4);
  EXPECT_EQ(e["generator_images"].size(), 4U);
  EXPECT_EQ(e["generator_images"][1], "[(1)]");
  const json big = invoke_json({"endos", "C2^4"});
  EXPECT_EQ(big["counts"]["group_endos"], 65536);
  EXPECT_TRUE(big["generator_images"].is_null());
}

TEST(Cli, Search) {
  const json chain = invoke_json({"search", "C4", "--pool", "chain"});
  EXPECT_EQ(chain["exhaustive"], true);
  EXPECT_GE(chain["search"]["fully_realizing_found"].get<int>(), 1);
  const json c4c4 = invoke_json({"search", "C4 x C4", "--budget", "50"});
  EXPECT_EQ(c4c4["exhaustive"], false);
  EXPECT_EQ(c4c4["search"]["budget_exhausted"], true);
  EXPECT_EQ(c4c4["search"]["ideals_examined"], 50);
}

TEST(Cli, JsonIsSortedAndDeterministic) {
  const Result a = invoke({"verify", "C2^2 x C4", "--json", "--no-timings"});
  const Result b = invoke({"--json", "verify", "C2^2 x C4", "--no-timings"});
  EXPECT_EQ(a.out, b.out);
  const json r = json::parse(a.out);
  std::size_t last = 0;
  for (const auto& [key, value] : r.items()) {
    const std::size_t pos = a.out.find("\n  \"" + key + "\"");
    ASSERT_NE(pos, std::string::npos) << key;
    EXPECT_GT(pos, last == 0 ? 0 : last) << key;
    last = pos;
  }
  for (const char* key : {"command", "group", "fully_realizable", "fully_realizes", "reason", "counts",
                          "witness_recipe", "exhaustive", "version"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  EXPECT_FALSE(r.contains("timings_ms"));
  const Result timed = invoke({"classify", "C2", "--json"});
  EXPECT_TRUE(json::parse(timed.out).contains("timings_ms"));
}

TEST(Cli, GroupStringRoundTrips) {
  for (const char* spec : {"C2 x C2 x C4 x C3", "Cinf x C6 x C4", "C1", "C7^2"}) {
    const json r = invoke_json({"classify", spec});
    EXPECT_EQ(fuchslab::parse_group(r["group"].get<std::string>()), fuchslab::parse_group(spec));
  }
}

TEST(Cli, TextTable) {
  const Result r = invoke({"verify", "C2", "--no-timings"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fully_realizes      true"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("counts.realized     2"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"classify", "C0"}).code, 2);
  EXPECT_EQ(invoke({"classify", "D4"}).code, 2);
  EXPECT_EQ(invoke({"verify", "C4", "--ring", "nonsense"}).code, 2);
  EXPECT_EQ(invoke({"search", "C4", "--pool", "all"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"classify"}).code, 2);
  EXPECT_EQ(invoke({"endos", "Cinf"}).code, 2);
  EXPECT_EQ(invoke({"construct", "C8"}).code, 0);
  EXPECT_EQ(invoke({"verify", "C2^5"}).code, 3);
  EXPECT_EQ(invoke({"verify", "C12", "--max-endos", "5"}).code, 3);
  EXPECT_EQ(invoke({"verify", "C2^2 x C4", "--max-unit-dim", "3"}).code, 3);
  EXPECT_EQ(invoke({"search", "C17"}).code, 3);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  const Result bad = invoke({"classify", "C2 x"});
  EXPECT_NE(bad.err.find("bad group spec"), std::string::npos);
}

TEST(Cli, Selftest) {
  const Result r = invoke({"selftest", "--max-order", "32", "--json", "--no-timings"});
  EXPECT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["criteria"].size(), 8U);
}
