#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>

#include "ramlab/cli.hpp"

using namespace ramlab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ramlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--format=json");
  const auto r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::string cover(const std::string& name) { return (data_dir() / "covers" / name).string(); }

cli::RunConfig parse(std::vector<std::string> args) {
  args.insert(args.begin(), "ramlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::parse_args(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST(CliParse, RigidOrders) {
  const auto cfg = parse({"rigid", "--group", "PGL(2,7)", "--orders", "2,6,7"});
  EXPECT_EQ(cfg.subcommand, "rigid");
  EXPECT_EQ(cfg.group, "PGL(2,7)");
  EXPECT_EQ(cfg.orders, (std::vector<std::uint64_t>{2, 6, 7}));
  EXPECT_EQ(cfg.format, cli::Format::json);
  EXPECT_EQ(parse({"gexp", "--group", "A(5)", "--format", "text"}).format, cli::Format::text);
}

TEST(CliParse, GlobalOptionsAfterSubcommand) {
  const auto cfg = parse({"suite", "--nightly", "--format", "json", "--seed", "42"});
  EXPECT_EQ(cfg.tier, Tier::nightly);
  EXPECT_EQ(cfg.format, cli::Format::json);
  EXPECT_EQ(cfg.seed, 42u);
}

TEST(CliParse, PullbackAndUdisc) {
  const auto p = parse({"pullback", "--type", "2,2,3@inf,5@0", "--d", "3", "--at", "0,inf"});
  EXPECT_EQ(p.d, 3u);
  EXPECT_EQ(p.at, (std::vector<std::string>{"0", "inf"}));
  const auto u = parse({"udisc", "--cover", cover("square.poly"), "--as", "2,3/4"});
  EXPECT_EQ(u.as, (std::vector<std::string>{"2", "3/4"}));
}

TEST(CliParse, UsageErrors) {
  EXPECT_THROW(parse({"bogus"}), cli::UsageError);
  EXPECT_THROW(parse({}), cli::UsageError);
  EXPECT_THROW(parse({"rigid", "--group", "S(4)"}), cli::UsageError);
  EXPECT_THROW(parse({"rigid", "--group", "S(4)", "--orders", "2,3"}), cli::UsageError);
  EXPECT_THROW(parse({"rigid", "--group", "S(4)", "--orders", "2,3,4", "--classes", "1,2,3"}), cli::UsageError);
  EXPECT_THROW(parse({"udisc", "--cover", cover("square.poly"), "--as", "2"}), cli::UsageError);
  EXPECT_THROW(parse({"predict", "--cover", cover("square.poly"), "--a", "1/0"}), cli::UsageError);
  EXPECT_THROW(parse({"gexp", "--group", "nonexistent-file.gens"}), cli::UsageError);
}

TEST(CliRun, ExitCodes) {
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"gexp", "--group", "S(5)"}).code, 0);
  // S(4) has two classes of elements of order 2
  const auto amb = invoke({"rigid", "--group", "S(4)", "--orders", "2,3,4"});
  EXPECT_EQ(amb.code, 2);
  EXPECT_NE(amb.err.find("ambiguous"), std::string::npos) << amb.err;
  EXPECT_EQ(invoke({"predict", "--cover", cover("square.poly"), "--a", "0"}).code, 2);
  EXPECT_EQ(invoke({"ramtype", "--cover", cover("square.poly")}).code, 0);
}

TEST(CliRun, ErrorEnvelopeInJson) {
  const auto r = invoke({"--format=json", "rigid", "--group", "S(4)", "--orders", "2,3,4"});
  EXPECT_EQ(r.code, 2);
  const auto doc = json::parse(r.out);
  EXPECT_FALSE(doc["ok"].get<bool>());
  EXPECT_EQ(doc["error"]["exit_code"], 2);
}

TEST(CliRun, GexpJson) {
  const auto doc = invoke_json({"gexp", "--group", "PGL(2,7)"});
  EXPECT_TRUE(doc["ok"].get<bool>());
  EXPECT_EQ(doc["command"], "gexp");
  EXPECT_EQ(doc["result"]["gexp"], 2);
  EXPECT_EQ(doc["result"]["group"]["order"], "336");
}

TEST(CliRun, RigidJson) {
  const auto doc = invoke_json({"rigid", "--group", "S(3)", "--orders", "2,2,3"});
  const auto& res = doc["result"];
  ASSERT_TRUE(res.is_array() || res.is_object());
  const auto& first = res.is_array() ? res[0] : res;
  EXPECT_EQ(first["count"], "6");
  EXPECT_TRUE(first["rationally_rigid"].get<bool>());
}

TEST(CliRun, ClassesAndCriterion) {
  const auto doc = invoke_json({"classes", "--group", "S(4)"});
  EXPECT_EQ(doc["result"]["classes"].size(), 5u);
  const auto r = invoke({"coprime-criterion", "--group", "C(6)", "--classes", "1,2,4"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(CliRun, CoverCommands) {
  const auto b = invoke_json({"branch", "--cover", cover("square.poly")});
  EXPECT_EQ(b["result"]["branch_points"].size(), 2u);
  const auto p = invoke_json({"predict", "--cover", cover("psl2_11.poly"), "--a", "1"});
  EXPECT_EQ(p["result"]["predicted_ramified"], (json{"13", "634397"}));
  const auto u = invoke_json({"udisc", "--cover", cover("square.poly"), "--as", "2,3"});
  EXPECT_EQ(u["result"]["remaining"]["primes"], (json{"2"}));
  const auto s = invoke_json({"specialize", "--cover", cover("square.poly"), "--avoid", "2,3", "--count", "3"});
  EXPECT_EQ(s["result"]["values"].size(), 3u);
  const auto pb = invoke_json({"pullback", "--type", "2,2,3@inf,5@0", "--d", "3", "--at", "0,inf"});
  EXPECT_EQ(pb["result"]["type"].size(), 7u);
}

TEST(CliRun, SuiteRecords) {
  const auto doc = invoke_json({"suite"});
  const auto& recs = doc["result"]["records"];
  EXPECT_GE(recs.size(), 20u);
  for (const auto& j : recs) {
    EXPECT_TRUE(j.contains("claim_id"));
    EXPECT_TRUE(j.contains("anchor"));
    EXPECT_TRUE(j["pass"].is_boolean() || j["pass"].is_null());
  }
  EXPECT_EQ(doc["result"]["failed"], 0);
}

#ifdef RAMLAB_CLI_PATH
TEST(CliBinary, ProcessExitStatus) {
  const std::string bin = RAMLAB_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("gexp --group 'S(4)'"), 0);
  EXPECT_EQ(status("bogus"), 2);
  EXPECT_EQ(status("rigid --group 'S(4)' --orders 2,3,4"), 2);
}
#endif
