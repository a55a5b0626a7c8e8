#include <arh/cli.hpp>

#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "arh");
  std::ostringstream out, err;
  const int code = arh::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("shimura disc6 as JSON") {
  const auto r = run({"shimura", "--case", "disc6"});
  REQUIRE(r.code == arh::cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  const auto& c = j.is_array() ? j.at(0) : j;
  CHECK(c.at("h").at("2") == "11/18");
  CHECK(c.at("h").at("3") == "7/12");
  CHECK(c.at("matches_expected") == true);
}

TEST_CASE("height of a weight vector") {
  const auto r = run({"height", "--ram", "2,3,inf", "--kind", "pet"});
  REQUIRE(r.code == arh::cli::kOk);
  CHECK(nlohmann::json::parse(r.out).dump().find("value") != std::string::npos);
}

TEST_CASE("bad weights exit with a domain error") {
  const auto r = run({"height", "--weights", "0.9,0.1,0.1"});
  CHECK(r.code == arh::cli::kDomainError);
  CHECK(!r.err.empty());
  CHECK(run({"height", "--weights", "a,b"}).code == arh::cli::kDomainError);
  CHECK(run({"no-such-command"}).code == arh::cli::kDomainError);
}

TEST_CASE("output formats") {
  const auto csv = run({"--format", "csv", "table2"});
  REQUIRE(csv.code == arh::cli::kOk);
  CHECK(csv.out.find(',') != std::string::npos);
  CHECK(csv.out.find('{') == std::string::npos);
  const auto text = run({"--format", "text", "fermat", "--m", "4,5"});
  REQUIRE(text.code == arh::cli::kOk);
  CHECK(text.out.find("4") != std::string::npos);
}

TEST_CASE("verify reports through the exit code") {
  CHECK(run({"verify", "--suite", "specfun"}).code == arh::cli::kOk);
  CHECK(run({"verify", "--suite", "fermat"}).code == arh::cli::kVerifyFailed);
  CHECK(run({"verify", "--suite", "bogus"}).code == arh::cli::kDomainError);
}

}  // TEST_SUITE
