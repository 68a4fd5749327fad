#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "gridtop/error.hpp"
#include "gridtop/verify.hpp"

using namespace gridtop;

namespace {

auto cli(std::vector<std::string> args) -> int {
  args.insert(args.begin(), "gridtop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("case lists carry provenance") {
  VerifyOptions o;
  for (const auto& name : {"betti-2xn", "decompositions", "hockey-stick"}) {
    const auto cases = run_claims(name, o);
    CHECK_FALSE(cases.empty());
    for (const auto& c : cases) {
      CHECK_FALSE(c.provenance.empty());
      CHECK(c.pass);
    }
  }
}

TEST_CASE("single case ids filter their group") {
  const auto cases = run_claims("lem-3xn-prime-betti", {});
  CHECK(cases.size() == 6);
  for (const auto& c : cases) CHECK(c.id == "lem-3xn-prime-betti");
  CHECK_THROWS_AS(run_claims("no-such-claim", {}), DomainError);
  const auto names = claim_names();
  CHECK(std::find(names.begin(), names.end(), "thm-2xn-betti") != names.end());
}

TEST_CASE("closed-form spot values") {
  const auto cases = verify_betti_2xn(5, {2});
  auto find = [&cases](long long n, long long k) {
    for (const auto& c : cases) {
      if (c.params[0].second == n && c.params[1].second == k) return c;
    }
    return VerificationCase{};
  };
  CHECK(find(4, 2).observed == "3 x S^4");
  CHECK(find(5, 3).observed == "6 x S^4");
  CHECK(find(5, 5).observed == "1 x S^0");
  const auto three = verify_betti_3xn(4, 3, {2});
  CHECK(three[2].observed == "15 x S^6");
  CHECK(three.back().observed == "10 x S^5");
  CHECK_THROWS_AS(verify_betti_2xn(99, {2}), CapacityError);
  const auto hs = hockey_stick_check(8);
  CHECK(all_pass(hs));
}

TEST_CASE("reports") {
  const auto cases = run_claims("hockey-stick", {});
  std::ostringstream js;
  write_cases_json(js, cases);
  const auto doc = nlohmann::json::parse(js.str());
  REQUIRE(doc.is_array());
  CHECK(doc.size() == cases.size());
  for (const char* key : {"id", "params", "expected", "observed", "provenance", "pass"}) CHECK(doc[0].contains(key));

  std::ostringstream csv;
  write_cases_csv(csv, cases);
  const auto text = csv.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(cases.size() + 1));

  std::ostringstream again;
  write_cases_json(again, run_claims("hockey-stick", {}));
  CHECK(again.str() == js.str());
}

TEST_CASE("property suites are deterministic") {
  std::ostringstream a;
  std::ostringstream b;
  write_cases_json(a, verify_properties(42, 30, 4, 3));
  write_cases_json(b, verify_properties(42, 30, 4, 3));
  CHECK(a.str() == b.str());
}

TEST_CASE("exit codes") {
  CHECK(cli({"verify", "hockey-stick"}) == 0);
  CHECK(cli({"verify", "thm-2xn-betti", "--n-max", "99"}) == 3);
  CHECK(cli({"verify", "no-such-claim"}) == 2);
  CHECK(cli({"betti", "--family", "g2xn:4", "--kind", "total", "--k", "2", "--json"}) == 0);
  CHECK(cli({"betti", "--family", "g2xn:4", "--field", "4"}) == 2);
  CHECK(cli({"betti", "--family", "bogus"}) == 2);
  CHECK(cli({"frobnicate"}) == 2);
  CHECK(cli({"shell", "build-2xn", "--n", "3", "--k", "4"}) == 2);
  CHECK(cli({"morse", "--family", "g3xn1:3", "--report", "json"}) == 0);
  CHECK(cli({"betti", "--family", "g3xn:5", "--k", "3", "--max-universe", "10"}) == 3);
}
