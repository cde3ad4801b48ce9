#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/certificate.hpp"
#include "qcert/facts.hpp"
#include "support.hpp"

using namespace qcert;
using qcert::testing::data_path;
using qcert::testing::table_lpolys;

namespace {

const Certificate& full() {
  static const Certificate c = run_pipeline(load_config(data_path("config.json")));
  return c;
}

TernaryQuarticForm fermat() {
  TernaryForm f(4);
  f.set(4, 0, 0, Int(1));
  f.set(0, 4, 0, Int(1));
  f.set(0, 0, 4, Int(1));
  return TernaryQuarticForm(f);
}

}  // namespace

TEST_CASE("bundled curve with Hecke data is certified") {
  const auto& c = full();
  CHECK(c.verdict == "maximal adelic image");
  CHECK(c.certified());
  CHECK(c.failing_step.empty());
  REQUIRE(c.obligations.size() == 7);
  const std::vector<std::string> names{"reduction-analysis", "l-polynomials", "mod-2",   "transvections",
                                       "irreducibility",     "primitivity",   "assembly"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(c.obligations[i].name == names[i]);
    CHECK(c.obligations[i].status != ObligationStatus::Failed);
  }
  CHECK(c.obligation("assembly").status == ObligationStatus::Trusted);
  const auto& ev = c.obligation("reduction-analysis").evidence;
  CHECK(ev.at("bad_primes") == nlohmann::ordered_json::array({7, 11, 83}));
  const auto& tv = c.obligation("transvections").evidence.at("choice");
  CHECK(tv.at("l = 7") == 11);
  CHECK(tv.at("l = 11") == 7);
  CHECK(tv.at("any other odd l") == 7);
  CHECK(c.obligation("irreducibility").evidence.at("dim2").at("gcd_factorization") == "3^16");
  CHECK_FALSE(c.notes.empty());
}

TEST_CASE("every trusted-fact reference resolves") {
  std::set<std::string> ids;
  for (const auto& f : trusted_facts()) {
    CHECK(ids.insert(f.id).second);
    CHECK_FALSE(f.statement.empty());
    CHECK_FALSE(f.reference.empty());
  }
  for (const auto& o : full().obligations)
    for (const auto& r : o.fact_refs) CHECK(ids.count(r) == 1);
  CHECK_THROWS_AS(trusted_fact("TF-NONE"), std::out_of_range);
  CHECK(trusted_fact("TF-SP6F2").id == "TF-SP6F2");
}

TEST_CASE("skipping Hecke data leaves the dim-2 case open") {
  const auto c = run_pipeline(load_config(data_path("config_no_hecke.json")));
  CHECK(c.verdict == "not certified");
  CHECK(c.failing_step.find("irreducibility") != std::string::npos);
  CHECK(c.failing_step.find("dim-2") != std::string::npos);
  CHECK(c.obligation("irreducibility").status == ObligationStatus::Failed);
  CHECK(c.obligation("primitivity").status == ObligationStatus::Proved);
  CHECK(c.obligation("assembly").status == ObligationStatus::Failed);
}

TEST_CASE("Fermat quartic stops at reduction analysis") {
  Config cfg;
  const auto c = run_pipeline(fermat(), cfg);
  CHECK(c.verdict == "not certified");
  CHECK(c.failing_step == "reduction-analysis");
  CHECK(c.obligations.size() == 7);
  CHECK_FALSE(c.obligation("reduction-analysis").message.empty());
  CHECK(c.obligation("assembly").message.find("not attempted") != std::string::npos);
  CHECK_NOTHROW(render_report(c, "text"));
}

TEST_CASE("missing Hecke file is reported, not thrown") {
  Config cfg = load_config(data_path("config.json"));
  cfg.hecke.path = data_path("does_not_exist.json");
  const auto c = run_pipeline(cfg);
  CHECK_FALSE(c.certified());
  CHECK(c.obligation("irreducibility").evidence.contains("hecke_error"));
}

TEST_CASE("reports") {
  const auto& c = full();
  const auto j1 = render_report(c, "json");
  CHECK(j1 == render_report(c, "json"));
  CHECK(render_report(run_pipeline(load_config(data_path("config.json"))), "json") == j1);
  const auto parsed = nlohmann::json::parse(j1);
  CHECK(parsed.at("verdict") == "maximal adelic image");
  const auto text = render_report(c, "text");
  for (const auto& L : table_lpolys()) CHECK(text.find(to_string(L.poly(), 'T')) != std::string::npos);
  CHECK(text.find("3^16") != std::string::npos);
  for (const char* w : {"P_17 irreducible mod 3", "P_19 irreducible mod 83", "TF-SP6F2", "TF-HALL-CRITERION"})
    CHECK(text.find(w) != std::string::npos);
  CHECK_THROWS_AS(render_report(c, "xml"), std::invalid_argument);
}

TEST_CASE("config parsing") {
  const auto c = parse_config(nlohmann::json::parse(R"({"curve_path": "c.json", "hecke": {"mode": "skip"}})"), "/base");
  CHECK(c.curve_path == "/base/c.json");
  CHECK(c.frobenius_primes.size() == 9);
  CHECK(c.hecke.mode == "skip");
  CHECK_FALSE(c.extended_checks);
  CHECK_THROWS(parse_config(nlohmann::json::parse(R"({"hecke": {"mode": "skip"}})")));
  CHECK_THROWS(parse_config(nlohmann::json::parse(R"({"curve_path": "c", "hecke": {"mode": "magic"}})")));
  CHECK_THROWS(parse_config(nlohmann::json::parse(R"({"curve_path": "c", "hecke": {"mode": "file"}})")));
  CHECK_THROWS(parse_config(nlohmann::json::parse(R"({"curve_path": "c", "frobenius_primes": [4]})")));
}
