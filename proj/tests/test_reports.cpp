#include <doctest.h>

#include <json.hpp>

#include "lpolya/report.hpp"

using namespace lpolya;

namespace {

VerificationReport sample_report() {
    VerificationReport rep;
    Claim& a = rep.add("sample-claim", ClaimKind::theorem);
    a.records.push_back({{{"n", "4"}, {"r", "-1"}}, Status::pass, {}});
    a.records.push_back({{{"n", "4"}, {"r", "0"}},
                         Status::fail,
                         {{"ratio", "1/4"}, {"lower", "2/9"}}});
    a.records.push_back({{{"n", "5"}, {"r", "0"}}, Status::skip, {}});
    Claim& b = rep.add("sample-reference", ClaimKind::reference);
    b.records.push_back({{{"m", "3"}},
                         Status::discrepancy,
                         {{"computed", "2/3"}, {"printed", "3/4"}}});
    return rep;
}

}  // namespace

TEST_CASE("status bookkeeping and exit semantics") {
    VerificationReport rep = sample_report();
    CHECK(rep.any_fail());
    CHECK(rep.count(Status::pass) == 1);
    CHECK(rep.count(Status::fail) == 1);
    CHECK(rep.count(Status::skip) == 1);
    CHECK(rep.count(Status::discrepancy) == 1);

    VerificationReport ok;
    Claim& c = ok.add("all-good", ClaimKind::identity);
    c.records.push_back({{{"n", "1"}}, Status::pass, {}});
    c.records.push_back({{{"n", "2"}}, Status::discrepancy, {{"w", "1"}}});
    CHECK(!ok.any_fail());  // discrepancies do not fail a run
}

TEST_CASE("json round trip is byte-stable") {
    const VerificationReport rep = sample_report();
    const std::string first = to_json(rep);
    const std::string second = to_json(rep);
    CHECK(first == second);
    // reparse and re-dump reproduces the identical byte sequence
    nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(first);
    CHECK(parsed.dump(2) + "\n" == first);
    CHECK(parsed["claims"][0]["claim_id"] == "sample-claim");
    CHECK(parsed["claims"][0]["records"][1]["witness"]["ratio"] == "1/4");
    CHECK(parsed["claims"][1]["records"][0]["status"] == "DISCREPANCY");
}

TEST_CASE("csv shape") {
    const std::string csv = to_csv(sample_report());
    CHECK(csv.find("claim_id,kind,params,status,witness\n") == 0);
    CHECK(csv.find("sample-claim,theorem,n=4;r=0,FAIL,ratio=1/4;lower=2/9\n") !=
          std::string::npos);
    CHECK(csv.find("sample-reference,reference,m=3,DISCREPANCY,") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);  // LF only
    CHECK(csv.back() == '\n');
}

TEST_CASE("text summary lists non-pass records") {
    const std::string text = to_text(sample_report());
    CHECK(text.find("sample-claim [theorem]: 3 records, 1 pass, 1 fail, 1 skip") !=
          std::string::npos);
    CHECK(text.find("FAIL n=4;r=0") != std::string::npos);
    CHECK(text.find("DISCREPANCY m=3") != std::string::npos);
}

TEST_CASE("merge keeps claim order") {
    VerificationReport a = sample_report();
    VerificationReport b;
    b.add("later-claim", ClaimKind::conjecture);
    a.merge(std::move(b));
    REQUIRE(a.claims.size() == 3);
    CHECK(a.claims[2].id == "later-claim");
}
