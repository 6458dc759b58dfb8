#include <doctest.h>

#include "lpolya/fsequence.hpp"

using namespace lpolya;

TEST_CASE("f values from the three agreeing routes") {
    JTable t;
    CHECK(f_value(t, 1).f == rat(1));
    CHECK(f_value(t, 2).f == rat(1, 2));
    CHECK(f_value(t, 3).f == rat(2, 3));
    CHECK(f_value(t, 3).max_value == 4);
    CHECK(f_value(t, 4).f == rat(11, 24));
    CHECK(f_value(t, 5).f == rat(11, 20));
    CHECK(f_value(t, 5).max_value == 66);
    CHECK(f_value(t, 6).f == rat(151, 360));
    CHECK(f_value(t, 7).f == rat(151, 315));
    CHECK_THROWS_AS(f_value(t, 0), std::invalid_argument);
}

TEST_CASE("printed reference table is off from m = 3 on") {
    JTable t;
    CHECK(printed_f_reference(1) == f_value(t, 1).f);
    CHECK(printed_f_reference(2) == f_value(t, 2).f);
    for (long m = 3; m <= 7; ++m) CHECK(printed_f_reference(m) != f_value(t, m).f);
    CHECK(printed_f_reference(3) == rat(3, 4));  // vs computed 2/3
    CHECK_THROWS_AS(printed_f_reference(8), std::invalid_argument);
}

TEST_CASE("consecutive-ratio sandwich examples") {
    JTable t;
    EulerianRatioBounds b32 = eulerian_ratio_bounds(t, 3, 2);
    CHECK(b32.ratio == rat(1, 4));
    CHECK(b32.lower == rat(2, 9));
    CHECK(b32.upper == rat(1, 4));

    EulerianRatioBounds b42 = eulerian_ratio_bounds(t, 4, 2);
    CHECK(b42.ratio == Rat(1));
    CHECK(b42.lower == Rat(1));  // the r = -1 equality case

    EulerianRatioBounds b53 = eulerian_ratio_bounds(t, 5, 3);
    CHECK(b53.ratio == rat(13, 33));
    CHECK(b53.lower < b53.ratio);
    CHECK(b53.ratio < b53.upper);

    CHECK_THROWS_AS(eulerian_ratio_bounds(t, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_ratio_bounds(t, 5, 5), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_ratio_bounds(t, 2, 1), std::invalid_argument);
}

TEST_CASE("sandwich sweep over full rows") {
    JTable t;
    VerificationReport rep = verify_eulerian_ratios(t, 60);
    CHECK(!rep.any_fail());
}

TEST_CASE("f ratio families") {
    JTable t;
    VerificationReport rep = verify_f_ratios(t, 30);
    CHECK(!rep.any_fail());

    // Regression for the printed-table shift: with the corrected values the
    // odd-index sandwich holds at p = 2 (33/40 strictly inside (4/5, 5/6));
    // the printed values would break the upper bound.
    Rat ratio = f_value(t, 5).f / f_value(t, 3).f;
    CHECK(ratio == rat(33, 40));
    CHECK(rat(4, 5) < ratio);
    CHECK(ratio < rat(5, 6));
    Rat printed_ratio = printed_f_reference(5) / printed_f_reference(3);
    CHECK(printed_ratio == rat(115, 144));
    CHECK(printed_ratio < rat(4, 5));  // printed values break the sandwich

    // Even-odd identity at p = 1: f(2) = (3/4) f(3).
    CHECK(f_value(t, 2).f == rat(3, 4) * f_value(t, 3).f);

    long printed_discrepancies = 0;
    for (const Claim& c : rep.claims) {
        if (c.id != "fm-printed-table") {
            CHECK(c.count(Status::discrepancy) == 0);
            continue;
        }
        CHECK(c.kind == ClaimKind::reference);
        for (const Record& r : c.records)
            if (r.status == Status::discrepancy) {
                ++printed_discrepancies;
                CHECK(!r.witness.empty());
            }
    }
    CHECK(printed_discrepancies == 5);  // m = 3..7
}

TEST_CASE("convexity families and in-proof identities") {
    JTable t;
    VerificationReport rep = verify_f_convexity(t, 30);
    CHECK(!rep.any_fail());

    // Spot-check in-proof identity (product form) at p = 5:
    // (2p+2)/(2p+3) * p(p+2)(2p+1)/((p+1)(2p^2+2p-1)) = 670/667 > 1.
    const long p = 5;
    Rat lhs = rat(2 * p + 2, 2 * p + 3) *
              rat(p * (p + 2) * (2 * p + 1), (p + 1) * (2 * p * p + 2 * p - 1));
    CHECK(lhs == rat(4 * p * p * p + 10 * p * p + 4 * p,
                     4 * p * p * p + 10 * p * p + 4 * p - 3));
    CHECK(lhs > Rat(1));
}

TEST_CASE("direct convexity on the initial odd segment") {
    JTable t;
    // p = 1 and p = 2 triples, the by-hand part of the argument.
    auto f = [&](long m) { return f_value(t, m).f; };
    CHECK(f(5) + f(1) >= 2 * f(3));
    CHECK(f(5) * f(1) >= rat_pow(f(3), 2));
    CHECK(f(7) + f(3) >= 2 * f(5));
    CHECK(f(7) * f(3) >= rat_pow(f(5), 2));
}

TEST_CASE("even-index log-convexity scan") {
    JTable t;
    VerificationReport rep = logconvexity_scan_even(t, 25);
    CHECK(!rep.any_fail());
    for (const Claim& c : rep.claims) {
        if (c.id == "conj-logconvex-even") {
            CHECK(c.kind == ClaimKind::conjecture);
            for (const Record& r : c.records) {
                REQUIRE(!r.witness.empty());
                CHECK(r.witness.front().first == "margin");
                CHECK(sgn(rat_parse(r.witness.front().second)) >= 0);
            }
        }
    }
    // The weaker proved bound sits strictly below 1 for every p >= 1.
    for (long p = 1; p <= 50; ++p)
        CHECK(rat(4 * p * p * p + 6 * p * p - 2, 4 * p * p * p + 6 * p * p - 1) < Rat(1));
}

TEST_CASE("parity subsequences decrease") {
    JTable t;
    const std::vector<FRecord> fs = f_table(t, 205);
    for (long p = 0; p + 1 <= 100; ++p)
        CHECK(fs[static_cast<std::size_t>(2 * p + 2)].f <
              fs[static_cast<std::size_t>(2 * p)].f);  // f(2p+3) < f(2p+1)
    for (long p = 1; p + 1 <= 100; ++p)
        CHECK(fs[static_cast<std::size_t>(2 * p + 1)].f <
              fs[static_cast<std::size_t>(2 * p - 1)].f);  // f(2p+2) < f(2p)
}

TEST_CASE("serial and parallel f sweeps serialize identically") {
    JTable t1, t2;
    CHECK(to_json(verify_f_ratios(t1, 15, Exec::serial)) ==
          to_json(verify_f_ratios(t2, 15, Exec::parallel)));
    CHECK(to_json(verify_f_convexity(t1, 15, Exec::serial)) ==
          to_json(verify_f_convexity(t2, 15, Exec::parallel)));
}

TEST_CASE("figure 2 rows") {
    JTable t;
    const std::vector<Fig2Row> rows = figure2_rows(t, 7);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].f == rat(1));
    CHECK(rows[0].odd);
    CHECK(rows[1].f == rat(1, 2));
    CHECK(!rows[1].odd);
    CHECK(rows[2].f == rat(2, 3));
    CHECK(rows[3].f == rat(11, 24));
    CHECK(rows[6].f == rat(151, 315));
}
