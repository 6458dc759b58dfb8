#include <doctest.h>

#include <cmath>

#include "lpolya/hessian.hpp"

using namespace lpolya;

TEST_CASE("diagonal entries at k = 4 and k = 5") {
    JTable t;
    HessianDiag h4 = hessian_diag_entries(t, 4);
    CHECK(h4.alpha == QuadNum(4, rat(1), Rat(0)));  // 2/sqrt(4) = 1
    CHECK(h4.beta.is_zero());
    CHECK(h4.gamma == QuadNum(4, rat(4, 3), Rat(0)));
    CHECK(h4.delta == QuadNum(4, rat(-4, 3), Rat(0)));

    HessianDiag h5 = hessian_diag_entries(t, 5);
    CHECK(h5.beta == QuadNum(5, Rat(0), rat(15, 64)));
    CHECK(h5.gamma == QuadNum(5, Rat(0), rat(25, 64)));
    CHECK(h5.delta == QuadNum(5, Rat(0), rat(-5, 32)));
    // delta route cross-check: (k sqrt k/(2(k-1)))((3-k) J_{k-2}(0) + k(k+1)/(k-2) J_{k-2}(2))
    Rat j0 = jn(t, 3, 0), j2 = jn(t, 3, 2);
    Rat coeff = rat(5, 8) * (Rat(-2) * j0 + rat(30, 3) * j2);
    CHECK(h5.delta == QuadNum(5, Rat(0), coeff));

    CHECK_THROWS_AS(hessian_diag_entries(t, 3), std::invalid_argument);
}

TEST_CASE("entry signs over the sweep range") {
    JTable t;
    for (long k = 4; k <= 100; ++k) {
        HessianDiag h = hessian_diag_entries(t, k);
        CHECK(h.delta.sign() < 0);
        CHECK(h.gamma.sign() > 0);
        if (k >= 5) CHECK(h.beta.sign() > 0);
    }
}

TEST_CASE("closed-form minors at k = 4") {
    JTable t;
    CHECK(minor_value(t, 3, 4) == QuadNum(4, rat(8, 3), Rat(0)));
    CHECK(minor_value(t, 4, 4) == QuadNum(4, rat(-16, 3), Rat(0)));
    CHECK(minor_value(t, 5, 4) == QuadNum(4, rat(256, 27), Rat(0)));
    CHECK(minor_value(t, 6, 4) == QuadNum(4, rat(256, 27), Rat(0)));
    for (long m = 7; m <= 12; ++m) CHECK(minor_value(t, m, 4).is_zero());
    CHECK_THROWS_AS(minor_value(t, 2, 4), std::invalid_argument);
}

TEST_CASE("closed form agrees with the direct determinant") {
    JTable t;
    for (long k = 4; k <= 7; ++k)
        for (long m = 3; m <= 9; ++m) CHECK(minor_value(t, m, k) == minor_direct(t, m, k));
    CHECK_THROWS_AS(minor_direct(t, 10, 4), std::invalid_argument);
}

TEST_CASE("sign laws") {
    JTable t;
    for (long k = 4; k <= 12; ++k)
        for (long m = 3; m <= std::min(k + 1, 12L); ++m)
            CHECK(minor_value(t, m, k).sign() == (m % 2 == 0 ? -1 : 1));
    for (long k = 5; k <= 12; ++k)
        for (long m = k + 1; m <= 12; ++m)
            CHECK(minor_value(t, m, k).sign() == (k % 2 == 0 ? 1 : -1));
}

TEST_CASE("classification of subdiagonal directions") {
    JTable t;
    Classification c64 = classify_diagonal(t, 6, 4);
    CHECK(c64.verdict == Verdict::not_extremal);
    REQUIRE(c64.same_sign_pair.has_value());
    REQUIRE(c64.alternating_pair.has_value());
    CHECK(*c64.same_sign_pair == std::make_pair(5L, 6L));
    CHECK(*c64.alternating_pair == std::make_pair(3L, 4L));
    REQUIRE(c64.minors.has_value());
    CHECK(c64.minors->signs == std::vector<int>{1, -1, 1, 1, 0});

    Classification c85 = classify_diagonal(t, 8, 5);
    CHECK(c85.verdict == Verdict::not_extremal);
    CHECK(c85.minors->signs == std::vector<int>{1, -1, 1, -1, -1, -1, -1});

    Classification c53 = classify_diagonal(t, 5, 3);
    CHECK(c53.verdict == Verdict::not_extremal);
    CHECK(!c53.minors.has_value());

    for (long n = 4; n <= 12; ++n)
        for (long k = 3; k <= n - 1; ++k)
            CHECK(classify_diagonal(t, n, k).verdict == Verdict::not_extremal);

    CHECK_THROWS_AS(classify_diagonal(t, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_diagonal(t, 6, 6), std::invalid_argument);
    CHECK_THROWS_AS(classify_diagonal(t, 6, 2), std::invalid_argument);
}

TEST_CASE("classification json shape") {
    JTable t;
    Classification c = classify_diagonal(t, 6, 4);
    const std::string json = classification_json(c, 6, 4);
    CHECK(json.find("\"verdict\": \"NotExtremal\"") != std::string::npos);
    CHECK(json.find("\"minors\"") != std::string::npos);
    CHECK(json.find("\"same_sign\"") != std::string::npos);
    CHECK(json.find("\"alternating\"") != std::string::npos);
}

TEST_CASE("hexagon area and derivatives") {
    CHECK(hexagon_area(0.0) == doctest::Approx(3.0 * std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(hexagon_area(1.0) == doctest::Approx(4.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(hexagon_area(1.5), std::invalid_argument);

    HexagonDerivatives d = hexagon_derivatives();
    CHECK(d.a1.is_zero());
    CHECK(d.a2.is_zero());
    CHECK(d.a3 == QuadNum(3, Rat(0), rat(2, 3)));  // 2/sqrt(3)
    CHECK(std::abs(d.a3.to_double() - 2.0 / std::sqrt(3.0)) < 1e-12);

    // squared area matches the closed form pointwise
    for (double t : {-0.9, -0.3, 0.0, 0.4, 1.0}) {
        const double p = (t * t * t * t + 4.0 * t * t * t + 27.0) / 4.0;
        CHECK(hexagon_area(t) * hexagon_area(t) == doctest::Approx(p).epsilon(1e-12));
    }
}

TEST_CASE("verification sweep and printed sign-only references") {
    JTable t;
    VerificationReport rep = verify_hessian(t);
    CHECK(!rep.any_fail());
    bool printed_seen = false;
    for (const Claim& c : rep.claims) {
        if (c.id != "printed-minor-magnitudes") continue;
        printed_seen = true;
        CHECK(c.kind == ClaimKind::reference);
        CHECK(c.records.size() == 3);
        for (const Record& r : c.records) {
            CHECK(r.status == Status::discrepancy);
            CHECK(!r.witness.empty());
        }
    }
    CHECK(printed_seen);

    // serial and parallel sweeps serialize identically
    JTable t2;
    CHECK(to_json(verify_hessian(t2, Exec::serial)) == to_json(rep));
}
