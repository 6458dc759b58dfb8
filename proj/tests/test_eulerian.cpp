#include <doctest.h>

#include "lpolya/eulerian.hpp"

using namespace lpolya;

TEST_CASE("brute-force counts on small rows") {
    CHECK(eulerian_bruteforce(1, 1) == 1);
    CHECK(eulerian_bruteforce(3, 1) == 1);  // only the descending permutation
    CHECK(eulerian_bruteforce(3, 2) == 4);
    CHECK(eulerian_bruteforce(4, 3) == 11);
    CHECK(eulerian_bruteforce(4, 0) == 0);
    CHECK(eulerian_bruteforce(4, 5) == 0);
    CHECK_THROWS_AS(eulerian_bruteforce(10, 1), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_bruteforce(0, 1), std::invalid_argument);
}

TEST_CASE("dual-route values match brute force for m <= 8") {
    JTable t;
    for (int m = 1; m <= 8; ++m) {
        const std::vector<Int> hist = eulerian_bruteforce_row(m);
        for (long l = 0; l <= m + 1; ++l) {
            Int expected = (l >= 1 && l <= m) ? hist[static_cast<std::size_t>(l - 1)] : Int(0);
            CHECK(eulerian(t, m, l) == expected);
        }
    }
}

TEST_CASE("known rows") {
    JTable t;
    CHECK(eulerian_row(t, 3) == std::vector<Int>{1, 4, 1});
    CHECK(eulerian_row(t, 4) == std::vector<Int>{1, 11, 11, 1});
    CHECK(eulerian_row(t, 5) == std::vector<Int>{1, 26, 66, 26, 1});
}

TEST_CASE("row sums and symmetry up to m = 20") {
    JTable t;
    for (int m = 1; m <= 20; ++m) {
        const std::vector<Int> row = eulerian_row(t, m);
        Int sum = 0;
        for (const Int& v : row) sum += v;
        CHECK(sum == factorial(static_cast<unsigned long>(m)));
        for (long l = 1; l <= m; ++l)
            CHECK(row[static_cast<std::size_t>(l - 1)] ==
                  row[static_cast<std::size_t>(m - l)]);
    }
    CHECK(eulerian(t, 5, 2) == eulerian(t, 5, 4));
}

TEST_CASE("central entry is the row maximum") {
    JTable t;
    for (int m = 1; m <= 25; ++m) {
        const std::vector<Int> row = eulerian_row(t, m);
        const Int central = row[static_cast<std::size_t>(m / 2)];
        for (const Int& v : row) CHECK(v <= central);
    }
}
