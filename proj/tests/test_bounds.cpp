#include <doctest.h>

#include <radmoore/bounds.hpp>

using namespace radmoore;

TEST_CASE("moore bound") {
    CHECK(moore_bound(3, 2).to_int64() == 10);
    CHECK(moore_bound(7, 2).to_int64() == 50);
    CHECK(moore_bound(7, 3).to_int64() == 302);
    CHECK_THROWS_AS(moore_bound(2, 2), std::domain_error);

    // geometric-series route: M(d,k) = 1 + d ((d-1)^k - 1) / (d-2)
    for (int d : {3, 5, 10, 41}) {
        for (int k : {1, 2, 7, 31, 64}) {
            BigInt closed = BigInt(1) + (BigInt(d) * (BigInt::power(BigInt(d - 1), k) - BigInt(1)))
                                            .div_exact_u64(static_cast<std::uint64_t>(d - 2));
            CHECK(moore_bound(d, k) == closed);
        }
    }
}

TEST_CASE("moore status") {
    CHECK(moore_status(3, 2).to_int64() == 15);
    CHECK(moore_status(4, 2).to_int64() == 28);
    CHECK(moore_status(7, 2).to_int64() == 91);
    CHECK_THROWS_AS(moore_status(2, 3), std::domain_error);

    // diameter-2 closed form
    for (int d = 3; d <= 200; ++d)
        CHECK(moore_status(d, 2) == BigInt(2LL * d * d - d));

    // independent route: sum of i * layer sizes of the Moore tree
    for (int d = 3; d <= 30; ++d) {
        for (int k = 1; k <= 20; ++k) {
            BigInt sum(0), layer(d);
            for (int i = 1; i <= k; ++i) {
                sum += BigInt(i) * layer;
                layer *= BigInt(d - 1);
            }
            CHECK(moore_status(d, k) == sum);
        }
    }

    // stays exact out to k = 64
    for (int d : {3, 10, 50}) {
        BigInt sum(0), layer(d);
        for (int i = 1; i <= 64; ++i) {
            sum += BigInt(i) * layer;
            layer *= BigInt(d - 1);
        }
        CHECK(moore_status(d, 64) == sum);
    }
}

TEST_CASE("attachment-edge cap g_max") {
    CHECK(g_max(4, 2) == 2);
    CHECK(g_max(4, 1) == 0);
    CHECK(g_max(7, 3) == 2);
    CHECK_THROWS_AS(g_max(5, 0), std::domain_error);
    CHECK_THROWS_AS(g_max(5, 5), std::domain_error);
}

TEST_CASE("minimum attachment count") {
    CHECK(min_attach_count(3) == 2);
    CHECK(min_attach_count(4) == 2);
    CHECK(min_attach_count(7) == 3);

    // scan equals the exact ceiling formula away from d = 4, and the ceiling
    // of the largest root of x^2 - x - (d-1)
    for (int d = 3; d <= 500; ++d) {
        long long formula = attach_ceiling(d);
        if (d == 4)
            CHECK(min_attach_count(d) == formula - 1);
        else
            CHECK(min_attach_count(d) == formula);
        // ceiling property of the quadratic root, in integers:
        // (a-1)^2 - (a-1) < d-1 <= a^2 - a  with a = formula
        long long a = formula;
        CHECK((a - 1) * (a - 1) - (a - 1) < d - 1);
        CHECK(a * a - a >= d - 1);
        // defining inequality holds at the scan value, fails just below it
        int scan = min_attach_count(d);
        CHECK(static_cast<long long>(scan) * g_max(d, scan) >= d - 1);
        if (scan > 1) CHECK(static_cast<long long>(scan - 1) * g_max(d, scan - 1) < d - 1);
    }
}

TEST_CASE("gamma2 lower bounds") {
    CHECK(gamma2_lower(5, false) == 5);
    CHECK(gamma2_lower(4, true) == 5);
    CHECK(gamma2_lower(7, true) == 9);
    for (int d = 3; d <= 200; ++d) CHECK(gamma2_lower(d, true) > gamma2_lower(d, false));
}

TEST_CASE("per-vertex status bounds") {
    CHECK(vertex_status_upper(4) == 36);
    CHECK(vertex_status_upper(3) == 18);
    CHECK(vertex_status_upper(5) == 60);
    CHECK(central_neighbor_status_upper(4) == 35);
    CHECK(central_neighbor_status_upper(3) == 17);
    CHECK(central_neighbor_status_upper(7) == 124);
}

TEST_CASE("total status upper bounds, printed and self-consistent variants") {
    CHECK(total_status_upper(3, TotalStatusVariant::ceiling).to_int64() == 174);
    CHECK(total_status_upper(4, TotalStatusVariant::ceiling).to_int64() == 596);
    CHECK(total_status_upper(3, TotalStatusVariant::consistent).to_int64() == 174);
    CHECK(total_status_upper(4, TotalStatusVariant::consistent).to_int64() == 600);

    // consistent variant re-derived from the per-vertex bounds:
    // central 2d^2-d, its d neighbors at most the neighbor cap, the other
    // d^2-d vertices at most 3d(d-1)
    for (int d = 3; d <= 60; ++d) {
        BigInt direct = BigInt(2LL * d * d - d) +
                        BigInt(d) * BigInt(central_neighbor_status_upper(d)) +
                        BigInt(static_cast<long long>(d) * d - d) * BigInt(vertex_status_upper(d));
        CHECK(total_status_upper(d, TotalStatusVariant::consistent) == direct);
        if (d != 4)
            CHECK(total_status_upper(d, TotalStatusVariant::ceiling) ==
                  total_status_upper(d, TotalStatusVariant::consistent));
    }
}

TEST_CASE("bounds report invariants") {
    for (int d = 3; d <= 200; ++d) {
        BoundsReport r = make_bounds_report(d, 2);
        CHECK(r.moore_status < BigInt(r.vertex_status_upper));
        CHECK(r.min_attach == min_attach_count(d));
    }
    BoundsReport r = make_bounds_report(7, 3);
    CHECK(r.moore_bound.to_int64() == 302);
}
