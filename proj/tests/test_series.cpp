#include <doctest.h>

#include "motivic/series.hpp"
#include "test_util.hpp"

using namespace motivic;
using testutil::Rng;

namespace {
const MClass L = MClass::lefschetz();

MSeries one_minus(std::size_t order, const MClass& c) { // 1 - c t
    MSeries s = MSeries::one(order);
    s.set(1, -c);
    return s;
}
} // namespace

TEST_SUITE("series") {

TEST_CASE("ring operations and inverse") {
    const std::size_t N = 6;
    MSeries f = one_minus(N, L);
    CHECK(s_mul(f, s_inv(f)) == MSeries::one(N));
    // geometric series
    MSeries g = s_inv(one_minus(N, MClass(1)));
    for (std::size_t n = 0; n <= N; ++n) CHECK(g[n] == MClass(1));
    // convolution of two geometric series: coefficient n = sum_{i<=n} L^i
    MSeries h = s_mul(s_inv(one_minus(N, MClass(1))), s_inv(one_minus(N, L)));
    for (std::size_t n = 0; n <= N; ++n) {
        MClass expect;
        for (std::size_t i = 0; i <= n; ++i) expect += MClass::lefschetz_power(static_cast<long>(i));
        CHECK(h[n] == expect);
    }
    CHECK_THROWS_AS(s_inv(MSeries(3)), contract_violation);
    CHECK_THROWS_AS(s_add(MSeries(3), MSeries(4)), order_mismatch);
    CHECK_THROWS_AS(s_mul(MSeries::one(3), MSeries::one(4)), order_mismatch);
}

TEST_CASE("substitute") {
    MSeries a = s_add(MSeries::one(4), MSeries::term(4, MClass(1), 1)); // 1 + t
    MSeries sub = substitute(a, L, 2);
    CHECK(sub[0] == MClass(1));
    CHECK(sub[1] == MClass(0));
    CHECK(sub[2] == L);
    CHECK(sub[3] == MClass(0));
    MSeries geo = MSeries::geometric(5, MClass(1));
    CHECK(substitute(geo, MClass(1), 1) == geo);
    CHECK(substitute(geo, L, 1) == MSeries::geometric(5, L));
    CHECK_THROWS_AS(substitute(geo, L, 0), contract_violation);
}

TEST_CASE("finite and t-adic products") {
    CHECK(finite_product({}, 4) == MSeries::one(4));
    // partition generating series prod 1/(1-t^k), checked against a
    // brute-force partition counter
    const std::size_t N = 5;
    MSeries parts = tadic_product(
        [&](unsigned k) {
            MSeries f(N);
            for (std::size_t n = 0; n * k <= N; ++n) f.set(n * k, MClass(1));
            return f; // 1/(1-t^k) truncated
        },
        N);
    for (std::size_t n = 0; n <= N; ++n)
        CHECK(parts[n] == MClass(testutil::partition_count(static_cast<int>(n), static_cast<int>(n))));
    // distinct parts: prod (1+t^k)
    const std::size_t M = 3;
    MSeries distinct = tadic_product(
        [&](unsigned k) {
            MSeries f = MSeries::one(M);
            if (k <= M) f.set(k, MClass(1));
            return f;
        },
        M);
    for (std::size_t n = 0; n <= M; ++n)
        CHECK(distinct[n] ==
              MClass(testutil::distinct_partition_count(static_cast<int>(n), static_cast<int>(n))));
    // a factor violating 1 + O(t^k) is rejected
    CHECK_THROWS_AS(tadic_product(
                        [&](unsigned) {
                            MSeries f = MSeries::one(3);
                            f.set(1, MClass(1));
                            return f; // claims to be 1+O(t^k) for every k
                        },
                        3),
                    contract_violation);
}

TEST_CASE("pochhammer resummation closed form") {
    const std::size_t N = 4;
    // u = L^2, k = 1: coefficient of t is sum_{m>=1} L^{2-m} = L^2/(L-1)
    MSeries p = pochhammer_inverse_sum(L * L, 1, N);
    CHECK(p[0] == MClass(1));
    CHECK(p[1] == L * L * inv(L - MClass(1)));
    // u = 0: empty product
    CHECK(pochhammer_inverse_sum(MClass(0), 1, N) == MSeries::one(N));
    // u = L, k = 2: coefficient of t^2 is sum_{m>=1} L^{1-m} = L/(L-1)
    MSeries p2 = pochhammer_inverse_sum(L, 2, N);
    CHECK(p2[1] == MClass(0));
    CHECK(p2[2] == L * inv(L - MClass(1)));
    CHECK(p2[3] == MClass(0));
}

TEST_CASE("pochhammer agrees with finite products in the limit") {
    // The m-direction does not truncate t-adically: the finite product over
    // m <= M differs from the resummed value, but the gap at L = 2 shrinks
    // geometrically in M.
    const std::size_t N = 4;
    auto finite_m = [&](const MClass& u, unsigned k, unsigned M) {
        MSeries prod = MSeries::one(N);
        for (unsigned m = 1; m <= M; ++m) {
            MSeries f = MSeries::one(N);
            if (k <= N) f.set(k, -(u * MClass::lefschetz_power(-static_cast<long>(m))));
            prod = s_mul(prod, s_inv(f));
        }
        return prod;
    };
    const Rational q(2);
    for (long c : {0L, 1L, 2L}) {
        MClass u = MClass::lefschetz_power(c);
        for (unsigned k : {1u, 2u}) {
            MSeries exact = pochhammer_inverse_sum(u, k, N);
            for (std::size_t n = k; n <= N; n += k) {
                Rational target = eval_at(exact[n], q);
                Rational d10 = abs(eval_at(finite_m(u, k, 10)[n], q) - target);
                Rational d20 = abs(eval_at(finite_m(u, k, 20)[n], q) - target);
                Rational d40 = abs(eval_at(finite_m(u, k, 40)[n], q) - target);
                CHECK(d10 > 0);
                CHECK(d20 < d10);
                CHECK(d40 < d20);
                // each extra factor contributes O(2^-m): thirty factors gain
                // at least 2^20
                CHECK(d40 * Rational(1048576) < d10);
            }
        }
    }
}

TEST_CASE("randomized truncated ring axioms") {
    Rng rng(31337);
    for (int i = 0; i < 25; ++i) {
        const std::size_t N = static_cast<std::size_t>(rng.range(2, 6));
        MSeries a = testutil::random_series(rng, N);
        MSeries b = testutil::random_series(rng, N);
        MSeries c = testutil::random_series(rng, N);
        CHECK(s_mul(s_mul(a, b), c) == s_mul(a, s_mul(b, c)));
        CHECK(s_mul(a, s_add(b, c)) == s_add(s_mul(a, b), s_mul(a, c)));
        CHECK(s_add(a, b) == s_add(b, a));
    }
}

TEST_CASE("double inverse is the identity") {
    Rng rng(555);
    for (int i = 0; i < 15; ++i) {
        MSeries a = testutil::random_series(rng, 5);
        if (a[0].is_zero()) a.set(0, MClass(1));
        CHECK(s_inv(s_inv(a)) == a);
    }
}

} // TEST_SUITE
