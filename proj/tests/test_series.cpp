#include "doctest.h"

#include "yangian/gauss.hpp"
#include "yangian/series.hpp"

using namespace yangian;

namespace {

Element gen(const AlgebraContext& ctx, int i, int j, int r) {
    return Element::generator(ctx, i, j, r);
}

}  // namespace

TEST_CASE("binomials mod p by Lucas match direct factorials") {
    CHECK(binomial_mod(2, 1, 3) == 2);
    CHECK(binomial_mod(3, 1, 3) == 0);
    CHECK(binomial_mod(4, 2, 3) == 0);  // 6 mod 3
    for (Scalar p : {3u, 5u, 7u})
        for (std::uint64_t m = 0; m <= 12; ++m)
            for (std::uint64_t k = 0; k <= 12; ++k) {
                // direct: product formula over the integers
                unsigned long long num = 1, den = 1;
                unsigned long long exact = 0;
                if (k <= m) {
                    exact = 1;
                    for (std::uint64_t t = 0; t < k; ++t) {
                        num = m - t;
                        den = t + 1;
                        exact = exact * num / den;  // binomial partials divide
                    }
                }
                CHECK(binomial_mod(m, k, p) == exact % p);
            }
}

TEST_CASE("series arithmetic: unit, convolution, order errors") {
    auto ctx = rtt_context(2, 3);
    const int N = 4;

    auto t = [&](int i, int j) {
        TruncatedSeries s(ctx, N);
        if (i == j)
            s.at(0) = Element::unit(ctx);
        for (int r = 1; r <= N; ++r)
            s.at(r) = gen(ctx, i, j, r);
        return s;
    };

    TruncatedSeries f = t(1, 1);
    CHECK(f * TruncatedSeries::unit(ctx, N) == f);

    // (1 + a u^{-1})(1 + b u^{-1}) = 1 + (a+b)u^{-1} + ab u^{-2}
    TruncatedSeries ga(ctx, N), gb(ctx, N);
    ga.at(0) = Element::unit(ctx);
    gb.at(0) = Element::unit(ctx);
    Element a = gen(ctx, 1, 2, 1), b = gen(ctx, 2, 1, 1);
    ga.at(1) = a;
    gb.at(1) = b;
    TruncatedSeries prod = ga * gb;
    CHECK(prod.at(0) == Element::unit(ctx));
    CHECK(prod.at(1) == a + b);
    CHECK(prod.at(2) == a * b);
    CHECK(prod.at(3).is_zero());

    // t_{1,1}(u) t_{2,2}(u): coefficient of u^{-2}
    TruncatedSeries p12 = t(1, 1) * t(2, 2);
    CHECK(p12.at(2) == gen(ctx, 1, 1, 2) + gen(ctx, 2, 2, 2) +
                           gen(ctx, 1, 1, 1) * gen(ctx, 2, 2, 1));

    TruncatedSeries other(ctx, N + 1);
    CHECK_THROWS_AS(f * other, std::invalid_argument);
}

TEST_CASE("argument shifts: geometric series, binomial weights, inverses") {
    auto ctx = rtt_context(1, 3);
    const int N = 6;

    TruncatedSeries um1(ctx, N);
    um1.at(1) = Element::unit(ctx);
    TruncatedSeries s1 = um1.shift_argument(-1);
    for (int k = 1; k <= N; ++k)
        CHECK(s1.at(k) == Element::unit(ctx));

    TruncatedSeries um2(ctx, N);
    um2.at(2) = Element::unit(ctx);
    TruncatedSeries s2 = um2.shift_argument(-1);
    CHECK(s2.at(1).is_zero());
    for (int k = 2; k <= N; ++k)
        CHECK(s2.at(k) == Element::unit(ctx, reduce_mod(k - 1, 3)));

    // d(u-2) coefficient of u^{-3} at p = 3: d3 + 4 d2 + 4 d1 = d3 + d2 + d1
    TruncatedSeries d(ctx, N);
    d.at(0) = Element::unit(ctx);
    for (int r = 1; r <= N; ++r)
        d.at(r) = gen(ctx, 1, 1, r);
    TruncatedSeries dm2 = d.shift_argument(-2);
    CHECK(dm2.at(3) ==
          gen(ctx, 1, 1, 3) + gen(ctx, 1, 1, 2) + gen(ctx, 1, 1, 1));

    // shift by c then -c is the identity, shift by 0 is the identity
    for (long long c : {-2LL, -1LL, 0LL, 1LL, 3LL}) {
        CHECK(d.shift_argument(c).shift_argument(-c) == d);
    }
    CHECK(d.shift_argument(0) == d);
}

TEST_CASE("series inverse by coefficient recursion") {
    auto ctx = rtt_context(1, 5);
    const int N = 5;

    CHECK(TruncatedSeries::unit(ctx, N).inverse() ==
          TruncatedSeries::unit(ctx, N));

    // inverse of 1 + a u^{-1} alternates powers of a
    TruncatedSeries f(ctx, N);
    f.at(0) = Element::unit(ctx);
    Element a = gen(ctx, 1, 1, 1);
    f.at(1) = a;
    TruncatedSeries g = f.inverse();
    Scalar sign = ctx.p - 1;
    Element power = a;
    for (int r = 1; r <= N; ++r) {
        CHECK(g.at(r) == power.scaled(r % 2 ? sign : 1));
        power = power * a;
    }
    CHECK((f * g) == TruncatedSeries::unit(ctx, N));
    CHECK((g * f) == TruncatedSeries::unit(ctx, N));

    // (t(-u))^{-1} for n = 1: coefficient 2 is t1^2 - t2
    TruncatedSeries tneg(ctx, N);
    tneg.at(0) = Element::unit(ctx);
    for (int r = 1; r <= N; ++r)
        tneg.at(r) = gen(ctx, 1, 1, r).scaled(r % 2 ? ctx.p - 1 : 1);
    TruncatedSeries om = tneg.inverse();
    CHECK(om.at(1) == gen(ctx, 1, 1, 1));
    CHECK(om.at(2) == gen(ctx, 1, 1, 1) * gen(ctx, 1, 1, 1) - gen(ctx, 1, 1, 2));

    TruncatedSeries bad(ctx, N);
    bad.at(0) = gen(ctx, 1, 1, 1);
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}

TEST_CASE("gauss decomposition: first coefficients and the trivial block") {
    auto ctx = rtt_context(2, 3);
    const int N = 3;
    SeriesMatrix T = SeriesMatrix::generic_t(ctx, N);

    Composition mu({1, 1});
    GaussFactors gf = gauss_decompose(T, mu);

    // e_1^{(1)} = t_{1,2}^{(1)}, f_1^{(1)} = t_{2,1}^{(1)}
    CHECK(gf.E.at({1, 2}).at(1, 1).at(1) == gen(ctx, 1, 2, 1));
    CHECK(gf.F.at({2, 1}).at(1, 1).at(1) == gen(ctx, 2, 1, 1));

    // d_2^{(2)} = t_{2,2}^{(2)} - t_{2,1}^{(1)} t_{1,2}^{(1)}
    CHECK(gf.D[1].at(1, 1).at(2) ==
          gen(ctx, 2, 2, 2) - gen(ctx, 2, 1, 1) * gen(ctx, 1, 2, 1));

    // mu = (n): single block equal to T itself
    GaussFactors whole = gauss_decompose(T, Composition({2}));
    CHECK(whole.D[0] == T);
    CHECK(whole.E.empty());
    CHECK(whole.F.empty());

    // D_a' D_a = I and the reassembled product returns T
    for (int a = 0; a < 2; ++a)
        CHECK(gf.Dprime[a] * gf.D[a] ==
              SeriesMatrix::identity(ctx, gf.D[a].rows(), N));
    SeriesMatrix fde = gf.assemble_f(ctx) * gf.assemble_d(ctx) * gf.assemble_e(ctx);
    CHECK(fde == T);
}

TEST_CASE("quasideterminant oracle agrees with elimination") {
    for (int n : {2, 3}) {
        auto ctx = rtt_context(n, 3);
        const int N = 3;
        SeriesMatrix T = SeriesMatrix::generic_t(ctx, N);
        for (const auto& mu : all_compositions(n)) {
            GaussFactors gf = gauss_decompose(T, mu);
            const int m = mu.length();
            for (int a = 1; a <= m; ++a) {
                CHECK(quasideterminant(T, mu, a, QuasiVariant::D) == gf.D[a - 1]);
                for (int b = a + 1; b <= m; ++b) {
                    CHECK(quasideterminant(T, mu, a, QuasiVariant::E, b) ==
                          gf.E.at({a, b}));
                    CHECK(quasideterminant(T, mu, a, QuasiVariant::F, b) ==
                          gf.F.at({b, a}));
                }
            }
        }
    }

    // a = 1 leaves the boxed block untouched
    auto ctx = rtt_context(3, 3);
    SeriesMatrix T = SeriesMatrix::generic_t(ctx, 2);
    Composition ones({1, 1, 1});
    CHECK(quasideterminant(T, ones, 1, QuasiVariant::D) ==
          T.submatrix(1, 1, 1, 1));

    // e_1(u) = t_{1,1}(u)^{-1} t_{1,2}(u): e_1^{(2)} = t12^2 - t11^1 t12^1
    SeriesMatrix e12 = quasideterminant(T, ones, 1, QuasiVariant::E, 2);
    CHECK(e12.at(1, 1).at(2) ==
          gen(ctx, 1, 2, 2) - gen(ctx, 1, 1, 1) * gen(ctx, 1, 2, 1));
}

TEST_CASE("gauss reconstruction for n <= 3 at moderate order") {
    for (int n : {1, 2, 3}) {
        auto ctx = rtt_context(n, 3);
        SeriesMatrix T = SeriesMatrix::generic_t(ctx, 4);
        for (const auto& mu : all_compositions(n)) {
            GaussFactors gf = gauss_decompose(T, mu);
            SeriesMatrix fde =
                gf.assemble_f(ctx) * gf.assemble_d(ctx) * gf.assemble_e(ctx);
            CHECK(fde == T);
        }
    }
}
