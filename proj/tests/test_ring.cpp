#include <random>

#include "doctest.h"
#include "hfsurg/ring.hpp"

using namespace hfsurg;

TEST_CASE("series basics") {
    const int N = 16;
    auto one = TruncatedSeries::one(N);
    auto u = TruncatedSeries::monomial(N, 1);

    // (1+U)(1+U) = 1+U^2
    auto a = one + u;
    auto sq = a * a;
    CHECK(sq == TruncatedSeries::one(N) + TruncatedSeries::monomial(N, 2));

    // U^{N-1} * U = 0
    CHECK((TruncatedSeries::monomial(N, N - 1) * u).is_zero());

    // (1+U)(1+U+...+U^{N-1}) = 1  (geometric series inverse)
    TruncatedSeries geo(N);
    for (int j = 0; j < N; ++j) geo.flip(j);
    CHECK(a * geo == one);
    CHECK(a.inverse() == geo);
}

TEST_CASE("units and valuation") {
    const int N = 8;
    auto x = TruncatedSeries::one(N) + TruncatedSeries::monomial(N, 3);
    CHECK(x.is_unit());
    CHECK(x.valuation() == 0);
    auto y = TruncatedSeries::monomial(N, 2);
    CHECK(!y.is_unit());
    CHECK(y.valuation() == 2);
    TruncatedSeries z(N);
    CHECK(!z.is_unit());
    CHECK(z.valuation() == N);  // convention
}

TEST_CASE("ring axioms randomized") {
    const int N = 24;
    std::mt19937_64 rng(7);
    auto rand_series = [&] {
        TruncatedSeries s(N);
        for (int j = 0; j < N; ++j)
            if (rng() & 1) s.flip(j);
        return s;
    };
    for (int it = 0; it < 50; ++it) {
        auto a = rand_series(), b = rand_series(), c = rand_series();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        // a*b = 0 implies val(a) + val(b) >= N
        if ((a * b).is_zero()) CHECK(a.valuation() + b.valuation() >= N);
        // every unit has an inverse
        if (a.is_unit()) CHECK(a * a.inverse() == TruncatedSeries::one(N));
    }
}

TEST_CASE("bipolynomial expand and reassemble") {
    const int N = 6;
    auto u1u2 = BiPolynomial::monomial(N, 1, 1);
    auto ex = u1u2.expand_u2();
    CHECK(static_cast<int>(ex.size()) == N);
    CHECK(ex[0].is_zero());
    CHECK(ex[1] == TruncatedSeries::monomial(N, 1));

    auto s = BiPolynomial::monomial(N, 1, 0) + BiPolynomial::monomial(N, 0, 1);
    auto ex2 = s.expand_u2();
    CHECK(ex2[0] == TruncatedSeries::monomial(N, 1));
    CHECK(ex2[1] == TruncatedSeries::one(N));

    BiPolynomial zero(N);
    for (auto& t : zero.expand_u2()) CHECK(t.is_zero());

    // reassembling recovers x
    std::mt19937_64 rng(3);
    BiPolynomial x(N);
    for (int it = 0; it < 10; ++it)
        x += BiPolynomial::monomial(N, static_cast<int>(rng() % N), static_cast<int>(rng() % N));
    BiPolynomial back(N);
    auto ex3 = x.expand_u2();
    for (int j = 0; j < N; ++j)
        for (int a = 0; a < N; ++a)
            if (ex3[j].get(a)) back += BiPolynomial::monomial(N, a, j);
    CHECK(back == x);
}

TEST_CASE("extended integers") {
    auto inf = ExtendedInt::pos_inf();
    auto minf = ExtendedInt::neg_inf();
    CHECK(ExtendedInt(5) + inf == inf);
    CHECK(ExtendedInt(5) + minf == minf);
    CHECK(0 * inf == inf);  // the quoted rule
    CHECK(1 * inf == inf);
    CHECK(-1 * inf == minf);
    CHECK(minf < ExtendedInt(-100));
    CHECK(ExtendedInt(100) < inf);
    CHECK_THROWS_AS(inf + minf, invariant_error);
}
