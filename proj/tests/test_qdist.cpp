#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "qp/qdist.hpp"
#include "qp/stats.hpp"

using namespace qp;

TEST_CASE("qgeom_pmf values") {
    const QParams q0(0.0), q5(0.5);
    CHECK(qgeom_pmf(0.3, q5, 0) ==
          doctest::Approx(q_pochhammer_inf(0.3, 0.5)).epsilon(1e-14));
    CHECK(qgeom_pmf(0.5, q0, 2) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(qgeom_pmf(0.5, q5, 1) == doctest::Approx(0.2887880950866024).epsilon(1e-12));
    CHECK(qgeom_pmf(0.5, q5, -1) == 0.0);
    CHECK_THROWS_AS(qgeom_pmf(1.0, q5, 0), DomainError);
}

TEST_CASE("qgeom_table mass and q=0 geometric") {
    for (double alpha : {0.2, 0.5, 0.8})
        for (double q : {0.0, 0.3, 0.7}) {
            const DiscretePmf t = qgeom_table(alpha, QParams(q));
            CHECK(std::abs(t.total_mass() - 1.0) < 1e-10);
        }
    const DiscretePmf g = qgeom_table(0.4, QParams(0.0));
    for (long long k = 0; k <= 10; ++k)
        CHECK(g.at(k) == doctest::Approx(0.6 * std::pow(0.4, double(k))).epsilon(1e-12));
}

TEST_CASE("qgeom sampling: determinism, mean vs gamma_rate") {
    RngStream r1(42, 0), r2(42, 0);
    for (int i = 0; i < 100; ++i)
        CHECK(qgeom_sample(0.5, QParams(0.3), r1) == qgeom_sample(0.5, QParams(0.3), r2));

    const QParams qp(0.6);
    const QGeomSampler s(0.3, qp);
    RngStream rng(7, 1);
    const long long n = 200'000;
    double sum = 0.0, sumsq = 0.0;
    for (long long i = 0; i < n; ++i) {
        const double x = static_cast<double>(s.draw(rng));
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sumsq / n - mean * mean) / n);
    CHECK(std::abs(mean - gamma_rate(0.3, 0.6)) < 3.0 * se);
}

TEST_CASE("qhahn_pmf") {
    CHECK(qhahn_pmf(0.3, 0.7, 0, 0.5, 0) == doctest::Approx(1.0).epsilon(1e-14));
    double sum = 0.0;
    for (long long k = 0; k <= 5; ++k) sum += qhahn_pmf(0.2, 0.1, 5, 0.4, k);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    // base q^{-1} > 1 instantiation also sums to 1
    const double q = 0.5, base = 2.0;
    double sum2 = 0.0;
    for (long long k = 0; k <= 3; ++k)
        sum2 += qhahn_pmf(q * q, q * q * q, 3, base, k);
    CHECK(sum2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qhyp_pmf basics") {
    const QParams q5(0.5);
    CHECK(qhyp_pmf(0, ExtInt(4), 3, q5, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(qhyp_pmf(3, ExtInt::inf(), 0, q5, 0) == doctest::Approx(1.0).epsilon(1e-14));
    // (m1=1, m2=INF, k=1): f(0) = q, f(1) = 1-q
    CHECK(qhyp_pmf(1, ExtInt::inf(), 1, q5, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(qhyp_pmf(1, ExtInt::inf(), 1, q5, 1) == doctest::Approx(0.5).epsilon(1e-14));
    // q = 0: point mass at m1 /\ k
    const QParams q0(0.0);
    for (long long m1 : {0LL, 2LL, 5LL})
        for (long long k : {0LL, 3LL, 5LL}) {
            const DiscretePmf t = qhyp_table(m1, ExtInt::inf(), k, q0);
            CHECK(t.at(std::min(m1, k)) == 1.0);
            CHECK(t.is_point_mass());
        }
    CHECK_THROWS_AS(qhyp_pmf(1, ExtInt(1), 3, q5, 1), DomainError);
}

TEST_CASE("qhyp support and normalisation sweep") {
    RngStream rng(11, 0);
    for (int rep = 0; rep < 120; ++rep) {
        const long long m1 = static_cast<long long>(rng.next_double() * 7);
        const long long k = static_cast<long long>(rng.next_double() * 7);
        const bool infinite = rng.next_double() < 0.5;
        long long m2v = static_cast<long long>(rng.next_double() * 7);
        if (!infinite && m1 + m2v < k) m2v = k - m1;
        const ExtInt m2 = infinite ? ExtInt::inf() : ExtInt(m2v);
        const QParams qp(0.1 * static_cast<double>(rep % 10));
        const DiscretePmf t = qhyp_table(m1, m2, k, qp);
        CHECK(std::abs(t.total_mass() - 1.0) < 1e-10);
        CHECK(t.support_min() == qhyp_support_min(m1, m2, k));
        CHECK(t.support_max() == qhyp_support_max(m1, m2, k));
    }
}

TEST_CASE("qhyp symmetry in (m1, k) at m2 = INF") {
    for (long long m1 = 0; m1 <= 5; ++m1)
        for (long long k = 0; k <= 5; ++k)
            for (double q : {0.0, 0.3, 0.8}) {
                const QParams qp(q);
                for (long long l = 0; l <= std::min(m1, k); ++l)
                    CHECK(std::abs(qhyp_pmf(m1, ExtInt::inf(), k, qp, l) -
                                   qhyp_pmf(k, ExtInt::inf(), m1, qp, l)) < 1e-13);
            }
}

TEST_CASE("qhyp sampling chi-square against pmf") {
    const QParams qp(0.5);
    const DiscretePmf t = qhyp_table(2, ExtInt(3), 2, qp);
    RngStream rng(99, 0);
    std::map<long long, long long> counts;
    const long long n = 200'000;
    for (long long i = 0; i < n; ++i) ++counts[qhyp_sample(2, ExtInt(3), 2, qp, rng)];
    const ChiSquareResult res = chi_square_test(counts, t, n);
    CHECK(res.p_value > 1e-3);
}

TEST_CASE("q-Hahn to qHyp lemma") {
    CHECK(check_qhahn_to_qhyp(0, 2, 1, QParams(0.5)) < 1e-12);
    CHECK(check_qhahn_to_qhyp(2, 4, 3, QParams(0.3)) < 1e-12);
    CHECK(check_qhahn_to_qhyp(1, 1, 1, QParams(0.7)) < 1e-12);
}

TEST_CASE("qhyp summation identities and q-Vandermonde") {
    // q-Vandermonde (1,1,1): both sides 1 + q
    const QhypIdentityDeviations d = check_qhyp_identities(1, 1, 1, QParams(0.5));
    CHECK(d.vandermonde < 1e-13);
    CHECK(d.qhyp_finite < 1e-13);
    CHECK(d.qhyp_infinite < 1e-13);
    for (long long m1 = 0; m1 <= 4; ++m1)
        for (long long m2 = 0; m2 <= 4; ++m2)
            for (long long k = 0; k <= m1 + m2; ++k)
                for (double q : {0.0, 0.4, 0.9}) {
                    const QhypIdentityDeviations dd = check_qhyp_identities(m1, m2, k, QParams(q));
                    CHECK(dd.vandermonde < 1e-11);
                    CHECK(dd.qhyp_finite < 1e-11);
                    CHECK(dd.qhyp_infinite < 1e-11);
                }
}
