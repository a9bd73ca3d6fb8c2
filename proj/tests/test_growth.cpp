#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qp/growth.hpp"

using namespace qp;

TEST_CASE("DownRightPath validity, staircase, transpose") {
    const DownRightPath p = DownRightPath::staircase(2, 3);
    CHECK(p.valid());
    CHECK(p.vertices.front() == std::pair<long long, long long>{0, 3});
    CHECK(p.vertices.back() == std::pair<long long, long long>{2, 0});
    const DownRightPath t = p.transpose();
    CHECK(t.valid());
    CHECK(t.vertices.front() == std::pair<long long, long long>{0, 2});
    CHECK(t.vertices.back() == std::pair<long long, long long>{3, 0});

    DownRightPath bad;
    bad.vertices = {{0, 2}, {1, 1}};
    CHECK_FALSE(bad.valid());
}

TEST_CASE("local rule: boundary point masses") {
    const QParams qp(0.5);
    // lam = mu1 = mu2 = empty, x = w -> point mass at (w)
    const DiagramDist d =
        local_rule_pmf(YoungDiagram(), YoungDiagram(), YoungDiagram(), 3, qp);
    CHECK(d.size() == 1);
    CHECK(d.at(YoungDiagram({3})) == doctest::Approx(1.0).epsilon(1e-13));

    // x = 0, mu1 = lam -> point mass at mu2
    const YoungDiagram lam({2, 1}), mu2({3, 1});
    const DiagramDist d2 = local_rule_pmf(lam, lam, mu2, 0, qp);
    CHECK(d2.size() == 1);
    CHECK(d2.at(mu2) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("local rule: symmetry in (mu1, mu2)") {
    const QParams qp(0.5);
    const YoungDiagram lam({1}), mu1({2}), mu2({1});
    const DiagramDist a = local_rule_pmf(lam, mu1, mu2, 1, qp);
    const DiagramDist b = local_rule_pmf(lam, mu2, mu1, 1, qp);
    CHECK(tv_distance(a, b) < 1e-13);

    CHECK_THROWS_AS(local_rule_pmf(YoungDiagram({2}), YoungDiagram({1}), mu2, 1, qp),
                    DomainError);
}

TEST_CASE("local rule: sampled outputs live in the exact pmf support") {
    const QParams qp(0.3);
    RngStream rng(8, 0);
    SamplingProvider cp(rng);
    const YoungDiagram lam({1}), mu1({2, 1}), mu2({2});
    const DiagramDist pmf = local_rule_pmf(lam, mu1, mu2, 2, qp);
    double mass = 0.0;
    for (const auto& [d, p] : pmf) {
        CHECK(interlaces(mu1, d));
        CHECK(interlaces(mu2, d));
        mass += p;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < 50; ++i)
        CHECK(pmf.count(local_rule_apply(lam, mu1, mu2, 2, qp, cp)) == 1);
}

TEST_CASE("path labels: all-down boundary path is all-empty") {
    const Matrix A = {{1, 0}, {0, 1}};
    const QParams qp(0.5);
    DownRightPath left;  // (0,2) -> (0,1) -> (0,0) -> (1,0) -> (2,0)
    left.vertices = {{0, 2}, {0, 1}, {0, 0}, {1, 0}, {2, 0}};
    CHECK(left.valid());
    const ExactLaw law = path_label_dist(A, left, qp);
    CHECK(law.p.size() == 1);
    const std::string empty5 = YoungDiagram().str() + YoungDiagram().str() +
                               YoungDiagram().str() + YoungDiagram().str() +
                               YoungDiagram().str();
    CHECK(law.at(empty5) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("path labels: 1x1 staircase point mass") {
    const Matrix A = {{4}};
    const ExactLaw law = path_label_dist(A, DownRightPath::staircase(1, 1), QParams(0.5));
    CHECK(law.p.size() == 1);
    CHECK(law.mass() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("staircase path labels satisfy the symmetry identity") {
    const QParams qp(0.5);
    const Matrix A = {{1, 0}, {1, 1}};
    const ExactLaw lhs = path_label_dist(A, DownRightPath::staircase(2, 2), qp);
    ExactLaw rhs_rev;
    const ExactLaw rhs =
        path_label_dist(transpose(A), DownRightPath::staircase(2, 2), qp);
    // L(A, pi*) =d reversed L(A', pi*'): reverse the tuple of diagram strings
    for (const auto& [k, v] : rhs.p) {
        std::string rev;
        // diagrams serialized as "(...)" groups; reverse group order
        std::vector<std::string> parts;
        std::string cur;
        for (char c : k) {
            cur += c;
            if (c == ')') {
                parts.push_back(cur);
                cur.clear();
            }
        }
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) rev += *it;
        rhs_rev.p[rev] += v;
    }
    CHECK(tv_distance(lhs, rhs_rev) < 1e-10);
}

TEST_CASE("check_symmetry") {
    CHECK(check_symmetry({{1, 0}, {0, 1}}, QParams(0.5)) < 1e-10);  // symmetric input
    for (double q : {0.0, 0.3, 0.7}) {
        CHECK(check_symmetry({{1, 0}, {0, 0}}, QParams(q)) < 1e-10);
        CHECK(check_symmetry({{1, 2}, {0, 1}}, QParams(q)) < 1e-10);
    }
}
