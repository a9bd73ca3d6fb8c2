#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qp/tableaux.hpp"

using namespace qp;

TEST_CASE("YoungDiagram validation and views") {
    CHECK_THROWS_AS(YoungDiagram({1, 2}), DomainError);
    CHECK_THROWS_AS(YoungDiagram({2, -1}), DomainError);
    const YoungDiagram d({3, 1, 0, 0});
    CHECK(d.rows == std::vector<long long>{3, 1});  // trailing zeros stripped
    CHECK(d.size() == 4);
    CHECK(d.row(1) == 3);
    CHECK(d.row(5) == 0);
    CHECK(d.contains({1, 3}));
    CHECK_FALSE(d.contains({2, 2}));
    CHECK(d.cells().size() == 4);
    CHECK(d.str() == "(3,1)");
}

TEST_CASE("interlaces") {
    CHECK(interlaces(YoungDiagram({1}), YoungDiagram({2, 1})));
    CHECK_FALSE(interlaces(YoungDiagram({3}), YoungDiagram({2})));
    CHECK(interlaces(YoungDiagram(), YoungDiagram({5})));
    CHECK_FALSE(interlaces(YoungDiagram(), YoungDiagram({5, 2})));  // 0 < lambda_2
    CHECK_FALSE(interlaces(YoungDiagram({2, 2}), YoungDiagram({3, 1})));
}

TEST_CASE("GTPattern validity") {
    GTPattern p(3);
    CHECK(p.valid());
    p.at(1, 1) = 3;
    CHECK_FALSE(p.valid());  // 3 = lambda^1_1 > lambda^2_1 = 0 breaks interlacing
    p.at(1, 1) = 1;
    p.at(2, 1) = 1;
    p.at(3, 1) = 2;
    CHECK(p.valid());
    CHECK(p.shape() == YoungDiagram({2}));
    CHECK(p.str() == "[1;1,0;2,0,0]");
}

TEST_CASE("tableau <-> GT correspondence on the worked example") {
    // shape (5,3,1), rows: 1 2 2 3 3 / 2 3 4 / 4
    Tableau t;
    t.rows = {{1, 2, 2, 3, 3}, {2, 3, 4}, {4}};
    REQUIRE(t.semistandard());
    const GTPattern p = gt_from_tableau(t, 4);
    CHECK(p.at(1, 1) == 1);
    CHECK(p.at(2, 1) == 3);
    CHECK(p.at(2, 2) == 1);
    CHECK(p.at(3, 1) == 5);
    CHECK(p.at(3, 2) == 2);
    CHECK(p.at(3, 3) == 0);
    CHECK(p.at(4, 1) == 5);
    CHECK(p.at(4, 2) == 3);
    CHECK(p.at(4, 3) == 1);
    CHECK(p.at(4, 4) == 0);
    CHECK(p.valid());
    CHECK(type_of(p) == std::vector<long long>{1, 3, 3, 2});

    const Tableau back = tableau_from_gt(p);
    CHECK(back.rows == t.rows);

    Tableau bad;
    bad.rows = {{2, 1}};
    CHECK_THROWS_AS(gt_from_tableau(bad, 3), DomainError);
}

TEST_CASE("tableau <-> GT trivial cases") {
    Tableau single;
    single.rows = {{1}};
    CHECK(gt_from_tableau(single, 1).at(1, 1) == 1);
    Tableau empty;
    CHECK(gt_from_tableau(empty, 3) == GTPattern(3));
    CHECK(type_of(GTPattern(4)) == std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("outer_corners") {
    CHECK(outer_corners(YoungDiagram({4, 3, 1, 1})) ==
          std::vector<Cell>{{1, 4}, {2, 3}, {4, 1}});
    CHECK(outer_corners(YoungDiagram({3, 3})) == std::vector<Cell>{{2, 3}});
    CHECK(outer_corners(YoungDiagram({1})) == std::vector<Cell>{{1, 1}});
    CHECK(outer_corners(YoungDiagram()).empty());
}

TEST_CASE("lambda_coordinate bijection") {
    CHECK(lambda_coordinate(YoungDiagram({1}), {1, 1}) == LambdaCoordinate{1, 1, 1});
    CHECK(lambda_coordinate(YoungDiagram({2, 2}), {1, 1}) == LambdaCoordinate{2, 2, 2});
    for (const auto& rows : std::vector<std::vector<long long>>{
             {1}, {2, 1}, {3, 3, 2}, {5, 4, 4, 1}, {4, 3, 1, 1}}) {
        const YoungDiagram d(rows);
        std::set<std::tuple<long long, long long, long long>> seen;
        for (const Cell& c : d.cells()) {
            const LambdaCoordinate lc = lambda_coordinate(d, c);
            // anchor on the boundary, k = 1 iff the cell is its own anchor
            CHECK_FALSE(d.contains({lc.i + 1, lc.j + 1}));
            if (lc.k == 1) CHECK(Cell{lc.i, lc.j} == c);
            CHECK(cell_from_lambda_coordinate(d, lc) == c);
            seen.insert({lc.i, lc.j, lc.k});
        }
        CHECK(seen.size() == d.cells().size());
    }
    CHECK_THROWS_AS(lambda_coordinate(YoungDiagram({1}), {2, 2}), DomainError);
}

TEST_CASE("growth sequences") {
    const GrowthSequence s1 = growth_sequence(YoungDiagram({1}), GrowthStrategy::RowByRow);
    CHECK(s1.valid());
    CHECK(s1.diagrams.size() == 2);

    const GrowthSequence s = growth_sequence(YoungDiagram({2, 1}), GrowthStrategy::RowByRow);
    CHECK(s.valid());
    REQUIRE(s.diagrams.size() == 4);
    CHECK(s.diagrams[1] == YoungDiagram({1}));
    CHECK(s.diagrams[2] == YoungDiagram({2}));
    CHECK(s.diagrams[3] == YoungDiagram({2, 1}));
    CHECK(s.added_cell(3) == Cell{2, 1});

    for (GrowthStrategy st : {GrowthStrategy::ColumnByColumn, GrowthStrategy::Diagonal})
        CHECK(growth_sequence(YoungDiagram({3, 2, 2}), st).valid());

    RngStream r1(5, 0), r2(5, 0);
    const GrowthSequence a = growth_sequence(YoungDiagram({3, 2}), GrowthStrategy::Random, &r1);
    const GrowthSequence b = growth_sequence(YoungDiagram({3, 2}), GrowthStrategy::Random, &r2);
    CHECK(a.valid());
    CHECK(a.diagrams.size() == b.diagrams.size());
    for (std::size_t i = 0; i < a.diagrams.size(); ++i) CHECK(a.diagrams[i] == b.diagrams[i]);
}

TEST_CASE("all_growth_sequences counts standard tableaux") {
    CHECK(all_growth_sequences(YoungDiagram({2, 1})).size() == 2);
    CHECK(all_growth_sequences(YoungDiagram({2, 2})).size() == 2);
    CHECK(all_growth_sequences(YoungDiagram({3, 2})).size() == 5);  // hook lengths: 5!/(4*3*2)
    for (const GrowthSequence& s : all_growth_sequences(YoungDiagram({2, 2}))) CHECK(s.valid());
}
