#include "test_support.hpp"

#include "mathon/geometries.hpp"
#include "mathon/serde.hpp"

#include <doctest.h>

using namespace mathon;
using mathon::testing::built0;

TEST_CASE("matrix and subspace round trips") {
    Matrix m = Matrix::from_rows({{0, 1, 2}, {2, 0, 1}}, 3);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    Subspace s = built0().f6_lines.lines[0];
    Json j = subspace_to_json(s);
    CHECK(j.at("d") == 5);
    CHECK(j.at("q") == 3);
    CHECK(subspace_from_json(j) == s);

    // loading non-canonical rows canonicalizes
    Json messy = Json{{"basis", Json::array({Json::array({2, 0, 0, 0, 0, 0})})}, {"d", 5}, {"q", 3}};
    CHECK(subspace_from_json(messy).basis()(0, 0) == 1);
}

TEST_CASE("line sets serialize as arrays of basis matrices") {
    Json j = lineset_to_json(built0().f4_lines);
    REQUIRE(j.size() == 4);
    CHECK(j[0] == matrix_to_json(built0().f4_lines.lines[0].basis()));
}

TEST_CASE("perp-system report fields") {
    Json j = perp_report_to_json(built0().report);
    CHECK(j.at("line_count") == 21);
    CHECK(j.at("bound") == 21);
    CHECK(j.at("is_maximal") == true);
    CHECK(j.at("failing_pairs").empty());
}

TEST_CASE("incidence structures round trip") {
    IncidenceStructure syl = sylvester_model();
    Json j = incidence_to_json(syl);
    CHECK(j.at("points") == 15);
    CHECK(j.at("lines") == 15);
    CHECK(j.at("incidence").size() == 45);
    IncidenceStructure back = incidence_from_json(j);
    CHECK(back.num_points() == 15);
    for (int l = 0; l < 15; ++l) CHECK(back.points_of_line(l) == syl.points_of_line(l));
    CHECK(back.point_labels == syl.point_labels);
}
