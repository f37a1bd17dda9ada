#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "qlines/pg_geometry.hpp"

using namespace qlines;

TEST_CASE("enumerate_points") {
    CHECK(enumerate_points(1) == std::vector<Point>{1});
    CHECK(enumerate_points(3) == std::vector<Point>{1, 2, 3, 4, 5, 6, 7});
    CHECK(enumerate_points(5).size() == 31);
    CHECK_THROWS_AS(enumerate_points(0), std::invalid_argument);
}

TEST_CASE("line_through canonicalizes") {
    CHECK(line_through(1, 2) == Line{1, 2, 3});
    CHECK(line_through(3, 5) == Line{3, 5, 6});
    CHECK(line_through(5, 3) == Line{3, 5, 6});
    CHECK(line_through(6, 5) == Line{3, 5, 6}); // any two points give the same line
    CHECK_THROWS_AS(line_through(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(line_through(0, 2), std::invalid_argument);
}

TEST_CASE("line_count") {
    CHECK(line_count(3) == 7);
    CHECK(line_count(4) == 35);
    CHECK(line_count(6) == 651);
    CHECK_THROWS_AS(line_count(1), std::invalid_argument);
}

TEST_CASE("enumerate_lines canonical and complete") {
    CHECK(enumerate_lines(3).size() == 7);
    CHECK(enumerate_lines(4).size() == 35);
    CHECK(enumerate_lines(5).size() == 155);
    for (int l = 2; l <= 8; ++l) {
        const auto lines = enumerate_lines(l);
        CHECK(lines.size() == line_count(l));
        std::set<Line> unique(lines.begin(), lines.end());
        CHECK(unique.size() == lines.size());
        for (const Line& line : lines) CHECK(valid_line(line, l));
        CHECK(std::is_sorted(lines.begin(), lines.end()));
    }
}

TEST_CASE("line_in_hyperplane") {
    const Line fano_line{1, 2, 3};
    CHECK(line_in_hyperplane(fano_line, 4));
    CHECK_FALSE(line_in_hyperplane(fano_line, 1));
    CHECK_FALSE(line_in_hyperplane(fano_line, 3));
}

TEST_CASE("hyperplanes_containing_line matches brute-force scan") {
    CHECK(hyperplanes_containing_line(Line{1, 2, 3}, 3) == std::vector<Hyperplane>{4});
    CHECK(hyperplanes_containing_line(Line{1, 2, 3}, 4).size() == 3);
    // frozen from a scan of all 31 dual vectors
    CHECK(hyperplanes_containing_line(Line{1, 2, 3}, 5) ==
          std::vector<Hyperplane>{4, 8, 12, 16, 20, 24, 28});

    for (int l = 2; l <= 6; ++l) {
        for (const Line& line : enumerate_lines(l)) {
            std::vector<Hyperplane> scan;
            for (Hyperplane h = 1; h < (1u << l); ++h)
                if (line_in_hyperplane(line, h)) scan.push_back(h);
            CHECK(scan == hyperplanes_containing_line(line, l));
            CHECK(scan.size() == (1u << (l - 2)) - 1);
        }
    }
}

TEST_CASE("fano_subplane invariants") {
    for (int l : {3, 5, 7}) {
        const FanoPlane fano = fano_subplane(l);
        std::set<Point> points(fano.points.begin(), fano.points.end());
        CHECK(points == std::set<Point>{1, 2, 3, 4, 5, 6, 7});
        for (const Line& line : fano.lines) {
            CHECK(valid_line(line, l));
            for (Point p : line.points()) CHECK(points.count(p) == 1);
        }
        // every pair of points lies on exactly one of the 7 lines
        for (Point p : points)
            for (Point q : points) {
                if (p >= q) continue;
                int on = 0;
                for (const Line& line : fano.lines) {
                    const auto pts = line.points();
                    const bool has_p = std::find(pts.begin(), pts.end(), p) != pts.end();
                    const bool has_q = std::find(pts.begin(), pts.end(), q) != pts.end();
                    if (has_p && has_q) ++on;
                }
                CHECK(on == 1);
            }
    }
    CHECK(fano_subplane(3).lines == fano_subplane(7).lines);
    CHECK_THROWS_AS(fano_subplane(2), std::invalid_argument);
}

TEST_CASE("double counting: 3 g(l) = (2^l - 1)(2^(l-1) - 1)") {
    for (int l = 2; l <= 12; ++l) {
        const std::uint64_t points = (std::uint64_t{1} << l) - 1;
        const std::uint64_t per_point = (std::uint64_t{1} << (l - 1)) - 1;
        CHECK(3 * line_count(l) == points * per_point);
    }
}

TEST_CASE("every point lies on 2^(l-1) - 1 lines") {
    for (int l = 2; l <= 8; ++l) {
        std::map<Point, std::uint64_t> degree;
        for (const Line& line : enumerate_lines(l))
            for (Point p : line.points()) ++degree[p];
        CHECK(degree.size() == (std::uint64_t{1} << l) - 1);
        for (const auto& [p, deg] : degree) CHECK(deg == (std::uint64_t{1} << (l - 1)) - 1);
    }
}

TEST_CASE("hyperplane contents: 2^(l-1) - 1 points and g(l-1) lines") {
    for (int l = 3; l <= 8; ++l) {
        const auto lines = enumerate_lines(l);
        for (Hyperplane h = 1; h < (1u << l); ++h) {
            std::uint64_t points_in = 0;
            for (Point p = 1; p < (1u << l); ++p)
                if (point_in_hyperplane(p, h)) ++points_in;
            CHECK(points_in == (std::uint64_t{1} << (l - 1)) - 1);

            std::uint64_t lines_in = 0;
            for (const Line& line : lines)
                if (line_in_hyperplane(line, h)) ++lines_in;
            CHECK(lines_in == line_count(l - 1));
        }
    }
}
