#include "qlines/pg_geometry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qlines {

namespace {

void check_dim(int l, int minimum, const char* what) {
    if (l < minimum || l > kMaxAmbientDim)
        throw std::invalid_argument(std::string(what) + ": ambient dimension " +
                                    std::to_string(l) + " outside [" +
                                    std::to_string(minimum) + ", " +
                                    std::to_string(kMaxAmbientDim) + "]");
}

} // namespace

bool valid_point(Point p, int l) {
    return p != 0 && l >= 1 && l <= kMaxAmbientDim && p < (std::uint32_t{1} << l);
}

bool valid_line(const Line& line, int l) {
    return valid_point(line.a, l) && valid_point(line.b, l) && valid_point(line.c, l) &&
           line.a < line.b && line.b < line.c && (line.a ^ line.b) == line.c;
}

std::vector<Point> enumerate_points(int l) {
    check_dim(l, 1, "enumerate_points");
    std::vector<Point> points;
    points.reserve((std::size_t{1} << l) - 1);
    for (Point p = 1; p < (std::uint32_t{1} << l); ++p) points.push_back(p);
    return points;
}

Line line_through(Point a, Point b) {
    if (a == 0 || b == 0 || a == b)
        throw std::invalid_argument("line_through: degenerate point pair (" +
                                    std::to_string(a) + ", " + std::to_string(b) + ")");
    Point c = a ^ b;
    Point lo = std::min({a, b, c});
    Point hi = std::max({a, b, c});
    return Line{lo, static_cast<Point>(lo ^ hi), hi};
}

std::uint64_t line_count(int l) {
    check_dim(l, 2, "line_count");
    const std::uint64_t q = (std::uint64_t{1} << l) - 1;
    return q * (q - 1) / 6;
}

std::vector<Line> enumerate_lines(int l) {
    check_dim(l, 2, "enumerate_lines");
    std::vector<Line> lines;
    lines.reserve(line_count(l));
    const Point end = std::uint32_t{1} << l;
    // Each line appears once: from its two smallest points a < b, when the
    // third point a^b sorts last.
    for (Point a = 1; a < end; ++a)
        for (Point b = a + 1; b < end; ++b)
            if ((a ^ b) > b) lines.push_back(Line{a, b, a ^ b});
    return lines;
}

std::vector<Hyperplane> hyperplanes_containing_line(const Line& line, int l) {
    check_dim(l, 2, "hyperplanes_containing_line");
    if (!valid_line(line, l))
        throw std::invalid_argument("hyperplanes_containing_line: invalid line");
    const std::uint32_t constraints[2] = {line.a, line.b};
    const auto basis = gf2::orthogonal_basis(constraints, l);
    std::vector<Hyperplane> result;
    result.reserve((std::size_t{1} << basis.size()) - 1);
    std::uint32_t current = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
        current ^= basis[std::countr_zero(i)];
        result.push_back(current);
    }
    std::sort(result.begin(), result.end());
    return result;
}

FanoPlane fano_subplane(int l) {
    check_dim(l, 3, "fano_subplane");
    FanoPlane fano;
    for (Point p = 1; p <= 7; ++p) fano.points[p - 1] = p;
    int i = 0;
    for (Point a = 1; a <= 7; ++a)
        for (Point b = a + 1; b <= 7; ++b)
            if ((a ^ b) > b) fano.lines[i++] = Line{a, b, a ^ b};
    return fano;
}

} // namespace qlines
