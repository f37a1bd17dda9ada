#ifndef QLINES_PG_GEOMETRY_HPP
#define QLINES_PG_GEOMETRY_HPP

// Points, lines and hyperplanes of the binary projective space PG(l-1,2).
//
// A point is a nonzero mask in [1, 2^l - 1]; bit i is the i-th coordinate
// over F_2. A hyperplane is identified with its nonzero dual vector: point p
// lies in hyperplane h iff parity(p & h) = 0. A line is the canonical
// XOR-closed triple {a, b, a^b} stored with a < b < c.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "qlines/gf2.hpp"

namespace qlines {

using Point = std::uint32_t;
using Hyperplane = std::uint32_t;

// Masks are kept in 32-bit words; every enumeration below is O(4^l) or
// better, so this is far beyond desk scale anyway.
inline constexpr int kMaxAmbientDim = 24;

struct Line {
    Point a, b, c;
    auto operator<=>(const Line&) const = default;
    std::array<Point, 3> points() const { return {a, b, c}; }
};

inline bool point_in_hyperplane(Point p, Hyperplane h) {
    return gf2::parity(p & h) == 0;
}

bool valid_point(Point p, int l);
bool valid_line(const Line& line, int l);

// All 2^l - 1 points in increasing mask order.
std::vector<Point> enumerate_points(int l);

// Canonical line through two distinct nonzero points: the sorted triple
// {a, b, a^b}. Throws std::invalid_argument on a degenerate pair.
Line line_through(Point a, Point b);

// g(l) = (2^l - 1)(2^l - 2)/6, the number of lines of PG(l-1,2).
std::uint64_t line_count(int l);

// Every line exactly once, in canonical form, ascending.
std::vector<Line> enumerate_lines(int l);

// True iff all three points of the line lie in the hyperplane. Two of the
// incidence tests suffice: the third point is the XOR of the other two.
inline bool line_in_hyperplane(const Line& line, Hyperplane h) {
    return gf2::parity(line.a & h) == 0 && gf2::parity(line.b & h) == 0;
}

// The 2^(l-2) - 1 hyperplanes containing the line, ascending. Computed from
// a basis of the dual solution space rather than a scan over all 2^l - 1
// dual vectors.
std::vector<Hyperplane> hyperplanes_containing_line(const Line& line, int l);

struct FanoPlane {
    std::array<Point, 7> points;
    std::array<Line, 7> lines;
};

// The canonical Fano subplane spanned by the three lowest coordinates:
// points are the masks 1..7, lines the seven XOR-closed triples inside them.
// All Fano subplanes are projectively equivalent; fixing this one makes
// outputs reproducible.
FanoPlane fano_subplane(int l);

} // namespace qlines

#endif
