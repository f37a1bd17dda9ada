#ifndef QLINES_CONSTRUCTION_HPP
#define QLINES_CONSTRUCTION_HPP

// The explicit code families: all-lines codes, line spreads (1-covers),
// partial spreads with a Fano hole set, 3-covers, and the two-weight
// variant family.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qlines/code_model.hpp"
#include "qlines/pg_geometry.hpp"

namespace qlines {

// Pairwise disjoint lines plus the points they leave uncovered, so that
// 3 * |lines| + |holes| = 2^l - 1.
struct PartialSpread {
    int ambient_dim = 0;
    std::vector<Line> lines;
    std::vector<Point> holes;
};

bool is_valid_partial_spread(const PartialSpread& spread);

// Invertible linear sigma on F_2^dim such that x -> x ^ sigma(x) is also
// invertible; realized as multiplication by a generator of the field with
// 2^dim elements. column_masks[i] is the image of the i-th basis vector.
struct CompleteMapping {
    int dim = 0;
    std::vector<Point> column_masks;

    Point apply(Point x) const {
        Point r = 0;
        for (int i = 0; i < dim; ++i)
            if ((x >> i) & 1) r ^= column_masks[i];
        return r;
    }
};

// Checks both invariants by rank: sigma bijective, x ^ sigma(x) bijective.
bool is_complete_mapping(const CompleteMapping& sigma);

// Fixed irreducible polynomial per dimension, so builds are reproducible.
CompleteMapping complete_mapping(int dim);

// Dimension caps keep runtimes at desk scale; callers that need more can
// pass a higher limit where the signature allows it.
inline constexpr int kMaxAllLinesDim = 12;
inline constexpr int kMaxCoverDim = 11;
inline constexpr int kMaxExactCoverDim = 7;

// All g(l) lines of PG(l-1,2), each once: an [n, l/2, d] code with
// n = g(l) and s = g(l-1), so n/s = lambda_k exactly. 3 <= l <= 12.
AdditiveLineCode all_lines_code(int l);

// A line spread (1-cover) of PG(l-1,2) for even l, built from the GF(4)
// structure map w: (u, v) -> (v, u^v) on coordinate pairs. Each spread line
// is {p, wp, p ^ wp}, i.e. a point of PG(l/2-1, 4). 4 <= l <= 12.
AdditiveLineCode spread_code(int l);

// Partial spread covering exactly the points outside the canonical Fano
// subplane, (2^l - 8)/3 lines for odd l. Built layer by layer: the points
// outside the codimension-2 subspace V' = F_2^(l-2) are pairs (v', eps)
// with eps in {01, 10, 11} on the two top coordinates; the 2^(l-2) disjoint
// lines { (v',e1), (sigma v',e2), (v' ^ sigma v',e3) } cover them, and the
// construction recurses into V' until only the Fano plane is left.
// 3 <= l <= 11 (l = 3 gives zero lines).
PartialSpread partial_spread_outside_fano(int l);

// 3-cover of PG(l-1,2) for odd l: the partial spread with multiplicity 3
// completed by the seven Fano lines. n = 2^l - 1, s = 2^(l-2) - 1.
AdditiveLineCode three_cover_code(int l);

// Two-weight [(2^(2m+1)+1)/3, m+0.5, 2^(2m-1)] code: the partial spread
// outside the Fano plane plus three distinct Fano lines. The weight set
// {d, d+1} does not depend on which three lines are chosen, but the weight
// frequencies may; the default takes the lexicographically smallest three.
// 2 <= m <= 5.
AdditiveLineCode variant_code(int m);
AdditiveLineCode variant_code(int m, const std::array<int, 3>& fano_line_indices);

// Multiplicity-weighted number of codelines through each point, indexed by
// point mask (index 0 unused).
std::vector<std::uint64_t> cover_multiplicity(const AdditiveLineCode& code);

// True iff every point lies on exactly m codelines counted with multiplicity.
bool is_m_cover(const AdditiveLineCode& code, std::uint64_t m);

// Independent cross-check of the layered construction: exact-cover search
// (dancing links, deterministic minimum-branching column order) for a
// partial spread covering precisely the points outside `holes`. Returns
// nullopt when the search space is exhausted.
std::optional<PartialSpread> exact_cover_partial_spread(int l, std::vector<Point> holes,
                                                        int dim_limit = kMaxExactCoverDim);

} // namespace qlines

#endif
