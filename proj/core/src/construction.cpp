#include "qlines/construction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qlines {

namespace {

// Irreducible polynomials over F_2, one fixed per degree so that every
// build produces the same mappings. Masks include the leading term.
constexpr std::uint32_t kFieldPoly[] = {
    0,
    0,
    0b111,           // x^2 + x + 1
    0b1011,          // x^3 + x + 1
    0b10011,         // x^4 + x + 1
    0b100101,        // x^5 + x^2 + 1
    0b1000011,       // x^6 + x + 1
    0b10000011,      // x^7 + x + 1
    0b100011101,     // x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,    // x^9 + x^4 + 1
    0b10000001001,   // x^10 + x^3 + 1
    0b100000000101,  // x^11 + x^2 + 1
    0b1000001010011, // x^12 + x^6 + x^4 + x + 1
};
constexpr int kMaxMappingDim = 12;

// Multiply each GF(4) coordinate pair (u, v) = u + wv by w:
// w(u + wv) = v + w(u + v).
Point omega_image(Point p, int l) {
    Point r = 0;
    for (int i = 0; i < l; i += 2) {
        const Point u = (p >> i) & 1;
        const Point v = (p >> (i + 1)) & 1;
        r |= v << i;
        r |= (u ^ v) << (i + 1);
    }
    return r;
}

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

// Knuth-style dancing links for exact cover. Column choice is the smallest
// remaining candidate count, ties broken by lowest column index, so the
// search order is deterministic.
class DancingLinks {
public:
    explicit DancingLinks(int num_cols) : col_size_(num_cols + 1, 0) {
        nodes_.reserve(4 * (num_cols + 1));
        for (int i = 0; i <= num_cols; ++i)
            nodes_.push_back({i == 0 ? num_cols : i - 1, i == num_cols ? 0 : i + 1,
                              i, i, i, -1});
    }

    void add_row(int row_id, const std::array<int, 3>& cols) {
        const int first = static_cast<int>(nodes_.size());
        for (int k = 0; k < 3; ++k) {
            const int c = cols[k];
            const int idx = first + k;
            Node node;
            node.left = (k == 0) ? first + 2 : idx - 1;
            node.right = (k == 2) ? first : idx + 1;
            node.up = nodes_[c].up;
            node.down = c;
            node.col = c;
            node.row_id = row_id;
            nodes_[nodes_[c].up].down = idx;
            nodes_[c].up = idx;
            nodes_.push_back(node);
            ++col_size_[c];
        }
    }

    std::optional<std::vector<int>> solve() {
        std::vector<int> solution;
        if (search(solution)) return solution;
        return std::nullopt;
    }

private:
    struct Node {
        int left, right, up, down;
        int col;
        int row_id;
    };

    void cover(int c) {
        nodes_[nodes_[c].left].right = nodes_[c].right;
        nodes_[nodes_[c].right].left = nodes_[c].left;
        for (int i = nodes_[c].down; i != c; i = nodes_[i].down)
            for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
                nodes_[nodes_[j].up].down = nodes_[j].down;
                nodes_[nodes_[j].down].up = nodes_[j].up;
                --col_size_[nodes_[j].col];
            }
    }

    void uncover(int c) {
        for (int i = nodes_[c].up; i != c; i = nodes_[i].up)
            for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
                ++col_size_[nodes_[j].col];
                nodes_[nodes_[j].up].down = j;
                nodes_[nodes_[j].down].up = j;
            }
        nodes_[nodes_[c].left].right = c;
        nodes_[nodes_[c].right].left = c;
    }

    bool search(std::vector<int>& solution) {
        if (nodes_[0].right == 0) return true;
        int best = -1;
        for (int c = nodes_[0].right; c != 0; c = nodes_[c].right)
            if (best == -1 || col_size_[c] < col_size_[best]) best = c;
        if (col_size_[best] == 0) return false;
        cover(best);
        for (int r = nodes_[best].down; r != best; r = nodes_[r].down) {
            solution.push_back(nodes_[r].row_id);
            for (int j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].col);
            if (search(solution)) return true;
            for (int j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].col);
            solution.pop_back();
        }
        uncover(best);
        return false;
    }

    std::vector<Node> nodes_;
    std::vector<int> col_size_;
};

} // namespace

bool is_valid_partial_spread(const PartialSpread& spread) {
    const int l = spread.ambient_dim;
    if (l < 2 || l > kMaxAmbientDim) return false;
    const std::size_t total = (std::size_t{1} << l) - 1;
    std::vector<std::uint8_t> covered(total + 1, 0);
    for (const Line& line : spread.lines) {
        if (!valid_line(line, l)) return false;
        for (Point p : line.points()) {
            if (covered[p]) return false; // lines share a point
            covered[p] = 1;
        }
    }
    std::vector<Point> holes;
    for (Point p = 1; p <= total; ++p)
        if (!covered[p]) holes.push_back(p);
    std::vector<Point> given = spread.holes;
    std::sort(given.begin(), given.end());
    if (holes != given) return false;
    return 3 * spread.lines.size() + holes.size() == total;
}

bool is_complete_mapping(const CompleteMapping& sigma) {
    if (sigma.dim < 1 || static_cast<int>(sigma.column_masks.size()) != sigma.dim)
        return false;
    std::vector<std::uint32_t> shifted(sigma.column_masks.size());
    for (int i = 0; i < sigma.dim; ++i)
        shifted[i] = sigma.column_masks[i] ^ (std::uint32_t{1} << i);
    return gf2::rank(sigma.column_masks) == sigma.dim && gf2::rank(shifted) == sigma.dim;
}

CompleteMapping complete_mapping(int dim) {
    require(dim >= 2 && dim <= kMaxMappingDim,
            "complete_mapping: dimension " + std::to_string(dim) + " outside [2, " +
                std::to_string(kMaxMappingDim) + "]");
    const std::uint32_t poly = kFieldPoly[dim];
    CompleteMapping sigma{dim, {}};
    sigma.column_masks.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        std::uint32_t x = std::uint32_t{1} << i; // field element alpha^i
        x <<= 1;
        if ((x >> dim) & 1) x ^= poly;
        sigma.column_masks.push_back(x);
    }
    return sigma;
}

AdditiveLineCode all_lines_code(int l) {
    require(l >= 3 && l <= kMaxAllLinesDim,
            "all_lines_code: l = " + std::to_string(l) + " outside [3, " +
                std::to_string(kMaxAllLinesDim) + "]");
    std::vector<AdditiveLineCode::Entry> entries;
    entries.reserve(line_count(l));
    for (const Line& line : enumerate_lines(l)) entries.emplace_back(line, 1);
    return AdditiveLineCode(l, std::move(entries));
}

AdditiveLineCode spread_code(int l) {
    require(l % 2 == 0 && l >= 4 && l <= kMaxAllLinesDim,
            "spread_code: l = " + std::to_string(l) + " must be even in [4, " +
                std::to_string(kMaxAllLinesDim) + "]");
    const Point end = std::uint32_t{1} << l;
    std::vector<bool> seen(end, false);
    std::vector<AdditiveLineCode::Entry> entries;
    entries.reserve((end - 1) / 3);
    for (Point p = 1; p < end; ++p) {
        if (seen[p]) continue;
        const Line line = line_through(p, omega_image(p, l));
        for (Point q : line.points()) seen[q] = true;
        entries.emplace_back(line, 1);
    }
    return AdditiveLineCode(l, std::move(entries));
}

PartialSpread partial_spread_outside_fano(int l) {
    require(l % 2 == 1 && l >= 3 && l <= kMaxCoverDim,
            "partial_spread_outside_fano: l = " + std::to_string(l) +
                " must be odd in [3, " + std::to_string(kMaxCoverDim) + "]");
    PartialSpread spread{l, {}, {1, 2, 3, 4, 5, 6, 7}};
    for (int layer = l; layer > 3; layer -= 2) {
        const int sub = layer - 2;
        const CompleteMapping sigma = complete_mapping(sub);
        const Point tag1 = std::uint32_t{1} << sub;
        const Point tag2 = std::uint32_t{2} << sub;
        for (Point v = 0; v < (std::uint32_t{1} << sub); ++v)
            spread.lines.push_back(line_through(v | tag1, sigma.apply(v) | tag2));
    }
    std::sort(spread.lines.begin(), spread.lines.end());
    return spread;
}

AdditiveLineCode three_cover_code(int l) {
    require(l % 2 == 1 && l >= 3 && l <= kMaxCoverDim,
            "three_cover_code: l = " + std::to_string(l) + " must be odd in [3, " +
                std::to_string(kMaxCoverDim) + "]");
    std::vector<AdditiveLineCode::Entry> entries;
    for (const Line& line : partial_spread_outside_fano(l).lines)
        entries.emplace_back(line, 3);
    for (const Line& line : fano_subplane(l).lines)
        entries.emplace_back(line, 1);
    return AdditiveLineCode(l, std::move(entries));
}

AdditiveLineCode variant_code(int m) { return variant_code(m, {0, 1, 2}); }

AdditiveLineCode variant_code(int m, const std::array<int, 3>& fano_line_indices) {
    require(m >= 2 && m <= 5, "variant_code: m = " + std::to_string(m) + " outside [2, 5]");
    for (int idx : fano_line_indices)
        require(idx >= 0 && idx < 7, "variant_code: Fano line index out of range");
    require(fano_line_indices[0] != fano_line_indices[1] &&
                fano_line_indices[0] != fano_line_indices[2] &&
                fano_line_indices[1] != fano_line_indices[2],
            "variant_code: the three Fano lines must be distinct");
    const int l = 2 * m + 1;
    std::vector<AdditiveLineCode::Entry> entries;
    for (const Line& line : partial_spread_outside_fano(l).lines)
        entries.emplace_back(line, 1);
    const FanoPlane fano = fano_subplane(l);
    for (int idx : fano_line_indices) entries.emplace_back(fano.lines[idx], 1);
    return AdditiveLineCode(l, std::move(entries));
}

std::vector<std::uint64_t> cover_multiplicity(const AdditiveLineCode& code) {
    std::vector<std::uint64_t> counts(std::size_t{1} << code.ambient_dim(), 0);
    for (const auto& [line, mult] : code.lines())
        for (Point p : line.points()) counts[p] += mult;
    return counts;
}

bool is_m_cover(const AdditiveLineCode& code, std::uint64_t m) {
    const auto counts = cover_multiplicity(code);
    for (std::size_t p = 1; p < counts.size(); ++p)
        if (counts[p] != m) return false;
    return true;
}

std::optional<PartialSpread> exact_cover_partial_spread(int l, std::vector<Point> holes,
                                                        int dim_limit) {
    require(l % 2 == 1 && l >= 3, "exact_cover_partial_spread: l must be odd and >= 3");
    require(l <= dim_limit, "exact_cover_partial_spread: l = " + std::to_string(l) +
                                " exceeds the dimension limit " + std::to_string(dim_limit));
    std::sort(holes.begin(), holes.end());
    holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
    for (Point p : holes)
        require(valid_point(p, l), "exact_cover_partial_spread: invalid hole point " +
                                       std::to_string(p));

    const std::uint32_t end = std::uint32_t{1} << l;
    std::vector<std::uint8_t> is_hole(end, 0);
    for (Point p : holes) is_hole[p] = 1;

    std::vector<int> column_of(end, 0);
    int num_cols = 0;
    for (Point p = 1; p < end; ++p)
        if (!is_hole[p]) column_of[p] = ++num_cols;

    PartialSpread result{l, {}, holes};
    if (num_cols == 0) return result;       // nothing to cover
    if (num_cols % 3 != 0) return std::nullopt;

    std::vector<Line> candidates;
    for (const Line& line : enumerate_lines(l))
        if (!is_hole[line.a] && !is_hole[line.b] && !is_hole[line.c])
            candidates.push_back(line);

    DancingLinks dlx(num_cols);
    for (std::size_t i = 0; i < candidates.size(); ++i)
        dlx.add_row(static_cast<int>(i), {column_of[candidates[i].a],
                                          column_of[candidates[i].b],
                                          column_of[candidates[i].c]});

    const auto solution = dlx.solve();
    if (!solution) return std::nullopt;
    for (int row : *solution) result.lines.push_back(candidates[row]);
    std::sort(result.lines.begin(), result.lines.end());
    return result;
}

} // namespace qlines
