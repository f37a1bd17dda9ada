#include "qlines/gf2.hpp"

namespace qlines::gf2 {

int rank(std::span<const std::uint32_t> vectors) {
    std::vector<std::uint32_t> pivots;
    for (std::uint32_t v : vectors) {
        for (std::uint32_t p : pivots) {
            const std::uint32_t low = p & -p;
            if (v & low) v ^= p;
        }
        if (v) pivots.push_back(v);
    }
    return static_cast<int>(pivots.size());
}

std::vector<std::uint32_t> orthogonal_basis(std::span<const std::uint32_t> constraints,
                                            int width) {
    // Reduced row echelon form with the pivot in the lowest set bit of each
    // row; pivot columns then appear in no other row.
    std::vector<std::uint32_t> rows;
    for (std::uint32_t c : constraints) {
        for (std::uint32_t r : rows) {
            const std::uint32_t low = r & -r;
            if (c & low) c ^= r;
        }
        if (!c) continue;
        const std::uint32_t low = c & -c;
        for (std::uint32_t& r : rows)
            if (r & low) r ^= c;
        rows.push_back(c);
    }

    std::uint32_t pivot_mask = 0;
    for (std::uint32_t r : rows) pivot_mask |= r & -r;

    // One basis vector per free column f: coordinate f plus, for every
    // constraint row, the row's pivot when the row has a 1 in column f.
    std::vector<std::uint32_t> basis;
    for (int f = 0; f < width; ++f) {
        const std::uint32_t bit = std::uint32_t{1} << f;
        if (pivot_mask & bit) continue;
        std::uint32_t v = bit;
        for (std::uint32_t r : rows)
            if (r & bit) v |= r & -r;
        basis.push_back(v);
    }
    return basis;
}

} // namespace qlines::gf2
