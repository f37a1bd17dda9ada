#ifndef QLINES_GF2_HPP
#define QLINES_GF2_HPP

// Bit-parallel GF(2) linear algebra on word-sized masks. A vector in F_2^w
// (w <= 32) is a mask whose bit i is coordinate i; the dot product of two
// vectors is the parity of the AND of their masks.

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace qlines::gf2 {

inline int parity(std::uint32_t x) { return std::popcount(x) & 1; }

// Rank of the span of the given vectors.
int rank(std::span<const std::uint32_t> vectors);

// Basis of { x : parity(x & c) = 0 for every constraint c }, the orthogonal
// complement of the span of the constraints inside F_2^width. Basis vectors
// are returned in ascending free-coordinate order, so the result is
// deterministic. Size = width - rank(constraints).
std::vector<std::uint32_t> orthogonal_basis(std::span<const std::uint32_t> constraints,
                                            int width);

// Dense binary matrix, row-major in 64-bit words. Rows are code generator
// rows, columns are code coordinates.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          words_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c) {
        words_[r * words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * words_per_row_ + c / 64] >> (c % 64)) & 1;
    }
    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {words_.data() + r * words_per_row_, words_per_row_};
    }

    std::uint64_t row_weight(std::size_t r) const {
        std::uint64_t w = 0;
        for (std::uint64_t word : row_words(r)) w += std::popcount(word);
        return w;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> words_;
};

} // namespace qlines::gf2

#endif
