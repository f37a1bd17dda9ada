#ifndef QLINES_CODE_MODEL_HPP
#define QLINES_CODE_MODEL_HPP

// The additive-code abstraction over line multisets.
//
// An additive quaternary [n,k,d]_4 code is a multiset of n lines (the
// codelines) in PG(2k-1,2); 2k is the ambient F_2 dimension, so k may be a
// half-integer. Each hyperplane contains at most s = n - d codelines in the
// multiset sense, and the weight of the codeword attached to dual vector v
// is the number of codelines not contained in the hyperplane v.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlines/exact_ratio.hpp"
#include "qlines/gf2.hpp"
#include "qlines/pg_geometry.hpp"

namespace qlines {

// Multiset of codelines in PG(l-1,2), stored as a sorted vector of
// (canonical line, multiplicity) pairs. Immutable after construction.
class AdditiveLineCode {
public:
    using Entry = std::pair<Line, std::uint64_t>;

    // Validates every line against dimension l, merges duplicates, rejects
    // zero multiplicities and empty multisets.
    AdditiveLineCode(int ambient_dim, std::vector<Entry> lines);

    int ambient_dim() const { return ambient_dim_; }        // l = 2k
    std::uint64_t length() const { return length_; }        // n
    const std::vector<Entry>& lines() const { return lines_; }

    bool operator==(const AdditiveLineCode&) const = default;

private:
    int ambient_dim_;
    std::uint64_t length_;
    std::vector<Entry> lines_;
};

struct CodeParameters {
    std::uint64_t n = 0;
    int two_k = 0;
    std::uint64_t d = 0;
    std::uint64_t s = 0;   // s = n - d, the maximum hyperplane load

    bool operator==(const CodeParameters&) const = default;
    std::string str() const;   // "[n,k,d]" with k printed as 2 or 2.5
};

struct HyperplaneProfile {
    Hyperplane dual_mask = 0;
    std::uint64_t inside = 0;    // multiplicity-weighted codelines contained
    std::uint64_t outside = 0;   // n - inside = weight of the codeword
};

// Histogram: weight w -> number of hyperplanes with outside = w. Counts sum
// to 2^l - 1 and the minimum key is d.
using WeightDistribution = std::map<std::uint64_t, std::uint64_t>;

// Two independent evaluation strategies, kept deliberately distinct so they
// can cross-check each other:
//   HyperplaneScan    - for each of the 2^l - 1 hyperplanes, test every line;
//   DualAccumulation  - for each line, bump a counter on each of the
//                       2^(l-2) - 1 hyperplanes containing it.
// Auto picks DualAccumulation when the line multiset is large relative to
// the hyperplane count (see resolve_strategy).
enum class Strategy { Auto, HyperplaneScan, DualAccumulation };

// Auto resolves to DualAccumulation when distinct_lines * scan_bias >= 2^l - 1.
Strategy resolve_strategy(const AdditiveLineCode& code, Strategy requested,
                          std::uint64_t scan_bias = 16);

HyperplaneProfile hyperplane_profile(const AdditiveLineCode& code, Hyperplane h);

// inside count per dual mask; index 0 is unused and zero.
std::vector<std::uint64_t> hyperplane_inside_counts(const AdditiveLineCode& code,
                                                    Strategy strategy = Strategy::Auto);

CodeParameters code_parameters(const AdditiveLineCode& code,
                               Strategy strategy = Strategy::Auto);

WeightDistribution weight_distribution(const AdditiveLineCode& code,
                                       Strategy strategy = Strategy::Auto);

// GF(4) = {0, 1, w, W} with W = w^2 = w + 1. A symbol is the bit pair
// (u, v) meaning u + w*v, packed as u | v<<1; this makes the concatenation
// triple (u, v, u^v) mechanical.
struct Gf4 {
    std::uint8_t bits = 0;
    bool operator==(const Gf4&) const = default;
    char symbol() const { return "01wW"[bits & 3]; }
};

class Gf4Matrix {
public:
    Gf4Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Gf4& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Gf4& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Gf4> data_;
};

// l x n generator matrix: coordinate j uses the two smallest points (p1, p2)
// of line j as its ordered GF(4) basis, so entry (i, j) is the symbol
// (bit i of p1) + w * (bit i of p2). Columns follow the canonical line order
// with multiplicities expanded.
Gf4Matrix quaternary_generator_matrix(const AdditiveLineCode& code);

// l x 3n binary generator: each coordinate expands through the binary
// [3,2,2] code into the triple (v*p1, v*p2, v*(p1^p2)), so every nonzero
// GF(4) symbol contributes binary weight 2 and the binary code is
// [3n, 2k, 2d].
gf2::BitMatrix concatenated_binary_generator(const AdditiveLineCode& code);

struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultOracleRowLimit = 20;

// Independent minimum-weight oracle: enumerate all 2^rows - 1 nonzero row
// combinations Gray-code style, XOR and popcount, and take the minimum over
// the nonzero codewords (0 if the row span is trivial). Refuses matrices
// with more than max_rows rows.
std::uint64_t brute_force_min_weight(const gf2::BitMatrix& generator,
                                     unsigned max_rows = kDefaultOracleRowLimit);

// Griesmer bound for binary [n2, k2, d2]: n2 >= sum_{i<k2} ceil(d2 / 2^i).
std::uint64_t griesmer_sum(unsigned k2, std::uint64_t d2);
bool griesmer_holds(std::uint64_t n2, unsigned k2, std::uint64_t d2);

// Largest n such that the concatenated parameters [3n, two_k, 2(n-s)]
// satisfy the Griesmer bound; found by the upward scan from n = s + 1
// (the deficit is monotone in n). Returns s if even n = s + 1 fails.
std::uint64_t griesmer_max_n(int two_k, std::uint64_t s);

// lambda_k = (4^k - 1)/(4^(k-1) - 1), the asymptotic maximum of n/s in
// dimension k = two_k / 2, as a reduced fraction.
ExactRatio lambda_k(int two_k);

// s_k, the least s with n_k(s)/s = lambda_k: (4^(k-1) - 1)/3 for integer k
// (even two_k), 4^(k-1) - 1 for half-integer k (odd two_k).
std::uint64_t s_k(int two_k);

// Multiset union; corresponds to writing generator matrices side by side,
// so n and d add (d exactly when some hyperplane is maximal for both).
AdditiveLineCode sum_code(const AdditiveLineCode& c1, const AdditiveLineCode& c2);

} // namespace qlines

#endif
