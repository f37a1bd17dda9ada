#include "qlines/code_model.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace qlines {

AdditiveLineCode::AdditiveLineCode(int ambient_dim, std::vector<Entry> lines)
    : ambient_dim_(ambient_dim), length_(0) {
    if (ambient_dim < 2 || ambient_dim > kMaxAmbientDim)
        throw std::invalid_argument("AdditiveLineCode: ambient dimension " +
                                    std::to_string(ambient_dim) + " out of range");
    for (const auto& [line, mult] : lines) {
        if (!valid_line(line, ambient_dim))
            throw std::invalid_argument("AdditiveLineCode: invalid line {" +
                                        std::to_string(line.a) + "," + std::to_string(line.b) +
                                        "," + std::to_string(line.c) + "} in dimension " +
                                        std::to_string(ambient_dim));
        if (mult == 0)
            throw std::invalid_argument("AdditiveLineCode: zero multiplicity");
    }
    std::sort(lines.begin(), lines.end(),
              [](const Entry& x, const Entry& y) { return x.first < y.first; });
    for (auto& entry : lines) {
        if (!lines_.empty() && lines_.back().first == entry.first)
            lines_.back().second += entry.second;
        else
            lines_.push_back(entry);
        length_ += entry.second;
    }
    if (lines_.empty())
        throw std::invalid_argument("AdditiveLineCode: empty line multiset");
}

std::string CodeParameters::str() const {
    std::string k = std::to_string(two_k / 2);
    if (two_k % 2) k += ".5";
    return "[" + std::to_string(n) + "," + k + "," + std::to_string(d) + "]";
}

Strategy resolve_strategy(const AdditiveLineCode& code, Strategy requested,
                          std::uint64_t scan_bias) {
    if (requested != Strategy::Auto) return requested;
    const std::uint64_t hyperplanes = (std::uint64_t{1} << code.ambient_dim()) - 1;
    return code.lines().size() * scan_bias >= hyperplanes ? Strategy::DualAccumulation
                                                          : Strategy::HyperplaneScan;
}

HyperplaneProfile hyperplane_profile(const AdditiveLineCode& code, Hyperplane h) {
    if (!valid_point(h, code.ambient_dim()))
        throw std::invalid_argument("hyperplane_profile: invalid dual mask");
    std::uint64_t inside = 0;
    for (const auto& [line, mult] : code.lines())
        if (line_in_hyperplane(line, h)) inside += mult;
    return {h, inside, code.length() - inside};
}

std::vector<std::uint64_t> hyperplane_inside_counts(const AdditiveLineCode& code,
                                                    Strategy strategy) {
    const int l = code.ambient_dim();
    const std::uint32_t end = std::uint32_t{1} << l;
    std::vector<std::uint64_t> counts(end, 0);

    switch (resolve_strategy(code, strategy)) {
    case Strategy::HyperplaneScan:
        for (Hyperplane h = 1; h < end; ++h) {
            std::uint64_t inside = 0;
            for (const auto& [line, mult] : code.lines())
                if (line_in_hyperplane(line, h)) inside += mult;
            counts[h] = inside;
        }
        break;
    case Strategy::DualAccumulation:
        for (const auto& [line, mult] : code.lines()) {
            const std::uint32_t constraints[2] = {line.a, line.b};
            const auto basis = gf2::orthogonal_basis(constraints, l);
            std::uint32_t h = 0;
            for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
                h ^= basis[std::countr_zero(i)];
                counts[h] += mult;
            }
        }
        break;
    case Strategy::Auto:
        break; // unreachable: resolve_strategy never returns Auto
    }
    return counts;
}

CodeParameters code_parameters(const AdditiveLineCode& code, Strategy strategy) {
    const auto counts = hyperplane_inside_counts(code, strategy);
    std::uint64_t max_inside = 0;
    for (std::size_t h = 1; h < counts.size(); ++h) max_inside = std::max(max_inside, counts[h]);
    const std::uint64_t n = code.length();
    return {n, code.ambient_dim(), n - max_inside, max_inside};
}

WeightDistribution weight_distribution(const AdditiveLineCode& code, Strategy strategy) {
    const auto counts = hyperplane_inside_counts(code, strategy);
    WeightDistribution dist;
    for (std::size_t h = 1; h < counts.size(); ++h) ++dist[code.length() - counts[h]];
    return dist;
}

Gf4Matrix quaternary_generator_matrix(const AdditiveLineCode& code) {
    const int l = code.ambient_dim();
    Gf4Matrix m(l, code.length());
    std::size_t j = 0;
    for (const auto& [line, mult] : code.lines())
        for (std::uint64_t rep = 0; rep < mult; ++rep, ++j)
            for (int i = 0; i < l; ++i) {
                const std::uint8_t u = (line.a >> i) & 1;
                const std::uint8_t v = (line.b >> i) & 1;
                m.at(i, j) = Gf4{static_cast<std::uint8_t>(u | (v << 1))};
            }
    return m;
}

gf2::BitMatrix concatenated_binary_generator(const AdditiveLineCode& code) {
    const int l = code.ambient_dim();
    gf2::BitMatrix m(l, 3 * code.length());
    std::size_t j = 0;
    for (const auto& [line, mult] : code.lines())
        for (std::uint64_t rep = 0; rep < mult; ++rep, ++j)
            for (int i = 0; i < l; ++i) {
                if ((line.a >> i) & 1) m.set(i, 3 * j);
                if ((line.b >> i) & 1) m.set(i, 3 * j + 1);
                if ((line.c >> i) & 1) m.set(i, 3 * j + 2);
            }
    return m;
}

std::uint64_t brute_force_min_weight(const gf2::BitMatrix& generator, unsigned max_rows) {
    const std::size_t rows = generator.rows();
    if (rows == 0) return 0;
    if (rows > max_rows)
        throw OracleLimitError("brute_force_min_weight: " + std::to_string(rows) +
                               " rows exceeds the oracle limit of " + std::to_string(max_rows));
    const std::size_t words = generator.row_words(0).size();
    std::vector<std::uint64_t> current(words, 0);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << rows); ++i) {
        const auto row = generator.row_words(static_cast<std::size_t>(std::countr_zero(i)));
        std::uint64_t weight = 0;
        for (std::size_t w = 0; w < words; ++w) {
            current[w] ^= row[w];
            weight += std::popcount(current[w]);
        }
        if (weight != 0 && weight < best) best = weight;
    }
    return best == std::numeric_limits<std::uint64_t>::max() ? 0 : best;
}

std::uint64_t griesmer_sum(unsigned k2, std::uint64_t d2) {
    std::uint64_t sum = 0;
    for (unsigned i = 0; i < k2; ++i) {
        const std::uint64_t p = std::uint64_t{1} << i;
        sum += (d2 + p - 1) / p;
    }
    return sum;
}

bool griesmer_holds(std::uint64_t n2, unsigned k2, std::uint64_t d2) {
    return griesmer_sum(k2, d2) <= n2;
}

std::uint64_t griesmer_max_n(int two_k, std::uint64_t s) {
    if (two_k < 3 || s < 1)
        throw std::invalid_argument("griesmer_max_n: need two_k >= 3 and s >= 1");
    // The Griesmer deficit of [3n, 2k, 2(n-s)] is monotone in n: raising n
    // by 1 raises the bound sum by at least 3 (terms i = 0, 1 alone) while
    // the length budget rises by exactly 3.
    std::uint64_t n = s + 1;
    std::uint64_t last = s;
    while (griesmer_holds(3 * n, static_cast<unsigned>(two_k), 2 * (n - s))) {
        last = n;
        ++n;
    }
    return last;
}

ExactRatio lambda_k(int two_k) {
    if (two_k < 3 || two_k > 62)
        throw std::invalid_argument("lambda_k: two_k out of range");
    const std::int64_t num = (std::int64_t{1} << two_k) - 1;
    const std::int64_t den = (std::int64_t{1} << (two_k - 2)) - 1;
    return {num, den};
}

std::uint64_t s_k(int two_k) {
    if (two_k < 3 || two_k > 62)
        throw std::invalid_argument("s_k: two_k out of range");
    const std::uint64_t q = (std::uint64_t{1} << (two_k - 2)) - 1;
    return two_k % 2 == 0 ? q / 3 : q;
}

AdditiveLineCode sum_code(const AdditiveLineCode& c1, const AdditiveLineCode& c2) {
    if (c1.ambient_dim() != c2.ambient_dim())
        throw std::invalid_argument("sum_code: ambient dimensions differ (" +
                                    std::to_string(c1.ambient_dim()) + " vs " +
                                    std::to_string(c2.ambient_dim()) + ")");
    auto lines = c1.lines();
    lines.insert(lines.end(), c2.lines().begin(), c2.lines().end());
    return AdditiveLineCode(c1.ambient_dim(), std::move(lines));
}

} // namespace qlines
