#ifndef QLINES_VERIFY_HPP
#define QLINES_VERIFY_HPP

// Bundled verification reports tying the constructions to their claimed
// parameters: exact measurement, cover checks, weight sets, n/s versus
// lambda_k, Griesmer bounds, and the brute-force oracle. All comparisons
// are integer or rational equality; there is no tolerance anywhere.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qlines/code_model.hpp"

namespace qlines {

inline constexpr int kDefaultOracleDimLimit = 14;

struct VerificationReport {
    std::string family;
    int size_param = 0;

    CodeParameters claimed;
    CodeParameters measured;

    std::set<std::uint64_t> weight_set;            // measured distinct weights
    std::set<std::uint64_t> expected_weight_set;   // empty = not requested

    // (m, holds) when the family claims an m-cover.
    std::optional<std::pair<std::uint64_t, bool>> is_cover;

    ExactRatio ratio;            // measured n/s
    bool lambda_checked = false; // whether ratio == lambda_k is part of pass
    bool lambda_match = false;

    bool griesmer_concatenated = false;
    std::optional<std::uint64_t> oracle_min_weight; // absent above the dim limit
    bool oracle_match = true;

    bool pass = false;
    std::vector<std::string> mismatches; // structured diff, one entry per failure
};

// Known family names: "all-lines", "spread", "three-cover", "variant",
// "fano". The size parameter is the ambient dimension l, except for
// "variant" where it is m, and "fano" where it must be 3.
VerificationReport verify_construction(const std::string& family, int param,
                                       Strategy strategy = Strategy::Auto,
                                       int oracle_dim_limit = kDefaultOracleDimLimit);

// True iff twice the geometric minimum distance equals the brute-force
// minimum weight of the concatenated binary generator. Throws
// OracleLimitError when l exceeds the dimension limit.
bool cross_check_oracle(const AdditiveLineCode& code,
                        int oracle_dim_limit = kDefaultOracleDimLimit,
                        Strategy strategy = Strategy::Auto);

// Measures the `copies`-fold multiset sum of the code with itself against
// the claimed parameters (copies*n, 2k, copies*d, copies*s).
VerificationReport sum_construction_check(const AdditiveLineCode& code, unsigned copies,
                                          Strategy strategy = Strategy::Auto,
                                          int oracle_dim_limit = kDefaultOracleDimLimit);

// For an m-cover, every hyperplane profile satisfies
// 3*inside + outside = m * (2^(l-1) - 1): lines inside H meet it in three
// points, all others in exactly one.
bool cover_profile_identity_holds(const AdditiveLineCode& code, std::uint64_t m,
                                  Strategy strategy = Strategy::Auto);

} // namespace qlines

#endif
