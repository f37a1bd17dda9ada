#include "qlines/verify.hpp"

#include <stdexcept>

#include "qlines/construction.hpp"

namespace qlines {

namespace {

struct FamilyClaim {
    AdditiveLineCode code;
    CodeParameters claimed;
    std::set<std::uint64_t> expected_weights;
    std::optional<std::uint64_t> cover_m;
    bool check_lambda = false;
};

FamilyClaim build_family(const std::string& family, int param) {
    if (family == "all-lines" || family == "fano") {
        if (family == "fano" && param != 3)
            throw std::invalid_argument("verify: family 'fano' requires parameter 3");
        const int l = param;
        AdditiveLineCode code = all_lines_code(l);
        const std::uint64_t n = line_count(l);
        const std::uint64_t s = line_count(l - 1);
        return {std::move(code), {n, l, n - s, s}, {n - s},
                (std::uint64_t{1} << (l - 1)) - 1, true};
    }
    if (family == "spread") {
        const int l = param;
        AdditiveLineCode code = spread_code(l);
        const std::uint64_t n = ((std::uint64_t{1} << l) - 1) / 3;
        const std::uint64_t s = s_k(l);
        return {std::move(code), {n, l, n - s, s}, {n - s}, std::uint64_t{1}, true};
    }
    if (family == "three-cover") {
        const int l = param;
        AdditiveLineCode code = three_cover_code(l);
        const std::uint64_t n = (std::uint64_t{1} << l) - 1;
        const std::uint64_t s = (std::uint64_t{1} << (l - 2)) - 1;
        return {std::move(code), {n, l, n - s, s}, {n - s}, std::uint64_t{3}, true};
    }
    if (family == "variant") {
        const int m = param;
        AdditiveLineCode code = variant_code(m);
        const int l = 2 * m + 1;
        const std::uint64_t n = ((std::uint64_t{1} << (2 * m + 1)) + 1) / 3;
        const std::uint64_t d = std::uint64_t{1} << (2 * m - 1);
        return {std::move(code), {n, l, d, n - d}, {d, d + 1}, std::nullopt, false};
    }
    throw std::invalid_argument("verify: unknown family '" + family + "'");
}

VerificationReport measure_against(std::string family, int param,
                                   const AdditiveLineCode& code, const CodeParameters& claimed,
                                   const std::set<std::uint64_t>& expected_weights,
                                   std::optional<std::uint64_t> cover_m, bool check_lambda,
                                   Strategy strategy, int oracle_dim_limit) {
    VerificationReport report;
    report.family = std::move(family);
    report.size_param = param;
    report.claimed = claimed;
    report.measured = code_parameters(code, strategy);
    report.expected_weight_set = expected_weights;

    for (const auto& [weight, count] : weight_distribution(code, strategy))
        report.weight_set.insert(weight);

    bool ok = true;
    if (report.measured != report.claimed) {
        ok = false;
        report.mismatches.push_back("parameters: claimed " + report.claimed.str() +
                                    " measured " + report.measured.str());
    }
    if (!expected_weights.empty() && report.weight_set != expected_weights) {
        ok = false;
        report.mismatches.push_back("weight set differs from the claimed one");
    }

    if (cover_m) {
        const bool holds = is_m_cover(code, *cover_m) &&
                           cover_profile_identity_holds(code, *cover_m, strategy);
        report.is_cover = {*cover_m, holds};
        if (!holds) {
            ok = false;
            report.mismatches.push_back("not a " + std::to_string(*cover_m) + "-cover");
        }
    }

    report.ratio = ExactRatio(static_cast<std::int64_t>(report.measured.n),
                              static_cast<std::int64_t>(report.measured.s));
    report.lambda_checked = check_lambda;
    report.lambda_match = report.ratio == lambda_k(code.ambient_dim());
    if (check_lambda && !report.lambda_match) {
        ok = false;
        report.mismatches.push_back("n/s = " + report.ratio.str() + " != lambda_k = " +
                                    lambda_k(code.ambient_dim()).str());
    }

    report.griesmer_concatenated =
        griesmer_holds(3 * report.measured.n, static_cast<unsigned>(code.ambient_dim()),
                       2 * report.measured.d);
    if (!report.griesmer_concatenated) {
        ok = false;
        report.mismatches.push_back("concatenated parameters violate the Griesmer bound");
    }

    if (code.ambient_dim() <= oracle_dim_limit) {
        report.oracle_min_weight = brute_force_min_weight(concatenated_binary_generator(code));
        report.oracle_match = (*report.oracle_min_weight == 2 * report.measured.d);
        if (!report.oracle_match) {
            ok = false;
            report.mismatches.push_back(
                "oracle min weight " + std::to_string(*report.oracle_min_weight) +
                " != 2d = " + std::to_string(2 * report.measured.d));
        }
    }

    report.pass = ok;
    return report;
}

} // namespace

VerificationReport verify_construction(const std::string& family, int param,
                                       Strategy strategy, int oracle_dim_limit) {
    FamilyClaim claim = build_family(family, param);
    return measure_against(family, param, claim.code, claim.claimed, claim.expected_weights,
                           claim.cover_m, claim.check_lambda, strategy, oracle_dim_limit);
}

bool cross_check_oracle(const AdditiveLineCode& code, int oracle_dim_limit,
                        Strategy strategy) {
    if (code.ambient_dim() > oracle_dim_limit)
        throw OracleLimitError("cross_check_oracle: ambient dimension " +
                               std::to_string(code.ambient_dim()) +
                               " exceeds the oracle limit " + std::to_string(oracle_dim_limit));
    const CodeParameters params = code_parameters(code, strategy);
    return 2 * params.d == brute_force_min_weight(concatenated_binary_generator(code));
}

VerificationReport sum_construction_check(const AdditiveLineCode& code, unsigned copies,
                                          Strategy strategy, int oracle_dim_limit) {
    if (copies < 2)
        throw std::invalid_argument("sum_construction_check: need at least 2 copies");
    const CodeParameters base = code_parameters(code, strategy);
    AdditiveLineCode summed = code;
    for (unsigned i = 1; i < copies; ++i) summed = sum_code(summed, code);
    const CodeParameters claimed{copies * base.n, base.two_k, copies * base.d,
                                 copies * base.s};
    return measure_against("sum", static_cast<int>(copies), summed, claimed, {}, std::nullopt,
                           false, strategy, oracle_dim_limit);
}

bool cover_profile_identity_holds(const AdditiveLineCode& code, std::uint64_t m,
                                  Strategy strategy) {
    const int l = code.ambient_dim();
    const std::uint64_t hyperplane_points = (std::uint64_t{1} << (l - 1)) - 1;
    const auto counts = hyperplane_inside_counts(code, strategy);
    const std::uint64_t n = code.length();
    for (std::size_t h = 1; h < counts.size(); ++h)
        if (3 * counts[h] + (n - counts[h]) != m * hyperplane_points) return false;
    return true;
}

} // namespace qlines
