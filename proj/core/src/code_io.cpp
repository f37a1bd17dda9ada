#include "qlines/code_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qlines {

namespace {

using nlohmann::json;

json parameters_to_json(const CodeParameters& p) {
    return json{{"n", p.n}, {"two_k", p.two_k}, {"d", p.d}, {"s", p.s}};
}

} // namespace

std::string code_to_json(const AdditiveLineCode& code) {
    json lines = json::array();
    for (const auto& [line, mult] : code.lines())
        lines.push_back(json::array({line.a, line.b, line.c, mult}));
    const json j{{"ambient_dim", code.ambient_dim()}, {"lines", std::move(lines)}};
    return j.dump(2) + "\n";
}

AdditiveLineCode code_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw CodeFileError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object())
        throw CodeFileError("top level: expected an object");
    if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_integer())
        throw CodeFileError("ambient_dim: missing or not an integer");
    const std::int64_t l = j["ambient_dim"].get<std::int64_t>();
    if (l < 2 || l > kMaxAmbientDim)
        throw CodeFileError("ambient_dim: " + std::to_string(l) + " outside [2, " +
                            std::to_string(kMaxAmbientDim) + "]");
    if (!j.contains("lines") || !j["lines"].is_array() || j["lines"].empty())
        throw CodeFileError("lines: missing, not an array, or empty");

    std::vector<AdditiveLineCode::Entry> entries;
    entries.reserve(j["lines"].size());
    std::size_t index = 0;
    for (const json& entry : j["lines"]) {
        const std::string where = "lines[" + std::to_string(index++) + "]";
        if (!entry.is_array() || entry.size() != 4)
            throw CodeFileError(where + ": expected [a, b, c, multiplicity]");
        for (const json& v : entry)
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw CodeFileError(where + ": entries must be non-negative integers");
        const auto a = entry[0].get<std::uint64_t>();
        const auto b = entry[1].get<std::uint64_t>();
        const auto c = entry[2].get<std::uint64_t>();
        const auto mult = entry[3].get<std::uint64_t>();
        const Line line{static_cast<Point>(a), static_cast<Point>(b), static_cast<Point>(c)};
        if (a == 0 || b == 0 || c == 0 || a >= (std::uint64_t{1} << l) ||
            b >= (std::uint64_t{1} << l) || c >= (std::uint64_t{1} << l))
            throw CodeFileError(where + ": points must be nonzero masks below 2^" +
                                std::to_string(l));
        if (!(a < b && b < c))
            throw CodeFileError(where + ": triple must be strictly increasing");
        if ((a ^ b) != c)
            throw CodeFileError(where + ": triple violates c = a xor b");
        if (mult == 0)
            throw CodeFileError(where + ": multiplicity must be positive");
        entries.emplace_back(line, mult);
    }
    return AdditiveLineCode(static_cast<int>(l), std::move(entries));
}

AdditiveLineCode load_code(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw CodeFileError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return code_from_json(buffer.str());
    } catch (const CodeFileError& e) {
        throw CodeFileError(path.string() + ": " + e.what());
    }
}

void save_code(const AdditiveLineCode& code, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw CodeFileError("cannot open " + path.string() + " for writing");
    out << code_to_json(code);
    if (!out)
        throw CodeFileError("write failed: " + path.string());
}

std::string gf4_generator_text(const Gf4Matrix& m) {
    std::string text;
    text.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) text += m.at(r, c).symbol();
        text += '\n';
    }
    return text;
}

std::string binary_generator_text(const gf2::BitMatrix& m) {
    std::string text;
    text.reserve(m.rows() * (m.cols() + 1));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) text += m.get(r, c) ? '1' : '0';
        text += '\n';
    }
    return text;
}

std::string weights_to_csv(const WeightDistribution& dist) {
    std::string csv = "weight,count\n";
    for (const auto& [weight, count] : dist)
        csv += std::to_string(weight) + "," + std::to_string(count) + "\n";
    return csv;
}

std::string report_to_json(const VerificationReport& report) {
    json j;
    j["family"] = report.family;
    j["size_param"] = report.size_param;
    j["claimed"] = parameters_to_json(report.claimed);
    j["measured"] = parameters_to_json(report.measured);
    j["weight_set"] = report.weight_set;
    j["expected_weight_set"] = report.expected_weight_set;
    if (report.is_cover)
        j["is_cover"] = json{{"m", report.is_cover->first}, {"holds", report.is_cover->second}};
    else
        j["is_cover"] = nullptr;
    j["ratio"] = report.ratio.str();
    j["lambda_checked"] = report.lambda_checked;
    j["lambda_match"] = report.lambda_match;
    j["griesmer_concatenated"] = report.griesmer_concatenated;
    if (report.oracle_min_weight)
        j["oracle_min_weight"] = *report.oracle_min_weight;
    else
        j["oracle_min_weight"] = nullptr;
    j["oracle_match"] = report.oracle_match;
    j["pass"] = report.pass;
    j["mismatches"] = report.mismatches;
    return j.dump(2) + "\n";
}

} // namespace qlines
