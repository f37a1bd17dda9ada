#ifndef QLINES_CODE_IO_HPP
#define QLINES_CODE_IO_HPP

// Serialization: the JSON code file format, generator-matrix text export,
// weight-distribution CSV, and verification-report JSON.
//
// Code file format:
//   {"ambient_dim": l, "lines": [[a, b, c, multiplicity], ...]}
// with canonical sorted triples (a < b < c = a^b) and positive
// multiplicities. Files violating the invariants are refused with a
// field-level diagnostic.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qlines/code_model.hpp"
#include "qlines/verify.hpp"

namespace qlines {

struct CodeFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string code_to_json(const AdditiveLineCode& code);
AdditiveLineCode code_from_json(const std::string& text);

AdditiveLineCode load_code(const std::filesystem::path& path);
void save_code(const AdditiveLineCode& code, const std::filesystem::path& path);

// Row-major text, one generator row per line; GF(4) symbols {0,1,w,W},
// binary symbols {0,1}.
std::string gf4_generator_text(const Gf4Matrix& m);
std::string binary_generator_text(const gf2::BitMatrix& m);

// "weight,count" header plus one ascending row per distinct weight.
std::string weights_to_csv(const WeightDistribution& dist);

std::string report_to_json(const VerificationReport& report);

} // namespace qlines

#endif
