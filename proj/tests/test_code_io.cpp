#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qlines/code_io.hpp"
#include "qlines/construction.hpp"

using namespace qlines;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

} // namespace

TEST_CASE("JSON round trip") {
    for (const auto& code : {three_cover_code(5), variant_code(2), spread_code(4)}) {
        const AdditiveLineCode back = code_from_json(code_to_json(code));
        CHECK(back.ambient_dim() == code.ambient_dim());
        CHECK(back.lines() == code.lines());
        CHECK(code_to_json(back) == code_to_json(code)); // canonical form is stable
    }
}

TEST_CASE("code_from_json accepts the documented format") {
    const AdditiveLineCode code = code_from_json(
        R"({"ambient_dim": 3, "lines": [[1, 2, 3, 2], [1, 4, 5, 1]]})");
    CHECK(code.ambient_dim() == 3);
    CHECK(code.length() == 3);
    REQUIRE(code.lines().size() == 2);
    CHECK(code.lines()[0].second == 2);
}

TEST_CASE("code_from_json rejects invalid input with field diagnostics") {
    CHECK_THROWS_WITH_AS(code_from_json("not json"),
                         doctest::Contains("malformed JSON"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"([1, 2, 3])"),
                         doctest::Contains("top level"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"lines": [[1,2,3,1]]})"),
                         doctest::Contains("ambient_dim"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"ambient_dim": 99, "lines": [[1,2,3,1]]})"),
                         doctest::Contains("ambient_dim"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"ambient_dim": 3, "lines": []})"),
                         doctest::Contains("lines"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"ambient_dim": 3, "lines": [[1,2,4,1]]})"),
                         doctest::Contains("lines[0]"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"ambient_dim": 3, "lines": [[2,1,3,1]]})"),
                         doctest::Contains("strictly increasing"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"ambient_dim": 3, "lines": [[1,2,3,0]]})"),
                         doctest::Contains("multiplicity"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"ambient_dim": 3, "lines": [[1,2,3,1],[1,8,9,1]]})"),
                         doctest::Contains("lines[1]"), CodeFileError);
    CHECK_THROWS_WITH_AS(code_from_json(R"({"ambient_dim": 3, "lines": [[1,2,3]]})"),
                         doctest::Contains("expected [a, b, c, multiplicity]"), CodeFileError);
}

TEST_CASE("save_code and load_code") {
    const AdditiveLineCode code = three_cover_code(5);
    TempFile tmp("qlines_io_test.json");
    save_code(code, tmp.path);
    const AdditiveLineCode back = load_code(tmp.path);
    CHECK(back.lines() == code.lines());

    CHECK_THROWS_AS(load_code("/nonexistent/qlines.json"), CodeFileError);

    std::ofstream(tmp.path) << "{\"ambient_dim\": 3}";
    CHECK_THROWS_WITH_AS(load_code(tmp.path), doctest::Contains(tmp.path.string().c_str()),
                         CodeFileError);
}

TEST_CASE("generator matrix text") {
    const AdditiveLineCode single(2, {{Line{1, 2, 3}, 1}});
    CHECK(gf4_generator_text(quaternary_generator_matrix(single)) == "1\nw\n");

    gf2::BitMatrix m(2, 3);
    m.set(0, 0);
    m.set(0, 2);
    m.set(1, 1);
    CHECK(binary_generator_text(m) == "101\n010\n");

    // columns follow the line order {1,2,3},{1,4,5},{1,6,7},{2,4,6},{2,5,7},{3,4,7},{3,5,6}
    const auto fano_text = gf4_generator_text(quaternary_generator_matrix(all_lines_code(3)));
    CHECK(fano_text ==
          "1110w1W\n"
          "w0w1111\n"
          "0wwwwww\n");
}

TEST_CASE("weights_to_csv") {
    CHECK(weights_to_csv(WeightDistribution{{8, 15}, {9, 16}}) ==
          "weight,count\n8,15\n9,16\n");
    CHECK(weights_to_csv({}) == "weight,count\n");
}

TEST_CASE("report_to_json") {
    const std::string text = report_to_json(verify_construction("spread", 4));
    CHECK(text.find("\"family\": \"spread\"") != std::string::npos);
    CHECK(text.find("\"pass\": true") != std::string::npos);
    CHECK(text.find("\"ratio\": \"5/1\"") != std::string::npos);
    CHECK(text.find("\"oracle_min_weight\": 8") != std::string::npos);
    CHECK(text.back() == '\n');
}
