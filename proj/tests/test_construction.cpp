#include <doctest.h>

#include <algorithm>
#include <set>

#include "qlines/construction.hpp"

using namespace qlines;

TEST_CASE("complete_mapping") {
    const CompleteMapping sigma = complete_mapping(3);
    CHECK(sigma.apply(1) == 2);
    CHECK(sigma.apply(2) == 4);
    CHECK(sigma.apply(4) == 3);
    CHECK(is_complete_mapping(sigma));

    for (int dim = 2; dim <= 12; ++dim) {
        const CompleteMapping s = complete_mapping(dim);
        CHECK(is_complete_mapping(s));
        // bijectivity of x -> sigma(x) and x -> x ^ sigma(x), checked pointwise
        if (dim <= 10) {
            std::set<Point> images, sums;
            for (Point x = 1; x < (std::uint32_t{1} << dim); ++x) {
                images.insert(s.apply(x));
                sums.insert(x ^ s.apply(x));
            }
            CHECK(images.size() == (std::size_t{1} << dim) - 1);
            CHECK(sums.size() == (std::size_t{1} << dim) - 1);
        }
    }

    CHECK_FALSE(is_complete_mapping(CompleteMapping{3, {1, 2, 4}})); // identity: x ^ x = 0
    CHECK_FALSE(is_complete_mapping(CompleteMapping{3, {1, 2}}));
    CHECK_THROWS_AS(complete_mapping(1), std::invalid_argument);
    CHECK_THROWS_AS(complete_mapping(13), std::invalid_argument);
}

TEST_CASE("partial_spread_outside_fano") {
    const std::size_t expected_sizes[] = {0, 8, 40, 168};
    int idx = 0;
    for (int l : {3, 5, 7, 9}) {
        const PartialSpread spread = partial_spread_outside_fano(l);
        CHECK(spread.ambient_dim == l);
        CHECK(spread.lines.size() == expected_sizes[idx++]);
        CHECK(spread.lines.size() == ((std::size_t{1} << l) - 8) / 3);
        CHECK(spread.holes == std::vector<Point>{1, 2, 3, 4, 5, 6, 7});
        CHECK(is_valid_partial_spread(spread));
    }
    CHECK_THROWS_AS(partial_spread_outside_fano(4), std::invalid_argument);
    CHECK_THROWS_AS(partial_spread_outside_fano(13), std::invalid_argument);
}

TEST_CASE("is_valid_partial_spread rejects defects") {
    PartialSpread spread = partial_spread_outside_fano(5);
    SUBCASE("wrong holes") {
        spread.holes.pop_back();
        CHECK_FALSE(is_valid_partial_spread(spread));
    }
    SUBCASE("overlapping lines") {
        spread.lines.push_back(spread.lines.front());
        CHECK_FALSE(is_valid_partial_spread(spread));
    }
    SUBCASE("line through a hole") {
        spread.lines.push_back(Line{1, 2, 3});
        CHECK_FALSE(is_valid_partial_spread(spread));
    }
}

TEST_CASE("all_lines_code parameters") {
    CHECK(code_parameters(all_lines_code(3)) == CodeParameters{7, 3, 6, 1});
    CHECK(code_parameters(all_lines_code(4)) == CodeParameters{35, 4, 28, 7});
    CHECK(code_parameters(all_lines_code(5)) == CodeParameters{155, 5, 120, 35});
    CHECK(code_parameters(all_lines_code(6)) == CodeParameters{651, 6, 496, 155});
    CHECK_THROWS_AS(all_lines_code(2), std::invalid_argument);
    CHECK_THROWS_AS(all_lines_code(13), std::invalid_argument);
}

TEST_CASE("spread_code parameters and cover property") {
    CHECK(code_parameters(spread_code(4)) == CodeParameters{5, 4, 4, 1});
    CHECK(code_parameters(spread_code(6)) == CodeParameters{21, 6, 16, 5});
    CHECK(code_parameters(spread_code(8)) == CodeParameters{85, 8, 64, 21});
    for (int l : {4, 6, 8}) CHECK(is_m_cover(spread_code(l), 1));
    CHECK_THROWS_AS(spread_code(5), std::invalid_argument);
    CHECK_THROWS_AS(spread_code(2), std::invalid_argument);
}

TEST_CASE("three_cover_code parameters and cover property") {
    CHECK(code_parameters(three_cover_code(3)) == CodeParameters{7, 3, 6, 1});
    CHECK(code_parameters(three_cover_code(5)) == CodeParameters{31, 5, 24, 7});
    CHECK(code_parameters(three_cover_code(7)) == CodeParameters{127, 7, 96, 31});
    CHECK(code_parameters(three_cover_code(9)) == CodeParameters{511, 9, 384, 127});
    for (int l : {3, 5, 7, 9}) CHECK(is_m_cover(three_cover_code(l), 3));
    CHECK_THROWS_AS(three_cover_code(4), std::invalid_argument);
}

TEST_CASE("variant_code parameters and weight sets") {
    CHECK(code_parameters(variant_code(2)) == CodeParameters{11, 5, 8, 3});
    CHECK(code_parameters(variant_code(3)) == CodeParameters{43, 7, 32, 11});
    CHECK(code_parameters(variant_code(4)) == CodeParameters{171, 9, 128, 43});

    // the two-weight property holds for every choice of three Fano lines
    for (const auto& choice : {std::array<int, 3>{0, 3, 5}, std::array<int, 3>{4, 5, 6},
                               std::array<int, 3>{1, 2, 6}}) {
        const AdditiveLineCode code = variant_code(2, choice);
        const auto dist = weight_distribution(code);
        REQUIRE(dist.size() == 2);
        CHECK(dist.begin()->first == 8);
        CHECK(std::next(dist.begin())->first == 9);
    }

    CHECK_THROWS_AS(variant_code(1), std::invalid_argument);
    CHECK_THROWS_AS(variant_code(6), std::invalid_argument);
    CHECK_THROWS_AS(variant_code(2, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(variant_code(2, {0, 1, 7}), std::invalid_argument);
}

TEST_CASE("variant hyperplane loads split by Fano containment") {
    // hyperplanes containing E hold (2^(2m-1)+1)/3 codelines; the others
    // hold x or x+1 with x = (2^(2m-1)-2)/3
    for (int m : {2, 3}) {
        const AdditiveLineCode code = variant_code(m);
        const int l = 2 * m + 1;
        const std::uint64_t containing = ((std::uint64_t{1} << (2 * m - 1)) + 1) / 3;
        const std::uint64_t x = ((std::uint64_t{1} << (2 * m - 1)) - 2) / 3;
        for (Hyperplane h = 1; h < (std::uint32_t{1} << l); ++h) {
            const std::uint64_t inside = hyperplane_profile(code, h).inside;
            if ((h & 7) == 0) // E = masks 1..7 lies in H iff h kills the low bits
                CHECK(inside == containing);
            else
                CHECK((inside == x || inside == x + 1));
        }
    }
}

TEST_CASE("cover_multiplicity") {
    const auto spread_counts = cover_multiplicity(spread_code(4));
    for (Point p = 1; p < 16; ++p) CHECK(spread_counts[p] == 1);

    const auto cover_counts = cover_multiplicity(three_cover_code(5));
    for (Point p = 1; p < 32; ++p) CHECK(cover_counts[p] == 3);

    // every point of PG(l-1,2) lies on (2^(l-1) - 1) lines
    CHECK(is_m_cover(all_lines_code(3), 3));
    CHECK(is_m_cover(all_lines_code(4), 7));
    CHECK_FALSE(is_m_cover(all_lines_code(4), 3));

    const auto variant_counts = cover_multiplicity(variant_code(2));
    CHECK_FALSE(is_m_cover(variant_code(2), 1)); // Fano points covered 0..2 times
    for (Point p = 8; p < 32; ++p) CHECK(variant_counts[p] == 1);
}

TEST_CASE("exact cover reproduces the Fano hole set") {
    const auto trivial = exact_cover_partial_spread(3, {1, 2, 3, 4, 5, 6, 7});
    REQUIRE(trivial.has_value());
    CHECK(trivial->lines.empty());
    CHECK(is_valid_partial_spread(*trivial));

    const auto found = exact_cover_partial_spread(5, {1, 2, 3, 4, 5, 6, 7});
    REQUIRE(found.has_value());
    CHECK(found->lines.size() == 8);
    CHECK(is_valid_partial_spread(*found));
}

TEST_CASE("exact cover fails for a non-subplane hole set") {
    // {1,...,6,8} has the right size but is not closed under the line structure
    const auto missing = exact_cover_partial_spread(5, {1, 2, 3, 4, 5, 6, 8});
    CHECK_FALSE(missing.has_value());
}

TEST_CASE("exact cover respects the dimension limit") {
    CHECK_THROWS_AS(exact_cover_partial_spread(9, {1, 2, 3, 4, 5, 6, 7}),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_cover_partial_spread(4, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(exact_cover_partial_spread(5, {1, 2, 64}), std::invalid_argument);
}
