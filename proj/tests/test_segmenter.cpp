#include "doctest.h"

#include "oracles.hpp"

#include "dotseg/error.hpp"
#include "dotseg/segmenter.hpp"

#include <cmath>
#include <limits>

using namespace dotseg;
using dotseg::test::Bits;

namespace {

using B = std::vector<std::size_t>;

SimilarityMatrix blocks(std::vector<std::size_t> sizes) {
    std::size_t n = 0;
    for (auto s : sizes) {
        n += s;
    }
    return SimilarityMatrix::from_bits(n, test::block_diagonal(sizes));
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(SegParams(-1, 1, 1, 0.5), Error);
    CHECK_THROWS_AS(SegParams(3, -1, 1, 0.5), Error);
    CHECK_THROWS_AS(SegParams(3, 1, 0, 0.5), Error);
    CHECK_THROWS_AS(SegParams(3, 1, 1, 1.5), Error);
    CHECK_THROWS_AS(SegParams(3, 1, 1, -0.1), Error);
    CHECK_THROWS_AS(SegParams(std::numeric_limits<double>::quiet_NaN(), 1, 1, 0.5), Error);
    CHECK_THROWS_AS(SegParams(3, std::numeric_limits<double>::infinity(), 1, 0.5), Error);
    CHECK(SegParams(3, 0, 1, 0.5).sigma() == SegParams::kMinSigma);
}

TEST_CASE("cost of a given segmentation") {
    const auto ones = SimilarityMatrix::from_bits(2, Bits(4, 1));
    CHECK(segment_cost(Segmentation({0, 2}), ones, SegParams(2, 1, 1, 0.5)) == doctest::Approx(-1.0));

    const auto id = SimilarityMatrix::from_bits(2, Bits{1, 0, 0, 1});
    CHECK(segment_cost(Segmentation({0, 1, 2}), id, SegParams(1, 1, 2, 0)) == doctest::Approx(-2.0));

    SplitMix64 rng(11);
    const auto any = SimilarityMatrix::from_bits(6, test::random_symmetric(6, 0.5, 0.5, rng));
    CHECK(segment_cost(Segmentation({0, 3, 6}), any, SegParams(3, 1, 1, 1)) == 0.0);

    CHECK_THROWS_AS(segment_cost(Segmentation({0, 3}), ones, SegParams(2, 1, 1, 0.5)), Error);
}

TEST_CASE("segment recovers two disjoint topics") {
    const auto m = blocks({3, 3});
    const SegParams p(3, 1, 1, 0.5);
    CHECK(segment(m, p).segmentation.boundaries() == B{0, 3, 6});
    CHECK(brute_force_segment(m, p).segmentation.boundaries() == B{0, 3, 6});

    // Exhaustive check of the example with the test-side cost function.
    double best = std::numeric_limits<double>::infinity();
    test::Boundaries arg;
    for (const auto& b : test::all_segmentations(6)) {
        const double c = test::direct_cost(b, m.bits(), 6, 3, 1, 1, 0.5);
        if (c < best) {
            best = c;
            arg = b;
        }
    }
    CHECK(arg == B{0, 3, 6});
    CHECK(segment(m, p).cost == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("single sentence") {
    const auto m = SimilarityMatrix::from_bits(1, Bits{1});
    const SegParams p(3, 1, 1, 0.5);
    CHECK(segment(m, p).segmentation.boundaries() == B{0, 1});
    CHECK(brute_force_segment(m, p).segmentation.boundaries() == B{0, 1});
    CHECK(segment(m, p).per_segment_costs.size() == 1);
}

TEST_CASE("gamma = 1 uses only the length prior") {
    SplitMix64 rng(5);
    for (int i = 0; i < 5; ++i) {
        const auto m = SimilarityMatrix::from_bits(6, test::random_symmetric(6, 0.5, 0.8, rng));
        CHECK(segment(m, SegParams(2, 0.5, 1, 1)).segmentation.boundaries() == B{0, 2, 4, 6});
    }
}

TEST_CASE("oracle size limit") {
    const auto m = SimilarityMatrix::from_bits(21, test::block_diagonal({21}));
    CHECK_THROWS_WITH_AS(brute_force_segment(m, SegParams(3, 1, 1, 0.5)), "instance too large for oracle", Error);
    const auto ok = SimilarityMatrix::from_bits(20, test::block_diagonal({10, 10}));
    CHECK(brute_force_segment(ok, SegParams(10, 2, 0.5, 0.3)).segmentation == segment(ok, SegParams(10, 2, 0.5, 0.3)).segmentation);
}

TEST_CASE("segment_term matches the closed form") {
    const SegParams p(4, 1.5, 0.66, 0.3);
    const double expected = 0.3 * (7.0 - 4.0) * (7.0 - 4.0) / (2 * 1.5 * 1.5) - 0.7 * 20.0 / std::pow(7.0, 0.66);
    CHECK(segment_term(7, 20, p) == doctest::Approx(expected).epsilon(1e-14));
}
