#include "dotseg/segmenter.hpp"

#include "dotseg/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace dotseg {

namespace {

double length_cost(std::size_t length, const SegParams& p) {
    const double dev = static_cast<double>(length) - p.mu();
    return p.gamma() * (dev * dev) / (2.0 * p.sigma() * p.sigma());
}

double length_power(std::size_t length, const SegParams& p) {
    return std::pow(static_cast<double>(length), p.r());
}

double combine(double len_cost, std::int64_t ones, double len_pow, const SegParams& p) {
    return len_cost - (1.0 - p.gamma()) * (static_cast<double>(ones) / len_pow);
}

SegResult make_result(Segmentation seg, double cost, const SimilarityMatrix& m, const SegParams& p) {
    std::vector<double> per_segment;
    per_segment.reserve(seg.segment_count());
    const auto& b = seg.boundaries();
    for (std::size_t k = 1; k < b.size(); ++k) {
        per_segment.push_back(segment_term(b[k] - b[k - 1], m.submatrix_ones(b[k - 1], b[k]), p));
    }
    return SegResult{std::move(seg), cost, std::move(per_segment)};
}

} // namespace

SegParams::SegParams(double mu, double sigma, double r, double gamma)
    : mu_(mu), sigma_(sigma), r_(r), gamma_(gamma) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || !std::isfinite(r) || !std::isfinite(gamma)) {
        throw Error("segmentation parameters must be finite");
    }
    if (mu < 0.0) {
        throw Error("mu must be >= 0");
    }
    if (sigma < 0.0) {
        throw Error("sigma must be >= 0");
    }
    if (r <= 0.0) {
        throw Error("r must be > 0");
    }
    if (gamma < 0.0 || gamma > 1.0) {
        throw Error("gamma must lie in [0, 1]");
    }
    if (sigma_ == 0.0) {
        sigma_ = kMinSigma;
    }
}

double segment_term(std::size_t length, std::int64_t ones, const SegParams& p) {
    return combine(length_cost(length, p), ones, length_power(length, p), p);
}

double segment_cost(const Segmentation& seg, const SimilarityMatrix& m, const SegParams& p) {
    if (seg.total_sentences() != m.size()) {
        throw Error("segmentation covers " + std::to_string(seg.total_sentences()) +
                    " sentences but the similarity matrix has " + std::to_string(m.size()));
    }
    double cost = 0.0;
    const auto& b = seg.boundaries();
    for (std::size_t k = 1; k < b.size(); ++k) {
        cost += segment_term(b[k] - b[k - 1], m.submatrix_ones(b[k - 1], b[k]), p);
    }
    return cost;
}

SegResult segment(const SimilarityMatrix& m, const SegParams& p) {
    const std::size_t n = m.size();

    // Both cost components depend on the segment only through its length.
    // Values read together in the inner loop are stored together.
    struct LengthTerms {
        double cost;
        double power;
    };
    std::vector<LengthTerms> by_length(n + 1, LengthTerms{0.0, 1.0});
    for (std::size_t len = 1; len <= n; ++len) {
        by_length[len] = {length_cost(len, p), length_power(len, p)};
    }
    struct State {
        double best;
        std::int64_t diag;
    };
    std::vector<State> state(n + 1);
    for (std::size_t s = 0; s <= n; ++s) {
        state[s] = {0.0, m.prefix(s, s)};
    }

    std::vector<std::size_t> pred(n + 1, 0);
    for (std::size_t t = 1; t <= n; ++t) {
        double c_t = std::numeric_limits<double>::infinity();
        std::size_t z_t = 0;
        // D is symmetric, so prefix(s, t) == prefix(t, s) and the block sum
        // only needs row t of the table.
        const std::int64_t p_tt = state[t].diag;
        for (std::size_t s = 0; s < t; ++s) {
            const std::int64_t ones = p_tt - 2 * m.prefix(t, s) + state[s].diag;
            const auto& terms = by_length[t - s];
            const double candidate = state[s].best + combine(terms.cost, ones, terms.power, p);
            if (candidate <= c_t) {
                c_t = candidate;
                z_t = s;
            }
        }
        state[t].best = c_t;
        pred[t] = z_t;
    }

    std::vector<std::size_t> boundaries;
    for (std::size_t t = n; t > 0; t = pred[t]) {
        boundaries.push_back(t);
    }
    boundaries.push_back(0);
    std::reverse(boundaries.begin(), boundaries.end());
    return make_result(Segmentation(std::move(boundaries)), state[n].best, m, p);
}

SegResult brute_force_segment(const SimilarityMatrix& m, const SegParams& p) {
    const std::size_t n = m.size();
    if (n > kMaxOracleSentences) {
        throw Error("instance too large for oracle");
    }
    // Bit i of the mask places a boundary after sentence i + 1.
    const std::uint32_t mask_count = 1u << (n - 1);
    double best_cost = std::numeric_limits<double>::infinity();
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
        double cost = 0.0;
        std::size_t start = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i == n || ((mask >> (i - 1)) & 1u)) {
                cost += segment_term(i - start, m.submatrix_ones(start, i), p);
                start = i;
            }
        }
        if (cost < best_cost) {
            best_cost = cost;
            best_mask = mask;
        }
    }
    std::vector<std::size_t> boundaries{0};
    for (std::size_t i = 1; i < n; ++i) {
        if ((best_mask >> (i - 1)) & 1u) {
            boundaries.push_back(i);
        }
    }
    boundaries.push_back(n);
    return make_result(Segmentation(std::move(boundaries)), best_cost, m, p);
}

} // namespace dotseg
