#ifndef DOTSEG_SEGMENTER_HPP
#define DOTSEG_SEGMENTER_HPP

#include "dotseg/similarity.hpp"
#include "dotseg/text_model.hpp"

#include <cstdint>
#include <vector>

namespace dotseg {

// Parameters of the segmentation cost
//
//   J(t) = sum_k  gamma * (len_k - mu)^2 / (2 sigma^2)
//               - (1 - gamma) * ones_k / len_k^r
//
// where len_k = t_k - t_{k-1} is measured in sentences and ones_k counts the
// ones of D inside segment k (diagonal included).
class SegParams {
public:
    // Smallest standard deviation accepted; sigma == 0 is raised to this.
    static constexpr double kMinSigma = 0.5;

    // Throws dotseg::Error unless mu >= 0, sigma >= 0, r > 0, 0 <= gamma <= 1
    // and all values are finite. sigma == 0 becomes kMinSigma.
    SegParams(double mu, double sigma, double r, double gamma);

    double mu() const { return mu_; }
    double sigma() const { return sigma_; }
    double r() const { return r_; }
    double gamma() const { return gamma_; }

private:
    double mu_;
    double sigma_;
    double r_;
    double gamma_;
};

struct SegResult {
    Segmentation segmentation;
    double cost;
    std::vector<double> per_segment_costs;
};

// Cost of a single segment of `length` sentences holding `ones` ones. Every
// cost in this library goes through this function so that the DP and the
// direct evaluation agree bit for bit.
double segment_term(std::size_t length, std::int64_t ones, const SegParams& p);

// Evaluates J for a given segmentation. Throws dotseg::Error when
// seg.total_sentences() != m.size().
double segment_cost(const Segmentation& seg, const SimilarityMatrix& m, const SegParams& p);

// Global minimum of J over every segmentation of the m.size() sentences, by
// dynamic programming in O(T^2) time:
//
//   C_0 = 0,  C_t = min_{0 <= s < t} C_s + segment_term(t - s, ones(s, t))
//
// Ties go to the largest s (the relaxation uses <=, s ascending).
SegResult segment(const SimilarityMatrix& m, const SegParams& p);

// Exhaustive search over all 2^(T-1) segmentations. T <= 20, otherwise
// throws dotseg::Error("instance too large for oracle").
SegResult brute_force_segment(const SimilarityMatrix& m, const SegParams& p);

constexpr std::size_t kMaxOracleSentences = 20;

} // namespace dotseg

#endif
