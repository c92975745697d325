#ifndef DOTSEG_METRICS_HPP
#define DOTSEG_METRICS_HPP

#include "dotseg/text_model.hpp"

#include <cstddef>
#include <optional>

namespace dotseg {

struct EvalReport {
    double precision;
    double recall;
    double pk;
    std::size_t window_k;
};

// Boundary precision over internal boundaries (0 and T excluded).
// Empty hypothesis: 1.0 if the reference is also empty, else 0.0.
double precision(const Segmentation& ref, const Segmentation& hyp);

// Boundary recall over internal boundaries; 1.0 when the reference has none.
double recall(const Segmentation& ref, const Segmentation& hyp);

// Half the mean reference segment length, rounded, at least 1.
std::size_t default_pk_window(const Segmentation& ref);

// Beeferman's Pk: the fraction of probes (i, i + k), i = 1..T-k, on which
// reference and hypothesis disagree about "same segment". Requires T >= 2
// and k < T.
double pk(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k = std::nullopt);

EvalReport evaluate(const Segmentation& ref, const Segmentation& hyp,
                    std::optional<std::size_t> k = std::nullopt);

} // namespace dotseg

#endif
