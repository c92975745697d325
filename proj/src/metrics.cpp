#include "dotseg/metrics.hpp"

#include "dotseg/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace dotseg {

namespace {

void require_same_length(const Segmentation& ref, const Segmentation& hyp) {
    if (ref.total_sentences() != hyp.total_sentences()) {
        throw Error("reference covers " + std::to_string(ref.total_sentences()) +
                    " sentences but hypothesis covers " + std::to_string(hyp.total_sentences()));
    }
}

std::size_t shared_boundaries(const Segmentation& ref, const Segmentation& hyp) {
    auto a = ref.internal();
    auto b = hyp.internal();
    std::size_t count = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

// Segment index of every sentence, 1-based sentence numbering (slot 0 unused).
std::vector<std::size_t> segment_ids(const Segmentation& seg) {
    std::vector<std::size_t> ids(seg.total_sentences() + 1, 0);
    const auto& b = seg.boundaries();
    for (std::size_t k = 1; k < b.size(); ++k) {
        for (std::size_t i = b[k - 1] + 1; i <= b[k]; ++i) {
            ids[i] = k - 1;
        }
    }
    return ids;
}

} // namespace

double precision(const Segmentation& ref, const Segmentation& hyp) {
    require_same_length(ref, hyp);
    if (hyp.internal().empty()) {
        return ref.internal().empty() ? 1.0 : 0.0;
    }
    return static_cast<double>(shared_boundaries(ref, hyp)) / static_cast<double>(hyp.internal().size());
}

double recall(const Segmentation& ref, const Segmentation& hyp) {
    require_same_length(ref, hyp);
    if (ref.internal().empty()) {
        return 1.0;
    }
    return static_cast<double>(shared_boundaries(ref, hyp)) / static_cast<double>(ref.internal().size());
}

std::size_t default_pk_window(const Segmentation& ref) {
    const double half_mean = static_cast<double>(ref.total_sentences()) /
                             (2.0 * static_cast<double>(ref.segment_count()));
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(half_mean)));
}

double pk(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k) {
    require_same_length(ref, hyp);
    const std::size_t n = ref.total_sentences();
    if (n < 2) {
        throw Error("Pk needs at least two sentences");
    }
    const std::size_t window = k.value_or(default_pk_window(ref));
    if (window == 0) {
        throw Error("Pk window must be >= 1");
    }
    if (window >= n) {
        throw Error("window too large");
    }
    const auto ref_ids = segment_ids(ref);
    const auto hyp_ids = segment_ids(hyp);
    std::size_t disagreements = 0;
    for (std::size_t i = 1; i + window <= n; ++i) {
        const bool same_ref = ref_ids[i] == ref_ids[i + window];
        const bool same_hyp = hyp_ids[i] == hyp_ids[i + window];
        if (same_ref != same_hyp) {
            ++disagreements;
        }
    }
    return static_cast<double>(disagreements) / static_cast<double>(n - window);
}

EvalReport evaluate(const Segmentation& ref, const Segmentation& hyp, std::optional<std::size_t> k) {
    const std::size_t window = k.value_or(default_pk_window(ref));
    return EvalReport{precision(ref, hyp), recall(ref, hyp), pk(ref, hyp, window), window};
}

} // namespace dotseg
