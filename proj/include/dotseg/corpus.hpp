#ifndef DOTSEG_CORPUS_HPP
#define DOTSEG_CORPUS_HPP

#include "dotseg/metrics.hpp"
#include "dotseg/segmenter.hpp"
#include "dotseg/text_model.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dotseg {

// Every generated benchmark text is a concatenation of this many segments.
constexpr std::size_t kSegmentsPerText = 10;

struct SourceDocument {
    Document document;
    // Cumulative sentence count at the end of each paragraph; the last entry
    // equals document.size(). Empty when paragraph structure is unknown.
    std::vector<std::size_t> paragraph_ends;
};

struct SourceGroup {
    std::string name;
    std::vector<SourceDocument> documents;
};

struct SourceCollection {
    std::vector<SourceGroup> groups;
};

// Blank lines separate paragraphs; every other line is one sentence.
SourceDocument load_source_document(std::string_view raw_text, const NormalizationConfig& config,
                                    std::string source_id = {});

// One subdirectory per group and one text file per document, both taken in
// lexicographic order of their names.
SourceCollection load_source_collection(const std::filesystem::path& root, const NormalizationConfig& config);

struct Provenance {
    std::string group;
    std::size_t source;
    // Half-open sentence range [begin, end) of the source document.
    std::size_t begin;
    std::size_t end;

    bool operator==(const Provenance&) const = default;
};

struct GeneratedText {
    Document document;
    Segmentation reference;
    std::vector<Provenance> provenance;

    bool operator==(const GeneratedText&) const = default;
};

// Each segment: a random group, a random document of it, a random length in
// [a, b] capped at the document length, taken from the document start.
GeneratedText generate_suite1_text(const SourceCollection& sources, std::size_t a, std::size_t b,
                                   std::uint64_t seed);

// Each segment: a random group, a random document with Z paragraphs, a
// random paragraph count l in [1, Z] and start m in [1, Z - l + 1]; the
// segment is paragraphs m..m+l-1.
GeneratedText generate_suite2_text(const SourceCollection& sources, std::uint64_t seed);

struct LengthParams {
    double mu;
    double sigma;
};

// Mean and (n-1) standard deviation of the pooled reference segment lengths,
// sigma clamped to SegParams::kMinSigma.
LengthParams estimate_length_params(std::span<const GeneratedText> training);

struct GridRow {
    double gamma;
    double r;
    double mean_pk;
    double mean_precision;
    double mean_recall;
};

struct GridResult {
    std::vector<GridRow> rows;
    std::size_t best_index = 0;

    const GridRow& best() const { return rows[best_index]; }
};

// 0.00, 0.01, ..., 0.09, 0.1, 0.2, ..., 1.0
std::vector<double> grid_gammas();
// 0.33, 0.5, 0.66, 1
std::vector<double> grid_rs();

// Segments every training text for each of the 80 (gamma, r) pairs. Rows are
// ordered by gamma then r; best is the minimum mean Pk, first row on ties
// (smaller gamma, then smaller r).
GridResult run_grid_validation(std::span<const GeneratedText> training, double mu, double sigma);

enum class Suite { one = 1, two = 2 };

struct ExperimentConfig {
    Suite suite = Suite::one;
    // Sentence range (a, b); required for suite one, ignored for suite two.
    std::optional<std::pair<std::size_t, std::size_t>> subset;
    std::size_t n_texts = 50;
    std::size_t repetitions = 5;
    std::uint64_t seed = 0;
};

struct RepetitionResult {
    double mu;
    double sigma;
    double gamma;
    double r;
    double precision;
    double recall;
    double pk;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<RepetitionResult> repetitions;
    double precision = 0.0;
    double recall = 0.0;
    double pk = 0.0;
    // Validation grid averaged over repetitions.
    std::vector<GridRow> grid;
};

// Per repetition: generate n_texts texts, split them at random into equal
// train and test halves, estimate (mu, sigma) and validate (gamma, r) on the
// training half, then report mean Precision/Recall/Pk on the test half.
ExperimentReport run_experiment(const SourceCollection& sources, const ExperimentConfig& config);

std::string report_to_json(const ExperimentReport& report);
std::string grid_to_csv(std::span<const GridRow> rows);

// Generated benchmark sets as JSON: {"texts": [{source_id, sentences,
// reference, provenance}, ...]} plus free-form header fields.
std::string generated_texts_to_json(std::span<const GeneratedText> texts, Suite suite,
                                    std::optional<std::pair<std::size_t, std::size_t>> subset,
                                    std::uint64_t seed);
std::vector<GeneratedText> generated_texts_from_json(std::string_view json);

} // namespace dotseg

#endif
