#include "dotseg/corpus.hpp"

#include "dotseg/error.hpp"
#include "dotseg/rng.hpp"
#include "dotseg/similarity.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace dotseg {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void require_nonempty(const SourceCollection& sources) {
    if (sources.groups.empty()) {
        throw Error("empty source collection");
    }
    for (const auto& group : sources.groups) {
        if (group.documents.empty()) {
            throw Error("source group '" + group.name + "' has no documents");
        }
    }
}

std::string seed_id(const char* prefix, std::uint64_t seed) {
    std::ostringstream id;
    id << prefix << '-' << std::hex << std::setw(16) << std::setfill('0') << seed;
    return id.str();
}

struct PickedSource {
    const SourceGroup* group;
    std::size_t index;
};

PickedSource pick_source(const SourceCollection& sources, SplitMix64& rng) {
    const auto g = rng.uniform(0, sources.groups.size() - 1);
    const auto& group = sources.groups[g];
    const auto d = rng.uniform(0, group.documents.size() - 1);
    return {&group, static_cast<std::size_t>(d)};
}

struct PendingSegment {
    const Document* source;
    Provenance provenance;
};

GeneratedText assemble(const std::vector<PendingSegment>& segments, std::string id) {
    std::vector<Sentence> sentences;
    std::vector<std::size_t> lengths;
    std::vector<Provenance> provenance;
    for (const auto& seg : segments) {
        for (std::size_t i = seg.provenance.begin; i < seg.provenance.end; ++i) {
            sentences.push_back(seg.source->sentence(i));
        }
        lengths.push_back(seg.provenance.end - seg.provenance.begin);
        provenance.push_back(seg.provenance);
    }
    return GeneratedText{Document(std::move(sentences), std::move(id)), segmentation_from_lengths(lengths),
                         std::move(provenance)};
}

double mean(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

struct TextScores {
    double pk;
    double precision;
    double recall;
};

TextScores score_texts(std::span<const GeneratedText> texts, std::span<const SimilarityMatrix> matrices,
                       const SegParams& params) {
    double pk_sum = 0.0;
    double precision_sum = 0.0;
    double recall_sum = 0.0;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        const auto result = segment(matrices[i], params);
        const auto report = evaluate(texts[i].reference, result.segmentation);
        pk_sum += report.pk;
        precision_sum += report.precision;
        recall_sum += report.recall;
    }
    const auto n = static_cast<double>(texts.size());
    return {pk_sum / n, precision_sum / n, recall_sum / n};
}

std::vector<SimilarityMatrix> matrices_for(std::span<const GeneratedText> texts) {
    std::vector<SimilarityMatrix> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        out.push_back(build_similarity_matrix(text.document));
    }
    return out;
}

} // namespace

SourceDocument load_source_document(std::string_view raw_text, const NormalizationConfig& config,
                                    std::string source_id) {
    std::vector<Sentence> sentences;
    std::vector<std::size_t> paragraph_ends;
    bool in_paragraph = false;
    for (auto line : split_lines(raw_text)) {
        if (is_blank_line(line)) {
            if (in_paragraph) {
                paragraph_ends.push_back(sentences.size());
            }
            in_paragraph = false;
            continue;
        }
        sentences.push_back(normalize_sentence(line, config));
        in_paragraph = true;
    }
    if (in_paragraph) {
        paragraph_ends.push_back(sentences.size());
    }
    if (sentences.empty()) {
        throw Error("empty document" + (source_id.empty() ? std::string() : ": " + source_id));
    }
    return SourceDocument{Document(std::move(sentences), std::move(source_id)), std::move(paragraph_ends)};
}

SourceCollection load_source_collection(const fs::path& root, const NormalizationConfig& config) {
    if (!fs::is_directory(root)) {
        throw Error("not a directory: " + root.string());
    }
    std::vector<fs::path> group_dirs;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) {
            group_dirs.push_back(entry.path());
        }
    }
    std::sort(group_dirs.begin(), group_dirs.end());

    SourceCollection sources;
    for (const auto& dir : group_dirs) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file()) {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        SourceGroup group{dir.filename().string(), {}};
        for (const auto& file : files) {
            const std::string id = group.name + "/" + file.filename().string();
            group.documents.push_back(load_source_document(read_file(file), config, id));
        }
        if (!group.documents.empty()) {
            sources.groups.push_back(std::move(group));
        }
    }
    require_nonempty(sources);
    return sources;
}

GeneratedText generate_suite1_text(const SourceCollection& sources, std::size_t a, std::size_t b,
                                   std::uint64_t seed) {
    require_nonempty(sources);
    if (a < 1 || a > b) {
        throw Error("segment length range must satisfy 1 <= a <= b");
    }
    for (const auto& group : sources.groups) {
        const bool usable = std::any_of(group.documents.begin(), group.documents.end(),
                                        [a](const SourceDocument& d) { return d.document.size() >= a; });
        if (!usable) {
            throw Error("source group '" + group.name + "' has no document with at least " +
                        std::to_string(a) + " sentences");
        }
    }
    SplitMix64 rng(seed);
    std::vector<PendingSegment> segments;
    for (std::size_t j = 0; j < kSegmentsPerText; ++j) {
        const auto picked = pick_source(sources, rng);
        const auto& doc = picked.group->documents[picked.index].document;
        const auto drawn = static_cast<std::size_t>(rng.uniform(a, b));
        segments.push_back({&doc, {picked.group->name, picked.index, 0, std::min(drawn, doc.size())}});
    }
    return assemble(segments, seed_id("suite1", seed));
}

GeneratedText generate_suite2_text(const SourceCollection& sources, std::uint64_t seed) {
    require_nonempty(sources);
    for (const auto& group : sources.groups) {
        for (const auto& doc : group.documents) {
            if (doc.paragraph_ends.empty() || doc.paragraph_ends.back() != doc.document.size()) {
                throw Error("document without paragraph annotations in group '" + group.name + "'");
            }
        }
    }
    SplitMix64 rng(seed);
    std::vector<PendingSegment> segments;
    for (std::size_t j = 0; j < kSegmentsPerText; ++j) {
        const auto picked = pick_source(sources, rng);
        const auto& source = picked.group->documents[picked.index];
        const auto& ends = source.paragraph_ends;
        const std::size_t z = ends.size();
        const auto l = static_cast<std::size_t>(rng.uniform(1, z));
        const auto m = static_cast<std::size_t>(rng.uniform(1, z - l + 1));
        // paragraphs m..m+l-1, 1-based
        const std::size_t begin = m == 1 ? 0 : ends[m - 2];
        const std::size_t end = ends[m + l - 2];
        segments.push_back({&source.document, {picked.group->name, picked.index, begin, end}});
    }
    return assemble(segments, seed_id("suite2", seed));
}

LengthParams estimate_length_params(std::span<const GeneratedText> training) {
    std::vector<double> lengths;
    for (const auto& text : training) {
        for (std::size_t k = 0; k < text.reference.segment_count(); ++k) {
            lengths.push_back(static_cast<double>(text.reference.segment_length(k)));
        }
    }
    if (lengths.empty()) {
        throw Error("no training segments");
    }
    const double mu = mean(lengths);
    double sigma = 0.0;
    if (lengths.size() > 1) {
        double ss = 0.0;
        for (double len : lengths) {
            ss += (len - mu) * (len - mu);
        }
        sigma = std::sqrt(ss / static_cast<double>(lengths.size() - 1));
    }
    return {mu, std::max(sigma, SegParams::kMinSigma)};
}

std::vector<double> grid_gammas() {
    std::vector<double> gammas;
    for (int i = 0; i <= 9; ++i) {
        gammas.push_back(i / 100.0);
    }
    for (int i = 1; i <= 10; ++i) {
        gammas.push_back(i / 10.0);
    }
    return gammas;
}

std::vector<double> grid_rs() { return {0.33, 0.5, 0.66, 1.0}; }

GridResult run_grid_validation(std::span<const GeneratedText> training, double mu, double sigma) {
    if (training.empty()) {
        throw Error("grid validation needs at least one training text");
    }
    const auto matrices = matrices_for(training);
    GridResult result;
    for (double gamma : grid_gammas()) {
        for (double r : grid_rs()) {
            const auto scores = score_texts(training, matrices, SegParams(mu, sigma, r, gamma));
            result.rows.push_back({gamma, r, scores.pk, scores.precision, scores.recall});
            if (scores.pk < result.rows[result.best_index].mean_pk) {
                result.best_index = result.rows.size() - 1;
            }
        }
    }
    return result;
}

ExperimentReport run_experiment(const SourceCollection& sources, const ExperimentConfig& config) {
    if (config.n_texts < 2 || config.n_texts % 2 != 0) {
        throw Error("number of texts must be even and at least 2");
    }
    if (config.repetitions < 1) {
        throw Error("at least one repetition is required");
    }
    if (config.suite == Suite::one && !config.subset) {
        throw Error("suite one needs a sentence range (a, b)");
    }

    ExperimentReport report;
    report.config = config;
    SplitMix64 master(config.seed);
    std::vector<GridRow> grid_sum;

    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        std::vector<GeneratedText> texts;
        texts.reserve(config.n_texts);
        for (std::size_t i = 0; i < config.n_texts; ++i) {
            const std::uint64_t text_seed = master.next();
            if (config.suite == Suite::one) {
                texts.push_back(generate_suite1_text(sources, config.subset->first, config.subset->second, text_seed));
            } else {
                texts.push_back(generate_suite2_text(sources, text_seed));
            }
        }
        std::vector<std::size_t> order(config.n_texts);
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        master.shuffle(order);

        std::vector<GeneratedText> train;
        std::vector<GeneratedText> test;
        for (std::size_t i = 0; i < order.size(); ++i) {
            (i < order.size() / 2 ? train : test).push_back(texts[order[i]]);
        }

        const auto lp = estimate_length_params(train);
        const auto grid = run_grid_validation(train, lp.mu, lp.sigma);
        const auto& best = grid.best();
        const auto test_matrices = matrices_for(test);
        const auto scores = score_texts(test, test_matrices, SegParams(lp.mu, lp.sigma, best.r, best.gamma));
        report.repetitions.push_back(
            {lp.mu, lp.sigma, best.gamma, best.r, scores.precision, scores.recall, scores.pk});

        if (grid_sum.empty()) {
            grid_sum = grid.rows;
        } else {
            for (std::size_t i = 0; i < grid_sum.size(); ++i) {
                grid_sum[i].mean_pk += grid.rows[i].mean_pk;
                grid_sum[i].mean_precision += grid.rows[i].mean_precision;
                grid_sum[i].mean_recall += grid.rows[i].mean_recall;
            }
        }
    }

    const auto reps = static_cast<double>(report.repetitions.size());
    for (const auto& rep : report.repetitions) {
        report.precision += rep.precision;
        report.recall += rep.recall;
        report.pk += rep.pk;
    }
    report.precision /= reps;
    report.recall /= reps;
    report.pk /= reps;
    for (auto& row : grid_sum) {
        row.mean_pk /= reps;
        row.mean_precision /= reps;
        row.mean_recall /= reps;
    }
    report.grid = std::move(grid_sum);
    return report;
}

std::string report_to_json(const ExperimentReport& report) {
    json j;
    j["suite"] = static_cast<int>(report.config.suite);
    if (report.config.subset) {
        j["subset"] = {report.config.subset->first, report.config.subset->second};
    } else {
        j["subset"] = nullptr;
    }
    j["seed"] = report.config.seed;
    j["texts"] = report.config.n_texts;
    json reps = json::array();
    for (const auto& rep : report.repetitions) {
        reps.push_back({{"mu", rep.mu},
                        {"sigma", rep.sigma},
                        {"gamma", rep.gamma},
                        {"r", rep.r},
                        {"precision", rep.precision},
                        {"recall", rep.recall},
                        {"pk", rep.pk}});
    }
    j["repetitions"] = std::move(reps);
    j["averages"] = {{"precision", report.precision}, {"recall", report.recall}, {"pk", report.pk}};
    return j.dump(2) + "\n";
}

std::string grid_to_csv(std::span<const GridRow> rows) {
    std::ostringstream out;
    out << "gamma,r,mean_pk,mean_precision,mean_recall\n";
    out << std::setprecision(17);
    for (const auto& row : rows) {
        out << row.gamma << ',' << row.r << ',' << row.mean_pk << ',' << row.mean_precision << ','
            << row.mean_recall << '\n';
    }
    return out.str();
}

std::string generated_texts_to_json(std::span<const GeneratedText> texts, Suite suite,
                                    std::optional<std::pair<std::size_t, std::size_t>> subset,
                                    std::uint64_t seed) {
    json j;
    j["suite"] = static_cast<int>(suite);
    if (subset) {
        j["subset"] = {subset->first, subset->second};
    } else {
        j["subset"] = nullptr;
    }
    j["seed"] = seed;
    json arr = json::array();
    for (const auto& text : texts) {
        json provenance = json::array();
        for (const auto& p : text.provenance) {
            provenance.push_back({{"group", p.group}, {"source", p.source}, {"begin", p.begin}, {"end", p.end}});
        }
        arr.push_back({{"source_id", text.document.source_id()},
                       {"sentences", text.document.sentences()},
                       {"reference", text.reference.boundaries()},
                       {"provenance", std::move(provenance)}});
    }
    j["texts"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::vector<GeneratedText> generated_texts_from_json(std::string_view text) {
    std::vector<GeneratedText> out;
    try {
        const json j = json::parse(text);
        for (const auto& item : j.at("texts")) {
            Document doc(item.at("sentences").get<std::vector<Sentence>>(),
                         item.value("source_id", std::string()));
            Segmentation reference(item.at("reference").get<std::vector<std::size_t>>());
            if (reference.total_sentences() != doc.size()) {
                throw Error("reference does not cover the text");
            }
            std::vector<Provenance> provenance;
            if (item.contains("provenance")) {
                for (const auto& p : item.at("provenance")) {
                    provenance.push_back({p.at("group").get<std::string>(), p.at("source").get<std::size_t>(),
                                          p.at("begin").get<std::size_t>(), p.at("end").get<std::size_t>()});
                }
            }
            out.push_back({std::move(doc), std::move(reference), std::move(provenance)});
        }
    } catch (const json::exception& e) {
        throw Error(std::string("malformed text set: ") + e.what());
    }
    if (out.empty()) {
        throw Error("malformed text set: no texts");
    }
    return out;
}

} // namespace dotseg
