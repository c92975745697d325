#include "dotseg/cli.hpp"

#include "dotseg/corpus.hpp"
#include "dotseg/error.hpp"
#include "dotseg/metrics.hpp"
#include "dotseg/rng.hpp"
#include "dotseg/segmenter.hpp"
#include "dotseg/similarity.hpp"
#include "dotseg/text_model.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace dotseg::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
    if (path.empty()) {
        out << data;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot write " + path);
    }
    file << data;
    if (!file) {
        throw Error("cannot write " + path);
    }
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw Error("--range expects a,b");
    }
    auto parse = [&](std::string_view part) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw Error("--range expects a,b with positive integers");
        }
        return value;
    };
    std::string_view view(text);
    auto range = std::make_pair(parse(view.substr(0, comma)), parse(view.substr(comma + 1)));
    if (range.first < 1 || range.first > range.second) {
        throw Error("--range needs 1 <= a <= b");
    }
    return range;
}

struct TextOptions {
    std::string stoplist;
    std::string lemma_map;
    bool drop_unmapped = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--stoplist", stoplist, "Stoplist file, one word per line")->check(CLI::ExistingFile);
        cmd->add_option("--lemma-map", lemma_map, "Lemma map file, surface<TAB>lemma per line")
            ->check(CLI::ExistingFile);
        cmd->add_flag("--drop-unmapped", drop_unmapped, "Drop words missing from the lemma map");
    }

    NormalizationConfig config() const {
        NormalizationConfig cfg;
        if (!stoplist.empty()) {
            cfg.stoplist = parse_stoplist(read_file(stoplist));
        }
        if (!lemma_map.empty()) {
            cfg.lemma_map = parse_lemma_map(read_file(lemma_map));
        }
        cfg.keep_unmapped = !drop_unmapped;
        return cfg;
    }
};

json seg_result_json(const SegResult& result, const SegParams& p, bool oracle) {
    const auto internal = result.segmentation.internal();
    return {{"boundaries", result.segmentation.boundaries()},
            {"internal", std::vector<std::size_t>(internal.begin(), internal.end())},
            {"segments", result.segmentation.segment_count()},
            {"cost", result.cost},
            {"per_segment_costs", result.per_segment_costs},
            {"params", {{"mu", p.mu()}, {"sigma", p.sigma()}, {"r", p.r()}, {"gamma", p.gamma()}}},
            {"method", oracle ? "exhaustive" : "dynamic-programming"}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear text segmentation by dynamic programming over a sentence-similarity dotplot"};
    app.name("dotseg");
    app.require_subcommand(1);

    std::uint64_t seed = 0;

    // segment
    auto* seg_cmd = app.add_subcommand("segment", "Find the minimum-cost segmentation of a text");
    std::string seg_input;
    std::string seg_out;
    double mu = 0.0;
    double sigma = 0.0;
    double gamma = 0.0;
    double r = 0.0;
    bool seg_json = false;
    bool seg_oracle = false;
    TextOptions seg_text;
    seg_cmd->add_option("input", seg_input, "Text file, one sentence per line")->required()->check(CLI::ExistingFile);
    seg_cmd->add_option("--mu", mu, "Mean segment length in sentences")->required();
    seg_cmd->add_option("--sigma", sigma, "Standard deviation of segment length (0 is raised to 0.5)")->required();
    seg_cmd->add_option("--gamma", gamma, "Length vs. similarity weight in [0,1]; 0.1 is a reasonable start")
        ->required();
    seg_cmd->add_option("--r", r, "Density exponent > 0; 0.5 is a reasonable start")->required();
    seg_cmd->add_flag("--json", seg_json, "Print the full result as JSON");
    seg_cmd->add_flag("--oracle", seg_oracle, "Use exhaustive search (at most 20 sentences)");
    seg_cmd->add_option("--out", seg_out, "Write output to this file instead of stdout");
    seg_cmd->add_option("--seed", seed, "Accepted for uniformity; segmentation is deterministic");
    seg_text.attach(seg_cmd);

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "Compare a hypothesis segmentation with a reference");
    std::string ref_path;
    std::string hyp_path;
    std::size_t total = 0;
    std::optional<std::size_t> window;
    eval_cmd->add_option("reference", ref_path, "Reference boundary file")->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("hypothesis", hyp_path, "Hypothesis boundary file")->required()->check(CLI::ExistingFile);
    eval_cmd->add_option("--sentences,-T", total, "Number of sentences in the text")->required();
    eval_cmd->add_option("--k", window, "Pk window (default: half the mean reference segment length)");
    eval_cmd->add_option("--seed", seed, "Accepted for uniformity; evaluation is deterministic");
    eval_cmd->add_flag("--json", "Output is always JSON");

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Generate synthetic benchmark texts from a source collection");
    std::string gen_sources;
    int gen_suite = 1;
    std::string gen_range;
    std::size_t gen_texts = 1;
    std::string gen_out;
    TextOptions gen_text;
    gen_cmd->add_option("--sources", gen_sources, "Directory with one subdirectory per group")
        ->required()
        ->check(CLI::ExistingDirectory);
    gen_cmd->add_option("--suite", gen_suite, "1: leading sentences, 2: paragraph spans")
        ->check(CLI::IsMember({1, 2}));
    gen_cmd->add_option("--range", gen_range, "Sentence range a,b per segment (suite 1)");
    gen_cmd->add_option("--texts", gen_texts, "Number of texts")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", seed, "Random seed");
    gen_cmd->add_option("--out", gen_out, "Write JSON to this file instead of stdout");
    gen_cmd->add_flag("--json", "Output is always JSON");
    gen_text.attach(gen_cmd);

    // validate
    auto* val_cmd = app.add_subcommand("validate", "Run the (gamma, r) validation grid on a training set");
    std::string val_input;
    std::optional<double> val_mu;
    std::optional<double> val_sigma;
    bool val_json = false;
    std::string val_out;
    val_cmd->add_option("training", val_input, "Training texts as written by `generate`")
        ->required()
        ->check(CLI::ExistingFile);
    val_cmd->add_option("--mu", val_mu, "Mean segment length (default: estimated from the training set)");
    val_cmd->add_option("--sigma", val_sigma, "Segment length deviation (default: estimated)");
    val_cmd->add_flag("--json", val_json, "Print JSON with the best row instead of CSV");
    val_cmd->add_option("--out", val_out, "Write output to this file instead of stdout");
    val_cmd->add_option("--seed", seed, "Accepted for uniformity; validation is deterministic");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "Train/validate/test experiment with repetitions");
    std::string exp_sources;
    int exp_suite = 1;
    std::string exp_range;
    std::size_t exp_texts = 50;
    std::size_t exp_reps = 5;
    std::string exp_out;
    std::string exp_grid;
    TextOptions exp_text;
    exp_cmd->add_option("--sources", exp_sources, "Directory with one subdirectory per group")
        ->required()
        ->check(CLI::ExistingDirectory);
    exp_cmd->add_option("--suite", exp_suite, "1: leading sentences, 2: paragraph spans")
        ->check(CLI::IsMember({1, 2}));
    exp_cmd->add_option("--range", exp_range, "Sentence range a,b per segment (suite 1)");
    exp_cmd->add_option("--texts", exp_texts, "Texts per repetition (even)");
    exp_cmd->add_option("--reps", exp_reps, "Repetitions")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", seed, "Random seed");
    exp_cmd->add_option("--out", exp_out, "Write the JSON report to this file instead of stdout");
    exp_cmd->add_option("--grid-csv", exp_grid, "Also write the repetition-averaged grid as CSV");
    exp_cmd->add_flag("--json", "Output is always JSON");
    exp_text.attach(exp_cmd);

    // dotplot
    auto* dot_cmd = app.add_subcommand("dotplot", "Render the sentence-similarity matrix as a binary PGM");
    std::string dot_input;
    std::string dot_out;
    TextOptions dot_text;
    dot_cmd->add_option("input", dot_input, "Text file, one sentence per line")->required()->check(CLI::ExistingFile);
    dot_cmd->add_option("--out", dot_out, "Write the image to this file instead of stdout");
    dot_cmd->add_option("--seed", seed, "Accepted for uniformity; rendering is deterministic");
    dot_text.attach(dot_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (seg_cmd->parsed()) {
            const auto doc = load_document(read_file(seg_input), seg_text.config(), seg_input);
            const SegParams params(mu, sigma, r, gamma);
            const auto matrix = build_similarity_matrix(doc);
            const auto result = seg_oracle ? brute_force_segment(matrix, params) : segment(matrix, params);
            if (seg_json) {
                write_output(seg_out, seg_result_json(result, params, seg_oracle).dump(2) + "\n", out);
            } else {
                write_output(seg_out, serialize_segmentation(result.segmentation), out);
            }
        } else if (eval_cmd->parsed()) {
            const auto ref = parse_segmentation(read_file(ref_path), total);
            const auto hyp = parse_segmentation(read_file(hyp_path), total);
            const auto report = evaluate(ref, hyp, window);
            json j = {{"precision", report.precision},
                      {"recall", report.recall},
                      {"pk", report.pk},
                      {"window_k", report.window_k}};
            out << j.dump(2) << "\n";
        } else if (gen_cmd->parsed()) {
            std::optional<std::pair<std::size_t, std::size_t>> subset;
            if (gen_suite == 1) {
                if (gen_range.empty()) {
                    throw Error("suite 1 needs --range a,b");
                }
                subset = parse_range(gen_range);
            } else if (!gen_range.empty()) {
                throw Error("--range only applies to suite 1");
            }
            const auto sources = load_source_collection(gen_sources, gen_text.config());
            SplitMix64 rng(seed);
            std::vector<GeneratedText> texts;
            for (std::size_t i = 0; i < gen_texts; ++i) {
                const auto text_seed = rng.next();
                texts.push_back(subset ? generate_suite1_text(sources, subset->first, subset->second, text_seed)
                                       : generate_suite2_text(sources, text_seed));
            }
            const Suite suite = gen_suite == 1 ? Suite::one : Suite::two;
            write_output(gen_out, generated_texts_to_json(texts, suite, subset, seed), out);
        } else if (val_cmd->parsed()) {
            const auto training = generated_texts_from_json(read_file(val_input));
            auto lp = estimate_length_params(training);
            if (val_mu) {
                lp.mu = *val_mu;
            }
            if (val_sigma) {
                lp.sigma = *val_sigma;
            }
            const auto grid = run_grid_validation(training, lp.mu, lp.sigma);
            if (val_json) {
                json rows = json::array();
                for (const auto& row : grid.rows) {
                    rows.push_back({{"gamma", row.gamma},
                                    {"r", row.r},
                                    {"mean_pk", row.mean_pk},
                                    {"mean_precision", row.mean_precision},
                                    {"mean_recall", row.mean_recall}});
                }
                json j = {{"mu", lp.mu},
                          {"sigma", lp.sigma},
                          {"best", {{"gamma", grid.best().gamma}, {"r", grid.best().r}, {"mean_pk", grid.best().mean_pk}}},
                          {"rows", std::move(rows)}};
                write_output(val_out, j.dump(2) + "\n", out);
            } else {
                write_output(val_out, grid_to_csv(grid.rows), out);
            }
        } else if (exp_cmd->parsed()) {
            ExperimentConfig config;
            config.suite = exp_suite == 1 ? Suite::one : Suite::two;
            if (exp_suite == 1) {
                if (exp_range.empty()) {
                    throw Error("suite 1 needs --range a,b");
                }
                config.subset = parse_range(exp_range);
            } else if (!exp_range.empty()) {
                throw Error("--range only applies to suite 1");
            }
            config.n_texts = exp_texts;
            config.repetitions = exp_reps;
            config.seed = seed;
            const auto sources = load_source_collection(exp_sources, exp_text.config());
            const auto report = run_experiment(sources, config);
            write_output(exp_out, report_to_json(report), out);
            if (!exp_grid.empty()) {
                std::ostringstream sink;
                write_output(exp_grid, grid_to_csv(report.grid), sink);
            }
        } else if (dot_cmd->parsed()) {
            const auto doc = load_document(read_file(dot_input), dot_text.config(), dot_input);
            write_output(dot_out, export_dotplot(build_similarity_matrix(doc)), out);
        }
    } catch (const Error& e) {
        err << "dotseg: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "dotseg: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace dotseg::cli
