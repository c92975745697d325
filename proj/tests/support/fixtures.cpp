#include "fixtures.hpp"

#include "dotseg/rng.hpp"

#include <algorithm>
#include <fstream>
#include <unistd.h>

namespace dotseg::test {

const char* const kTwoTopicText =
    "Cats chase mice.\n"
    "Mice fear cats.\n"
    "Hungry cats catch mice daily.\n"
    "Markets fell sharply.\n"
    "Investors fled the markets.\n"
    "Markets recovered slowly.\n";

SourceCollection make_fixture(const FixtureOptions& options) {
    SplitMix64 rng(options.seed);
    SourceCollection sources;
    for (std::size_t g = 0; g < options.groups; ++g) {
        SourceGroup group{"group" + std::to_string(g), {}};
        for (std::size_t s = 0; s < options.sources_per_group; ++s) {
            const std::string prefix = "g" + std::to_string(g) + "s" + std::to_string(s);
            const auto n = static_cast<std::size_t>(rng.uniform(options.min_sentences, options.max_sentences));
            std::vector<Sentence> sentences;
            for (std::size_t i = 0; i < n; ++i) {
                Sentence sentence;
                if (options.anchor) {
                    sentence.push_back(prefix + "anchor");
                }
                for (std::size_t w = 0; w < options.words_per_sentence; ++w) {
                    sentence.push_back(prefix + "w" + std::to_string(rng.uniform(0, options.vocabulary - 1)));
                }
                sentences.push_back(std::move(sentence));
            }
            std::vector<std::size_t> ends;
            std::size_t pos = 0;
            while (pos < n) {
                pos = std::min(n, pos + static_cast<std::size_t>(rng.uniform(1, options.max_paragraph)));
                ends.push_back(pos);
            }
            group.documents.push_back({Document(std::move(sentences), group.name + "/" + prefix), std::move(ends)});
        }
        sources.groups.push_back(std::move(group));
    }
    return sources;
}

void write_fixture(const SourceCollection& sources, const std::filesystem::path& root) {
    std::filesystem::create_directories(root);
    for (const auto& group : sources.groups) {
        const auto dir = root / group.name;
        std::filesystem::create_directories(dir);
        for (std::size_t d = 0; d < group.documents.size(); ++d) {
            const auto& doc = group.documents[d];
            char name[32];
            std::snprintf(name, sizeof(name), "doc%03zu.txt", d);
            std::ofstream out(dir / name, std::ios::binary);
            std::size_t para = 0;
            for (std::size_t i = 0; i < doc.document.size(); ++i) {
                if (para < doc.paragraph_ends.size() && i == doc.paragraph_ends[para] && i > 0) {
                    out << "\n";
                    ++para;
                }
                const auto& sentence = doc.document.sentence(i);
                for (std::size_t w = 0; w < sentence.size(); ++w) {
                    out << (w ? " " : "") << sentence[w];
                }
                out << "\n";
            }
        }
    }
}

std::filesystem::path temp_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() /
               ("dotseg-" + name + "-" + std::to_string(static_cast<long>(::getpid())));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace dotseg::test
