#ifndef DOTSEG_TESTS_FIXTURES_HPP
#define DOTSEG_TESTS_FIXTURES_HPP

#include "dotseg/corpus.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace dotseg::test {

// Synthetic source collection where every group, and every document inside
// a group, draws from its own private word list ("g<g>s<s>w<i>"). Groups
// therefore never share vocabulary and documents never share vocabulary.
struct FixtureOptions {
    std::size_t groups = 2;
    std::size_t sources_per_group = 30;
    std::size_t min_sentences = 40;
    std::size_t max_sentences = 60;
    // Private words per document and words drawn per sentence.
    std::size_t vocabulary = 12;
    std::size_t words_per_sentence = 4;
    // Every sentence of a document also carries the document's anchor word,
    // making its block of the similarity matrix all ones.
    bool anchor = false;
    // Paragraph lengths are drawn from [1, max_paragraph].
    std::size_t max_paragraph = 5;
    std::uint64_t seed = 1;
};

SourceCollection make_fixture(const FixtureOptions& options);

// Writes the collection in the on-disk source layout (group directories,
// one file per document, blank line between paragraphs).
void write_fixture(const SourceCollection& sources, const std::filesystem::path& root);

// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string& name);

// Six sentences, two topics of three sentences with disjoint vocabularies.
extern const char* const kTwoTopicText;

} // namespace dotseg::test

#endif
