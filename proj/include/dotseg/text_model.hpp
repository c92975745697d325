#ifndef DOTSEG_TEXT_MODEL_HPP
#define DOTSEG_TEXT_MODEL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace dotseg {

using Sentence = std::vector<std::string>;

// An ordered list of normalized sentences. A sentence may be empty (every
// word was removed during normalization); it still occupies an index so that
// boundary positions line up with the original line numbering.
class Document {
public:
    // Throws dotseg::Error if there are no sentences or a token is empty or
    // contains whitespace.
    explicit Document(std::vector<Sentence> sentences, std::string source_id = {});

    std::size_t size() const { return sentences_.size(); }
    const std::vector<Sentence>& sentences() const { return sentences_; }
    const Sentence& sentence(std::size_t i) const { return sentences_[i]; }
    const std::string& source_id() const { return source_id_; }

    bool operator==(const Document&) const = default;

private:
    std::vector<Sentence> sentences_;
    std::string source_id_;
};

struct NormalizationConfig {
    std::unordered_set<std::string> stoplist;
    std::unordered_map<std::string, std::string> lemma_map;
    // When false, words missing from lemma_map are dropped.
    bool keep_unmapped = true;
};

// Stoplist file: one word per line. Lemma map file: surface<TAB>lemma per
// line. Keys (and lemmas) are case-folded on load; blank lines are ignored.
std::unordered_set<std::string> parse_stoplist(std::string_view text);
std::unordered_map<std::string, std::string> parse_lemma_map(std::string_view text);

// Applies the token pipeline to one whitespace-delimited word: case folding,
// edge punctuation stripping, numeric removal, lemma substitution and
// stoplist filtering. Returns an empty string when the word is dropped.
std::string normalize_token(std::string_view word, const NormalizationConfig& config);

// Normalizes a single raw line into a sentence (possibly empty).
Sentence normalize_sentence(std::string_view line, const NormalizationConfig& config);

// Splits on LF, dropping a trailing CR from each line. A final newline does
// not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);

// True when the line holds only whitespace.
bool is_blank_line(std::string_view line);

// One sentence per line, LF or CRLF. Blank lines are skipped. Throws
// dotseg::Error("empty document") when no sentence remains.
Document load_document(std::string_view raw_text, const NormalizationConfig& config,
                       std::string source_id = {});

// One sentence per line, tokens separated by a single space.
std::string serialize_document(const Document& doc);

// Segment boundary vector (t_0, t_1, ..., t_K) with t_0 = 0, t_K = T and
// strictly increasing entries. Boundary t means "after sentence t" (1-based).
class Segmentation {
public:
    // Throws dotseg::Error("malformed segmentation: ...") on invariant
    // violations.
    explicit Segmentation(std::vector<std::size_t> boundaries);

    // The single-segment segmentation (0, T).
    static Segmentation whole(std::size_t total_sentences);

    const std::vector<std::size_t>& boundaries() const { return boundaries_; }
    std::size_t total_sentences() const { return boundaries_.back(); }
    std::size_t segment_count() const { return boundaries_.size() - 1; }
    std::size_t segment_length(std::size_t k) const { return boundaries_[k + 1] - boundaries_[k]; }

    // Boundaries strictly between 0 and T.
    std::span<const std::size_t> internal() const {
        return std::span<const std::size_t>(boundaries_).subspan(1, boundaries_.size() - 2);
    }

    bool operator==(const Segmentation&) const = default;

private:
    std::vector<std::size_t> boundaries_;
};

// Whitespace-separated ASCII integers; the implicit leading 0 and trailing T
// are added when absent.
Segmentation parse_segmentation(std::string_view text, std::size_t total_sentences);

// Internal boundaries separated by single spaces, followed by a newline.
std::string serialize_segmentation(const Segmentation& seg);

// Boundaries from a list of segment lengths.
Segmentation segmentation_from_lengths(std::span<const std::size_t> lengths);

} // namespace dotseg

#endif
