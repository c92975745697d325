#include "dotseg/text_model.hpp"

#include "dotseg/error.hpp"
#include "dotseg/utf8.hpp"

#include <algorithm>
#include <charconv>

namespace dotseg {

namespace {

bool all_ascii_digits(std::u32string_view word) {
    return !word.empty() &&
           std::all_of(word.begin(), word.end(), [](char32_t c) { return c >= U'0' && c <= U'9'; });
}

std::string trim(std::string_view s) {
    auto cps = utf8::decode(s);
    std::size_t b = 0;
    std::size_t e = cps.size();
    while (b < e && utf8::is_space(cps[b])) {
        ++b;
    }
    while (e > b && utf8::is_space(cps[e - 1])) {
        --e;
    }
    return utf8::encode(std::u32string_view(cps).substr(b, e - b));
}

} // namespace

Document::Document(std::vector<Sentence> sentences, std::string source_id)
    : sentences_(std::move(sentences)), source_id_(std::move(source_id)) {
    if (sentences_.empty()) {
        throw Error("empty document");
    }
    for (const auto& sentence : sentences_) {
        for (const auto& token : sentence) {
            if (token.empty()) {
                throw Error("document contains an empty token");
            }
            for (char32_t c : utf8::decode(token)) {
                if (utf8::is_space(c)) {
                    throw Error("document token contains whitespace: '" + token + "'");
                }
            }
        }
    }
}

std::unordered_set<std::string> parse_stoplist(std::string_view text) {
    std::unordered_set<std::string> words;
    for (auto line : split_lines(text)) {
        std::string word = trim(line);
        if (!word.empty()) {
            words.insert(utf8::fold_case(word));
        }
    }
    return words;
}

std::unordered_map<std::string, std::string> parse_lemma_map(std::string_view text) {
    std::unordered_map<std::string, std::string> map;
    std::size_t line_no = 0;
    for (auto line : split_lines(text)) {
        ++line_no;
        if (is_blank_line(line)) {
            continue;
        }
        auto tab = line.find('\t');
        if (tab == std::string_view::npos) {
            throw Error("lemma map line " + std::to_string(line_no) + ": expected surface<TAB>lemma");
        }
        std::string surface = trim(line.substr(0, tab));
        std::string lemma = trim(line.substr(tab + 1));
        if (surface.empty() || lemma.empty() || utf8::split_words(utf8::decode(lemma)).size() != 1) {
            throw Error("lemma map line " + std::to_string(line_no) + ": malformed entry");
        }
        map[utf8::fold_case(surface)] = utf8::fold_case(lemma);
    }
    return map;
}

std::string normalize_token(std::string_view word, const NormalizationConfig& config) {
    std::u32string cps = utf8::decode(word);
    std::size_t b = 0;
    std::size_t e = cps.size();
    while (b < e && utf8::is_punctuation(cps[b])) {
        ++b;
    }
    while (e > b && utf8::is_punctuation(cps[e - 1])) {
        --e;
    }
    std::u32string core = cps.substr(b, e - b);
    if (core.empty() || all_ascii_digits(core)) {
        return {};
    }
    for (char32_t& c : core) {
        c = utf8::fold_case(c);
    }
    std::string surface = utf8::encode(core);
    if (config.stoplist.contains(surface)) {
        return {};
    }
    if (auto it = config.lemma_map.find(surface); it != config.lemma_map.end()) {
        if (config.stoplist.contains(it->second)) {
            return {};
        }
        return it->second;
    }
    if (!config.keep_unmapped) {
        return {};
    }
    return surface;
}

Sentence normalize_sentence(std::string_view line, const NormalizationConfig& config) {
    Sentence sentence;
    for (const auto& word : utf8::split_words(utf8::decode(line))) {
        std::string token = normalize_token(utf8::encode(word), config);
        if (!token.empty()) {
            sentence.push_back(std::move(token));
        }
    }
    return sentence;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool is_blank_line(std::string_view line) {
    auto cps = utf8::decode(line);
    return std::all_of(cps.begin(), cps.end(), [](char32_t c) { return utf8::is_space(c); });
}

Document load_document(std::string_view raw_text, const NormalizationConfig& config,
                       std::string source_id) {
    std::vector<Sentence> sentences;
    for (auto line : split_lines(raw_text)) {
        if (is_blank_line(line)) {
            continue;
        }
        sentences.push_back(normalize_sentence(line, config));
    }
    if (sentences.empty()) {
        throw Error("empty document");
    }
    return Document(std::move(sentences), std::move(source_id));
}

std::string serialize_document(const Document& doc) {
    std::string out;
    for (const auto& sentence : doc.sentences()) {
        for (std::size_t i = 0; i < sentence.size(); ++i) {
            if (i > 0) {
                out.push_back(' ');
            }
            out += sentence[i];
        }
        out.push_back('\n');
    }
    return out;
}

Segmentation::Segmentation(std::vector<std::size_t> boundaries) : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 2) {
        throw Error("malformed segmentation: need at least one segment");
    }
    if (boundaries_.front() != 0) {
        throw Error("malformed segmentation: first boundary must be 0");
    }
    for (std::size_t k = 1; k < boundaries_.size(); ++k) {
        if (boundaries_[k] <= boundaries_[k - 1]) {
            throw Error("malformed segmentation: boundaries must be strictly increasing");
        }
    }
}

Segmentation Segmentation::whole(std::size_t total_sentences) {
    return Segmentation({0, total_sentences});
}

Segmentation parse_segmentation(std::string_view text, std::size_t total_sentences) {
    if (total_sentences == 0) {
        throw Error("malformed segmentation: total sentence count must be positive");
    }
    std::vector<std::size_t> boundaries{0};
    std::size_t pos = 0;
    auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_ws(text[pos])) {
            ++pos;
        }
        if (pos == text.size()) {
            break;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_ws(text[end])) {
            ++end;
        }
        std::string_view token = text.substr(pos, end - pos);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw Error("malformed segmentation: not an integer: '" + std::string(token) + "'");
        }
        if (value <= 0) {
            throw Error("malformed segmentation: boundary must be positive");
        }
        if (static_cast<unsigned long long>(value) > total_sentences) {
            throw Error("malformed segmentation: boundary " + std::to_string(value) +
                        " exceeds sentence count " + std::to_string(total_sentences));
        }
        if (static_cast<std::size_t>(value) <= boundaries.back()) {
            throw Error("malformed segmentation: boundaries must be strictly increasing");
        }
        boundaries.push_back(static_cast<std::size_t>(value));
        pos = end;
    }
    if (boundaries.back() != total_sentences) {
        boundaries.push_back(total_sentences);
    }
    return Segmentation(std::move(boundaries));
}

std::string serialize_segmentation(const Segmentation& seg) {
    std::string out;
    bool first = true;
    for (std::size_t b : seg.internal()) {
        if (!first) {
            out.push_back(' ');
        }
        out += std::to_string(b);
        first = false;
    }
    out.push_back('\n');
    return out;
}

Segmentation segmentation_from_lengths(std::span<const std::size_t> lengths) {
    std::vector<std::size_t> boundaries{0};
    for (std::size_t len : lengths) {
        boundaries.push_back(boundaries.back() + len);
    }
    return Segmentation(std::move(boundaries));
}

} // namespace dotseg
