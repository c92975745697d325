#include "dotseg/similarity.hpp"

#include "dotseg/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace dotseg {

TermIncidence build_term_incidence(const Document& doc) {
    TermIncidence inc;
    std::unordered_map<std::string, std::uint32_t> index;
    inc.sentence_words.reserve(doc.size());
    for (const auto& sentence : doc.sentences()) {
        std::vector<std::uint32_t> words;
        words.reserve(sentence.size());
        for (const auto& token : sentence) {
            auto [it, inserted] = index.try_emplace(token, static_cast<std::uint32_t>(inc.vocabulary.size()));
            if (inserted) {
                inc.vocabulary.push_back(token);
            }
            words.push_back(it->second);
        }
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        inc.sentence_words.push_back(std::move(words));
    }
    return inc;
}

SimilarityMatrix::SimilarityMatrix(std::size_t size, std::vector<std::uint8_t> bits)
    : size_(size), bits_(std::move(bits)), prefix_((size + 1) * (size + 1), 0) {
    const std::size_t stride = size_ + 1;
    for (std::size_t i = 1; i <= size_; ++i) {
        std::int64_t row_sum = 0;
        for (std::size_t j = 1; j <= size_; ++j) {
            row_sum += bits_[(i - 1) * size_ + (j - 1)];
            prefix_[i * stride + j] = prefix_[(i - 1) * stride + j] + row_sum;
        }
    }
}

SimilarityMatrix SimilarityMatrix::from_bits(std::size_t size, std::vector<std::uint8_t> bits) {
    if (size == 0) {
        throw Error("similarity matrix must have at least one sentence");
    }
    if (bits.size() != size * size) {
        throw Error("similarity matrix: expected " + std::to_string(size * size) + " entries, got " +
                    std::to_string(bits.size()));
    }
    for (auto& b : bits) {
        b = b != 0 ? 1 : 0;
    }
    for (std::size_t s = 0; s < size; ++s) {
        for (std::size_t t = s + 1; t < size; ++t) {
            if (bits[s * size + t] != bits[t * size + s]) {
                throw Error("similarity matrix is not symmetric");
            }
        }
    }
    return SimilarityMatrix(size, std::move(bits));
}

std::int64_t SimilarityMatrix::submatrix_ones(std::size_t lo, std::size_t hi) const {
    if (lo >= hi) {
        throw Error("empty segment");
    }
    if (hi > size_) {
        throw Error("segment end " + std::to_string(hi) + " exceeds matrix size " + std::to_string(size_));
    }
    return prefix(hi, hi) - prefix(lo, hi) - prefix(hi, lo) + prefix(lo, lo);
}

SimilarityMatrix build_similarity_matrix(const TermIncidence& inc) {
    const std::size_t n = inc.sentence_count();
    if (n == 0) {
        throw Error("similarity matrix must have at least one sentence");
    }
    // Sentences containing each word; the pairs sharing a word are exactly
    // the pairs within one posting list.
    std::vector<std::vector<std::uint32_t>> postings(inc.vocabulary.size());
    for (std::size_t s = 0; s < n; ++s) {
        for (std::uint32_t w : inc.sentence_words[s]) {
            postings[w].push_back(static_cast<std::uint32_t>(s));
        }
    }
    std::vector<std::uint8_t> bits(n * n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        std::uint8_t* row = bits.data() + s * n;
        for (std::uint32_t w : inc.sentence_words[s]) {
            for (std::uint32_t t : postings[w]) {
                row[t] = 1;
            }
        }
    }
    return SimilarityMatrix::from_bits(n, std::move(bits));
}

std::string export_dotplot(const SimilarityMatrix& m) {
    const std::size_t n = m.size();
    std::string header = "P5\n" + std::to_string(n) + "\n" + std::to_string(n) + "\n255\n";
    std::string out;
    out.reserve(header.size() + n * n);
    out += header;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            out.push_back(m.at(s, t) ? static_cast<char>(0) : static_cast<char>(255));
        }
    }
    return out;
}

} // namespace dotseg
