#ifndef DOTSEG_SIMILARITY_HPP
#define DOTSEG_SIMILARITY_HPP

#include "dotseg/text_model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dotseg {

// Binary sentence-by-word incidence: which vocabulary words occur in each
// sentence (presence only, counts are discarded).
struct TermIncidence {
    // Distinct words in first-occurrence order.
    std::vector<std::string> vocabulary;
    // Sorted vocabulary indices per sentence.
    std::vector<std::vector<std::uint32_t>> sentence_words;

    std::size_t sentence_count() const { return sentence_words.size(); }
};

TermIncidence build_term_incidence(const Document& doc);

// Symmetric T x T binary matrix D with D(s, t) = 1 iff sentences s and t
// share at least one word, together with a (T+1) x (T+1) summed-area table
// so that the number of ones inside any square diagonal block is O(1).
//
// Indices are 0-based: at(s, t) is D_{s+1,t+1} in 1-based notation.
class SimilarityMatrix {
public:
    // Throws dotseg::Error if bits.size() != size * size, size == 0, or the
    // matrix is not symmetric.
    static SimilarityMatrix from_bits(std::size_t size, std::vector<std::uint8_t> bits);

    std::size_t size() const { return size_; }
    bool at(std::size_t s, std::size_t t) const { return bits_[s * size_ + t] != 0; }

    // prefix(i, j) = sum of D over the leading i rows and j columns.
    std::int64_t prefix(std::size_t i, std::size_t j) const { return prefix_[i * (size_ + 1) + j]; }

    // Ones in the block of rows and columns lo+1..hi (1-based), i.e. the
    // sentences of the half-open range [lo, hi). Includes the diagonal.
    // Throws dotseg::Error("empty segment") when lo >= hi, and on hi > size.
    std::int64_t submatrix_ones(std::size_t lo, std::size_t hi) const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

private:
    SimilarityMatrix(std::size_t size, std::vector<std::uint8_t> bits);

    std::size_t size_;
    std::vector<std::uint8_t> bits_;
    std::vector<std::int64_t> prefix_;
};

SimilarityMatrix build_similarity_matrix(const TermIncidence& inc);

inline SimilarityMatrix build_similarity_matrix(const Document& doc) {
    return build_similarity_matrix(build_term_incidence(doc));
}

inline std::int64_t submatrix_ones(const SimilarityMatrix& m, std::size_t lo, std::size_t hi) {
    return m.submatrix_ones(lo, hi);
}

// Binary PGM (P5, maxval 255): row s of the image is row s of D, ones are
// black (0) and zeros white (255).
std::string export_dotplot(const SimilarityMatrix& m);

} // namespace dotseg

#endif
