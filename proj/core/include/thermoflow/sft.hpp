#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thermoflow {

// A finite word over the alphabet {0, .., n-1}. Symbols are 0-based
// internally; all text I/O is 1-based (see word_to_string / parse_word).
using Word = std::vector<int>;

std::string word_to_string(const Word& w, int alphabet_size);
Word parse_word(const std::string& token, int alphabet_size);

// One-sided sub-shift of finite type: alphabet {0..n-1} plus an n x n 0/1
// transition matrix, a[i][j] = 1 iff symbol j may follow symbol i.
//
// Construction validates the standing assumptions:
//   * n >= 2,
//   * no dead symbols (every row and every column has a 1),
//   * the matrix is primitive: some power a^m is entrywise positive. The
//     minimal such m is searched with boolean matrix powers up to the
//     Wielandt bound n^2 - 2n + 2, so the test is exact and integer-only.
class Sft {
public:
    Sft(int alphabet_size, const std::vector<std::vector<int>>& rows);

    int alphabet_size() const noexcept { return n_; }
    bool edge(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j] != 0; }
    // Minimal m with a^m entrywise positive.
    int primitivity_exponent() const noexcept { return exponent_; }

    const std::vector<int>& out_neighbors(int i) const { return out_[i]; }

    bool admissible(const Word& w) const;

    // All admissible words of length k, lexicographic. Guarded by word_count.
    std::vector<Word> words(int k) const;

    // Number of admissible k-words: sum of the entries of a^(k-1) (n for k=1).
    std::uint64_t word_count(int k) const;

    // trace(a^p) = number of points of period p.
    std::uint64_t periodic_point_count(int p) const;

    bool operator==(const Sft& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Sft& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<std::uint8_t> a_; // row-major n x n
    std::vector<std::vector<int>> out_;
    int exponent_;
};

} // namespace thermoflow
