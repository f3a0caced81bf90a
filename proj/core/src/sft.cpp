#include "thermoflow/sft.hpp"

#include "thermoflow/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>

namespace thermoflow {

std::string word_to_string(const Word& w, int alphabet_size) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (alphabet_size <= 9) {
            out += static_cast<char>('1' + w[i]);
        } else {
            if (i > 0) out += '.';
            out += std::to_string(w[i] + 1);
        }
    }
    return out;
}

Word parse_word(const std::string& token, int alphabet_size) {
    Word w;
    if (token.find('.') != std::string::npos) {
        std::stringstream ss(token);
        std::string part;
        while (std::getline(ss, part, '.')) {
            if (part.empty()) throw ValidationError("malformed word token '" + token + "'");
            int s = 0;
            for (char c : part) {
                if (c < '0' || c > '9') throw ValidationError("malformed word token '" + token + "'");
                s = s * 10 + (c - '0');
            }
            w.push_back(s - 1);
        }
    } else {
        for (char c : token) {
            if (c < '1' || c > '9') throw ValidationError("malformed word token '" + token + "'");
            w.push_back(c - '1');
        }
    }
    if (w.empty()) throw ValidationError("empty word token");
    for (int s : w) {
        if (s < 0 || s >= alphabet_size)
            throw ValidationError("symbol out of range in word '" + token + "'");
    }
    return w;
}

namespace {

// Boolean n x n matrix with bit-packed rows.
struct BoolMatrix {
    int n;
    int words_per_row;
    std::vector<std::uint64_t> bits;

    explicit BoolMatrix(int n_)
        : n(n_), words_per_row((n_ + 63) / 64),
          bits(static_cast<std::size_t>(n_) * words_per_row, 0) {}

    void set(int i, int j) {
        bits[static_cast<std::size_t>(i) * words_per_row + j / 64] |= (1ULL << (j % 64));
    }
    bool all_ones() const {
        for (int i = 0; i < n; ++i) {
            for (int wj = 0; wj < words_per_row; ++wj) {
                std::uint64_t expect = ~0ULL;
                if (wj == words_per_row - 1 && n % 64 != 0) expect = (1ULL << (n % 64)) - 1;
                if (bits[static_cast<std::size_t>(i) * words_per_row + wj] != expect) return false;
            }
        }
        return true;
    }
};

// product = x * y over the boolean semiring.
BoolMatrix bool_multiply(const BoolMatrix& x, const BoolMatrix& y) {
    BoolMatrix out(x.n);
    for (int i = 0; i < x.n; ++i) {
        std::uint64_t* row_out = &out.bits[static_cast<std::size_t>(i) * out.words_per_row];
        for (int k = 0; k < x.n; ++k) {
            if (x.bits[static_cast<std::size_t>(i) * x.words_per_row + k / 64] & (1ULL << (k % 64))) {
                const std::uint64_t* row_k = &y.bits[static_cast<std::size_t>(k) * y.words_per_row];
                for (int wj = 0; wj < y.words_per_row; ++wj) row_out[wj] |= row_k[wj];
            }
        }
    }
    return out;
}

// Checked u64 matrix product; throws TooLarge on overflow.
std::vector<std::uint64_t> count_multiply(const std::vector<std::uint64_t>& x,
                                          const std::vector<std::uint64_t>& y, int n) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            std::uint64_t xv = x[static_cast<std::size_t>(i) * n + k];
            if (xv == 0) continue;
            for (int j = 0; j < n; ++j) {
                unsigned __int128 acc = out[static_cast<std::size_t>(i) * n + j];
                acc += static_cast<unsigned __int128>(xv) * y[static_cast<std::size_t>(k) * n + j];
                if (acc > std::numeric_limits<std::uint64_t>::max())
                    throw TooLarge("integer matrix power overflow");
                out[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint64_t>(acc);
            }
        }
    }
    return out;
}

} // namespace

Sft::Sft(int alphabet_size, const std::vector<std::vector<int>>& rows) : n_(alphabet_size) {
    if (n_ < 2) throw RejectAlphabetTooSmall("alphabet must have at least 2 symbols");
    if (static_cast<int>(rows.size()) != n_)
        throw ValidationError("transition matrix must have exactly n rows");
    a_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(rows[i].size()) != n_)
            throw ValidationError("transition matrix must be square");
        for (int j = 0; j < n_; ++j) {
            if (rows[i][j] != 0 && rows[i][j] != 1)
                throw ValidationError("transition matrix entries must be 0 or 1");
            a_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::uint8_t>(rows[i][j]);
        }
    }

    for (int i = 0; i < n_; ++i) {
        bool row_live = false, col_live = false;
        for (int j = 0; j < n_; ++j) {
            row_live = row_live || edge(i, j);
            col_live = col_live || edge(j, i);
        }
        if (!row_live)
            throw RejectDeadSymbol("symbol " + std::to_string(i + 1) + " has no successor");
        if (!col_live)
            throw RejectDeadSymbol("symbol " + std::to_string(i + 1) + " has no predecessor");
    }

    BoolMatrix base(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (edge(i, j)) base.set(i, j);

    const long wielandt = static_cast<long>(n_) * n_ - 2L * n_ + 2;
    BoolMatrix power = base;
    exponent_ = -1;
    for (long m = 1; m <= wielandt; ++m) {
        if (power.all_ones()) {
            exponent_ = static_cast<int>(m);
            break;
        }
        power = bool_multiply(power, base);
    }
    if (exponent_ == -1 && power.all_ones()) exponent_ = static_cast<int>(wielandt);
    if (exponent_ == -1)
        throw RejectNotPrimitive("no power up to the Wielandt bound is entrywise positive");

    out_.resize(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (edge(i, j)) out_[i].push_back(j);
}

bool Sft::admissible(const Word& w) const {
    if (w.empty()) return false;
    for (int s : w)
        if (s < 0 || s >= n_) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!edge(w[i], w[i + 1])) return false;
    return true;
}

std::vector<Word> Sft::words(int k) const {
    if (k < 1) throw ValidationError("word length must be >= 1");
    if (word_count(k) > 10'000'000ULL) throw TooLarge("too many admissible words to enumerate");
    std::vector<Word> out;
    Word cur;
    cur.reserve(k);
    // Depth-first in symbol order yields lexicographic output.
    auto rec = [&](auto&& self, int sym) -> void {
        cur.push_back(sym);
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
        } else {
            for (int next : out_[sym]) self(self, next);
        }
        cur.pop_back();
    };
    for (int s = 0; s < n_; ++s) rec(rec, s);
    return out;
}

std::uint64_t Sft::word_count(int k) const {
    if (k < 1) throw ValidationError("word length must be >= 1");
    if (k == 1) return static_cast<std::uint64_t>(n_);
    std::vector<std::uint64_t> m(a_.begin(), a_.end());
    std::vector<std::uint64_t> p = m;
    for (int e = 2; e <= k - 1; ++e) p = count_multiply(p, m, n_);
    std::uint64_t total = 0;
    for (std::uint64_t v : p) {
        if (total > std::numeric_limits<std::uint64_t>::max() - v)
            throw TooLarge("word count overflow");
        total += v;
    }
    return total;
}

std::uint64_t Sft::periodic_point_count(int p) const {
    if (p < 1) throw ValidationError("period must be >= 1");
    std::vector<std::uint64_t> m(a_.begin(), a_.end());
    std::vector<std::uint64_t> pw = m;
    for (int e = 2; e <= p; ++e) pw = count_multiply(pw, m, n_);
    std::uint64_t tr = 0;
    for (int i = 0; i < n_; ++i) tr += pw[static_cast<std::size_t>(i) * n_ + i];
    return tr;
}

} // namespace thermoflow
