#pragma once

// Naive reference implementations used as independent oracles in tests.
// Everything here works on plain 0/1 tables and enumerates exhaustively; it
// shares no code with the library beyond conversion to and from BitMatrix.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qltc/bit_matrix.hpp"
#include "qltc/chain_complex.hpp"
#include "qltc/rational.hpp"

namespace naive {

using Dense = std::vector<std::vector<int>>;
using Word = std::vector<int>;

inline Dense to_dense(const qltc::BitMatrix& m) {
    Dense d(m.rows(), Word(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c) ? 1 : 0;
    return d;
}

inline qltc::BitMatrix from_dense(const Dense& d, std::size_t cols) {
    qltc::BitMatrix m(d.size(), cols);
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (d[r][c]) m.set(r, c);
    return m;
}

inline Word to_word(const qltc::BitVector& v) {
    Word w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v.get(i) ? 1 : 0;
    return w;
}

inline Word word_of_index(std::uint64_t x, std::size_t len) {
    Word w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = (x >> i) & 1U;
    return w;
}

inline int weight(const Word& w) {
    int s = 0;
    for (int b : w) s += b;
    return s;
}

/// Triple loop, result reduced mod 2.
inline Dense mul(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
    Dense out(a.size(), Word(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s % 2;
        }
    return out;
}

inline Word apply(const Dense& a, const Word& x) {
    Word y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        int s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += a[i][k] * x[k];
        y[i] = s % 2;
    }
    return y;
}

inline bool is_zero(const Word& w) {
    for (int b : w)
        if (b) return false;
    return true;
}

/// Every element of the row span, as a set of words.
inline std::set<Word> row_span(const Dense& a, std::size_t cols) {
    std::set<Word> span;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
        Word w(cols, 0);
        for (std::size_t r = 0; r < a.size(); ++r)
            if ((mask >> r) & 1U)
                for (std::size_t c = 0; c < cols; ++c) w[c] ^= a[r][c];
        span.insert(w);
    }
    return span;
}

/// log2 of the row span size.
inline std::size_t rank(const Dense& a, std::size_t cols) {
    const std::size_t size = row_span(a, cols).size();
    std::size_t r = 0;
    while ((std::size_t{1} << r) < size) ++r;
    return r;
}

/// Every x with a·x = 0.
inline std::vector<Word> kernel(const Dense& a, std::size_t cols) {
    std::vector<Word> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x) {
        Word w = word_of_index(x, cols);
        if (is_zero(naive::apply(a, w))) out.push_back(w);
    }
    return out;
}

inline std::optional<int> classical_distance(const Dense& h, std::size_t t) {
    std::optional<int> best;
    for (const auto& c : kernel(h, t))
        if (!is_zero(c) && (!best || weight(c) < *best)) best = weight(c);
    return best;
}

inline int distance_to_code(const Word& x, const std::vector<Word>& code) {
    int best = static_cast<int>(x.size()) + 1;
    for (const auto& c : code) {
        int d = 0;
        for (std::size_t i = 0; i < x.size(); ++i) d += x[i] ^ c[i];
        best = std::min(best, d);
    }
    return best;
}

/// min over all x outside ker(H) of t|Hx| / (s d(x, ker H)), sweeping all
/// 2^t words; empty when there is no such x or no checks.
inline std::optional<qltc::Rational> soundness(const Dense& h, std::size_t t) {
    const std::size_t s = h.size();
    if (s == 0) return std::nullopt;
    const auto code = kernel(h, t);
    std::optional<qltc::Rational> best;
    for (std::uint64_t xi = 0; xi < (std::uint64_t{1} << t); ++xi) {
        const Word x = word_of_index(xi, t);
        const int syndrome = weight(naive::apply(h, x));
        if (syndrome == 0) continue;
        const qltc::Rational ratio(static_cast<std::int64_t>(t) * syndrome,
                                   static_cast<std::int64_t>(s) * distance_to_code(x, code));
        if (!best || ratio < *best) best = ratio;
    }
    return best;
}

/// min weight over ker(checks) minus rowspan(excluded).
inline std::optional<int> quantum_distance(const Dense& checks, const Dense& excluded, std::size_t n) {
    const auto stabilizers = row_span(excluded, n);
    std::optional<int> best;
    for (const auto& v : kernel(checks, n))
        if (!stabilizers.count(v) && (!best || weight(v) < *best)) best = weight(v);
    return best;
}

inline qltc::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    qltc::BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c);
    return m;
}

/// A random valid complex of `terms` spaces with dimensions in [0, max_dim]:
/// each differential is built to vanish on the image of the previous one.
inline qltc::ChainComplex random_complex(std::mt19937_64& rng, std::size_t terms, std::size_t max_dim) {
    std::uniform_int_distribution<std::size_t> dim(0, max_dim);
    std::vector<std::size_t> spaces;
    for (std::size_t i = 0; i < terms; ++i) spaces.push_back(dim(rng));
    std::vector<qltc::BitMatrix> diffs;
    for (std::size_t i = 0; i + 1 < terms; ++i) {
        const std::size_t cols = spaces[i], rows = spaces[i + 1];
        qltc::BitMatrix d(rows, cols);
        if (i == 0) {
            d = random_matrix(rng, rows, cols);
        } else {
            // Rows drawn from the left annihilator of the previous differential:
            // vectors y with y . prev = 0, i.e. the kernel of prev^T.
            const auto allowed = qltc::kernel_basis(qltc::transpose(diffs.back()));
            std::bernoulli_distribution coin(0.5);
            for (std::size_t r = 0; r < rows; ++r) {
                qltc::BitVector row(cols);
                for (const auto& v : allowed)
                    if (coin(rng)) row ^= v;
                d.set_row(r, row);
            }
        }
        diffs.push_back(d);
    }
    return {spaces, diffs};
}

}  // namespace naive
