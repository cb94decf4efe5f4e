#pragma once

// Dense bit-packed linear algebra over F2.
//
// Storage is row-major, one run of 64-bit words per row. Bits past the last
// logical column of a row (and past the end of a vector) are always zero, so
// word-wise equality and popcount are exact.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qltc/errors.hpp"

namespace qltc {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

namespace detail {

inline void xor_words(std::span<word_t> dst, std::span<const word_t> src) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

inline std::size_t popcount_words(std::span<const word_t> w) noexcept {
    std::size_t n = 0;
    for (word_t x : w) n += static_cast<std::size_t>(std::popcount(x));
    return n;
}

inline bool words_zero(std::span<const word_t> w) noexcept {
    return std::all_of(w.begin(), w.end(), [](word_t x) { return x == 0; });
}

inline bool test_bit(std::span<const word_t> w, std::size_t i) noexcept {
    return (w[i / kWordBits] >> (i % kWordBits)) & 1U;
}

/// Index of the lowest set bit, or `npos` when all words are zero.
inline std::size_t lowest_bit(std::span<const word_t> w) noexcept {
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w[k]));
    return static_cast<std::size_t>(-1);
}

/// Calls `f(i)` for every set bit index in ascending order.
template <typename F>
void for_each_bit(std::span<const word_t> w, F&& f) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        word_t x = w[k];
        while (x) {
            f(k * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
}

}  // namespace detail

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                v.set(i);
            else if (bits[i] != '0')
                throw ParseError("bit string contains a character other than 0/1");
        }
        return v;
    }

    static BitVector unit(std::size_t len, std::size_t i) {
        BitVector v(len);
        v.set(i);
        return v;
    }

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    bool get(std::size_t i) const noexcept { return detail::test_bit(words_, i); }
    void set(std::size_t i, bool value = true) noexcept {
        const word_t mask = word_t{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    std::size_t weight() const noexcept { return detail::popcount_words(words_); }
    bool is_zero() const noexcept { return detail::words_zero(words_); }

    std::span<const word_t> words() const noexcept { return words_; }
    std::span<word_t> words() noexcept { return words_; }

    BitVector& operator^=(const BitVector& other) {
        if (other.len_ != len_) throw DimensionError("BitVector xor: length mismatch");
        detail::xor_words(words_, other.words_);
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

  private:
    std::size_t len_ = 0;
    std::vector<word_t> words_;
};

inline std::size_t weight(const BitVector& v) noexcept { return v.weight(); }

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    /// Builds a matrix from equal-length '0'/'1' row strings. `cols` is only
    /// consulted when `rows` is empty.
    static BitMatrix from_strings(const std::vector<std::string>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows.front().size();
        BitMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw DimensionError("from_strings: ragged rows");
            m.set_row(r, BitVector::from_string(rows[r]));
        }
        return m;
    }

    static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
        BitMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static BitMatrix from_columns(const std::vector<BitVector>& columns, std::size_t rows) {
        BitMatrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
            detail::for_each_bit(columns[c].words(), [&](std::size_t r) { m.set(r, c); });
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return stride_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const noexcept { return detail::test_bit(row(r), c); }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        const word_t mask = word_t{1} << (c % kWordBits);
        word_t& w = data_[r * stride_ + c / kWordBits];
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) noexcept {
        data_[r * stride_ + c / kWordBits] ^= word_t{1} << (c % kWordBits);
    }

    std::span<const word_t> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
    std::span<word_t> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }

    BitVector row_vector(std::size_t r) const {
        BitVector v(cols_);
        std::copy_n(row(r).begin(), stride_, v.words().begin());
        return v;
    }
    BitVector col_vector(std::size_t c) const {
        BitVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, c)) v.set(r);
        return v;
    }
    void set_row(std::size_t r, const BitVector& v) {
        if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
        std::copy_n(v.words().begin(), stride_, row(r).begin());
    }

    /// row[dst] ^= row[src]
    void add_row(std::size_t src, std::size_t dst) noexcept {
        word_t* d = data_.data() + dst * stride_;
        const word_t* s = data_.data() + src * stride_;
        for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b) noexcept {
        if (a == b) return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    bool is_zero() const noexcept { return detail::words_zero(data_); }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// One line of '0'/'1' per row, each terminated by '\n'.
    std::string to_string() const {
        std::string s;
        s.reserve(rows_ * (cols_ + 1));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
            s.push_back('\n');
        }
        return s;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<word_t> data_;
};

// ---------------------------------------------------------------------------
// Elementary operations

inline BitVector mul(const BitMatrix& a, const BitVector& v) {
    if (a.cols() != v.size()) throw DimensionError("mul: matrix has " + std::to_string(a.cols()) +
                                                   " columns but vector has length " + std::to_string(v.size()));
    BitVector out(a.rows());
    const auto vw = v.words();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto rw = a.row(r);
        word_t acc = 0;
        for (std::size_t k = 0; k < rw.size(); ++k) acc ^= rw[k] & vw[k];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

inline BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mul: inner dimensions differ");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = out.row(r);
        detail::for_each_bit(a.row(r), [&](std::size_t k) { detail::xor_words(dst, b.row(k)); });
    }
    return out;
}

inline BitMatrix transpose(const BitMatrix& a) {
    BitMatrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        detail::for_each_bit(a.row(r), [&](std::size_t c) { t.set(c, r); });
    return t;
}

inline BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shape mismatch");
    BitMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) detail::xor_words(out.row(r), b.row(r));
    return out;
}

inline std::vector<std::size_t> row_weights(const BitMatrix& a) {
    std::vector<std::size_t> w(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) w[r] = detail::popcount_words(a.row(r));
    return w;
}

inline std::vector<std::size_t> col_weights(const BitMatrix& a) {
    std::vector<std::size_t> w(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) detail::for_each_bit(a.row(r), [&](std::size_t c) { ++w[c]; });
    return w;
}

/// Largest row or column weight; 0 for an empty matrix.
inline std::size_t max_weight(const BitMatrix& a) {
    std::size_t m = 0;
    for (std::size_t w : row_weights(a)) m = std::max(m, w);
    for (std::size_t w : col_weights(a)) m = std::max(m, w);
    return m;
}

inline BitMatrix row_submatrix(const BitMatrix& a, std::span<const std::size_t> rows) {
    BitMatrix out(rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) std::copy_n(a.row(rows[i]).begin(), a.words_per_row(), out.row(i).begin());
    return out;
}

/// Kronecker product. Row (i, j) lands at i * b.rows() + j and column (p, q)
/// at p * b.cols() + q.
inline BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        detail::for_each_bit(a.row(i), [&](std::size_t p) {
            for (std::size_t j = 0; j < b.rows(); ++j) {
                const std::size_t r = i * b.rows() + j;
                detail::for_each_bit(b.row(j), [&](std::size_t q) { out.set(r, p * b.cols() + q); });
            }
        });
    }
    return out;
}

/// Block grid entry; `std::nullopt` stands for a zero block.
using BlockGrid = std::vector<std::vector<std::optional<BitMatrix>>>;

/// Assembles a block matrix with explicit block-row heights and block-column
/// widths. Present blocks must match the declared shape of their cell.
inline BitMatrix block(const BlockGrid& grid, std::span<const std::size_t> heights, std::span<const std::size_t> widths) {
    if (grid.size() != heights.size()) throw DimensionError("block: grid row count does not match heights");
    std::size_t total_rows = 0, total_cols = 0;
    for (std::size_t h : heights) total_rows += h;
    for (std::size_t w : widths) total_cols += w;
    BitMatrix out(total_rows, total_cols);
    std::size_t row_off = 0;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        if (grid[gi].size() != widths.size()) throw DimensionError("block: grid column count does not match widths");
        std::size_t col_off = 0;
        for (std::size_t gj = 0; gj < widths.size(); ++gj) {
            if (const auto& blk = grid[gi][gj]) {
                if (blk->rows() != heights[gi] || blk->cols() != widths[gj])
                    throw DimensionError("block: block (" + std::to_string(gi) + "," + std::to_string(gj) +
                                         ") has inconsistent dimensions");
                for (std::size_t r = 0; r < blk->rows(); ++r)
                    detail::for_each_bit(blk->row(r), [&](std::size_t c) { out.set(row_off + r, col_off + c); });
            }
            col_off += widths[gj];
        }
        row_off += heights[gi];
    }
    return out;
}

/// Assembles a block matrix, inferring each block-row height and block-column
/// width from the blocks present. Every block row and column needs at least
/// one present block.
inline BitMatrix block(const BlockGrid& grid) {
    const std::size_t grid_cols = grid.empty() ? 0 : grid.front().size();
    std::vector<std::optional<std::size_t>> heights(grid.size()), widths(grid_cols);
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        if (grid[gi].size() != grid_cols) throw DimensionError("block: ragged grid");
        for (std::size_t gj = 0; gj < grid_cols; ++gj) {
            const auto& blk = grid[gi][gj];
            if (!blk) continue;
            if (heights[gi] && *heights[gi] != blk->rows())
                throw DimensionError("block: blocks in grid row " + std::to_string(gi) + " differ in height");
            if (widths[gj] && *widths[gj] != blk->cols())
                throw DimensionError("block: blocks in grid column " + std::to_string(gj) + " differ in width");
            heights[gi] = blk->rows();
            widths[gj] = blk->cols();
        }
    }
    std::vector<std::size_t> h, w;
    for (std::size_t gi = 0; gi < heights.size(); ++gi) {
        if (!heights[gi]) throw DimensionError("block: grid row " + std::to_string(gi) + " has no blocks");
        h.push_back(*heights[gi]);
    }
    for (std::size_t gj = 0; gj < widths.size(); ++gj) {
        if (!widths[gj]) throw DimensionError("block: grid column " + std::to_string(gj) + " has no blocks");
        w.push_back(*widths[gj]);
    }
    return block(grid, h, w);
}

// ---------------------------------------------------------------------------
// Elimination

/// Incrementally maintained, fully reduced basis of a subspace of F2^len.
///
/// Every basis vector has a distinct pivot (its lowest set bit) and no other
/// basis vector has that pivot bit set, so membership and coordinates can be
/// read off in one pass.
class RowBasis {
  public:
    explicit RowBasis(std::size_t len) : len_(len), stride_(words_for(len)) {}

    std::size_t dim() const noexcept { return pivots_.size(); }
    std::size_t length() const noexcept { return len_; }
    std::span<const std::size_t> pivots() const noexcept { return pivots_; }

    std::span<const word_t> vector_words(std::size_t i) const noexcept { return {data_.data() + i * stride_, stride_}; }
    BitVector vector(std::size_t i) const {
        BitVector v(len_);
        std::copy_n(vector_words(i).begin(), stride_, v.words().begin());
        return v;
    }

    /// Reduces `w` in place against the basis; the result is zero iff `w`
    /// was in the span.
    void reduce(std::span<word_t> w) const noexcept {
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            if (detail::test_bit(w, pivots_[i])) detail::xor_words(w, vector_words(i));
    }

    bool contains(const BitVector& v) const {
        check_len(v);
        std::vector<word_t> w(v.words().begin(), v.words().end());
        reduce(w);
        return detail::words_zero(w);
    }

    /// Adds `v` if it is independent of the current basis.
    bool insert(const BitVector& v) {
        check_len(v);
        std::vector<word_t> w(v.words().begin(), v.words().end());
        reduce(w);
        const std::size_t p = detail::lowest_bit(w);
        if (p == static_cast<std::size_t>(-1)) return false;
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            std::span<word_t> b{data_.data() + i * stride_, stride_};
            if (detail::test_bit(b, p)) detail::xor_words(b, w);
        }
        data_.insert(data_.end(), w.begin(), w.end());
        pivots_.push_back(p);
        return true;
    }

    /// Coordinates of an in-span vector relative to this basis, packed into
    /// the low `dim()` bits. Only meaningful when `contains(v)`.
    std::uint64_t coordinates(std::span<const word_t> w) const noexcept {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < pivots_.size() && i < 64; ++i)
            if (detail::test_bit(w, pivots_[i])) c |= std::uint64_t{1} << i;
        return c;
    }

  private:
    void check_len(const BitVector& v) const {
        if (v.size() != len_) throw DimensionError("RowBasis: vector length mismatch");
    }

    std::size_t len_;
    std::size_t stride_;
    std::vector<word_t> data_;
    std::vector<std::size_t> pivots_;
};

namespace detail {

/// Reduced row echelon form in place. Returns the pivot column of each
/// leading row; rows past the returned size are zero. When `rhs` is given the
/// same row operations are applied to it.
inline std::vector<std::size_t> rref(BitMatrix& m, BitVector* rhs = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        if (rhs && p != r) {
            const bool bp = rhs->get(p), br = rhs->get(r);
            rhs->set(p, br);
            rhs->set(r, bp);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && m.get(i, c)) {
                m.add_row(r, i);
                if (rhs && rhs->get(r)) rhs->flip(i);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(const BitMatrix& a) {
    BitMatrix m = a;
    return detail::rref(m).size();
}

/// Basis of ker(a); one vector per free column, in ascending column order.
inline std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    BitMatrix m = a;
    const auto pivots = detail::rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(a.cols());
        v.set(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (m.get(r, f)) v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with a * x = b, or nullopt when b is outside the column span.
inline std::optional<BitVector> solve(const BitMatrix& a, const BitVector& b) {
    if (a.rows() != b.size()) throw DimensionError("solve: right-hand side length does not match row count");
    BitMatrix m = a;
    BitVector rhs = b;
    const auto pivots = detail::rref(m, &rhs);
    for (std::size_t r = pivots.size(); r < a.rows(); ++r)
        if (rhs.get(r)) return std::nullopt;
    BitVector x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (rhs.get(r)) x.set(pivots[r]);
    return x;
}

/// Row basis of the span of the rows of `a`, keeping the first independent
/// rows in ascending order.
inline std::vector<std::size_t> independent_rows(const BitMatrix& a) {
    RowBasis basis(a.cols());
    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (basis.insert(a.row_vector(r))) kept.push_back(r);
    return kept;
}

struct RowPartition {
    std::vector<std::size_t> nonsingular;  ///< rows forming an invertible square submatrix
    std::vector<std::size_t> rest;
};

/// Splits the rows of a matrix with independent columns into a set indexing
/// an invertible square submatrix and its complement. Rows are taken greedily
/// in ascending order whenever they raise the running rank.
inline RowPartition nonsingular_row_partition(const BitMatrix& a) {
    RowPartition part;
    RowBasis basis(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (basis.dim() < a.cols() && basis.insert(a.row_vector(r)))
            part.nonsingular.push_back(r);
        else
            part.rest.push_back(r);
    }
    if (part.nonsingular.size() != a.cols())
        throw DimensionError("nonsingular_row_partition: columns are linearly dependent (rank " +
                             std::to_string(part.nonsingular.size()) + " < " + std::to_string(a.cols()) + ")");
    return part;
}

}  // namespace qltc
