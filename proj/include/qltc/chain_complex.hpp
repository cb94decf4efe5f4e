#pragma once

// Chain complexes over F2 and the code views built on them.
//
// A complex C_k -> ... -> C_0 is stored top-down: spaces()[i] is the
// dimension of C_{k-i} and diffs()[i] is the differential out of that space,
// a (dim C_{k-i-1}) x (dim C_{k-i}) matrix.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qltc/bit_matrix.hpp"

namespace qltc {

class ChainComplex {
  public:
    ChainComplex() = default;

    ChainComplex(std::vector<std::size_t> spaces, std::vector<BitMatrix> diffs, std::vector<std::string> labels = {})
        : spaces_(std::move(spaces)), diffs_(std::move(diffs)), labels_(std::move(labels)) {
        if (spaces_.empty()) throw InvalidComplex("a chain complex needs at least one space");
        if (diffs_.size() + 1 != spaces_.size())
            throw InvalidComplex("a complex with " + std::to_string(spaces_.size()) + " spaces needs " +
                                 std::to_string(spaces_.size() - 1) + " differentials");
        if (!labels_.empty() && labels_.size() != spaces_.size())
            throw InvalidComplex("label count does not match space count");
    }

    std::size_t length() const noexcept { return spaces_.size(); }
    std::size_t top_degree() const noexcept { return spaces_.size() - 1; }

    const std::vector<std::size_t>& spaces() const noexcept { return spaces_; }
    const std::vector<BitMatrix>& diffs() const noexcept { return diffs_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// dim C_degree
    std::size_t dim(std::size_t degree) const { return spaces_.at(top_degree() - degree); }

    /// The differential C_degree -> C_{degree-1}; degree >= 1.
    const BitMatrix& differential(std::size_t degree) const {
        if (degree == 0 || degree > top_degree()) throw InvalidComplex("no differential out of degree " + std::to_string(degree));
        return diffs_[top_degree() - degree];
    }

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

  private:
    std::vector<std::size_t> spaces_;
    std::vector<BitMatrix> diffs_;
    std::vector<std::string> labels_;
};

struct ValidationReport {
    bool ok = true;
    /// Degree d of the first failing pair (d_d, d_{d-1}), or of the
    /// misshapen differential d_d.
    std::optional<std::size_t> degree;
    std::string message;
};

inline ValidationReport validate(const ChainComplex& c) {
    const std::size_t k = c.top_degree();
    for (std::size_t i = 0; i < c.diffs().size(); ++i) {
        const BitMatrix& d = c.diffs()[i];
        if (d.rows() != c.spaces()[i + 1] || d.cols() != c.spaces()[i])
            return {false, k - i,
                    "differential d_" + std::to_string(k - i) + " is " + std::to_string(d.rows()) + "x" +
                        std::to_string(d.cols()) + ", expected " + std::to_string(c.spaces()[i + 1]) + "x" +
                        std::to_string(c.spaces()[i])};
    }
    for (std::size_t i = 0; i + 1 < c.diffs().size(); ++i) {
        if (!mul(c.diffs()[i + 1], c.diffs()[i]).is_zero())
            return {false, k - i,
                    "composite of (d_" + std::to_string(k - i) + ", d_" + std::to_string(k - i - 1) + ") is nonzero"};
    }
    return {};
}

inline void require_valid(const ChainComplex& c, const char* context) {
    if (const auto report = validate(c); !report.ok) throw InvalidComplex(std::string(context) + ": " + report.message);
}

/// Reverses every arrow: spaces in reverse order, differentials transposed.
inline ChainComplex cocomplex(const ChainComplex& c) {
    std::vector<std::size_t> spaces(c.spaces().rbegin(), c.spaces().rend());
    std::vector<BitMatrix> diffs;
    for (auto it = c.diffs().rbegin(); it != c.diffs().rend(); ++it) diffs.push_back(transpose(*it));
    std::vector<std::string> labels(c.labels().rbegin(), c.labels().rend());
    return {std::move(spaces), std::move(diffs), std::move(labels)};
}

namespace detail {

struct Summand {
    std::size_t left_degree;
    std::size_t right_degree;
    std::size_t dim;
};

/// Summands X_a (x) Y_b of (X x Y)_p, highest left degree first.
inline std::vector<Summand> product_summands(const ChainComplex& x, const ChainComplex& y, std::size_t p) {
    std::vector<Summand> out;
    for (std::size_t a = std::min(p, x.top_degree()) + 1; a-- > 0;) {
        const std::size_t b = p - a;
        if (b > y.top_degree()) break;
        out.push_back({a, b, x.dim(a) * y.dim(b)});
    }
    return out;
}

}  // namespace detail

/// Homological product X x Y with (X x Y)_p = sum_a X_a (x) Y_{p-a}.
///
/// Summands of each space are ordered by descending left degree, which is
/// ascending position in X's top-down space list; each summand is indexed
/// left-factor-major. The differential sends u (x) v to du (x) v + u (x) dv.
inline ChainComplex homological_product(const ChainComplex& x, const ChainComplex& y) {
    require_valid(x, "homological_product (left factor)");
    require_valid(y, "homological_product (right factor)");
    const std::size_t top = x.top_degree() + y.top_degree();
    const bool labelled = !x.labels().empty() && !y.labels().empty();

    std::vector<std::size_t> spaces;
    std::vector<std::string> labels;
    for (std::size_t p = top + 1; p-- > 0;) {
        std::size_t dim = 0;
        std::string label;
        for (const auto& s : detail::product_summands(x, y, p)) {
            dim += s.dim;
            if (labelled) {
                if (!label.empty()) label += " + ";
                label += x.labels()[x.top_degree() - s.left_degree] + "*" + y.labels()[y.top_degree() - s.right_degree];
            }
        }
        spaces.push_back(dim);
        if (labelled) labels.push_back(std::move(label));
    }

    std::vector<BitMatrix> diffs;
    for (std::size_t p = top; p >= 1; --p) {
        const auto cols = detail::product_summands(x, y, p);
        const auto rows = detail::product_summands(x, y, p - 1);
        std::vector<std::size_t> heights, widths;
        for (const auto& s : rows) heights.push_back(s.dim);
        for (const auto& s : cols) widths.push_back(s.dim);
        BlockGrid grid(rows.size(), std::vector<std::optional<BitMatrix>>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto [a, b, dim] = cols[j];
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (a >= 1 && rows[i].left_degree == a - 1 && rows[i].right_degree == b)
                    grid[i][j] = kron(x.differential(a), BitMatrix::identity(y.dim(b)));
                else if (b >= 1 && rows[i].left_degree == a && rows[i].right_degree == b - 1)
                    grid[i][j] = kron(BitMatrix::identity(x.dim(a)), y.differential(b));
            }
        }
        diffs.push_back(block(grid, heights, widths));
    }
    return {std::move(spaces), std::move(diffs), std::move(labels)};
}

/// The sub-complex C_hi -> ... -> C_lo.
inline ChainComplex window(const ChainComplex& c, std::size_t hi, std::size_t lo) {
    if (lo > hi || hi > c.top_degree())
        throw InvalidComplex("window [" + std::to_string(hi) + ", " + std::to_string(lo) + "] is out of range for a complex of top degree " +
                             std::to_string(c.top_degree()));
    const std::size_t first = c.top_degree() - hi;
    const std::size_t last = c.top_degree() - lo;
    std::vector<std::size_t> spaces(c.spaces().begin() + first, c.spaces().begin() + last + 1);
    std::vector<BitMatrix> diffs(c.diffs().begin() + first, c.diffs().begin() + last);
    std::vector<std::string> labels;
    if (!c.labels().empty()) labels.assign(c.labels().begin() + first, c.labels().begin() + last + 1);
    return {std::move(spaces), std::move(diffs), std::move(labels)};
}

/// CSS code of a 3-term complex F2^{nZ} --H_Z^T--> F2^n --H_X--> F2^{nX}.
class CssCode {
  public:
    explicit CssCode(ChainComplex c) : complex_(std::move(c)) {
        if (complex_.length() != 3)
            throw InvalidComplex("a CSS code needs a 3-term complex, got " + std::to_string(complex_.length()) + " terms");
        require_valid(complex_, "CSS code");
        hz_ = transpose(complex_.diffs()[0]);
    }

    /// Builds the complex from the two check matrices.
    static CssCode from_checks(const BitMatrix& hx, const BitMatrix& hz) {
        if (hx.cols() != hz.cols()) throw DimensionError("H_X and H_Z act on different numbers of qubits");
        return CssCode(ChainComplex({hz.rows(), hx.cols(), hx.rows()}, {transpose(hz), hx}, {"z_checks", "qubits", "x_checks"}));
    }

    const ChainComplex& complex() const noexcept { return complex_; }
    const BitMatrix& hx() const noexcept { return complex_.diffs()[1]; }
    const BitMatrix& hz() const noexcept { return hz_; }
    std::size_t n() const noexcept { return complex_.spaces()[1]; }
    std::size_t nx() const noexcept { return complex_.spaces()[2]; }
    std::size_t nz() const noexcept { return complex_.spaces()[0]; }

  private:
    ChainComplex complex_;
    BitMatrix hz_;
};

/// Classical code of a 2-term complex F2^t --H--> F2^s.
class ClassicalCode {
  public:
    explicit ClassicalCode(ChainComplex c) : complex_(std::move(c)) {
        if (complex_.length() != 2)
            throw InvalidComplex("a classical code needs a 2-term complex, got " + std::to_string(complex_.length()) + " terms");
        require_valid(complex_, "classical code");
        rank_ = qltc::rank(h());
    }

    static ClassicalCode from_matrix(const BitMatrix& h) {
        return ClassicalCode(ChainComplex({h.cols(), h.rows()}, {h}, {"bits", "checks"}));
    }

    const ChainComplex& complex() const noexcept { return complex_; }
    const BitMatrix& h() const noexcept { return complex_.diffs()[0]; }
    std::size_t t() const noexcept { return complex_.spaces()[0]; }
    std::size_t s() const noexcept { return complex_.spaces()[1]; }
    std::size_t rank() const noexcept { return rank_; }
    bool independent_checks() const noexcept { return rank_ == s(); }

  private:
    ChainComplex complex_;
    std::size_t rank_ = 0;
};

inline CssCode as_css(const ChainComplex& c) { return CssCode(c); }
inline ClassicalCode as_classical(const ChainComplex& c) { return ClassicalCode(c); }

}  // namespace qltc
