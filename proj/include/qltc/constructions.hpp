#pragma once

// Named code generators.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qltc/bit_matrix.hpp"
#include "qltc/chain_complex.hpp"

namespace qltc {

/// Seeded generator with a platform-independent bounded draw (the standard
/// distributions are implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    bool coin() { return engine_() >> 63; }

  private:
    std::mt19937_64 engine_;
};

/// (l-1) x l matrix with rows e_i + e_{i+1}.
inline ClassicalCode rep_standard(std::size_t l) {
    if (l < 2) throw std::invalid_argument("repetition code length must be at least 2");
    BitMatrix h(l - 1, l);
    for (std::size_t i = 0; i + 1 < l; ++i) {
        h.set(i, i);
        h.set(i, i + 1);
    }
    return ClassicalCode::from_matrix(h);
}

/// (l-1) x l matrix with rows e_i + e_l: the same code, one heavy column.
inline ClassicalCode rep_modified(std::size_t l) {
    if (l < 2) throw std::invalid_argument("repetition code length must be at least 2");
    BitMatrix h(l - 1, l);
    for (std::size_t i = 0; i + 1 < l; ++i) {
        h.set(i, i);
        h.set(i, l - 1);
    }
    return ClassicalCode::from_matrix(h);
}

/// [7,4,3] Hamming code; column j holds the binary expansion of j + 1 with
/// the most significant bit in row 0.
inline ClassicalCode hamming74() {
    BitMatrix h(3, 7);
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t r = 0; r < 3; ++r)
            if (((j + 1) >> (2 - r)) & 1U) h.set(r, j);
    return ClassicalCode::from_matrix(h);
}

/// H_Z = [I_n | I_n], H_X = [Hhat | Hhat] on 2n qubits.
inline CssCode q_complex(const BitMatrix& hhat) {
    if (hhat.cols() == 0) throw std::invalid_argument("q_complex: Hhat needs at least one column");
    const std::size_t n = hhat.cols();
    const BitMatrix hx = block(BlockGrid{{hhat, hhat}});
    const BitMatrix hz = block(BlockGrid{{BitMatrix::identity(n), BitMatrix::identity(n)}});
    return CssCode::from_checks(hx, hz);
}

struct LdpcProfile {
    std::size_t t = 0;
    std::size_t s = 0;
    std::size_t row_weight = 1;  ///< upper bound on each row weight
    std::size_t col_weight = 1;  ///< upper bound on each column weight
    bool exact_regular = false;  ///< every row and column weight exactly at its bound
    std::size_t max_attempts = 1000;
};

/// Random s x t parity-check matrix with row and column weights at most
/// row_weight and col_weight, resampled until its rows are independent.
/// Column weights are drawn uniformly from 1..col_weight: if every column had
/// the same even weight the rows would always sum to zero.
inline ClassicalCode random_ldpc(const LdpcProfile& p, std::uint64_t seed) {
    if (p.s > p.t) throw std::invalid_argument("random_ldpc: more checks than bits");
    if (p.s == 0) return ClassicalCode::from_matrix(BitMatrix(0, p.t));
    if (p.row_weight == 0 || p.col_weight == 0) throw std::invalid_argument("random_ldpc: weights must be at least 1");
    if (p.col_weight > p.s || p.row_weight > p.t || p.t > p.row_weight * p.s)
        throw std::invalid_argument("random_ldpc: infeasible weight profile");
    if (p.exact_regular && p.col_weight * p.t != p.row_weight * p.s)
        throw std::invalid_argument("random_ldpc: exact-regular profile needs row_weight * s == col_weight * t");
    if (p.exact_regular && p.col_weight % 2 == 0)
        throw std::invalid_argument("random_ldpc: exact-regular profile with even column weight never has independent checks");

    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
        BitMatrix h(p.s, p.t);
        std::vector<std::size_t> load(p.s, 0);
        bool ok = true;
        for (std::size_t j = 0; j < p.t && ok; ++j) {
            std::vector<std::size_t> open;
            for (std::size_t r = 0; r < p.s; ++r)
                if (load[r] < p.row_weight) open.push_back(r);
            const std::size_t w = p.exact_regular ? p.col_weight : 1 + static_cast<std::size_t>(rng.below(p.col_weight));
            if (open.size() < w) {
                ok = false;
                break;
            }
            for (std::size_t k = 0; k < w; ++k) {
                const std::size_t pick = k + static_cast<std::size_t>(rng.below(open.size() - k));
                std::swap(open[k], open[pick]);
                h.set(open[k], j);
                ++load[open[k]];
            }
        }
        if (ok && p.exact_regular)
            for (std::size_t r = 0; r < p.s; ++r) ok = ok && load[r] == p.row_weight;
        if (ok && rank(h) == p.s) return ClassicalCode::from_matrix(h);
    }
    throw std::runtime_error("random_ldpc: no matrix with independent checks after " + std::to_string(p.max_attempts) + " attempts");
}

struct CssProfile {
    std::size_t n = 4;
    std::size_t nx = 1;
    std::size_t nz = 1;
    std::size_t max_attempts = 1000;
};

/// Random CSS code: H_X with uniform nonzero rows, H_Z with rows drawn
/// uniformly from the nonzero elements of ker(H_X). Resampled until both
/// check matrices are nonzero and at least one logical qubit remains.
inline CssCode random_css(const CssProfile& p, std::uint64_t seed) {
    if (p.n == 0 || p.nx == 0 || p.nz == 0) throw std::invalid_argument("random_css: sizes must be positive");
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
        BitMatrix hx(p.nx, p.n);
        for (std::size_t r = 0; r < p.nx; ++r)
            for (std::size_t c = 0; c < p.n; ++c)
                if (rng.coin()) hx.set(r, c);
        const auto weights = row_weights(hx);
        if (std::any_of(weights.begin(), weights.end(), [](std::size_t w) { return w == 0; })) continue;
        const auto kernel = kernel_basis(hx);
        if (kernel.empty()) continue;
        BitMatrix hz(p.nz, p.n);
        bool zero_row = false;
        for (std::size_t r = 0; r < p.nz; ++r) {
            BitVector row(p.n);
            for (const auto& v : kernel)
                if (rng.coin()) row ^= v;
            zero_row = zero_row || row.is_zero();
            hz.set_row(r, row);
        }
        if (zero_row) continue;
        if (p.n - rank(hx) - rank(hz) == 0) continue;
        return CssCode::from_checks(hx, hz);
    }
    throw std::runtime_error("random_css: no admissible code after " + std::to_string(p.max_attempts) + " attempts");
}

}  // namespace qltc
