#pragma once

// Exact code parameters by exhaustive enumeration.
//
// Every search is bounded by an enumeration cap (the number of words the
// search may visit); exceeding it throws CapExceeded instead of returning an
// approximation.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qltc/bit_matrix.hpp"
#include "qltc/chain_complex.hpp"
#include "qltc/rational.hpp"

namespace qltc {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kMinimumCap = std::uint64_t{1} << 10;

/// Minimum distance; infinite when there is nothing to minimise over.
class Distance {
  public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::size_t d) : value_(d) {}
    static constexpr Distance infinite() { return Distance(); }

    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
    constexpr std::size_t value() const { return value_.value(); }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend constexpr Distance operator*(Distance a, Distance b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return Distance(*a.value_ * *b.value_);
    }
    friend constexpr bool operator==(const Distance&, const Distance&) = default;

  private:
    std::optional<std::size_t> value_;
};

/// Soundness of a classical parity-check matrix: an exact rational, or
/// undefined with a reason (no checks, code is the whole space).
struct Soundness {
    std::optional<Rational> value;
    std::string reason;

    bool defined() const noexcept { return value.has_value(); }
    static Soundness of(Rational r) { return {r, {}}; }
    static Soundness undefined(std::string why) { return {std::nullopt, std::move(why)}; }
    friend bool operator==(const Soundness&, const Soundness&) = default;
};

namespace detail {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }
inline std::uint64_t pow2(std::size_t k) { return k >= 64 ? kSaturated : std::uint64_t{1} << k; }

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // r * (n - k + i) / i stays integral at every step
        const std::uint64_t num = n - k + i;
        if (r > kSaturated / num) return kSaturated;
        r = r * num / i;
    }
    return r;
}

/// Column i of `m` packed into words, for syndrome accumulation.
inline std::vector<word_t> packed_columns(const BitMatrix& m) {
    const BitMatrix t = transpose(m);
    std::vector<word_t> out(t.rows() * t.words_per_row());
    for (std::size_t c = 0; c < t.rows(); ++c) std::copy_n(t.row(c).begin(), t.words_per_row(), out.begin() + c * t.words_per_row());
    return out;
}

/// Minimum weight over ker(checks) minus span(excluded), where the excluded
/// subspace lies inside the kernel.
///
/// Two exact strategies are available: walking every kernel element outside
/// the excluded span (Gray code over a basis split into excluded and
/// complementary parts), or scanning all words in order of increasing weight
/// until one qualifies. The weight scan runs while its next level is cheaper
/// than the kernel walk; the kernel walk takes over otherwise.
inline Distance min_weight_outside(const BitMatrix& checks, const RowBasis& excluded, std::uint64_t cap, const std::string& what) {
    const std::size_t n = checks.cols();
    const auto kernel = kernel_basis(checks);
    RowBasis span = excluded;
    std::vector<BitVector> logical;
    for (const auto& v : kernel)
        if (span.insert(v)) logical.push_back(v);
    if (logical.empty()) return Distance::infinite();

    const std::size_t stride = words_for(n);
    const std::size_t r = excluded.dim();
    const std::uint64_t kernel_cost = sat_mul(pow2(logical.size()) - 1, pow2(r));

    auto walk_kernel = [&]() {
        std::vector<word_t> logical_part(stride, 0), v(stride);
        std::size_t best = n + 1;
        const std::uint64_t outer = pow2(logical.size());
        const std::uint64_t inner = pow2(r);
        for (std::uint64_t i = 1; i < outer; ++i) {
            xor_words(logical_part, logical[static_cast<std::size_t>(std::countr_zero(i))].words());
            std::copy(logical_part.begin(), logical_part.end(), v.begin());
            best = std::min(best, popcount_words(v));
            for (std::uint64_t j = 1; j < inner; ++j) {
                xor_words(v, excluded.vector_words(static_cast<std::size_t>(std::countr_zero(j))));
                best = std::min(best, popcount_words(v));
            }
        }
        return Distance(best);
    };

    // Weight-ordered scan: depth-first over index sets with incremental
    // syndromes.
    const std::size_t sstride = words_for(checks.rows());
    const auto columns = packed_columns(checks);
    auto scan_weight = [&](std::size_t w) -> bool {
        std::vector<word_t> synd((w + 1) * sstride, 0);
        std::vector<std::size_t> idx(w);
        std::vector<word_t> candidate(stride);
        bool found = false;
        auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
            if (found) return;
            if (depth == w) {
                if (!words_zero({synd.data() + w * sstride, sstride})) return;
                std::fill(candidate.begin(), candidate.end(), 0);
                for (std::size_t c : idx) candidate[c / kWordBits] |= word_t{1} << (c % kWordBits);
                excluded.reduce(candidate);
                if (!words_zero(candidate)) found = true;
                return;
            }
            for (std::size_t c = start; c + (w - depth) <= n; ++c) {
                idx[depth] = c;
                std::span<word_t> next{synd.data() + (depth + 1) * sstride, sstride};
                std::copy_n(synd.data() + depth * sstride, sstride, next.begin());
                xor_words(next, {columns.data() + c * sstride, sstride});
                self(self, depth + 1, c + 1);
                if (found) return;
            }
        };
        rec(rec, 0, 0);
        return found;
    };

    std::uint64_t scanned = 0;
    for (std::size_t w = 1; w <= n; ++w) {
        const std::uint64_t level = binomial(n, w);
        if (sat_add(scanned, level) > std::min(kernel_cost, cap)) {
            if (kernel_cost <= cap) return walk_kernel();
            throw CapExceeded(what + " (kernel walk needs " + std::to_string(kernel_cost) + " words, weight scan beyond weight " +
                                  std::to_string(w - 1) + ")",
                              cap);
        }
        scanned += level;
        if (scan_weight(w)) return Distance(w);
    }
    return walk_kernel();  // unreachable: a logical of weight <= n exists
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classical codes

inline std::size_t classical_dimension(const ClassicalCode& c) { return c.t() - c.rank(); }

/// Minimum weight of a nonzero codeword of ker(H); infinite when ker(H) = {0}.
inline Distance classical_distance(const ClassicalCode& c, std::uint64_t cap = kDefaultCap) {
    return detail::min_weight_outside(c.h(), RowBasis(c.t()), cap, "classical distance");
}

/// min over codewords c of |x + c|.
inline std::size_t distance_to_code(const BitVector& x, const ClassicalCode& c, std::uint64_t cap = kDefaultCap) {
    if (x.size() != c.t()) throw DimensionError("distance_to_code: word length does not match code length");
    const auto kernel = kernel_basis(c.h());
    if (detail::pow2(kernel.size()) > cap) throw CapExceeded("distance_to_code over a " + std::to_string(kernel.size()) + "-dimensional code", cap);
    BitVector v = x;
    std::size_t best = v.weight();
    for (std::uint64_t i = 1; i < detail::pow2(kernel.size()); ++i) {
        v ^= kernel[static_cast<std::size_t>(std::countr_zero(i))];
        best = std::min(best, v.weight());
    }
    return best;
}

/// The largest rho with t |Hx| >= rho s d(x, ker H) for every word x.
///
/// Both |Hx| and d(x, ker H) depend only on the syndrome of x, and the
/// distance is the weight of the coset leader: the fewest columns of H that
/// sum to the syndrome. A breadth-first search over the column space of H,
/// with the columns as generators, yields every coset leader weight; the
/// minimum ratio over nonzero syndromes is the soundness.
inline Soundness classical_soundness(const ClassicalCode& c, std::uint64_t cap = kDefaultCap) {
    const std::size_t s = c.s(), t = c.t();
    if (s == 0) return Soundness::undefined("no checks");
    if (c.rank() == 0) return Soundness::undefined("code is the whole space");
    if (c.rank() > 30 || detail::pow2(c.rank()) > cap)
        throw CapExceeded("soundness over " + std::to_string(detail::pow2(c.rank())) + " syndromes", cap);

    const BitMatrix& h = c.h();
    RowBasis colspace(s);
    for (std::size_t j = 0; j < t; ++j) colspace.insert(h.col_vector(j));
    const std::size_t r = colspace.dim();
    const std::uint32_t states = std::uint32_t{1} << r;

    std::vector<std::uint32_t> generators;
    for (std::size_t j = 0; j < t; ++j) {
        const auto col = h.col_vector(j);
        if (const auto g = static_cast<std::uint32_t>(colspace.coordinates(col.words()))) generators.push_back(g);
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    constexpr std::uint8_t kUnseen = 0xFF;
    std::vector<std::uint8_t> leader(states, kUnseen);
    std::vector<std::uint32_t> order;
    order.reserve(states);
    leader[0] = 0;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::uint32_t a = order[head];
        for (std::uint32_t g : generators) {
            const std::uint32_t b = a ^ g;
            if (leader[b] == kUnseen) {
                leader[b] = static_cast<std::uint8_t>(leader[a] + 1);
                order.push_back(b);
            }
        }
    }

    // Walk the syndromes in Gray order to get their weights.
    std::vector<word_t> syndrome(words_for(s), 0);
    std::uint64_t best_num = 0, best_den = 0;
    std::uint32_t code = 0;
    for (std::uint32_t i = 1; i < states; ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        detail::xor_words(syndrome, colspace.vector_words(bit));
        code ^= std::uint32_t{1} << bit;
        const std::uint64_t num = std::uint64_t{t} * detail::popcount_words(syndrome);
        const std::uint64_t den = std::uint64_t{s} * leader[code];
        if (best_den == 0 || num * best_den < best_num * den) {
            best_num = num;
            best_den = den;
        }
    }
    return Soundness::of(Rational(static_cast<std::int64_t>(best_num), static_cast<std::int64_t>(best_den)));
}

inline std::size_t locality(const ClassicalCode& c) { return max_weight(c.h()); }

// ---------------------------------------------------------------------------
// CSS codes

inline std::size_t quantum_dimension(const CssCode& q) { return q.n() - rank(q.hx()) - rank(q.hz()); }

struct QuantumDistances {
    Distance dx;
    Distance dz;
    friend bool operator==(const QuantumDistances&, const QuantumDistances&) = default;
};

inline RowBasis row_space(const BitMatrix& m) {
    RowBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row_vector(r));
    return basis;
}

inline Distance quantum_x_distance(const CssCode& q, std::uint64_t cap = kDefaultCap) {
    return detail::min_weight_outside(q.hz(), row_space(q.hx()), cap, "X distance");
}

inline Distance quantum_z_distance(const CssCode& q, std::uint64_t cap = kDefaultCap) {
    return detail::min_weight_outside(q.hx(), row_space(q.hz()), cap, "Z distance");
}

/// d_X over ker(H_Z) \ im(H_X^T) and d_Z over ker(H_X) \ im(H_Z^T).
inline QuantumDistances quantum_distances(const CssCode& q, std::uint64_t cap = kDefaultCap) {
    return {quantum_x_distance(q, cap), quantum_z_distance(q, cap)};
}

inline std::size_t locality(const CssCode& q) { return std::max(max_weight(q.hx()), max_weight(q.hz())); }

/// Component soundness: the smaller of the soundnesses of the H_X and H_Z
/// codes. If both components have soundness rho the CSS code has soundness at
/// least rho; conversely a CSS soundness rho gives each component at least
/// rho/2. The value reported here is the component minimum.
struct QuantumSoundness {
    Soundness x;  ///< code with parity-check matrix H_X
    Soundness z;  ///< code with parity-check matrix H_Z
    Soundness component_min;
    std::string undefined_side;  ///< "X", "Z" or empty
};

inline QuantumSoundness quantum_soundness(const CssCode& q, std::uint64_t cap = kDefaultCap) {
    QuantumSoundness out;
    out.x = classical_soundness(ClassicalCode::from_matrix(q.hx()), cap);
    out.z = classical_soundness(ClassicalCode::from_matrix(q.hz()), cap);
    if (!out.x.defined()) {
        out.undefined_side = "X";
        out.component_min = Soundness::undefined("X side: " + out.x.reason);
    } else if (!out.z.defined()) {
        out.undefined_side = "Z";
        out.component_min = Soundness::undefined("Z side: " + out.z.reason);
    } else {
        out.component_min = Soundness::of(std::min(*out.x.value, *out.z.value));
    }
    return out;
}

}  // namespace qltc
