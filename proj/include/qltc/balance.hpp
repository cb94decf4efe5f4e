#pragma once

// Distance balancing of a CSS code with a classical code that has
// independent checks, plus the predicted parameters and soundness lower
// bounds for the result.
//
// For Q = (F2^{nZ} -> F2^n -> F2^{nX}) and R = (F2^t --H--> F2^s) the
// product Q x R* has four terms
//
//   C3 = nZ*s
//   C2 = nZ*t + n*s
//   C1 = n*t  + nX*s        (the new qubits)
//   C0 = nX*t
//
// and the balanced code is the window C2 -> C1 -> C0.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qltc/chain_complex.hpp"
#include "qltc/oracle.hpp"
#include "qltc/rational.hpp"

namespace qltc {

/// A coordinate range of one tensor summand: indices [offset, offset +
/// left_dim * right_dim), with (i, j) at offset + i * right_dim + j.
struct LayoutBlock {
    std::string label;
    std::size_t offset = 0;
    std::size_t left_dim = 0;
    std::size_t right_dim = 0;

    std::size_t size() const noexcept { return left_dim * right_dim; }
    friend bool operator==(const LayoutBlock&, const LayoutBlock&) = default;
};

struct BlockLayout {
    std::vector<LayoutBlock> qubits;
    std::vector<LayoutBlock> z_checks;
    std::vector<LayoutBlock> x_checks;
    friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

struct BalancedCode {
    CssCode code;
    std::string parent;
    BlockLayout layout;
};

inline void require_balanceable(const ClassicalCode& r) {
    if (!r.independent_checks())
        throw DependentChecks("classical code has dependent checks (rank " + std::to_string(r.rank()) + " < " +
                              std::to_string(r.s()) + " checks)");
    if (r.s() > r.t()) throw std::invalid_argument("classical code has more checks than bits");
}

/// Keeps the first independent rows of H; same code, independent checks.
inline ClassicalCode reduce_checks(const ClassicalCode& r) {
    const auto rows = independent_rows(r.h());
    return ClassicalCode::from_matrix(row_submatrix(r.h(), rows));
}

inline BalancedCode distance_balance(const CssCode& q, const ClassicalCode& r, std::string parent = {}) {
    require_balanceable(r);
    const ChainComplex product = homological_product(q.complex(), cocomplex(r.complex()));
    CssCode code(window(product, 2, 0));

    const std::size_t n = q.n(), nx = q.nx(), nz = q.nz(), t = r.t(), s = r.s();
    BlockLayout layout;
    layout.qubits = {{"qubits*bits", 0, n, t}, {"x_checks*checks", n * t, nx, s}};
    layout.z_checks = {{"z_checks*bits", 0, nz, t}, {"qubits*checks", nz * t, n, s}};
    layout.x_checks = {{"x_checks*bits", 0, nx, t}};
    return {std::move(code), std::move(parent), std::move(layout)};
}

/// Balance, swap X and Z, balance again, swap back: both distances grow.
inline BalancedCode double_balance(const CssCode& q, const ClassicalCode& r, std::string parent = {}) {
    const BalancedCode first = distance_balance(q, r);
    const BalancedCode second = distance_balance(CssCode(cocomplex(first.code.complex())), r);
    BlockLayout layout;
    layout.qubits = second.layout.qubits;
    layout.z_checks = second.layout.x_checks;
    layout.x_checks = second.layout.z_checks;
    return {CssCode(cocomplex(second.code.complex())), std::move(parent), std::move(layout)};
}

// ---------------------------------------------------------------------------
// Predictions

struct QuantumParams {
    std::size_t n = 0;
    std::size_t k = 0;
    Distance dx, dz;
    std::size_t nx = 0;
    std::size_t nz = 0;
    std::optional<Rational> rho_x;  ///< soundness of the H_X code
    std::optional<Rational> rho_z;  ///< soundness of the H_Z code
    std::size_t locality = 0;
};

struct ClassicalParams {
    std::size_t t = 0;
    std::size_t k = 0;
    Distance d;
    std::size_t s = 0;
    std::size_t locality = 0;
};

struct PredictedParams {
    std::size_t n = 0;
    std::size_t k = 0;
    Distance dx, dz;
    std::size_t nx = 0;
    std::size_t nz = 0;
    std::optional<Rational> soundness_bound_x;  ///< code of d2^T, i.e. the new H_Z
    std::optional<Rational> soundness_bound_z;  ///< code of d1, i.e. the new H_X
    std::size_t locality_bound = 0;
};

/// (1/(s+1)) min(nZ rhoZ / n, 1) (n t + nX s) / (nZ t + n s)
inline Rational x_side_bound(std::size_t n, std::size_t nx, std::size_t nz, Rational rho_z, std::size_t t, std::size_t s) {
    using I = std::int64_t;
    if (n == 0 || nz * t + n * s == 0) throw std::invalid_argument("X-side bound needs n > 0 and nZ t + n s > 0");
    const Rational clamp = std::min(Rational(static_cast<I>(nz)) * rho_z / static_cast<I>(n), Rational(1));
    return Rational(1, static_cast<I>(s + 1)) * clamp * Rational(static_cast<I>(n * t + nx * s), static_cast<I>(nz * t + n * s));
}

/// (1/t) min(nX rhoX / n, 1) (n t + nX s) / (nX t)
inline Rational z_side_bound(std::size_t n, std::size_t nx, Rational rho_x, std::size_t t, std::size_t s) {
    using I = std::int64_t;
    if (n == 0 || nx * t == 0) throw std::invalid_argument("Z-side bound needs n > 0 and nX t > 0");
    const Rational clamp = std::min(Rational(static_cast<I>(nx)) * rho_x / static_cast<I>(n), Rational(1));
    return Rational(1, static_cast<I>(t)) * clamp * Rational(static_cast<I>(n * t + nx * s), static_cast<I>(nx * t));
}

/// Parameters of the single balanced code computed from the inputs alone.
inline PredictedParams predicted_params(const QuantumParams& q, const ClassicalParams& r) {
    if (r.s > r.t) throw std::invalid_argument("predicted_params: s > t");
    PredictedParams p;
    p.n = q.n * r.t + q.nx * r.s;
    p.k = q.k * r.k;
    p.dx = q.dx * r.d;
    p.dz = q.dz;
    p.nx = q.nx * r.t;
    p.nz = q.nz * r.t + q.n * r.s;
    if (q.rho_z && q.n > 0 && q.nz * r.t + q.n * r.s > 0) p.soundness_bound_x = x_side_bound(q.n, q.nx, q.nz, *q.rho_z, r.t, r.s);
    if (q.rho_x && q.n > 0 && q.nx * r.t > 0) p.soundness_bound_z = z_side_bound(q.n, q.nx, *q.rho_x, r.t, r.s);
    p.locality_bound = q.locality + r.locality;
    return p;
}

/// Parameters after double balancing; soundness bounds are left empty.
inline PredictedParams predicted_double_params(const QuantumParams& q, const ClassicalParams& r) {
    const PredictedParams first = predicted_params(q, r);
    PredictedParams p;
    p.n = first.n * r.t + first.nz * r.s;
    p.k = q.k * r.k * r.k;
    p.dx = r.d * q.dx;
    p.dz = r.d * q.dz;
    p.nx = first.nx * r.t + first.n * r.s;
    p.nz = first.nz * r.t;
    p.locality_bound = q.locality + 2 * r.locality;
    return p;
}

/// Measured parameters of a CSS code; soundness components are left empty
/// when undefined.
inline QuantumParams measure(const CssCode& q, std::uint64_t cap = kDefaultCap) {
    QuantumParams p;
    p.n = q.n();
    p.k = quantum_dimension(q);
    const auto d = quantum_distances(q, cap);
    p.dx = d.dx;
    p.dz = d.dz;
    p.nx = q.nx();
    p.nz = q.nz();
    const auto rho = quantum_soundness(q, cap);
    p.rho_x = rho.x.value;
    p.rho_z = rho.z.value;
    p.locality = locality(q);
    return p;
}

inline ClassicalParams measure(const ClassicalCode& r, std::uint64_t cap = kDefaultCap) {
    return {r.t(), classical_dimension(r), classical_distance(r, cap), r.s(), locality(r)};
}

// ---------------------------------------------------------------------------
// Bound verification

struct SideCheck {
    std::string side;  ///< "X": d2^T code against the H_Z-based bound; "Z": d1 code against the H_X-based bound
    Rational measured;
    Rational bound;
    bool holds = false;
};

struct BoundCheckResult {
    SideCheck x;
    SideCheck z;
    Rational rho_x;  ///< input H_X soundness used for the Z side
    Rational rho_z;  ///< input H_Z soundness used for the X side
    bool assumed_rho = false;
    /// rho <= min(2n/nZ, 2n/nX) with rho the smaller component value used.
    bool hypothesis_holds = true;
    std::vector<std::string> warnings;
};

/// Soundness of the balanced d2^T code against its lower bound built from
/// the input H_Z soundness.
inline SideCheck check_x_side(const CssCode& q, const ClassicalCode& r, const BalancedCode& balanced, Rational rho_z,
                              std::uint64_t cap = kDefaultCap) {
    const Soundness m = classical_soundness(ClassicalCode::from_matrix(balanced.code.hz()), cap);
    if (!m.defined()) throw UndefinedSoundness("X", "balanced d2^T code: " + m.reason);
    SideCheck side{"X", *m.value, x_side_bound(q.n(), q.nx(), q.nz(), rho_z, r.t(), r.s()), false};
    side.holds = side.measured >= side.bound;
    return side;
}

/// Soundness of the balanced d1 code against its lower bound built from the
/// input H_X soundness.
inline SideCheck check_z_side(const CssCode& q, const ClassicalCode& r, const BalancedCode& balanced, Rational rho_x,
                              std::uint64_t cap = kDefaultCap) {
    const Soundness m = classical_soundness(ClassicalCode::from_matrix(balanced.code.hx()), cap);
    if (!m.defined()) throw UndefinedSoundness("Z", "balanced d1 code: " + m.reason);
    SideCheck side{"Z", *m.value, z_side_bound(q.n(), q.nx(), rho_x, r.t(), r.s()), false};
    side.holds = side.measured >= side.bound;
    return side;
}

/// Builds the balanced code, measures the soundness of both of its check
/// matrices and compares each with its lower bound, exactly.
///
/// Input component soundness is measured unless `assumed_rho` overrides both
/// components. Throws UndefinedSoundness naming the side whose soundness
/// could not be formed.
inline BoundCheckResult bound_check(const CssCode& q, const ClassicalCode& r, std::uint64_t cap = kDefaultCap,
                                    std::optional<Rational> assumed_rho = std::nullopt) {
    const BalancedCode balanced = distance_balance(q, r);
    BoundCheckResult out;

    if (assumed_rho) {
        out.rho_x = out.rho_z = *assumed_rho;
        out.assumed_rho = true;
    } else {
        const Soundness sz = classical_soundness(ClassicalCode::from_matrix(q.hz()), cap);
        if (!sz.defined()) throw UndefinedSoundness("X", "input H_Z code: " + sz.reason);
        const Soundness sx = classical_soundness(ClassicalCode::from_matrix(q.hx()), cap);
        if (!sx.defined()) throw UndefinedSoundness("Z", "input H_X code: " + sx.reason);
        out.rho_z = *sz.value;
        out.rho_x = *sx.value;
    }

    using I = std::int64_t;
    const std::size_t n = q.n(), nx = q.nx(), nz = q.nz();
    const Rational rho = std::min(out.rho_x, out.rho_z);
    if (nz > 0 && rho > Rational(static_cast<I>(2 * n), static_cast<I>(nz))) out.hypothesis_holds = false;
    if (nx > 0 && rho > Rational(static_cast<I>(2 * n), static_cast<I>(nx))) out.hypothesis_holds = false;
    if (!out.hypothesis_holds)
        out.warnings.push_back("rho = " + to_string(rho) + " exceeds min(2n/nZ, 2n/nX); bounds use the min(., 1) clamp as stated");

    out.x = check_x_side(q, r, balanced, out.rho_z, cap);
    out.z = check_z_side(q, r, balanced, out.rho_x, cap);
    return out;
}

}  // namespace qltc
