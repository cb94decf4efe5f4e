#pragma once

// JSON forms of complexes, balanced codes, code reports and bound checks.
//
// Complex: {"spaces":[...],"diffs":["<pcm text>",...],"labels":[...]}
// with each differential in PCM text form. Rationals are {"num","den"} in
// lowest terms; distances are integers or "inf".

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qltc/balance.hpp"
#include "qltc/chain_complex.hpp"
#include "qltc/oracle.hpp"
#include "qltc/pcm.hpp"
#include "qltc/rational.hpp"

namespace qltc {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

inline Json to_json(const Distance& d) { return d.is_infinite() ? Json("inf") : Json(d.value()); }

inline Json to_json(const Soundness& s) { return s.defined() ? to_json(*s.value) : Json("undefined"); }

inline Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_number_integer() ||
        !j["den"].is_number_integer())
        throw ParseError("expected {\"num\":int,\"den\":int}");
    const auto den = j["den"].get<std::int64_t>();
    if (den == 0) throw ParseError("rational with zero denominator");
    return Rational(j["num"].get<std::int64_t>(), den);
}

inline Json complex_to_json(const ChainComplex& c) {
    Json j;
    j["spaces"] = c.spaces();
    Json diffs = Json::array();
    for (const auto& d : c.diffs()) diffs.push_back(write_pcm(d));
    j["diffs"] = std::move(diffs);
    j["labels"] = c.labels();
    return j;
}

/// Parses and shape-checks a complex; the chain condition is left to the
/// code views (or validate()).
inline ChainComplex complex_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("complex JSON must be an object");
    if (!j.contains("spaces") || !j["spaces"].is_array()) throw ParseError("complex JSON: missing \"spaces\" array");
    if (!j.contains("diffs") || !j["diffs"].is_array()) throw ParseError("complex JSON: missing \"diffs\" array");

    std::vector<std::size_t> spaces;
    for (const auto& s : j["spaces"]) {
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
            throw ParseError("complex JSON: space dimensions must be non-negative integers");
        spaces.push_back(s.get<std::size_t>());
    }
    std::vector<BitMatrix> diffs;
    for (const auto& d : j["diffs"]) {
        if (!d.is_string()) throw ParseError("complex JSON: differentials must be PCM strings");
        diffs.push_back(read_pcm(d.get<std::string>()));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("complex JSON: \"labels\" must be an array");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("complex JSON: labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    if (spaces.empty()) throw ParseError("complex JSON: no spaces");
    if (diffs.size() + 1 != spaces.size()) throw ParseError("complex JSON: need one differential fewer than spaces");
    if (!labels.empty() && labels.size() != spaces.size()) throw ParseError("complex JSON: label count does not match spaces");

    for (std::size_t i = 0; i < diffs.size(); ++i)
        if (diffs[i].rows() != spaces[i + 1] || diffs[i].cols() != spaces[i])
            throw ParseError("complex JSON: differential " + std::to_string(i) + " does not match the space dimensions");
    return {std::move(spaces), std::move(diffs), std::move(labels)};
}

inline ChainComplex parse_complex(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

inline Json to_json(const LayoutBlock& b) {
    return Json{{"label", b.label}, {"offset", b.offset}, {"left_dim", b.left_dim}, {"right_dim", b.right_dim}, {"size", b.size()}};
}

inline Json to_json(const BlockLayout& layout) {
    auto blocks = [](const std::vector<LayoutBlock>& v) {
        Json a = Json::array();
        for (const auto& b : v) a.push_back(to_json(b));
        return a;
    };
    return Json{{"qubits", blocks(layout.qubits)}, {"z_checks", blocks(layout.z_checks)}, {"x_checks", blocks(layout.x_checks)}};
}

inline BlockLayout layout_from_json(const Json& j) {
    auto blocks = [&](const char* key) {
        std::vector<LayoutBlock> out;
        if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("block_layout: missing \"") + key + "\"");
        for (const auto& b : j[key])
            out.push_back({b.at("label").get<std::string>(), b.at("offset").get<std::size_t>(), b.at("left_dim").get<std::size_t>(),
                           b.at("right_dim").get<std::size_t>()});
        return out;
    };
    if (!j.is_object()) throw ParseError("block_layout must be an object");
    try {
        return {blocks("qubits"), blocks("z_checks"), blocks("x_checks")};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("block_layout: ") + e.what());
    }
}

inline Json balanced_to_json(const BalancedCode& b) {
    Json j = complex_to_json(b.code.complex());
    j["block_layout"] = to_json(b.layout);
    if (!b.parent.empty()) j["parent"] = b.parent;
    return j;
}

inline BalancedCode balanced_from_json(const Json& j) {
    BalancedCode b{CssCode(complex_from_json(j)), {}, {}};
    if (j.contains("block_layout")) b.layout = layout_from_json(j["block_layout"]);
    if (j.contains("parent") && j["parent"].is_string()) b.parent = j["parent"].get<std::string>();
    return b;
}

// ---------------------------------------------------------------------------
// Code reports

/// Exact analysis of one code. Fields that need an enumeration beyond the cap
/// are left empty and named in `skipped`.
struct CodeReport {
    bool quantum = false;
    std::size_t n = 0;  ///< t for a classical code
    std::size_t k = 0;
    std::optional<Distance> d;  ///< classical
    std::optional<Distance> dx, dz;
    std::size_t locality = 0;
    std::optional<Soundness> soundness;  ///< quantum: component minimum
    std::optional<Soundness> rho_x, rho_z;
    std::size_t s = 0;
    bool independent_checks = false;
    std::size_t nx = 0, nz = 0;
    std::string provenance;
    std::vector<std::string> skipped;

    bool complete() const noexcept { return skipped.empty(); }
};

namespace detail {

template <class F>
auto try_capped(std::vector<std::string>& skipped, const char* field, F&& f) -> std::optional<decltype(f())> {
    try {
        return f();
    } catch (const CapExceeded&) {
        skipped.emplace_back(field);
        return std::nullopt;
    }
}

}  // namespace detail

inline CodeReport analyze(const ClassicalCode& c, std::uint64_t cap = kDefaultCap, std::string provenance = {}) {
    CodeReport r;
    r.n = c.t();
    r.k = classical_dimension(c);
    r.d = detail::try_capped(r.skipped, "d", [&] { return classical_distance(c, cap); });
    r.locality = locality(c);
    r.soundness = detail::try_capped(r.skipped, "soundness", [&] { return classical_soundness(c, cap); });
    r.s = c.s();
    r.independent_checks = c.independent_checks();
    r.provenance = std::move(provenance);
    return r;
}

inline CodeReport analyze(const CssCode& q, std::uint64_t cap = kDefaultCap, std::string provenance = {}) {
    CodeReport r;
    r.quantum = true;
    r.n = q.n();
    r.k = quantum_dimension(q);
    r.dx = detail::try_capped(r.skipped, "dX", [&] { return quantum_x_distance(q, cap); });
    r.dz = detail::try_capped(r.skipped, "dZ", [&] { return quantum_z_distance(q, cap); });
    r.locality = locality(q);
    r.rho_x = detail::try_capped(r.skipped, "rhoX", [&] { return classical_soundness(ClassicalCode::from_matrix(q.hx()), cap); });
    r.rho_z = detail::try_capped(r.skipped, "rhoZ", [&] { return classical_soundness(ClassicalCode::from_matrix(q.hz()), cap); });
    if (r.rho_x && r.rho_z) {
        if (!r.rho_x->defined())
            r.soundness = Soundness::undefined("X side: " + r.rho_x->reason);
        else if (!r.rho_z->defined())
            r.soundness = Soundness::undefined("Z side: " + r.rho_z->reason);
        else
            r.soundness = Soundness::of(std::min(*r.rho_x->value, *r.rho_z->value));
    }
    r.nx = q.nx();
    r.nz = q.nz();
    r.provenance = std::move(provenance);
    return r;
}

inline Json to_json(const CodeReport& r) {
    auto opt = [](const auto& v) { return v ? to_json(*v) : Json(nullptr); };
    Json j;
    j["kind"] = r.quantum ? "quantum" : "classical";
    j["n"] = r.n;
    j["K"] = r.k;
    if (r.quantum) {
        j["dX"] = opt(r.dx);
        j["dZ"] = opt(r.dz);
    } else {
        j["d"] = opt(r.d);
    }
    j["locality"] = r.locality;
    j["soundness"] = opt(r.soundness);
    if (r.quantum) {
        j["nX"] = r.nx;
        j["nZ"] = r.nz;
    } else {
        j["s"] = r.s;
        j["independent_checks"] = r.independent_checks;
    }
    j["provenance"] = r.provenance;
    if (r.quantum) {
        j["soundness_kind"] = "component_min";
        j["rhoX"] = opt(r.rho_x);
        j["rhoZ"] = opt(r.rho_z);
    }
    if (r.soundness && !r.soundness->defined()) j["soundness_reason"] = r.soundness->reason;
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    return j;
}

/// Aligned "key  value" lines for people.
inline std::string to_text(const CodeReport& r) {
    std::vector<std::pair<std::string, std::string>> rows;
    auto dist = [](const std::optional<Distance>& d) { return d ? d->to_string() : std::string("skipped (cap)"); };
    auto sound = [](const std::optional<Soundness>& s) {
        if (!s) return std::string("skipped (cap)");
        return s->defined() ? to_string(*s->value) : "undefined (" + s->reason + ")";
    };
    rows.emplace_back("kind", r.quantum ? "quantum" : "classical");
    rows.emplace_back("n", std::to_string(r.n));
    rows.emplace_back("K", std::to_string(r.k));
    if (r.quantum) {
        rows.emplace_back("dX", dist(r.dx));
        rows.emplace_back("dZ", dist(r.dz));
    } else {
        rows.emplace_back("d", dist(r.d));
    }
    rows.emplace_back("locality", std::to_string(r.locality));
    rows.emplace_back(r.quantum ? "soundness (component min)" : "soundness", sound(r.soundness));
    if (r.quantum) {
        rows.emplace_back("rhoX", sound(r.rho_x));
        rows.emplace_back("rhoZ", sound(r.rho_z));
        rows.emplace_back("nX", std::to_string(r.nx));
        rows.emplace_back("nZ", std::to_string(r.nz));
    } else {
        rows.emplace_back("s", std::to_string(r.s));
        rows.emplace_back("independent checks", r.independent_checks ? "yes" : "no");
    }
    if (!r.provenance.empty()) rows.emplace_back("provenance", r.provenance);

    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    return out;
}

inline Json to_json(const SideCheck& s) {
    return Json{{"side", s.side}, {"measured", to_json(s.measured)}, {"bound", to_json(s.bound)}, {"holds", s.holds}};
}

inline Json to_json(const BoundCheckResult& r) {
    Json j;
    j["sides"] = Json::array({to_json(r.x), to_json(r.z)});
    j["rhoX"] = to_json(r.rho_x);
    j["rhoZ"] = to_json(r.rho_z);
    j["assumed_rho"] = r.assumed_rho;
    j["hypothesis_holds"] = r.hypothesis_holds;
    j["warnings"] = r.warnings;
    return j;
}

}  // namespace qltc
