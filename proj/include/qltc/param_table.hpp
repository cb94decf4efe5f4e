#pragma once

// Parameter tables for the balancing construction and the code families it
// is applied to. Asymptotic entries are formulas, never measurements; each
// cell carries its kind so renderers and consumers can tell them apart.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "qltc/rational.hpp"

namespace qltc {

enum class CellKind {
    asymptotic,  ///< Θ/Ω/O expression
    formula,     ///< exact expression in the symbolic inputs
    cited,       ///< a value quoted for a family this library does not construct
    computed,    ///< evaluated exactly from numeric inputs
};

inline const char* kind_name(CellKind k) {
    switch (k) {
        case CellKind::asymptotic: return "asymptotic";
        case CellKind::formula: return "formula";
        case CellKind::cited: return "cited";
        case CellKind::computed: return "computed";
    }
    return "?";
}

struct Cell {
    std::string text;
    CellKind kind = CellKind::asymptotic;
};

struct TableRow {
    std::string property;
    std::vector<Cell> cells;
};

struct ParamTable {
    std::string scenario;
    std::string title;
    std::vector<std::string> columns;  ///< one per cell, excluding the property column
    std::vector<TableRow> rows;
    std::vector<std::string> notes;

    const TableRow& row(const std::string& property) const {
        for (const auto& r : rows)
            if (r.property == property) return r;
        throw std::out_of_range("no row '" + property + "'");
    }
};

/// Optional numeric inputs. For table4: n and m are the column and row
/// counts of Hhat, t and s those of the classical code. For exampleParams:
/// alpha is the exponent in t = n^alpha.
struct TableInputs {
    std::optional<std::size_t> n, m, t, s;
    std::optional<Rational> alpha;
};

inline const std::vector<std::string>& table_scenarios() {
    static const std::vector<std::string> names{"table1", "table4", "genParams", "exampleParams"};
    return names;
}

namespace detail {

inline Cell asym(std::string s) { return {std::move(s), CellKind::asymptotic}; }
inline Cell formula(std::string s) { return {std::move(s), CellKind::formula}; }

inline std::string power_of_n(const Rational& e) {
    if (e == Rational(1)) return "n";
    if (e.denominator() == 1) return "n^" + std::to_string(e.numerator());
    return "n^(" + to_string(e) + ")";
}

inline ParamTable table1() {
    ParamTable t;
    t.scenario = "table1";
    t.title = "Balancing Q with the length-l repetition code: standard vs modified checks";
    t.columns = {"Standard checks H_l", "Modified checks H~_l"};
    t.rows = {
        {"Physical Qubits", {asym("O(nl)"), asym("O(nl)")}},
        {"Soundness", {asym("Ω(1/l)"), asym("Ω(1)")}},
        {"Distance", {asym("Θ(min(n,l))"), asym("Θ(min(n,l))")}},
        {"Dimension", {asym("Θ(n)"), asym("Θ(n)")}},
        {"Locality", {asym("Θ(1)"), asym("(avg, max) = (Θ(1), Θ(l))")}},
    };
    t.notes = {"Distance and dimension depend only on the code space; soundness and locality depend on the checks."};
    return t;
}

inline ParamTable table4(const TableInputs& in) {
    ParamTable t;
    t.scenario = "table4";
    t.title = "Balancing Q (H_Z = [I|I], H_X = [Hhat|Hhat], Hhat m x n) with a classical code R (s x t)";
    t.columns = {"Repetition code, length l", "Good LDPC code, length t", "Logarithmic example", "Exact for this construction"};

    Cell qubits = formula("2n·t + m·s");
    if (in.n && in.m && in.t && in.s) qubits = {std::to_string(2 * *in.n * *in.t + *in.m * *in.s), CellKind::computed};

    t.rows = {
        {"Physical Qubits", {asym("Θ(nl)"), asym("Θ(nt)"), asym("n"), qubits}},
        {"Soundness",
         {asym("Ω(1/l)"), asym("Ω(1/t)"), asym("Ω(1/log(n))"),
          formula("X: (1/(s+1))·min(ρ_Z/2, 1)·(2n·t + m·s)/(n·t + 2n·s); Z: (1/t)·min(m·ρ_X/(2n), 1)·(2n·t + m·s)/(m·t)")}},
        {"Distance", {asym("Θ(min(n,l))"), asym("Θ(min(n,t))"), asym("Θ(log(n))"), formula("d_X' = 2·d(R), d_Z' = d(Hhat)")}},
        {"Rate", {asym("Θ(1/l)"), asym("Θ(1)"), asym("Θ(1)"), formula("K' = k(Hhat)·k(R)")}},
        {"Locality", {asym("Θ(1)"), asym("Θ(1)"), asym("Θ(1)"), formula("≤ w(Q) + w(R)")}},
    };
    if (in.n && in.m && in.t && in.s) {
        t.notes.push_back("n = " + std::to_string(*in.n) + ", m = " + std::to_string(*in.m) + ", t = " + std::to_string(*in.t) +
                          ", s = " + std::to_string(*in.s));
        t.notes.push_back("X checks: " + std::to_string(*in.m * *in.t) + ", Z checks: " + std::to_string(*in.n * *in.t + 2 * *in.n * *in.s));
    }
    return t;
}

inline ParamTable gen_params() {
    ParamTable t;
    t.scenario = "genParams";
    t.title = "Square-root-distance qLTC families before and after double balancing with a good LDPC code of length t";
    t.columns = {"Hypersphere product codes", "Hemicubic codes", "Applied to hypersphere product", "Applied to hemicubic"};
    t.rows = {
        {"Physical Qubits", {asym("n"), asym("n"), asym("Θ(nt²)"), asym("Θ(nt²)")}},
        {"Soundness", {asym("1/log(n)²"), asym("Ω(1/log(n))"), asym("Ω(1/(log(n)²·t²))"), asym("Ω(1/(log(n)·t²))")}},
        {"Distance", {asym("Θ(√n)"), asym("Θ(√n)"), asym("Θ(√n·t)"), asym("Θ(√n·t)")}},
        {"Dimension", {{"2", CellKind::cited}, {"1", CellKind::cited}, asym("Θ(t²)"), asym("Θ(t²)")}},
        {"Locality", {asym("Θ(log(n)/log(log(n)))"), asym("O(log(n))"), asym("Θ(log(n)/log(log(n)))"), asym("O(log(n))")}},
    };
    t.notes = {"The two input families are not constructed here; their entries are quoted."};
    return t;
}

inline ParamTable example_params(const TableInputs& in) {
    ParamTable t;
    t.scenario = "exampleParams";
    t.title = "Hemicubic codes double balanced with t = √log(n) and with t = n^α";
    t.columns = {"Logarithmic example", "Polynomial example"};
    std::string dimension = "Θ(n^(2α/(1+2α)))";
    std::string soundness = "Ω(1/(n^(2α/(1+2α))·log(n)))";
    if (in.alpha) {
        if (*in.alpha <= Rational(0)) throw std::invalid_argument("exampleParams: alpha must be positive");
        const Rational e = Rational(2) * *in.alpha / (Rational(1) + Rational(2) * *in.alpha);
        dimension = "Θ(" + power_of_n(e) + ")";
        soundness = "Ω(1/(" + power_of_n(e) + "·log(n)))";
        t.notes.push_back("α = " + to_string(*in.alpha) + ", exponent 2α/(1+2α) = " + to_string(e));
    }
    t.rows = {
        {"Physical Qubits", {asym("n"), asym("n")}},
        {"Soundness", {asym("Ω(1/log(n)²)"), asym(soundness)}},
        {"Distance", {asym("Θ(√n)"), asym("Θ(√n)")}},
        {"Dimension", {asym("Θ(log(n))"), asym(dimension)}},
        {"Locality", {asym("O(log(n))"), asym("O(log(n))")}},
    };
    return t;
}

}  // namespace detail

inline ParamTable param_table(const std::string& scenario, const TableInputs& in = {}) {
    if (scenario == "table1") return detail::table1();
    if (scenario == "table4") return detail::table4(in);
    if (scenario == "genParams") return detail::gen_params();
    if (scenario == "exampleParams") return detail::example_params(in);
    throw std::invalid_argument("unknown table scenario '" + scenario + "' (known: table1, table4, genParams, exampleParams)");
}

/// The exponent 2α/(1+2α) of the polynomial example's dimension.
inline Rational dimension_exponent(const Rational& alpha) { return Rational(2) * alpha / (Rational(1) + Rational(2) * alpha); }

inline std::string render_markdown(const ParamTable& t) {
    std::string out = "### " + t.title + "\n\n|  |";
    for (const auto& c : t.columns) out += " " + c + " |";
    out += "\n|---|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& r : t.rows) {
        out += "| " + r.property + " |";
        for (const auto& c : r.cells) out += " " + c.text + " |";
        out += "\n";
    }
    out += "\nΘ/Ω/O entries are asymptotic formulas, not measurements.\n";
    for (const auto& n : t.notes) out += n + "\n";
    return out;
}

inline nlohmann::ordered_json to_json(const ParamTable& t) {
    nlohmann::ordered_json j;
    j["scenario"] = t.scenario;
    j["title"] = t.title;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        auto cells = nlohmann::ordered_json::array();
        for (const auto& c : r.cells) cells.push_back({{"text", c.text}, {"kind", kind_name(c.kind)}});
        rows.push_back({{"property", r.property}, {"cells", std::move(cells)}});
    }
    j["rows"] = std::move(rows);
    j["notes"] = t.notes;
    return j;
}

}  // namespace qltc
