#pragma once

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "thyper/error.hpp"
#include "thyper/hypergraph.hpp"
#include "thyper/scan.hpp"
#include "thyper/sequences.hpp"
#include "thyper/spectrum.hpp"

namespace thyper {

// 12 significant digits, period separator, no negative zero.
inline std::string format_value(double v) {
    if (v == 0.0) v = 0.0;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

enum class OutputFormat { kText, kCsv, kStructured };

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "text") return OutputFormat::kText;
    if (s == "csv") return OutputFormat::kCsv;
    if (s == "structured") return OutputFormat::kStructured;
    throw ParseError("unknown format '" + s + "' (expected text, csv or structured)");
}

struct SpectrumDocument {
    int n = 0;
    int k = 0;
    std::string sequence;
    std::string short_form;
    Spectrum spectrum;
    double numeric_tol = kDefaultNumericTol;
    std::optional<double> max_dev;  // set when the oracle was run

    friend bool operator==(const SpectrumDocument&, const SpectrumDocument&) = default;
};

inline void write_spectrum_text(std::ostream& out, const Spectrum& s) {
    for (const auto& p : s.pairs)
        out << "lambda=" << format_value(p.value) << " mult=" << p.multiplicity << " source=" << p.source_label()
            << '\n';
}

inline void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    out << "lambda,mult,source\n";
    for (const auto& p : s.pairs)
        out << format_value(p.value) << ',' << p.multiplicity << ',' << p.source_label() << '\n';
}

inline nlohmann::json source_to_json(const EigenSource& s) {
    switch (s.kind) {
        case SourceKind::kBlock: return {{"kind", "block"}, {"block", s.block}};
        case SourceKind::kQuotient: return {{"kind", "quotient"}};
        case SourceKind::kNumeric: return {{"kind", "numeric"}};
    }
    return {};
}

inline EigenSource source_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "block") return {SourceKind::kBlock, j.at("block").get<int>()};
    if (kind == "quotient") return {SourceKind::kQuotient, 0};
    if (kind == "numeric") return {SourceKind::kNumeric, 0};
    throw ParseError("unknown eigenvalue source '" + kind + "'");
}

inline nlohmann::json to_json(const SpectrumDocument& doc) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : doc.spectrum.pairs) {
        nlohmann::json sources = nlohmann::json::array();
        for (const auto& s : p.sources) sources.push_back(source_to_json(s));
        pairs.push_back({{"lambda", p.value}, {"mult", p.multiplicity}, {"sources", sources}});
    }
    nlohmann::json j = {
        {"n", doc.n},
        {"k", doc.k},
        {"sequence", doc.sequence},
        {"short", doc.short_form},
        {"pairs", pairs},
        {"distinct_count", distinct_count(doc.spectrum)},
        {"tolerances", {{"merge_tol", doc.spectrum.merge_tol}, {"numeric_tol", doc.numeric_tol}}},
    };
    if (doc.max_dev) j["max_dev"] = *doc.max_dev;
    return j;
}

inline SpectrumDocument spectrum_document_from_json(const nlohmann::json& j) {
    try {
        SpectrumDocument doc;
        doc.n = j.at("n").get<int>();
        doc.k = j.at("k").get<int>();
        doc.sequence = j.at("sequence").get<std::string>();
        doc.short_form = j.at("short").get<std::string>();
        doc.spectrum.merge_tol = j.at("tolerances").at("merge_tol").get<double>();
        doc.numeric_tol = j.at("tolerances").at("numeric_tol").get<double>();
        for (const auto& p : j.at("pairs")) {
            EigenPair pair;
            pair.value = p.at("lambda").get<double>();
            pair.multiplicity = p.at("mult").get<int>();
            for (const auto& s : p.at("sources")) pair.sources.push_back(source_from_json(s));
            doc.spectrum.pairs.push_back(std::move(pair));
        }
        if (j.contains("max_dev")) doc.max_dev = j.at("max_dev").get<double>();
        if (j.at("distinct_count").get<int>() != distinct_count(doc.spectrum))
            throw ParseError("distinct_count does not match the pairs listed");
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed spectrum document: ") + e.what());
    }
}

inline void write_edges(std::ostream& out, const std::vector<Edge>& edges) {
    for (const auto& e : edges) {
        for (std::size_t t = 0; t < e.size(); ++t) out << (t ? "," : "") << e[t];
        out << '\n';
    }
}

inline void write_adjacency_csv(std::ostream& out, const AdjacencyMatrix& a) {
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = 1; j <= a.n(); ++j) out << (j > 1 ? "," : "") << a(i, j).value();
        out << '\n';
    }
}

inline void write_scan_csv(std::ostream& out, const ScanReport& report) {
    out << "sequence,n,k,r,min_quotient_gap,flagged\n";
    for (const auto& row : report.rows)
        out << '"' << row.sequence << "\"," << row.n << ',' << row.k << ',' << row.r << ','
            << format_value(row.min_quotient_gap) << ',' << (row.flagged ? 1 : 0) << '\n';
}

// Edge-list document: `n=N`, `k=K`, then one comma-separated edge per line;
// blank lines and `#` comments are skipped.
inline GeneralHypergraph read_general_hypergraph(std::istream& in) {
    std::optional<int> n;
    std::optional<int> k;
    std::vector<Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (t.substr(0, 2) == "n=") {
            n = detail::parse_int(t.substr(2), "n");
        } else if (t.substr(0, 2) == "k=") {
            k = detail::parse_int(t.substr(2), "k");
        } else {
            Edge e;
            for (auto tok : detail::split(t, ',')) e.push_back(detail::parse_int(tok, "vertex"));
            edges.push_back(std::move(e));
        }
    }
    if (!n || !k) throw ParseError("edge-list document needs n= and k= lines");
    return GeneralHypergraph(*n, *k, std::move(edges));
}

}  // namespace thyper
