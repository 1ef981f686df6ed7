#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thyper/error.hpp"
#include "thyper/families.hpp"
#include "thyper/hypergraph.hpp"
#include "thyper/io.hpp"
#include "thyper/scan.hpp"
#include "thyper/sequences.hpp"
#include "thyper/spectrum.hpp"
#include "thyper/verify.hpp"

namespace thyper::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kDisagreement = 2,
    kBudgetExceeded = 3,
    kNumericFailure = 4,
};

struct Config {
    std::uint64_t oracle_edge_cap = kDefaultEdgeCap;
    double merge_tol = kDefaultMergeTol;
    double numeric_tol = kDefaultNumericTol;
    OutputFormat output_format = OutputFormat::kText;

    void validate() const {
        if (oracle_edge_cap == 0) throw ValidationError("--edge-cap must be positive");
        if (!(merge_tol > 0.0)) throw ValidationError("--tol must be positive");
        if (!(numeric_tol > 0.0)) throw ValidationError("--numeric-tol must be positive");
    }
};

namespace detail {

inline SpectrumDocument make_document(const BinarySequence& s, Spectrum spec, const Config& cfg) {
    SpectrumDocument doc;
    doc.n = s.n();
    doc.k = s.k();
    doc.sequence = format_binary(s);
    doc.short_form = format_short(to_short(s));
    doc.spectrum = std::move(spec);
    doc.numeric_tol = cfg.numeric_tol;
    return doc;
}

inline std::string verdict(double dev, double tol) {
    std::ostringstream os;
    os << "max_dev " << (dev < tol ? "<" : ">=") << ' ' << format_value(tol) << " (observed "
       << format_value(dev) << ")";
    return os.str();
}

// Text shows the verdict inline, csv keeps stdout tabular and reports it on
// the diagnostic stream, structured carries it as a field.
inline void emit_spectrum(const SpectrumDocument& doc, const Config& cfg, std::ostream& out, std::ostream& err,
                          const std::string& header = {}) {
    switch (cfg.output_format) {
        case OutputFormat::kText:
            if (!header.empty()) out << header << '\n';
            write_spectrum_text(out, doc.spectrum);
            if (doc.max_dev) out << verdict(*doc.max_dev, cfg.numeric_tol) << '\n';
            break;
        case OutputFormat::kCsv:
            write_spectrum_csv(out, doc.spectrum);
            if (doc.max_dev) err << verdict(*doc.max_dev, cfg.numeric_tol) << '\n';
            break;
        case OutputFormat::kStructured:
            out << to_json(doc).dump(2) << '\n';
            break;
    }
}

inline int agreement_code(const SpectrumDocument& doc, const Config& cfg) {
    return doc.max_dev && !(*doc.max_dev < cfg.numeric_tol) ? kDisagreement : kOk;
}

}  // namespace detail

inline int cmd_spectrum(const std::string& text, bool verify, bool numeric, const Config& cfg, std::ostream& out,
                        std::ostream& err) {
    const auto seq = parse_sequence(text);
    const ThresholdHypergraph h(seq);
    if (numeric) {
        detail::emit_spectrum(detail::make_document(seq, full_spectrum_numeric(h), cfg), cfg, out, err);
        return kOk;
    }
    auto doc = detail::make_document(seq, full_spectrum_closed(h, cfg.merge_tol), cfg);
    if (verify) doc.max_dev = max_deviation(doc.spectrum, full_spectrum_numeric(h));
    detail::emit_spectrum(doc, cfg, out, err);
    return detail::agreement_code(doc, cfg);
}

inline int cmd_edges(const std::string& text, const Config& cfg, std::ostream& out) {
    write_edges(out, enumerate_edges(ThresholdHypergraph(parse_sequence(text)), cfg.oracle_edge_cap));
    return kOk;
}

inline int cmd_adjacency(const std::string& text, std::ostream& out) {
    write_adjacency_csv(out, adjacency_closed_form(ThresholdHypergraph(parse_sequence(text))));
    return kOk;
}

inline int cmd_verify(int n_max, const std::vector<int>& k_set, std::uint64_t budget, const Config& cfg,
                      std::ostream& out) {
    VerifyOptions opts;
    opts.sequence_budget = budget;
    opts.edge_cap = cfg.oracle_edge_cap;
    opts.numeric_tol = cfg.numeric_tol;
    opts.merge_tol = cfg.merge_tol;
    const auto report = run_verify(n_max, k_set, opts);
    std::size_t failing = 0;
    for (const auto& [name, tally] : report.checks) {
        out << name << ": passed=" << tally.passed << " failed=" << tally.failed;
        if (tally.failed) {
            out << " first=" << tally.first_failure;
            ++failing;
        }
        out << '\n';
    }
    out << "sequences=" << report.sequences << '\n';
    if (failing == 0) {
        out << "all checks passed\n";
        return kOk;
    }
    out << failing << " checks failed\n";
    return kDisagreement;
}

inline int cmd_family(const FamilyParams& params, bool verify, const Config& cfg, std::ostream& out,
                      std::ostream& err) {
    const auto seq = family_binary(params);
    auto doc = detail::make_document(seq, family_spectrum_symbolic(params, cfg.merge_tol), cfg);
    if (verify) doc.max_dev = max_deviation(doc.spectrum, full_spectrum_numeric(ThresholdHypergraph(seq)));
    detail::emit_spectrum(doc, cfg, out, err, "sequence=" + doc.short_form);
    return detail::agreement_code(doc, cfg);
}

inline int cmd_scan(int n_max, const std::vector<int>& k_set, std::uint64_t budget, unsigned workers,
                    const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto report = scan_quotient_simplicity(n_max, k_set, cfg.merge_tol, budget, workers);
    if (cfg.output_format == OutputFormat::kStructured) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : report.rows)
            rows.push_back({{"sequence", r.sequence},
                            {"n", r.n},
                            {"k", r.k},
                            {"r", r.r},
                            {"min_quotient_gap", r.r > 1 ? nlohmann::json(r.min_quotient_gap) : nlohmann::json()},
                            {"flagged", r.flagged}});
        out << nlohmann::json{{"tol", report.tol}, {"rows", rows}, {"flagged", report.flagged_count()}}.dump(2)
            << '\n';
    } else {
        write_scan_csv(out, report);
    }
    err << "scanned=" << report.rows.size() << " flagged=" << report.flagged_count()
        << " smallest_gap=" << format_value(report.smallest_gap()) << '\n';
    return kOk;
}

// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra of k-uniform threshold hypergraphs", "thyper"};
    app.require_subcommand(1);

    Config cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, csv or structured")
        ->check(CLI::IsMember({"text", "csv", "structured"}));
    app.add_option("--tol", cfg.merge_tol, "Eigenvalue merge tolerance (scan: gap tolerance)");
    app.add_option("--numeric-tol", cfg.numeric_tol, "Closed-form vs numeric agreement tolerance");
    app.add_option("--edge-cap", cfg.oracle_edge_cap, "Refuse to enumerate more edges than this");

    std::string sequence;
    bool verify = false;
    bool numeric = false;
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form adjacency spectrum")->fallthrough();
    spectrum->add_option("sequence", sequence, "k=K;b1,...,bn or C(a1,...,ar)_K")->required();
    spectrum->add_flag("--verify", verify, "Also run the numeric oracle and report the deviation");
    spectrum->add_flag("--numeric", numeric, "Print the numeric oracle spectrum instead");

    auto* edges = app.add_subcommand("edges", "List edges, one per line")->fallthrough();
    edges->add_option("sequence", sequence)->required();

    auto* adjacency = app.add_subcommand("adjacency", "Adjacency matrix as CSV")->fallthrough();
    adjacency->add_option("sequence", sequence)->required();

    int n_max = 0;
    std::vector<int> k_set;
    std::uint64_t budget = kDefaultSequenceBudget;
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive invariant sweep")->fallthrough();
    verify_cmd->add_option("--n-max", n_max)->required();
    verify_cmd->add_option("--k", k_set)->required()->delimiter(',');
    verify_cmd->add_option("--budget", budget, "Maximum number of sequences");

    FamilyParams fam;
    std::optional<int> fam_j;
    auto* family = app.add_subcommand("family", "Generate a family member and its spectrum")->fallthrough();
    family->add_option("family", fam.family)->required()->check(CLI::Range(1, 3));
    family->add_option("--n", fam.n)->required();
    family->add_option("--k", fam.k)->required();
    family->add_option("--j", fam_j, "Position of the first 1 (family 2)");
    family->add_flag("--verify", verify, "Compare against the numeric oracle");

    unsigned workers = 0;
    auto* scan = app.add_subcommand("scan", "Probe quotient eigenvalues for repeats")->fallthrough();
    scan->add_option("--n-max", n_max)->required();
    scan->add_option("--k", k_set)->required()->delimiter(',');
    scan->add_option("--budget", budget, "Maximum number of sequences");
    scan->add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        cfg.output_format = parse_output_format(format);
        cfg.validate();
        if (*spectrum) return cmd_spectrum(sequence, verify, numeric, cfg, out, err);
        if (*edges) return cmd_edges(sequence, cfg, out);
        if (*adjacency) return cmd_adjacency(sequence, out);
        if (*verify_cmd) return cmd_verify(n_max, k_set, budget, cfg, out);
        if (*family) {
            fam.j = fam_j;
            return cmd_family(fam, verify, cfg, out, err);
        }
        if (*scan) return cmd_scan(n_max, k_set, budget, workers, cfg, out, err);
    } catch (const BudgetExceededError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const CapExceededError& e) {
        err << "edge cap exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const InternalError& e) {
        err << "internal disagreement: " << e.what() << '\n';
        return kDisagreement;
    } catch (const ConvergenceError& e) {
        err << e.what() << '\n';
        return kNumericFailure;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kInputError;
    } catch (const std::out_of_range& e) {
        err << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace thyper::cli
