// chaingraph command line: build chain graphs, compute spectra, classify
// downer vertices, verify the theorem-level checks, and search for
// counterexamples. Exit status: 0 = success / all checks pass, 1 = a
// mathematical check failed (a witness is printed), 2 = usage or input error.

#include "chaingraph/chaingraph.hpp"
#include "chaingraph/io.hpp"
#include "chaingraph/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <string>

namespace {

using namespace chaingraph;

struct MathCheckFailed {
    std::string witness;
};

/// Accepts an inline JSON document, the shorthand H(k) for half graphs, or a
/// path to a graph file.
Graph resolve_graph(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{')
        return graph_from_json(json::parse(arg, nullptr, true));
    static const std::regex half_re(R"(^[Hh]\((\d+)\)$)");
    std::smatch m;
    if (std::regex_match(arg, m, half_re))
        return half_graph(std::stoi(m[1].str()));
    return read_graph_file(arg);
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out)
        throw ParseError("cannot open output file: " + output_path);
    out << text;
}

Mode parse_mode(const std::string& s) {
    if (s == "exact")
        return Mode::Exact;
    if (s == "float")
        return Mode::Float;
    if (s == "hybrid")
        return Mode::Hybrid;
    throw ParseError("mode must be one of exact, float, hybrid");
}

// --- verify subcommand -------------------------------------------------------

struct VerifyOutcome {
    bool passed = true;
    json cases = json::array();
    std::string witness;

    void record(bool ok, const std::string& label, const json& detail) {
        json c = detail;
        c["ok"] = ok;
        cases.push_back(c);
        if (!ok && passed) {
            passed = false;
            witness = label;
        }
    }
};

VerifyOutcome verify_pattern_family(int max_k, bool period10) {
    VerifyOutcome out;
    for (int k = 1; k <= max_k; ++k) {
        const PatternResult r = period10 ? period10_vector(k) : period6_vector(k);
        if (std::holds_alternative<PatternRefusal>(r))
            continue;
        const auto& p = std::get<PatternVector>(r);
        const Graph g = half_graph(k);
        const bool ok = sum_rule_exact(g, p.half_graph_vector(), p.eigenvalue);
        out.record(ok, "H(" + std::to_string(k) + ") lambda=" + p.eigenvalue.to_string(),
                   json{{"k", k}, {"lambda", p.eigenvalue.to_string()}});
    }
    return out;
}

VerifyOutcome verify_max_degree_sweep(int max_n, Mode mode, int workers, const Tolerances& tol) {
    const auto specs = enumerate_chain_specs(max_n);
    std::vector<char> ok(specs.size(), 0);
    detail::parallel_index(specs.size(), workers, [&](size_t i) {
        ok[i] = verify_max_degree_downer(specs[i], mode, tol) ? 1 : 0;
    });
    VerifyOutcome out;
    for (size_t i = 0; i < specs.size(); ++i)
        out.record(ok[i] != 0, spec_display(specs[i]), json{{"spec", spec_to_json(specs[i])}});
    return out;
}

VerifyOutcome verify_gap_sweep(int max_n, const Tolerances& tol) {
    VerifyOutcome out;
    for_each_chain_spec(max_n, [&](const ChainGraphSpec& spec) {
        const Graph g = build_chain_graph(spec);
        const Spectrum s = graph_spectrum(g, tol);
        const GapCheckReport r = eigenvalue_gap_check(s, tol);
        bool ok = r.ok;
        // Half graphs are invertible, so zero must not appear either.
        if (ok && spec.is_half_graph())
            ok = float_multiplicity(s, 0.0).count == 0;
        out.record(ok, spec_display(spec) + " closest=" + format_double(r.closest_to_gap),
                   json{{"spec", spec_to_json(spec)}, {"closest_to_gap", r.closest_to_gap}});
    });
    return out;
}

VerifyOutcome verify_tables() {
    VerifyOutcome out;
    out.record(table_fixture_check(PatternFamily::Period6), "period-6 table",
               json{{"family", "period6"}});
    out.record(table_fixture_check(PatternFamily::Period10), "period-10 table",
               json{{"family", "period10"}});
    return out;
}

VerifyOutcome verify_psd(int max_k, const Tolerances& tol) {
    VerifyOutcome out;
    for (int k = 1; k <= max_k; ++k) {
        const PsdIdentityReport r = psd_identity_check(k, tol);
        const bool ok = r.identity_ok && r.min_gram_eigenvalue >= 0.25 - 1e-9;
        out.record(ok, "k=" + std::to_string(k) + " min=" + format_double(r.min_gram_eigenvalue),
                   json{{"k", k}, {"min_gram_eigenvalue", r.min_gram_eigenvalue}});
    }
    return out;
}

int finish_verify(const std::string& check, const VerifyOutcome& out, OutputFormat fmt,
                  const std::string& output_path) {
    std::string text;
    if (fmt == OutputFormat::Json) {
        text = json{{"check", check}, {"passed", out.passed}, {"cases", out.cases}}.dump() + "\n";
    } else {
        text = std::string(out.passed ? "PASS" : "FAIL") + " " + check + ": " +
               std::to_string(out.cases.size()) + " case(s)\n";
        if (!out.passed)
            text += "first failing witness: " + out.witness + "\n";
    }
    emit(text, output_path);
    return out.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral toolkit for chain graphs"};
    app.require_subcommand(1);

    std::string graph_arg, spec_arg, lambda_arg, check_arg;
    std::string mode_str, format_str = "text", output_path;
    int max_n = 0, max_k = 0, workers = 1;
    double group_tol = 1e-7, tol_override = 0.0;
    bool with_vectors = false, half_graphs_only = false;
    std::vector<std::string> lambda_filter;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "output format: json, csv or text");
        cmd->add_option("--output", output_path, "write the report to a file instead of stdout");
        cmd->add_option("--group-tol", group_tol, "eigenvalue grouping tolerance")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tol", tol_override, "zero-component / residual tolerance override")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* build = app.add_subcommand("build", "validate a chain-graph spec and emit its graph file");
    build->add_option("spec", spec_arg, "inline chain-spec JSON, H(k), or a path")->required();
    add_common(build);

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues (and optional eigenvectors)");
    spectrum->add_option("graph", graph_arg, "graph file, inline JSON, or H(k)")->required();
    spectrum->add_flag("--eigenvectors", with_vectors, "include eigenvector columns");
    add_common(spectrum);

    CLI::App* downer = app.add_subcommand("downer", "per-vertex downer classification for one eigenvalue");
    downer->add_option("graph", graph_arg, "graph file, inline JSON, or H(k)")->required();
    downer->add_option("--lambda", lambda_arg, "eigenvalue: integer, p/q, decimal, w or -w")->required();
    downer->add_option("--mode", mode_str, "exact, float or hybrid (default: exact when lambda is exact)");
    add_common(downer);

    CLI::App* verify = app.add_subcommand("verify", "run a theorem-level check suite");
    verify->add_option("check", check_arg, "thm3.1, thm3.2, thm3.3, thm4.1, tables or psd")->required();
    verify->add_option("--max-k", max_k, "largest half-graph index (thm3.2/thm3.3/psd)");
    verify->add_option("--max-n", max_n, "vertex budget for spec sweeps (thm3.1/thm4.1)");
    verify->add_option("--mode", mode_str, "multiplicity mode for thm3.1");
    verify->add_option("--workers", workers, "parallel workers for spec sweeps")->check(CLI::PositiveNumber);
    add_common(verify);

    CLI::App* search = app.add_subcommand("search", "enumerate specs and hunt for non-downer vertices");
    search->add_option("--max-n", max_n, "vertex budget")->required();
    search->add_option("--mode", mode_str, "exact, float or hybrid (default hybrid)");
    search->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
    search->add_option("--lambda", lambda_filter, "restrict to these eigenvalues (repeatable)");
    search->add_flag("--half-graphs", half_graphs_only, "restrict the enumeration to half graphs");
    add_common(search);

    CLI::App* gap = app.add_subcommand("gap-check", "certify the (0, 1/2) eigenvalue-free interval");
    gap->add_option("graph", graph_arg, "graph file, inline JSON, or H(k)")->required();
    add_common(gap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    using namespace chaingraph;
    try {
        Tolerances tol;
        tol.group_tol = group_tol;
        if (tol_override > 0)
            tol.zero_component_tol = tol_override;
        const OutputFormat fmt = parse_output_format(format_str);

        if (build->parsed()) {
            const Graph g = resolve_graph(spec_arg);
            emit(graph_to_json(g).dump() + "\n", output_path);
            return 0;
        }

        if (spectrum->parsed()) {
            const Graph g = resolve_graph(graph_arg);
            emit(render_spectrum(g, graph_spectrum(g, tol), with_vectors, fmt), output_path);
            return 0;
        }

        if (downer->parsed()) {
            const Graph g = resolve_graph(graph_arg);
            const Lambda lambda = parse_lambda(lambda_arg);
            Mode mode = lambda.exact ? Mode::Exact : Mode::Float;
            if (!mode_str.empty()) {
                mode = parse_mode(mode_str);
                if (mode == Mode::Exact && !lambda.exact)
                    throw ParseError("exact mode needs an exactly representable lambda");
            }
            emit(render_downer(g, downer_classify(g, lambda, mode, tol), fmt), output_path);
            return 0;
        }

        if (verify->parsed()) {
            const Mode mode = mode_str.empty() ? Mode::Hybrid : parse_mode(mode_str);
            if (check_arg == "thm3.1")
                return finish_verify(check_arg,
                                     verify_max_degree_sweep(max_n ? max_n : 10, mode, workers, tol),
                                     fmt, output_path);
            if (check_arg == "thm3.2")
                return finish_verify(check_arg, verify_pattern_family(max_k ? max_k : 103, false),
                                     fmt, output_path);
            if (check_arg == "thm3.3")
                return finish_verify(check_arg, verify_pattern_family(max_k ? max_k : 107, true),
                                     fmt, output_path);
            if (check_arg == "thm4.1")
                return finish_verify(check_arg, verify_gap_sweep(max_n ? max_n : 12, tol), fmt,
                                     output_path);
            if (check_arg == "tables")
                return finish_verify(check_arg, verify_tables(), fmt, output_path);
            if (check_arg == "psd")
                return finish_verify(check_arg, verify_psd(max_k ? max_k : 50, tol), fmt,
                                     output_path);
            throw ParseError("unknown check '" + check_arg +
                             "' (expected thm3.1, thm3.2, thm3.3, thm4.1, tables or psd)");
        }

        if (search->parsed()) {
            SearchJob job;
            job.max_n = max_n;
            job.mode = mode_str.empty() ? Mode::Hybrid : parse_mode(mode_str);
            job.workers = workers;
            job.half_graphs_only = half_graphs_only;
            for (const auto& l : lambda_filter) {
                const Lambda parsed = parse_lambda(l);
                if (!parsed.exact)
                    throw ParseError("search lambda filter values must be exact (got '" + l + "')");
                job.lambda_filter.push_back(*parsed.exact);
            }
            emit(render_search(find_non_downer(job, tol), fmt), output_path);
            return 0;
        }

        if (gap->parsed()) {
            const Graph g = resolve_graph(graph_arg);
            const GapCheckReport r = eigenvalue_gap_check(graph_spectrum(g, tol), tol);
            emit(render_gap(g, r, fmt), output_path);
            return r.ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
