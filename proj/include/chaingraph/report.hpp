#pragma once

#include "chaingraph/io.hpp"
#include "chaingraph/search.hpp"

#include <cstdio>
#include <string>

namespace chaingraph {

enum class OutputFormat { Json, Csv, Text };

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "json")
        return OutputFormat::Json;
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "text")
        return OutputFormat::Text;
    throw ParseError("format must be one of json, csv, text");
}

/// Fixed 12-significant-digit rendering, used everywhere a float reaches csv
/// or text output so reruns stay byte-identical.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::string lambda_display(const Lambda& l) {
    return l.exact ? l.exact->to_string() : format_double(l.value);
}

// --- spectrum ---------------------------------------------------------------

inline std::string render_spectrum(const Graph& g, const Spectrum& s, bool with_vectors,
                                   OutputFormat fmt) {
    if (fmt == OutputFormat::Json) {
        json out{{"graph", graph_to_json(g)},
                 {"n", s.n},
                 {"group_tol", s.group_tol},
                 {"eigenvalues", s.eigenvalues}};
        if (with_vectors) {
            json cols = json::array();
            for (int j = 0; j < s.n; ++j)
                cols.push_back(s.column(j));
            out["eigenvectors"] = cols;
        }
        return out.dump() + "\n";
    }
    if (fmt == OutputFormat::Csv) {
        std::string out = "index,eigenvalue\n";
        for (int j = 0; j < s.n; ++j)
            out += std::to_string(j) + "," + format_double(s.eigenvalues[j]) + "\n";
        return out;
    }
    std::string out = "n = " + std::to_string(s.n) + "\neigenvalues:";
    for (double e : s.eigenvalues)
        out += " " + format_double(e);
    out += "\n";
    if (with_vectors) {
        for (int j = 0; j < s.n; ++j) {
            out += "v[" + std::to_string(j) + "]:";
            for (int i = 0; i < s.n; ++i)
                out += " " + format_double(s.vec(i, j));
            out += "\n";
        }
    }
    return out;
}

// --- downer -----------------------------------------------------------------

inline json downer_report_to_json(const Graph& g, const DownerReport& r) {
    json verts = json::array();
    for (const auto& v : r.vertices)
        verts.push_back(json{{"id", v.vertex},
                             {"name", v.name},
                             {"mul_child", v.mul_child},
                             {"downer", v.downer},
                             {"ambiguous", v.ambiguous}});
    json out{{"graph", graph_to_json(g)},
             {"lambda", lambda_to_json(r.lambda)},
             {"mode", mode_name(r.mode)},
             {"mul", r.mul_parent},
             {"ambiguous", r.any_ambiguous},
             {"vertices", verts},
             {"non_downer", r.non_downer_names()}};
    if (r.exact_eigenvector) {
        json vec = json::array();
        for (const auto& e : *r.exact_eigenvector)
            vec.push_back(quadratic_to_json(e));
        out["eigenvector"] = vec;
    } else if (r.float_eigenvector) {
        out["eigenvector"] = *r.float_eigenvector;
    }
    return out;
}

inline std::string render_downer(const Graph& g, const DownerReport& r, OutputFormat fmt) {
    if (fmt == OutputFormat::Json)
        return downer_report_to_json(g, r).dump() + "\n";
    if (fmt == OutputFormat::Csv) {
        std::string out = "vertex,name,lambda,mul_parent,mul_child,downer,ambiguous\n";
        for (const auto& v : r.vertices)
            out += std::to_string(v.vertex) + "," + v.name + "," + lambda_display(r.lambda) + "," +
                   std::to_string(r.mul_parent) + "," + std::to_string(v.mul_child) + "," +
                   (v.downer ? "true" : "false") + "," + (v.ambiguous ? "true" : "false") + "\n";
        return out;
    }
    std::string out = "lambda = " + lambda_display(r.lambda) + " (" + mode_name(r.mode) +
                      " mode), mul = " + std::to_string(r.mul_parent) + "\n";
    for (const auto& v : r.vertices) {
        out += "  " + v.name + ": mul(G-v) = " + std::to_string(v.mul_child) + " -> " +
               (v.downer ? "downer" : "NOT downer");
        if (v.ambiguous)
            out += " (ambiguous)";
        out += "\n";
    }
    const auto nd = r.non_downer_names();
    out += "non-downer vertices:";
    if (nd.empty())
        out += " none";
    for (const auto& name : nd)
        out += " " + name;
    out += "\n";
    return out;
}

// --- gap check ----------------------------------------------------------------

inline std::string render_gap(const Graph& g, const GapCheckReport& r, OutputFormat fmt) {
    if (fmt == OutputFormat::Json)
        return json{{"graph", graph_to_json(g)},
                    {"ok", r.ok},
                    {"closest_to_gap", r.closest_to_gap}}
                   .dump() +
               "\n";
    if (fmt == OutputFormat::Csv)
        return "ok,closest_to_gap\n" + std::string(r.ok ? "true" : "false") + "," +
               format_double(r.closest_to_gap) + "\n";
    return std::string("eigenvalue-free interval (0, 1/2): ") + (r.ok ? "ok" : "VIOLATED") +
           "\nclosest eigenvalue to the gap: " + format_double(r.closest_to_gap) + "\n";
}

// --- search records -----------------------------------------------------------

inline std::string spec_display(const ChainGraphSpec& spec) {
    auto join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    return "k=" + std::to_string(spec.k) + " u=[" + join(spec.u_sizes) + "] v=[" +
           join(spec.v_sizes) + "]";
}

inline json search_record_to_json(const CounterexampleRecord& rec) {
    json out{{"spec", spec_to_json(rec.spec)},
             {"vertex", rec.vertex},
             {"name", rec.vertex_name},
             {"lambda", lambda_to_json(rec.lambda)},
             {"mul_parent", rec.mul_parent},
             {"mul_child", rec.mul_child},
             {"confirmed", rec.exact_confirmed}};
    if (!rec.exact_certificate.empty()) {
        json vec = json::array();
        for (const auto& e : rec.exact_certificate)
            vec.push_back(quadratic_to_json(e));
        out["certificate"] = vec;
    } else if (!rec.float_certificate.empty()) {
        out["certificate"] = rec.float_certificate;
    }
    return out;
}

/// Line-delimited rendering: one record per line in every format, confirmed
/// records first, then (flagged) unconfirmed ones.
inline std::string render_search(const SearchResult& result, OutputFormat fmt) {
    auto pipe_join = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i)
            s += (i ? "|" : "") + std::to_string(v[i]);
        return s;
    };
    std::string out;
    if (fmt == OutputFormat::Json) {
        for (const auto& rec : result.records)
            out += search_record_to_json(rec).dump() + "\n";
        for (const auto& rec : result.unconfirmed) {
            json j = search_record_to_json(rec);
            j["unconfirmed"] = true;
            out += j.dump() + "\n";
        }
        return out;
    }
    if (fmt == OutputFormat::Csv) {
        out = "k,u_sizes,v_sizes,vertex,name,lambda,mul_parent,mul_child,status\n";
        auto row = [&](const CounterexampleRecord& rec, const char* status) {
            out += std::to_string(rec.spec.k) + "," + pipe_join(rec.spec.u_sizes) + "," +
                   pipe_join(rec.spec.v_sizes) + "," + std::to_string(rec.vertex) + "," +
                   rec.vertex_name + "," + lambda_display(rec.lambda) + "," +
                   std::to_string(rec.mul_parent) + "," + std::to_string(rec.mul_child) + "," +
                   status + "\n";
        };
        for (const auto& rec : result.records)
            row(rec, rec.exact_confirmed ? "confirmed" : "float");
        for (const auto& rec : result.unconfirmed)
            row(rec, "unconfirmed");
        return out;
    }
    auto line = [&](const CounterexampleRecord& rec, const char* status) {
        out += std::string("non-downer ") + rec.vertex_name + " (" + spec_display(rec.spec) +
               ") lambda = " + lambda_display(rec.lambda) + ", mul " +
               std::to_string(rec.mul_parent) + " -> " + std::to_string(rec.mul_child) + " [" +
               status + "]\n";
    };
    for (const auto& rec : result.records)
        line(rec, rec.exact_confirmed ? "confirmed" : "float");
    for (const auto& rec : result.unconfirmed)
        line(rec, "unconfirmed");
    return out;
}

} // namespace chaingraph
