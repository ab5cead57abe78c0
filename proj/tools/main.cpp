#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "circind/checks.hpp"
#include "circind/format.hpp"
#include "circind/invariants.hpp"
#include "circind/search.hpp"
#include "circind/serialize.hpp"

namespace {

using namespace circind;

enum class OutputFormat { Text, Records, Csv };

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "records" || name == "structured-records") return OutputFormat::Records;
    if (name == "csv") return OutputFormat::Csv;
    throw ValidationError("unknown format '" + name + "', expected text|records|csv");
}

// Shared flags; each subcommand wires in the subset it needs.
struct Options {
    int n = 0;
    std::string set_text;
    std::string engine = "auto";
    std::string format = "text";
    std::string out_path;
    std::string check;
    std::string records_path;
    std::string table_path;
    std::string resume_after;
    int size = 0;
    int terms = 0;
    int workers = 1;
    int p = 0, k = 1, q = 0, r = 0;
    std::uint64_t seed = 1;
    std::size_t samples = 2000;
    bool set_given = false;
};

std::string csv_quote(const std::string& field) {
    if (field.find(',') == std::string::npos && field.find('"') == std::string::npos)
        return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

struct Output {
    std::ostream* stream = &std::cout;
    std::ofstream file;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw ValidationError("cannot open output file: " + path);
        stream = &file;
    }
    std::ostream& os() { return *stream; }
};

CirculantGraph make_graph(const Options& opt) {
    if (opt.n == 0) throw ValidationError("--n is required");
    return CirculantGraph(opt.n, parse_connection_set(opt.set_text));
}

Engine resolved_engine(const Options& opt) { return parse_engine(opt.engine); }

std::string engine_label(Engine e) {
    return std::string(engine_name(e == Engine::Auto ? Engine::Split : e));
}

// Single-value commands share one emitter so the three formats stay aligned.
void emit_scalar(Output& out, OutputFormat format, const std::string& command,
                 const Options& opt, const std::string& engine,
                 const std::vector<std::pair<std::string, nlohmann::ordered_json>>& fields,
                 const std::string& text_line) {
    switch (format) {
        case OutputFormat::Text:
            out.os() << text_line << "\n";
            return;
        case OutputFormat::Records: {
            nlohmann::ordered_json j;
            j["type"] = "result";
            j["command"] = command;
            j["version"] = kToolVersion;
            if (!engine.empty()) j["engine"] = engine;
            j["n"] = opt.n;
            j["set"] = parse_connection_set(opt.set_text);
            for (const auto& [key, value] : fields) j[key] = value;
            out.os() << j.dump() << "\n";
            return;
        }
        case OutputFormat::Csv: {
            std::string header = "n,set", row = std::to_string(opt.n) + "," +
                                                csv_quote(render_set(parse_connection_set(
                                                    opt.set_text)));
            if (!engine.empty()) {
                header += ",engine";
                row += "," + engine;
            }
            for (const auto& [key, value] : fields) {
                header += "," + key;
                row += "," + csv_quote(value.is_string() ? value.get<std::string>()
                                                         : value.dump());
            }
            out.os() << header << "\n" << row << "\n";
            return;
        }
    }
}

int run_fvector(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    FVector f = fvector(make_graph(opt), resolved_engine(opt));
    emit_scalar(out, format, "fvector", opt, engine_label(resolved_engine(opt)),
                {{"fvector", f.counts}}, render_bracketed(f.counts));
    return 0;
}

int run_chi(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    std::int64_t chi = reduced_euler(fvector(make_graph(opt), resolved_engine(opt)));
    emit_scalar(out, format, "chi", opt, engine_label(resolved_engine(opt)),
                {{"chi", chi}}, "chi~ = " + std::to_string(chi));
    return 0;
}

int run_indpoly(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    IndependencePolynomial poly =
        independence_polynomial(make_graph(opt), resolved_engine(opt));
    std::string pretty = render_polynomial(poly.coefficients, "x");
    std::string coeffs = render_bracketed(poly.coefficients);
    if (format == OutputFormat::Text) {
        out.os() << "I(G,x) = " << pretty << "\n";
        out.os() << "coefficients: " << coeffs << "\n";
        return 0;
    }
    emit_scalar(out, format, "indpoly", opt, engine_label(resolved_engine(opt)),
                {{"polynomial", pretty}, {"coefficients", poly.coefficients}}, "");
    return 0;
}

int run_hvector(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    HVector h = hvector(fvector(make_graph(opt), resolved_engine(opt)));
    emit_scalar(out, format, "hvector", opt, engine_label(resolved_engine(opt)),
                {{"hvector", h.entries}}, render_bracketed(h.entries));
    return 0;
}

int run_hilbert(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    AlgebraicSummary s = algebraic_summary(fvector(make_graph(opt), resolved_engine(opt)));
    std::string numerator = render_polynomial(s.hilbert_numerator, "t");
    if (format == OutputFormat::Text) {
        out.os() << "h(t) = " << numerator << "\n";
        out.os() << "d = " << s.krull_dim << "\n";
        out.os() << "regularity index = " << s.regularity_index << "\n";
        out.os() << "a-invariant = " << s.a_invariant << "\n";
        if (opt.terms > 0)
            out.os() << "H(0.." << opt.terms - 1
                     << ") = " << render_bracketed(hilbert_series_prefix(s, opt.terms))
                     << "\n";
        return 0;
    }
    std::vector<std::pair<std::string, nlohmann::ordered_json>> fields = {
        {"numerator", numerator},
        {"numerator_coefficients", s.hilbert_numerator},
        {"krull_dim", s.krull_dim},
        {"regularity_index", s.regularity_index},
        {"a_invariant", s.a_invariant}};
    if (opt.terms > 0)
        fields.emplace_back("series_prefix", hilbert_series_prefix(s, opt.terms));
    emit_scalar(out, format, "hilbert", opt, engine_label(resolved_engine(opt)), fields, "");
    return 0;
}

int run_omega(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    int omega = clique_number(make_graph(opt));
    emit_scalar(out, format, "omega", opt, engine_label(resolved_engine(opt)),
                {{"omega", omega}}, "omega = " + std::to_string(omega));
    return 0;
}

int run_cliques(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    if (opt.size <= 0) throw ValidationError("--size is required and must be positive");
    std::int64_t count = cliques_of_size(make_graph(opt), opt.size);
    emit_scalar(out, format, "cliques", opt, engine_label(resolved_engine(opt)),
                {{"size", opt.size}, {"count", count}},
                "cliques(" + std::to_string(opt.size) + ") = " + std::to_string(count));
    return 0;
}

int run_verify(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    CheckOptions check_options;
    check_options.workers = opt.workers;
    check_options.seed = opt.seed;
    check_options.samples = opt.samples;
    if (opt.set_given) {
        if (opt.check != "div") throw ValidationError("--set is only supported by check div");
        check_options.explicit_set = parse_connection_set(opt.set_text);
    }

    CheckCertificate cert;
    const std::string& id = opt.check;
    if (id == "div") {
        if (opt.n == 0) throw ValidationError("--n is required for check div");
        cert = check_lemma_div(opt.n, check_options);
    } else if (id == "cn") {
        if (opt.n == 0) throw ValidationError("--n is required for check cn");
        cert = check_clique_bound(opt.n, check_options);
    } else if (id == "2q") {
        int q = opt.q ? opt.q : (opt.n ? opt.n / 2 : 0);
        if (q == 0) throw ValidationError("--q (or --n = 2q) is required for check 2q");
        cert = check_lemma_2q(q, check_options);
    } else if (id == "dq1") {
        if (opt.r == 0 || opt.q == 0)
            throw ValidationError("--r and --q are required for check dq1");
        cert = check_lemma_dq1(opt.r, opt.q, check_options);
    } else if (id == "congruence") {
        if (opt.p == 0) throw ValidationError("--p is required for check congruence");
        cert = check_congruence(opt.p, opt.k, check_options);
    } else if (id == "theorem" || id == "thm_pk" || id == "thm_2pk") {
        if (opt.n == 0) throw ValidationError("--n is required for the nonvanishing checks");
        cert = verify_nonvanishing(opt.n, check_options);
        if (id != "theorem" && id != cert.statement_id)
            throw ValidationError("n=" + std::to_string(opt.n) + " is a " +
                                  cert.statement_id + " instance, not " + id);
    } else {
        throw ValidationError("unknown check '" + id +
                              "', expected div|cn|2q|dq1|congruence|thm_pk|thm_2pk|theorem");
    }

    switch (format) {
        case OutputFormat::Text:
            out.os() << certificate_text(cert);
            break;
        case OutputFormat::Records:
            out.os() << to_json(cert).dump() << "\n";
            break;
        case OutputFormat::Csv: {
            out.os() << "statement_id,mode,seed,instances_checked,passed,counterexample\n";
            out.os() << cert.statement_id << ',' << cert.mode << ',' << cert.seed << ','
                     << cert.instances_checked << ',' << (cert.passed ? "true" : "false")
                     << ','
                     << (cert.counterexample
                             ? csv_quote(render_set(cert.counterexample->set))
                             : std::string())
                     << "\n";
            break;
        }
    }
    return cert.passed ? 0 : 1;
}

int run_search(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    if (opt.n == 0) throw ValidationError("--n is required");
    std::optional<std::vector<int>> resume;
    if (!opt.resume_after.empty()) resume = parse_connection_set(opt.resume_after);
    SearchResult result = search_zero_chi(opt.n, opt.workers, resume);

    switch (format) {
        case OutputFormat::Text: {
            out.os() << "# search n=" << opt.n << ": " << result.summary.classes_total
                     << " classes, " << result.summary.subsets_total << " subsets\n";
            for (const auto& rec : result.records)
                out.os() << CirculantGraph(rec.n, rec.representative).to_string()
                         << " orbit=" << rec.orbit_size << " chi=0 fvector="
                         << render_bracketed(rec.fvector.counts) << "\n";
            out.os() << "# zero classes: " << result.summary.zero_classes << "\n";
            out.os() << "# last class: "
                     << render_set_braced(result.summary.last_class) << "\n";
            out.os() << "# wall time: " << result.summary.wall_seconds << " s\n";
            break;
        }
        case OutputFormat::Records: {
            nlohmann::ordered_json head;
            head["type"] = "run";
            head["command"] = "search";
            head["version"] = kToolVersion;
            head["engine"] = engine_label(Engine::Auto);
            head["n"] = opt.n;
            out.os() << head.dump() << "\n";
            for (const auto& rec : result.records) out.os() << to_json(rec).dump() << "\n";
            out.os() << to_json(result.summary).dump() << "\n";
            break;
        }
        case OutputFormat::Csv: {
            out.os() << "n,representative,orbit_size,fvector,chi\n";
            for (const auto& rec : result.records)
                out.os() << rec.n << ',' << csv_quote(render_set(rec.representative)) << ','
                         << rec.orbit_size << ','
                         << csv_quote(render_bracketed(rec.fvector.counts)) << ",0\n";
            out.os() << "# classes_total=" << result.summary.classes_total
                     << " subsets_total=" << result.summary.subsets_total << "\n";
            break;
        }
    }
    return 0;
}

int run_reconcile(const Options& opt, OutputFormat format) {
    Output out(opt.out_path);
    if (opt.n == 0) throw ValidationError("--n is required");
    if (opt.records_path.empty() || opt.table_path.empty())
        throw ValidationError("--records and --table are required");

    std::ifstream in(opt.records_path);
    if (!in) throw ValidationError("cannot open records file: " + opt.records_path);
    std::vector<ZeroRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded())
            throw ValidationError("records file is not line-delimited JSON: " +
                                  opt.records_path);
        if (j.value("type", "") != "zero_class") continue;
        try {
            records.push_back(zero_record_from_json(j));
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError("malformed zero_class record in " + opt.records_path +
                                  ": " + e.what());
        }
    }
    std::vector<std::vector<int>> table = load_reference_sets(opt.table_path);
    ReconcileReport report = cross_reference_table(records, table, opt.n);

    switch (format) {
        case OutputFormat::Text: {
            out.os() << "reconciliation n=" << opt.n << ": " << table.size()
                     << " reference entries vs " << records.size() << " zero classes\n";
            for (const auto& m : report.matched)
                out.os() << "  " << render_set_braced(m.table_entry) << " -> class "
                         << render_set_braced(m.representative) << " (orbit "
                         << m.orbit_size << ")\n";
            out.os() << "unmatched reference entries: "
                     << report.unmatched_table_entries.size() << "\n";
            for (const auto& entry : report.unmatched_table_entries)
                out.os() << "  " << render_set_braced(entry) << "\n";
            out.os() << "classes not in reference: " << report.unmatched_classes.size()
                     << "\n";
            for (const auto& extra : report.unmatched_classes) {
                out.os() << "  " << render_set_braced(extra.representative);
                if (extra.same_fvector_entries.empty()) {
                    out.os() << ": no reference entry shares its f-vector\n";
                } else {
                    out.os() << ": same f-vector as";
                    for (const auto& e : extra.same_fvector_entries)
                        out.os() << ' ' << render_set_braced(e);
                    out.os() << " (multiplier classes are finer than isomorphism)\n";
                }
            }
            break;
        }
        case OutputFormat::Records:
            out.os() << to_json(report).dump() << "\n";
            break;
        case OutputFormat::Csv: {
            out.os() << "status,table_entry,representative\n";
            for (const auto& m : report.matched)
                out.os() << "matched," << csv_quote(render_set(m.table_entry)) << ','
                         << csv_quote(render_set(m.representative)) << "\n";
            for (const auto& entry : report.unmatched_table_entries)
                out.os() << "unmatched_table," << csv_quote(render_set(entry)) << ",\n";
            for (const auto& extra : report.unmatched_classes)
                out.os() << "extra_class,," << csv_quote(render_set(extra.representative))
                         << "\n";
            break;
        }
    }
    return report.fully_attributed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circind: exact independence-complex invariants of circulant graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_graph_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "number of vertices (2..64)");
        cmd->add_option("--set", opt.set_text,
                        "connection set, e.g. \"1,3,8\" or \"1-24^5\" ({1..24} minus {5})");
        cmd->add_option("--engine", opt.engine, "counting engine: auto|brute|split|rooted")
            ->default_str("auto");
        cmd->add_option("--format", opt.format, "output format: text|records|csv")
            ->default_str("text");
        cmd->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    };

    CLI::App* cmd_fvector = app.add_subcommand("fvector", "f-vector of the independence complex");
    CLI::App* cmd_chi = app.add_subcommand("chi", "reduced Euler characteristic");
    CLI::App* cmd_indpoly = app.add_subcommand("indpoly", "independence polynomial");
    CLI::App* cmd_hvector = app.add_subcommand("hvector", "h-vector of the independence complex");
    CLI::App* cmd_hilbert =
        app.add_subcommand("hilbert", "Hilbert-Poincare numerator, regularity index, a-invariant");
    CLI::App* cmd_omega = app.add_subcommand("omega", "clique number");
    CLI::App* cmd_cliques = app.add_subcommand("cliques", "number of cliques of a given size");
    for (CLI::App* cmd :
         {cmd_fvector, cmd_chi, cmd_indpoly, cmd_hvector, cmd_hilbert, cmd_omega, cmd_cliques})
        add_graph_flags(cmd);
    cmd_cliques->add_option("--size", opt.size, "clique cardinality to count");
    cmd_hilbert->add_option("--terms", opt.terms,
                            "also print this many Hilbert function values");

    CLI::App* cmd_verify = app.add_subcommand(
        "verify",
        "check one statement exhaustively (or sampled) and emit a certificate;\n"
        "exit status 0 iff the certificate passed. Checks:\n"
        "  div        i*f_{i-1} = n*f_{i-1,0} (rooted-count divisibility)\n"
        "  cn         omega(G) <= floor(n/2) for non-complete G\n"
        "  2q         on n=2q, q odd: omega < q iff {2,4,...,q-1} not in S\n"
        "  dq1        on n=rq, q odd: the generalized clique bounds (parts 1 and 2)\n"
        "  congruence on n=2p^k: nonzero p^k-clique counts are 2 mod p\n"
        "  thm_pk     chi~ != 0 for every non-empty S when n = p^k\n"
        "  thm_2pk    chi~ != 0 for every non-empty S when n = 2p^k, p odd\n"
        "  theorem    thm_pk or thm_2pk, chosen from the form of n");
    add_graph_flags(cmd_verify);
    cmd_verify->add_option("--check", opt.check,
                           "statement id: div|cn|2q|dq1|congruence|thm_pk|thm_2pk|theorem")
        ->required();
    cmd_verify->add_option("--p", opt.p, "odd prime p (congruence)");
    cmd_verify->add_option("--k", opt.k, "exponent k >= 1 (congruence)")->default_str("1");
    cmd_verify->add_option("--q", opt.q, "odd q > 1 (2q, dq1)");
    cmd_verify->add_option("--r", opt.r, "factor r >= 2 (dq1)");
    cmd_verify->add_option("--seed", opt.seed, "seed for sampled mode")->default_str("1");
    cmd_verify->add_option("--samples", opt.samples, "connection sets drawn in sampled mode")
        ->default_str("2000");
    cmd_verify->add_option("--workers", opt.workers, "worker threads")->default_str("1");

    CLI::App* cmd_search = app.add_subcommand(
        "search", "sweep all multiplier classes and report those with chi~ = 0");
    add_graph_flags(cmd_search);
    cmd_search->add_option("--workers", opt.workers, "worker threads")->default_str("1");
    cmd_search->add_option("--resume-after", opt.resume_after,
                           "skip classes up to and including this representative");

    CLI::App* cmd_reconcile = app.add_subcommand(
        "reconcile", "match search records against a reference list by orbit membership;\n"
                     "exit status 0 iff every discrepancy is attributed");
    add_graph_flags(cmd_reconcile);
    cmd_reconcile->add_option("--records", opt.records_path,
                              "line-delimited records from `search --format records`");
    cmd_reconcile->add_option("--table", opt.table_path,
                              "reference list file (one connection set per line)");

    app.footer("capacity overrides: CIRCIND_ORACLE_BOUND (default 26), CIRCIND_SEARCH_CAP\n"
               "(default 40), CIRCIND_MEMO_BUDGET bytes (default 268435456).");

    try {
        app.parse(argc, argv);
        opt.set_given = !app.get_subcommands().empty() &&
                        app.get_subcommands().front()->count("--set") > 0;
        OutputFormat format = parse_format(opt.format);
        if (cmd_fvector->parsed()) return run_fvector(opt, format);
        if (cmd_chi->parsed()) return run_chi(opt, format);
        if (cmd_indpoly->parsed()) return run_indpoly(opt, format);
        if (cmd_hvector->parsed()) return run_hvector(opt, format);
        if (cmd_hilbert->parsed()) return run_hilbert(opt, format);
        if (cmd_omega->parsed()) return run_omega(opt, format);
        if (cmd_cliques->parsed()) return run_cliques(opt, format);
        if (cmd_verify->parsed()) return run_verify(opt, format);
        if (cmd_search->parsed()) return run_search(opt, format);
        if (cmd_reconcile->parsed()) return run_reconcile(opt, format);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
