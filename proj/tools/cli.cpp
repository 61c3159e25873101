#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tokenalg/algebras.hpp"
#include "tokenalg/json_io.hpp"
#include "tokenalg/linalg.hpp"

namespace tokenalg::cli {

using nlohmann::json;

namespace {

std::string fnv1a_digest(const std::string& data) {
    unsigned long long hash = 1469598103934665603ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", hash);
    return buf;
}

struct Options {
    std::string input;
    std::string out_path;
    std::string format = "json";
    std::string mode = "auto";
    std::string kind = "laplacian";
    int n = 0;
    int k = 0;
    double tol = 1e-9;
    std::string alpha, beta;
    bool verify = false;
    bool emit_binomial = false;
};

struct LoadedGraph {
    Graph graph;
    std::string path;
    std::string digest;
};

LoadedGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read input file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();
    return {parse_graph(content), path, fnv1a_digest(content)};
}

// Collects named pass/fail checks with optional witnesses.
struct Checks {
    json results = json::object();
    bool all_pass = true;

    void add(const std::string& section, const std::string& name, bool pass, json witness = nullptr) {
        json entry{{"pass", pass}};
        if (!witness.is_null()) entry["witness"] = witness;
        results[section][name] = entry;
        all_pass = all_pass && pass;
    }
    void info(const std::string& section, const std::string& name, json value) { results[section][name] = value; }
};

json rat_json(const Rat& r) { return rat_to_string(r); }

json spectrum_json(const Spectrum& s) { return json::parse(spectrum_to_json(s)); }

json matrix_json(const Matrix& m) { return json::parse(matrix_to_json(m)); }

json graph_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", edges}};
}

json pair_table_json(const PairTable& t) {
    json rows = json::array();
    if (t.mode == Spectrum::Mode::exact) {
        for (const auto& r : t.rows)
            rows.push_back(json{{"level", r.level},
                                {"index", r.index},
                                {"lambda", rat_json(r.lambda)},
                                {"lambda_bar", rat_json(r.lambda_bar)},
                                {"johnson", r.johnson}});
    } else {
        for (const auto& r : t.rows_f)
            rows.push_back(json{{"level", r.level},
                                {"index", r.index},
                                {"lambda", r.lambda},
                                {"lambda_bar", r.lambda_bar},
                                {"johnson", r.johnson}});
    }
    json out{{"n", t.n}, {"k", t.k}, {"mode", t.mode == Spectrum::Mode::exact ? "exact" : "approximate"}, {"rows", rows}};
    if (t.mode != Spectrum::Mode::exact) {
        out["max_residual"] = t.max_residual;
        if (std::isfinite(t.min_gap)) out["min_gap"] = t.min_gap;
    }
    return out;
}

std::string pair_table_csv(const PairTable& t) {
    std::ostringstream csv;
    csv << "level,index,lambda,lambda_bar,johnson\n";
    if (t.mode == Spectrum::Mode::exact) {
        for (const auto& r : t.rows)
            csv << r.level << ',' << r.index << ',' << rat_to_string(r.lambda) << ',' << rat_to_string(r.lambda_bar)
                << ',' << r.johnson << '\n';
    } else {
        for (const auto& r : t.rows_f)
            csv << r.level << ',' << r.index << ',' << r.lambda << ',' << r.lambda_bar << ',' << r.johnson << '\n';
    }
    return csv.str();
}

json intersection_array_json(const IntersectionArray& ia) {
    return json{{"d", ia.d}, {"b", ia.b}, {"a", ia.a}, {"c", ia.c}};
}

Spectrum spectrum_for_mode(const Matrix& m, const Options& opt) {
    if (opt.mode == "numeric") return numeric_spectrum(m, opt.tol);
    if (opt.mode == "exact") {
        auto s = exact_spectrum(m);
        if (!s) throw InputError("spectrum is not integral; rerun with --mode numeric or auto");
        return *s;
    }
    return auto_spectrum(m, opt.tol);
}

json local_algebra_json(const LocalAlgebraReport& rep, bool include_matrices) {
    json joint = json::array();
    if (rep.joint.mode == Spectrum::Mode::exact) {
        for (const auto& p : rep.joint.exact)
            joint.push_back(json{{"lambda", rat_json(p.lambda)},
                                 {"lambda_bar", rat_json(p.lambda_bar)},
                                 {"multiplicity", p.multiplicity}});
    } else {
        for (const auto& p : rep.joint.approx)
            joint.push_back(json{{"lambda", p.lambda}, {"lambda_bar", p.lambda_bar}, {"multiplicity", p.multiplicity}});
    }
    json out{{"n", rep.n},
             {"k", rep.k},
             {"mode", rep.mode == Spectrum::Mode::exact ? "exact" : "approximate"},
             {"commutes", rep.commutes},
             {"dim", rep.dim},
             {"monomial_rank", rep.monomial_rank},
             {"dims_agree", rep.dims_agree},
             {"alpha", rat_json(rep.alpha)},
             {"beta", rat_json(rep.beta)},
             {"generator_separated", rep.generator_separated},
             {"idempotents_ok", rep.idempotents_ok},
             {"johnson_in_span", rep.johnson_in_span},
             {"pairs_match_pairing_table", rep.pairs_match_pairing_table},
             {"joint_pairs", joint}};
    if (rep.mode == Spectrum::Mode::exact) {
        json theta = json::array();
        for (const Rat& t : rep.theta) theta.push_back(rat_json(t));
        out["theta"] = theta;
    }
    if (include_matrices) {
        out["generator"] = matrix_json(rep.generator);
        json idem = json::array();
        for (const Matrix& e : rep.idempotents) idem.push_back(matrix_json(e));
        out["idempotents"] = idem;
    }
    return out;
}

void emit(const json& report, const std::string& text_override, const Options& opt, std::ostream& out) {
    std::string payload = text_override.empty() ? report.dump(2) + "\n" : text_override;
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) throw InputError("cannot write output file: " + opt.out_path);
        file << payload;
    } else {
        out << payload;
    }
}

int finish(json& report, Checks& checks, const Options& opt, std::ostream& out,
           const std::chrono::steady_clock::time_point& start, const std::string& csv = "") {
    report["results"] = checks.results;
    report["passed"] = checks.all_pass;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, opt.format == "csv" ? csv : "", opt, out);
    return checks.all_pass ? 0 : 1;
}

json command_header(const std::string& command, const Options& opt, const LoadedGraph* input) {
    json header{{"command", command}};
    json options{{"tol", opt.tol}, {"mode", opt.mode}};
    if (opt.k > 0) options["k"] = opt.k;
    if (opt.n > 0) options["n"] = opt.n;
    header["options"] = options;
    if (input) header["input"] = json{{"path", input->path}, {"digest", "fnv1a:" + input->digest}};
    return header;
}

int cmd_token(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    LoadedGraph in = load_graph(opt.input);
    TokenGraph t = token_graph(in.graph, opt.k);
    json vertices = json::array();
    for (const auto& s : t.labels) vertices.push_back(s.elements);
    json edges = json::array();
    for (auto [u, v] : t.graph.edges) edges.push_back(json::array({u, v}));
    json report = command_header("token", opt, &in);
    report["n"] = in.graph.n;
    report["k"] = opt.k;
    report["vertices"] = vertices;
    report["edges"] = edges;
    report["edge_count"] = t.graph.edges.size();
    if (opt.emit_binomial) report["binomial_matrix"] = matrix_json(binomial_matrix(in.graph.n, opt.k));
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, "", opt, out);
    return 0;
}

int cmd_pair(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    LoadedGraph in = load_graph(opt.input);
    PairTable table = pairing_table(in.graph, opt.k, opt.tol);
    json report = command_header("pair", opt, &in);
    report["table"] = pair_table_json(table);
    Checks checks;
    bool law_ok = table.mode == Spectrum::Mode::exact || table.max_residual <= 1e-7;
    checks.add("pairing", "law", law_ok,
               table.mode == Spectrum::Mode::exact ? json(nullptr) : json(table.max_residual));
    return finish(report, checks, opt, out, start, pair_table_csv(table));
}

int cmd_poly(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    LoadedGraph in = load_graph(opt.input);
    ProductKind kind = opt.kind == "adjacency" ? ProductKind::adjacency : ProductKind::laplacian;
    Matrix m = kind == ProductKind::adjacency ? adjacency(in.graph) : laplacian(in.graph);
    Spectrum spectrum = spectrum_for_mode(m, opt);
    PredistanceFamily fam = predistance_family(kind, spectrum);

    json report = command_header("poly", opt, &in);
    report["kind"] = opt.kind;
    report["mode"] = fam.exact ? "exact" : "approximate";
    report["spectrum"] = spectrum_json(spectrum);
    json polys = json::array();
    if (fam.exact)
        for (const Poly& p : fam.polys) polys.push_back(json::parse(poly_to_json(p)));
    else
        for (const auto& p : fam.polys_f) polys.push_back(p);
    report["polys"] = polys;
    if (fam.truncated_at >= 0) report["truncated_at"] = fam.truncated_at;
    if (fam.exact) report["hoffman_sum"] = json::parse(poly_to_json(fam.hoffman_sum));

    // sampling table over [0, lambda_max] for external plotting
    double lambda_max = spectrum.mode == Spectrum::Mode::exact ? rat_to_double(spectrum.rational.back().first)
                                                               : spectrum.numeric.back().first;
    std::ostringstream csv;
    csv << "x";
    for (int i = 0; i < fam.count(); ++i) csv << ",q" << i;
    csv << '\n';
    auto eval_f = [&](int i, double x) {
        if (fam.exact) {
            double acc = 0;
            for (int j = fam.polys[i].degree(); j >= 0; --j) acc = acc * x + rat_to_double(fam.polys[i].coeff(j));
            return acc;
        }
        double acc = 0;
        for (auto it = fam.polys_f[i].rbegin(); it != fam.polys_f[i].rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    for (int step = 0; step < 200; ++step) {
        double x = lambda_max * step / 199.0;
        csv << x;
        for (int i = 0; i < fam.count(); ++i) csv << ',' << eval_f(i, x);
        csv << '\n';
    }
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, opt.format == "csv" ? csv.str() : "", opt, out);
    return 0;
}

int cmd_johnson(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    if (opt.n < 2 || opt.k < 1) throw InputError("johnson needs --n and --k with 1 <= k <= n-1");
    json report = command_header("johnson", opt, nullptr);
    TokenGraph jnk = johnson_graph(opt.n, opt.k);
    IntersectionArray ia = johnson_intersection_array(opt.n, opt.k);
    Spectrum closed_form = johnson_laplacian_spectrum(opt.n, opt.k);
    report["vertices"] = jnk.graph.n;
    report["edges"] = jnk.graph.edges.size();
    report["degree"] = opt.k * (opt.n - opt.k);
    report["intersection_array"] = intersection_array_json(ia);
    report["quotient_matrix"] = matrix_json(quotient_matrix(ia));
    report["laplacian_spectrum"] = spectrum_json(closed_form);

    Checks checks;
    if (opt.verify) {
        auto exact = exact_spectrum(laplacian(jnk.graph));
        checks.add("johnson", "closed_form_spectrum", exact && *exact == closed_form);
        MIdentityReport mid = verify_M_identity(opt.n, opt.k);
        checks.add("johnson", "m_identity", mid.m_identity);
        DrgReport drg = is_distance_regular(jnk.graph, opt.tol);
        checks.add("johnson", "distance_regular", drg.drg, drg.checked_by);
        bool array_match = drg.intersection_array && (opt.k <= opt.n - opt.k ? *drg.intersection_array == ia : true);
        checks.add("johnson", "intersection_array_counting", array_match);
    }
    return finish(report, checks, opt, out, start);
}

int cmd_algebra_local(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    LoadedGraph in = load_graph(opt.input);
    std::optional<std::pair<Rat, Rat>> forced;
    if (!opt.alpha.empty() || !opt.beta.empty()) {
        if (opt.alpha.empty() || opt.beta.empty()) throw InputError("--alpha and --beta must be given together");
        forced = {{rat_from_string(opt.alpha), rat_from_string(opt.beta)}};
    }
    LocalAlgebraReport rep = local_algebra(in.graph, opt.k, forced, opt.tol);
    json report = command_header("algebra local", opt, &in);
    report["local_algebra"] = local_algebra_json(rep, true);
    Checks checks;
    checks.add("local_algebra", "commutes", rep.commutes);
    checks.add("local_algebra", "dims_agree", rep.dims_agree,
               json{{"dim", rep.dim}, {"monomial_rank", rep.monomial_rank}});
    checks.add("local_algebra", "generator_separated", rep.generator_separated);
    checks.add("local_algebra", "idempotents", rep.idempotents_ok);
    checks.add("local_algebra", "johnson_in_span", rep.johnson_in_span);
    checks.add("local_algebra", "pairs_match_pairing_table", rep.pairs_match_pairing_table);
    return finish(report, checks, opt, out, start);
}

int cmd_algebra_global(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    if (opt.n < 2 || opt.k < 1) throw InputError("algebra global needs --n and --k with 1 <= k <= n-1");
    GlobalAlgebraReport rep = global_algebra(opt.n, opt.k);
    json report = command_header("algebra global", opt, nullptr);
    report["dim"] = rep.dim;
    Checks checks;
    checks.add("global_algebra", "disjoint_supports", rep.disjoint_supports);
    json witness = nullptr;
    if (rep.noncommuting_witness)
        witness = json::array({json::array({rep.noncommuting_witness->first.first, rep.noncommuting_witness->first.second}),
                               json::array({rep.noncommuting_witness->second.first, rep.noncommuting_witness->second.second})});
    checks.add("global_algebra", "noncommuting_witness", rep.noncommuting_witness.has_value(), witness);
    checks.add("global_algebra", "laplacian_identity", rep.laplacian_identity);
    checks.add("global_algebra", "sums_to_johnson", rep.sums_to_johnson);
    return finish(report, checks, opt, out, start);
}

int cmd_recognize(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    LoadedGraph in = load_graph(opt.input);
    if (opt.n < 2 || opt.k < 1) throw InputError("recognize needs --n and --k with 1 <= k <= n-1");
    RecognitionResult rec = recognize_token_graph(in.graph, opt.n, opt.k);
    json report = command_header("recognize", opt, &in);
    Checks checks;
    if (rec.accepted()) {
        report["base"] = graph_json(*rec.base);
        checks.add("recognition", "is_token_graph", true);
    } else {
        json witness = json::array({rec.broken_class->first, rec.broken_class->second});
        checks.add("recognition", "is_token_graph", false, witness);
    }
    return finish(report, checks, opt, out, start);
}

int cmd_verify_all(const Options& opt, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    LoadedGraph in = load_graph(opt.input);
    const Graph& g = in.graph;
    json report = command_header("verify-all", opt, &in);
    Checks checks;

    IntertwiningReport inter = verify_intertwining(g, opt.k);
    json witness = nullptr;
    if (inter.first_mismatch) witness = json::array({inter.first_mismatch->first, inter.first_mismatch->second});
    checks.add("intertwining", "products_match", inter.products_match, witness);
    checks.add("intertwining", "base_recovered", inter.base_recovered);
    checks.add("intertwining", "column_space_invariant", inter.column_space_invariant);
    Matrix l1 = laplacian(g);
    Matrix lk = laplacian(token_graph(g, opt.k).graph);
    checks.add("intertwining", "char_poly_divides", poly_divides(char_poly(l1), char_poly(lk)));

    CommuteReport comm = check_commute(g, opt.k);
    checks.add("commutation", "laplacians_commute", comm.laplacians_commute);
    checks.info("commutation", "adjacencies_commute", comm.adjacencies_commute);

    if (2 * opt.k <= g.n) {
        PairTable table = pairing_table(g, opt.k, opt.tol);
        report["pair_table"] = pair_table_json(table);
        bool law_ok = table.mode == Spectrum::Mode::exact || table.max_residual <= 1e-7;
        checks.add("pairing", "law", law_ok);

        MIdentityReport mid = verify_M_identity(g.n, opt.k, g);
        checks.add("m_identity", "binomial_gram_decomposition", mid.m_identity);
        checks.add("m_identity", "commuting_family", mid.commuting_family);

        LocalAlgebraReport rep = local_algebra(g, opt.k, std::nullopt, opt.tol);
        report["local_algebra"] = local_algebra_json(rep, false);
        checks.add("local_algebra", "dims_agree", rep.dims_agree);
        checks.add("local_algebra", "generator_separated", rep.generator_separated);
        checks.add("local_algebra", "idempotents", rep.idempotents_ok);
        checks.add("local_algebra", "johnson_in_span", rep.johnson_in_span);
        checks.add("local_algebra", "pairs_match_pairing_table", rep.pairs_match_pairing_table);
    } else {
        checks.info("pairing", "skipped", "needs k <= n/2");
    }
    return finish(report, checks, opt, out, start);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"token graph and Laplacian algebra toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", opt.input, "graph file (edge list or graph6)")->required();
        cmd->add_option("--tol", opt.tol, "numeric tolerance");
        cmd->add_option("--mode", opt.mode, "exact | numeric | auto")
            ->check(CLI::IsMember({"exact", "numeric", "auto"}));
        cmd->add_option("--out", opt.out_path, "write the report to a file");
        cmd->add_option("--format", opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* token = app.add_subcommand("token", "build a k-token graph");
    add_common(token, true);
    token->add_option("--k", opt.k, "token count")->required();
    token->add_flag("--emit-binomial", opt.emit_binomial, "include the binomial matrix");

    CLI::App* pair = app.add_subcommand("pair", "eigenvalue pairing table");
    add_common(pair, true);
    pair->add_option("--k", opt.k, "token count")->required();

    CLI::App* poly = app.add_subcommand("poly", "predistance polynomial family");
    add_common(poly, true);
    poly->add_option("--kind", opt.kind, "adjacency | laplacian")
        ->check(CLI::IsMember({"adjacency", "laplacian"}));

    CLI::App* johnson = app.add_subcommand("johnson", "Johnson graph data and checks");
    add_common(johnson, false);
    johnson->add_option("--n", opt.n, "ground set size")->required();
    johnson->add_option("--k", opt.k, "subset size")->required();
    johnson->add_flag("--verify", opt.verify, "run the verification checks");

    CLI::App* algebra = app.add_subcommand("algebra", "token graph algebras");
    algebra->require_subcommand(1);
    CLI::App* local = algebra->add_subcommand("local", "algebra generated by the two token Laplacians");
    add_common(local, true);
    local->add_option("--k", opt.k, "token count")->required();
    local->add_option("--alpha", opt.alpha, "generator coefficient for L_k");
    local->add_option("--beta", opt.beta, "generator coefficient for the complement Laplacian");
    CLI::App* global = algebra->add_subcommand("global", "algebra generated by the single-edge matrices");
    add_common(global, false);
    global->add_option("--n", opt.n, "ground set size")->required();
    global->add_option("--k", opt.k, "subset size")->required();

    CLI::App* recognize = app.add_subcommand("recognize", "decide whether a subgraph of J(n,k) is a token graph");
    add_common(recognize, true);
    recognize->add_option("--n", opt.n, "ground set size")->required();
    recognize->add_option("--k", opt.k, "subset size")->required();

    CLI::App* verify_all = app.add_subcommand("verify-all", "run the full verification suite on a graph");
    add_common(verify_all, true);
    verify_all->add_option("--k", opt.k, "token count")->required();

    std::vector<const char*> argv;
    argv.push_back("tokenalg");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (token->parsed()) return cmd_token(opt, out);
        if (pair->parsed()) return cmd_pair(opt, out);
        if (poly->parsed()) return cmd_poly(opt, out);
        if (johnson->parsed()) return cmd_johnson(opt, out);
        if (algebra->parsed()) {
            if (local->parsed()) return cmd_algebra_local(opt, out);
            return cmd_algebra_global(opt, out);
        }
        if (recognize->parsed()) return cmd_recognize(opt, out);
        if (verify_all->parsed()) return cmd_verify_all(opt, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace tokenalg::cli
