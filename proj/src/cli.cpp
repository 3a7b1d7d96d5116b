#include "ddgraph/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "ddgraph/checks.hpp"
#include "ddgraph/construction.hpp"
#include "ddgraph/corpus.hpp"
#include "ddgraph/error.hpp"
#include "ddgraph/graph.hpp"
#include "ddgraph/iso.hpp"
#include "ddgraph/report.hpp"

namespace ddg {

namespace {

constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

// exit 2 = the input was well-formed but a mathematical check failed;
// everything else is a usage / malformed-input error (64)
int exit_for(const Error& e) {
    static const std::set<std::string> semantic = {
        "NotRegular",     "ThreeOrMoreValues", "NoValidPartition",
        "NoSubgroupFound", "NotConstantOnN",    "NotConstantOffN",
        "NotInverseClosed", "ContainsIdentity",  "NotASubgroup",
    };
    return semantic.count(e.code()) ? kExitVerification : kExitUsage;
}

int default_jobs() {
    if (const char* s = std::getenv("DDGRAPH_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v >= 1 && v <= 256) return (int)v;
    }
    return 1;
}

std::string read_file(const std::string& path, std::string& digest_acc) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "MalformedInput", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    digest_acc += path;
    digest_acc += '\0';
    digest_acc += ss.str();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "MalformedInput", "cannot write '" + path + "'");
    out << content;
    require(out.good(), "MalformedInput", "write to '" + path + "' failed");
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> vals;
    std::string cur;
    for (char ch : text + ",") {
        if (ch != ',') {
            if (!std::isspace((unsigned char)ch)) cur.push_back(ch);
            continue;
        }
        require(!cur.empty(), "MalformedInput", "empty entry in comma-separated list");
        try {
            std::size_t pos = 0;
            int v = std::stoi(cur, &pos);
            require(pos == cur.size(), "MalformedInput", "bad integer '" + cur + "'");
            vals.push_back(v);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail("MalformedInput", "bad integer '" + cur + "'");
        }
        cur.clear();
    }
    require(!vals.empty(), "MalformedInput", "empty list");
    return vals;
}

Field field_from_qr(long long q, int r) {
    long long p = 0;
    int e = 0;
    require(prime_power(q, p, e), "NotPrimePower",
            std::to_string(q) + " is not a prime power");
    FieldSpec spec;
    spec.p = (int)p;
    spec.e = e;
    spec.r = r;
    return Field::build(spec);
}

nlohmann::json field_json(const Field& f) {
    nlohmann::json j;
    j["p"] = f.p();
    j["e"] = f.e();
    j["r"] = f.r();
    j["q"] = f.q();
    j["modulus"] = f.spec().modulus;
    j["t"] = f.t();
    j["t1"] = f.t1();
    return j;
}

nlohmann::json params_json(const DDGParams& p) {
    nlohmann::json j;
    j["v"] = p.v;
    j["k"] = p.k;
    j["l1"] = p.l1;
    j["l2"] = p.l2;
    j["m"] = p.m;
    j["n"] = p.n;
    return j;
}

std::vector<std::vector<int>> normalized(std::vector<std::vector<int>> parts) {
    for (auto& c : parts) std::sort(c.begin(), c.end());
    std::sort(parts.begin(), parts.end());
    return parts;
}

struct PermChoice {
    Phi phi;
    std::string interpretation;
    bool satisfied = false;
};

// a user-supplied sequence is accepted in the first reading that satisfies the
// inverse-closure condition: one-line, then a single cycle, then the inverse
// of the one-line reading
PermChoice interpret_perm(const Field& f, const std::vector<int>& given) {
    int t = f.t();
    Phi lit(given.begin(), given.end());
    bool lit_bijection = (int)lit.size() == t && is_bijection(lit, t);
    if (lit_bijection && symmetry_condition_check(f, lit).ok) return {lit, "one-line", true};

    bool cycle_ok = !given.empty() && (int)given.size() <= t;
    std::set<int> seen;
    for (int v : given)
        if (v < 1 || v > t || !seen.insert(v).second) cycle_ok = false;
    if (cycle_ok) {
        Phi cyc(t);
        for (int i = 0; i < t; ++i) cyc[i] = i + 1;
        for (std::size_t j = 0; j < given.size(); ++j)
            cyc[given[j] - 1] = given[(j + 1) % given.size()];
        if (symmetry_condition_check(f, cyc).ok) return {cyc, "cycle", true};
    }
    if (lit_bijection) {
        Phi inv(t);
        for (int i = 0; i < t; ++i) inv[lit[i] - 1] = i + 1;
        if (symmetry_condition_check(f, inv).ok) return {inv, "inverse-one-line", true};
        return {lit, "one-line (condition unsatisfied)", false};
    }
    fail("WrongLength", "--perm is not a permutation of 1..t in any supported reading");
}

std::string graph_payload(const Graph& g, const std::string& format) {
    if (format == "dot") return dot_export(g);
    if (format == "json") return adjacency_json(g).dump(2) + "\n";
    return graph6_encode(g) + "\n";
}

std::vector<Graph> read_graph6_file(const std::string& path, std::string& digest_acc,
                                    std::vector<std::string>& sources) {
    std::string content = read_file(path, digest_acc);
    std::vector<Graph> graphs;
    std::istringstream in(content);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string header = ">>graph6<<";
        if (line.rfind(header, 0) == 0) line = line.substr(header.size());
        if (line.empty()) continue;
        graphs.push_back(graph6_decode(line));
        sources.push_back(path + ":" + std::to_string(lineno));
    }
    require(!graphs.empty(), "MalformedInput", "no graphs in '" + path + "'");
    return graphs;
}

// renders one top level of the results object as "key: value" lines
void render_human(const RunReport& rep, std::ostream& out) {
    out << "command: " << rep.command << "\n";
    for (const auto& [key, val] : rep.results.items()) {
        out << key << ": ";
        if (val.is_array() && std::all_of(val.begin(), val.end(), [](const nlohmann::json& x) {
                return x.is_number() || x.is_string();
            })) {
            bool first = true;
            for (const auto& x : val) {
                if (!first) out << " ";
                first = false;
                if (x.is_string()) out << x.get<std::string>();
                else out << x.dump();
            }
            out << "\n";
        } else if (val.is_string()) {
            out << val.get<std::string>() << "\n";
        } else {
            out << val.dump() << "\n";
        }
    }
    out << "exit_status: " << rep.exit_status << "\n";
}

struct Options {
    bool human = false;
    bool timing = false;
    int jobs = 1;

    long long q = 0;
    int r = 0;
    std::string perm_csv;
    int perm_index = 0;
    bool closed_form = false;
    bool all_translates = false;
    std::string out_path;
    std::string format = "graph6";
    std::vector<std::string> in_paths;
    std::string group_path, set_path, subgroup_path;
    std::string fixture_id;
    bool verify_fixture = false;
};

int run_construct(const Options& opt, RunReport& rep, std::string& digest_acc) {
    Field f = field_from_qr(opt.q, opt.r);
    AffineGroup g = AffineGroup::build(f);
    nlohmann::json& res = rep.results;
    res["field"] = field_json(f);

    Phi phi;
    if (!opt.perm_csv.empty()) {
        PermChoice choice = interpret_perm(f, parse_csv_ints(opt.perm_csv));
        phi = choice.phi;
        res["phi_source"] = "perm";
        res["perm_interpretation"] = choice.interpretation;
    } else if (opt.perm_index > 0) {
        auto all = enumerate_symmetric_permutations(f, opt.all_translates);
        require(opt.perm_index <= (int)all.size(), "MalformedInput",
                "--perm-index out of range (list has " + std::to_string(all.size()) +
                    " entries)");
        phi = all[opt.perm_index - 1];
        res["phi_source"] = "perm-index";
        res["perm_index"] = opt.perm_index;
        res["all_translates"] = opt.all_translates;
    } else {
        ClosedFormPhi cf = closed_form_permutation(f.t(), &f);
        phi = cf.phi;
        res["phi_source"] = "closed-form";
        res["closed_form_fallback"] = cf.fallback;
    }
    res["phi"] = phi;

    GeneratingSet s = build_generating_set(g, phi);
    res["set_size"] = s.k;
    nlohmann::json set_pairs = nlohmann::json::array();
    for (int idx : s.elements) {
        AffineElement a = g.element(idx);
        set_pairs.push_back({a.exp, f.log(a.alpha)});
    }
    res["set"] = std::move(set_pairs);

    Graph graph = cayley_graph(g.table(), s.elements);
    DDGResult ddg = ddg_check(graph);
    const DDGAssignment& primary = ddg.primary();
    res["params"] = params_json(primary.params);
    res["degenerate"] = primary.degenerate;

    DDGParams predicted = predicted_params(f.q(), f.r());
    bool params_match = primary.params == predicted;
    res["predicted_match"] = params_match;

    bool cosets_match =
        normalized(primary.classes) == normalized(right_cosets(g.table(), g.subgroup_N()));
    res["partition_matches_cosets"] = cosets_match;

    bool verified = params_match && cosets_match && !primary.degenerate;
    res["verified"] = verified;
    res[opt.format == "graph6" ? "graph6" : (opt.format == "dot" ? "dot" : "adjacency")] =
        opt.format == "json" ? adjacency_json(graph)
                             : nlohmann::json(opt.format == "dot" ? dot_export(graph)
                                                                  : graph6_encode(graph));
    if (!opt.out_path.empty()) write_file(opt.out_path, graph_payload(graph, opt.format));
    (void)digest_acc;
    return verified ? 0 : kExitVerification;
}

int run_enumerate(const Options& opt, RunReport& rep) {
    Field f = field_from_qr(opt.q, opt.r);
    nlohmann::json& res = rep.results;
    res["field"] = field_json(f);
    res["all_translates"] = opt.all_translates;
    auto all = enumerate_symmetric_permutations(f, opt.all_translates);
    res["count"] = all.size();
    nlohmann::json perms = nlohmann::json::array();
    for (const Phi& p : all) perms.push_back(p);
    res["permutations"] = std::move(perms);
    ClosedFormPhi cf = closed_form_permutation(f.t(), &f);
    res["closed_form"] = {{"phi", cf.phi},
                          {"fallback", cf.fallback},
                          {"in_list", std::find(all.begin(), all.end(), cf.phi) != all.end()}};
    return 0;
}

int run_verify(const Options& opt, RunReport& rep, std::string& digest_acc) {
    std::vector<Graph> graphs;
    std::vector<std::string> sources;
    for (const std::string& path : opt.in_paths) {
        auto part = read_graph6_file(path, digest_acc, sources);
        for (auto& g : part) graphs.push_back(std::move(g));
    }
    nlohmann::json items = nlohmann::json::array();
    bool all_ok = true;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        nlohmann::json item;
        item["source"] = sources[i];
        item["n"] = g.n();
        item["edges"] = g.edge_count();
        bool ok = true;
        try {
            DezaParams dz = deza_check(g);
            item["deza"] = {{"v", dz.v}, {"k", dz.k}, {"b", dz.b}, {"a", dz.a}};
        } catch (const Error& e) {
            item["error"] = {{"code", e.code()}, {"message", e.what()}};
            ok = false;
        }
        if (ok) {
            try {
                DDGResult ddg = ddg_check(g);
                const DDGAssignment& primary = ddg.primary();
                item["ddg"] = {{"params", params_json(primary.params)},
                               {"degenerate", primary.degenerate},
                               {"class_count", primary.classes.size()}};
                if (primary.degenerate) ok = false;
            } catch (const Error& e) {
                item["error"] = {{"code", e.code()}, {"message", e.what()}};
                ok = false;
            }
        }
        item["verified"] = ok;
        all_ok = all_ok && ok;
        items.push_back(std::move(item));
    }
    rep.results["graphs"] = std::move(items);
    rep.results["all_verified"] = all_ok;
    return all_ok ? 0 : kExitVerification;
}

int run_dds(const Options& opt, RunReport& rep, std::string& digest_acc) {
    nlohmann::json gj;
    try {
        gj = nlohmann::json::parse(read_file(opt.group_path, digest_acc));
    } catch (const nlohmann::json::exception& e) {
        fail("MalformedInput", std::string("bad group JSON: ") + e.what());
    }
    FiniteGroup g = FiniteGroup::from_json(gj);
    nlohmann::json sj;
    try {
        sj = nlohmann::json::parse(read_file(opt.set_path, digest_acc));
    } catch (const nlohmann::json::exception& e) {
        fail("MalformedInput", std::string("bad set JSON: ") + e.what());
    }
    require(sj.is_array(), "MalformedInput", "set file must be a JSON array of indices");
    std::vector<int> s;
    for (const auto& x : sj) {
        require(x.is_number_integer(), "MalformedInput", "set entries must be integers");
        s.push_back(x.get<int>());
    }
    nlohmann::json& res = rep.results;
    res["order"] = g.order();
    res["k"] = s.size();
    if (!opt.subgroup_path.empty()) {
        nlohmann::json nj = nlohmann::json::parse(read_file(opt.subgroup_path, digest_acc));
        require(nj.is_array(), "MalformedInput", "subgroup file must be a JSON array");
        std::vector<int> n;
        for (const auto& x : nj) n.push_back(x.get<int>());
        DDSResult r = dds_check(g, s, n);
        res["subgroup_given"] = true;
        res["subgroup_size"] = n.size();
        res["l1"] = r.l1;
        res["l2"] = r.l2;
    } else {
        DiscoverResult r = dds_discover_subgroup(g, s);
        res["subgroup_given"] = false;
        res["subgroup"] = r.subgroup;
        res["subgroup_size"] = r.subgroup.size();
        res["l1"] = r.l1;
        res["l2"] = r.l2;
    }
    return 0;
}

int run_iso(const Options& opt, RunReport& rep, std::string& digest_acc) {
    std::vector<Graph> graphs;
    std::vector<std::string> sources;
    for (const std::string& path : opt.in_paths) {
        auto part = read_graph6_file(path, digest_acc, sources);
        for (auto& g : part) graphs.push_back(std::move(g));
    }
    std::vector<std::vector<int>> classes = classify(graphs, opt.jobs);
    nlohmann::json items = nlohmann::json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        Certificate c = canonical_form(graphs[i]);
        items.push_back({{"index", i},
                         {"source", sources[i]},
                         {"n", graphs[i].n()},
                         {"certificate_sha256", sha256_hex(c.hex())}});
    }
    rep.results["graphs"] = std::move(items);
    rep.results["classes"] = classes;
    rep.results["class_count"] = classes.size();
    return 0;
}

int run_corpus(const Options& opt, RunReport& rep) {
    nlohmann::json& res = rep.results;
    if (opt.fixture_id.empty()) {
        res["fixtures"] = fixture_ids();
        return 0;
    }
    Fixture f = load_example(opt.fixture_id);
    res = fixture_json(f);
    Graph graph = cayley_graph(f.group, f.set);
    res["graph6"] = graph6_encode(graph);
    int status = 0;
    if (opt.verify_fixture) {
        nlohmann::json ver;
        bool inverse_closed = true, identity_free = true;
        for (int v : f.set) {
            if (!std::binary_search(f.set.begin(), f.set.end(), f.group.inv(v)))
                inverse_closed = false;
            if (v == f.group.id()) identity_free = false;
        }
        ver["inverse_closed"] = inverse_closed;
        ver["identity_free"] = identity_free;
        DiscoverResult disc = dds_discover_subgroup(f.group, f.set);
        ver["subgroup_size"] = disc.subgroup.size();
        ver["l1"] = disc.l1;
        ver["l2"] = disc.l2;
        DDGResult ddg = ddg_check(graph);
        const DDGAssignment& primary = ddg.primary();
        ver["ddg_params"] = params_json(primary.params);
        ver["degenerate"] = primary.degenerate;
        bool cosets_match =
            normalized(primary.classes) == normalized(right_cosets(f.group, disc.subgroup));
        ver["partition_matches_cosets"] = cosets_match;
        bool agree = primary.params.l1 == disc.l1 && primary.params.l2 == disc.l2;
        ver["lambda_agreement"] = agree;
        bool verified = inverse_closed && identity_free && cosets_match && agree &&
                        !primary.degenerate;
        ver["verified"] = verified;
        res["verification"] = std::move(ver);
        if (!verified) status = kExitVerification;
    }
    if (!opt.out_path.empty()) write_file(opt.out_path, graph_payload(graph, opt.format));
    return status;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"divisible design Cayley graphs from affine groups over finite fields",
                 "ddgraph"};
    app.require_subcommand(1);

    Options opt;
    opt.jobs = default_jobs();
    app.add_flag("--human", opt.human, "human-readable summary instead of JSON");
    app.add_flag("--timing", opt.timing, "include wall-clock timing in the report");
    app.add_option("--jobs", opt.jobs, "worker thread bound")->check(CLI::Range(1, 256));

    auto add_qr = [&](CLI::App* sub) {
        sub->add_option("--q", opt.q, "subfield order (prime power)")->required();
        sub->add_option("--r", opt.r, "extension degree (> 1)")->required();
    };

    CLI::App* construct = app.add_subcommand(
        "construct", "build one graph from a hyperplane permutation and verify it");
    construct->fallthrough();
    add_qr(construct);
    auto* o_perm =
        construct->add_option("--perm", opt.perm_csv, "permutation, comma-separated");
    auto* o_idx = construct->add_option("--perm-index", opt.perm_index,
                                        "1-based index into the enumerated permutations");
    auto* o_cf = construct->add_flag("--closed-form", opt.closed_form,
                                     "use the closed-form permutation (default)");
    o_perm->excludes(o_idx)->excludes(o_cf);
    o_idx->excludes(o_cf);
    construct->add_flag("--all-translates", opt.all_translates,
                        "index into the untranslated (raw) enumeration");
    construct->add_option("--out", opt.out_path, "write the graph to this file");
    construct->add_option("--format", opt.format, "graph payload format")
        ->check(CLI::IsMember({"graph6", "dot", "json"}));

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list all permutations passing the condition");
    enumerate->fallthrough();
    add_qr(enumerate);
    enumerate->add_flag("--all-translates", opt.all_translates,
                        "report all value-translates, not one representative per orbit");

    CLI::App* verify =
        app.add_subcommand("verify", "check graphs from a graph6 file for the design property");
    verify->fallthrough();
    verify->add_option("--in", opt.in_paths, "graph6 file(s)")->required()->expected(-1);

    CLI::App* dds = app.add_subcommand(
        "dds", "check a set in an explicit group for the difference-set property");
    dds->fallthrough();
    dds->add_option("--group", opt.group_path, "group JSON file")->required();
    dds->add_option("--set", opt.set_path, "JSON array of element indices")->required();
    dds->add_option("--subgroup", opt.subgroup_path,
                    "JSON array; when absent the subgroup is discovered");

    CLI::App* iso =
        app.add_subcommand("iso", "classify graphs from graph6 files up to isomorphism");
    iso->fallthrough();
    iso->add_option("--in", opt.in_paths, "graph6 file(s)")->required()->expected(-1);

    CLI::App* corpus = app.add_subcommand("corpus", "embedded reference groups and sets");
    corpus->fallthrough();
    corpus->add_option("--id", opt.fixture_id, "fixture id (omit to list)");
    corpus->add_flag("--verify", opt.verify_fixture, "run the full check battery");
    corpus->add_option("--out", opt.out_path, "write the fixture graph to this file");
    corpus->add_option("--format", opt.format, "graph payload format")
        ->check(CLI::IsMember({"graph6", "dot", "json"}));

    std::string digest_acc;
    for (const std::string& a : args) {
        digest_acc += a;
        digest_acc += '\0';
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : kExitUsage;
    }

    RunReport rep;
    rep.with_timing = opt.timing;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (app.got_subcommand(construct)) {
            rep.command = "construct";
            rep.exit_status = run_construct(opt, rep, digest_acc);
        } else if (app.got_subcommand(enumerate)) {
            rep.command = "enumerate";
            rep.exit_status = run_enumerate(opt, rep);
        } else if (app.got_subcommand(verify)) {
            rep.command = "verify";
            rep.exit_status = run_verify(opt, rep, digest_acc);
        } else if (app.got_subcommand(dds)) {
            rep.command = "dds";
            rep.exit_status = run_dds(opt, rep, digest_acc);
        } else if (app.got_subcommand(iso)) {
            rep.command = "iso";
            rep.exit_status = run_iso(opt, rep, digest_acc);
        } else {
            rep.command = "corpus";
            rep.exit_status = run_corpus(opt, rep);
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_for(e);
    }
    rep.input_digest = sha256_hex(digest_acc);
    rep.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    if (opt.human) render_human(rep, out);
    else out << rep.to_json().dump(2) << "\n";
    return rep.exit_status;
}

}  // namespace ddg
