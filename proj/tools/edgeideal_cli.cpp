// edgeideal command-line front end; talks to the library only through edgeideal.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "edgeideal/edgeideal.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
    ei_status status;
    LibraryError(ei_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(ei_status s) {
    if (s != EI_OK) throw LibraryError(s, std::string(ei_status_name(s)) + ": " + ei_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    ei_string_free(s);
    return out;
}

struct GraphDeleter {
    void operator()(ei_graph* g) const { ei_graph_free(g); }
};
struct BettiDeleter {
    void operator()(ei_betti* b) const { ei_betti_free(b); }
};
struct ReportDeleter {
    void operator()(ei_report* r) const { ei_report_free(r); }
};
using GraphPtr = std::unique_ptr<ei_graph, GraphDeleter>;
using BettiPtr = std::unique_ptr<ei_betti, BettiDeleter>;
using ReportPtr = std::unique_ptr<ei_report, ReportDeleter>;

struct Config {
    int path = -1;
    int cycle = -1;
    std::string edges;
    std::string suspend;
    std::string field = "q";
    std::string format;  // empty: the subcommand's default
    std::uint64_t seed = 1;
    int max_n = 16;
    int jobs = 1;
    std::string window;
    int samples = 20;
    std::string family = "path";
    std::string theorem;
};

std::pair<int, int> parse_window(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty() || v < 0) throw UsageError("bad --n value '" + text + "', expected A..B");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw UsageError("empty --n window '" + text + "'");
    return {lo, hi};
}

ei_field parse_field(const std::string& spec) {
    ei_field f{};
    if (ei_field_parse(spec.c_str(), &f) != EI_OK) throw UsageError(std::string("--field: ") + ei_last_error());
    return f;
}

struct Source {
    GraphPtr graph;
    std::string name;
};

Source load_graph(const Config& cfg) {
    const int given = (cfg.path >= 0) + (cfg.cycle >= 0) + !cfg.edges.empty();
    if (given != 1) throw UsageError("give exactly one of --path N, --cycle N, --edges FILE");
    ei_graph* g = nullptr;
    Source src;
    if (cfg.path >= 0) {
        check(ei_graph_family("path", cfg.path, &g));
        src.name = "path:" + std::to_string(cfg.path);
    } else if (cfg.cycle >= 0) {
        check(ei_graph_family("cycle", cfg.cycle, &g));
        src.name = "cycle:" + std::to_string(cfg.cycle);
    } else {
        check(ei_graph_read(cfg.edges.c_str(), &g));
        src.name = cfg.edges;
    }
    src.graph.reset(g);
    return src;
}

struct Variant {
    GraphPtr graph;
    std::string suspension;  // "" when not suspended
};

std::vector<int> parse_vertex_list(const ei_graph* base, const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw UsageError("empty entry in --suspend list");
        if (int idx = ei_graph_index_of(base, item.c_str()); idx > 0) {
            out.push_back(idx);
            continue;
        }
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || v < 1 || v > ei_graph_order(base))
            throw UsageError("--suspend: '" + item + "' is not a vertex of the base graph");
        out.push_back(v);
    }
    return out;
}

// The graph(s) a command acts on: the base graph, one suspension, or one per maximal independent set.
std::vector<Variant> variants(const ei_graph* base, const std::string& spec) {
    std::vector<Variant> out;
    ei_graph* g = nullptr;
    if (spec.empty()) {
        // copy through the edge list so every variant owns its graph
        char* text = nullptr;
        check(ei_graph_to_edge_list(base, &text));
        const std::string edges = take(text);
        check(ei_graph_parse(edges.c_str(), &g));
        out.push_back({GraphPtr(g), ""});
    } else if (spec == "full") {
        check(ei_graph_suspend_full(base, &g));
        out.push_back({GraphPtr(g), "full"});
    } else if (spec == "auto") {
        uint32_t* masks = nullptr;
        size_t count = 0;
        check(ei_maximal_independent_sets(base, &masks, &count));
        std::vector<uint32_t> sets(masks, masks + count);
        ei_masks_free(masks);
        for (uint32_t m : sets) {
            char* name = nullptr;
            check(ei_graph_format_set(base, m, &name));
            check(ei_graph_suspend_mask(base, m, &g));
            out.push_back({GraphPtr(g), take(name)});
        }
    } else {
        const auto list = parse_vertex_list(base, spec);
        check(ei_graph_suspend(base, list.data(), list.size(), &g));
        uint32_t mask = 0;
        for (int v : list) mask |= uint32_t{1} << (v - 1);
        char* name = nullptr;
        check(ei_graph_format_set(base, mask, &name));
        out.push_back({GraphPtr(g), take(name)});
    }
    return out;
}

void check_size(const ei_graph* g, const Config& cfg) {
    if (ei_graph_order(g) > cfg.max_n)
        throw LibraryError(EI_LIMIT, "graph has " + std::to_string(ei_graph_order(g)) + " vertices, above --max-n " +
                                         std::to_string(cfg.max_n));
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t k = 0; k < cells.size(); ++k) out += (k ? "," : "") + csv_cell(cells[k]);
    return out;
}

struct Poly {
    std::vector<std::int64_t> coeffs;
    std::string text;
};

Poly read_poly(ei_status (*fn)(const ei_graph*, int64_t**, size_t*), const ei_graph* g, char var) {
    int64_t* c = nullptr;
    size_t len = 0;
    check(fn(g, &c, &len));
    Poly p{std::vector<std::int64_t>(c, c + len), ""};
    ei_coeffs_free(c);
    char* s = nullptr;
    check(ei_polynomial_to_string(p.coeffs.data(), p.coeffs.size(), var, &s));
    p.text = take(s);
    return p;
}

// One invariants row; `homology` false skips reg/pdim/bight.
ordered_json invariants_row(const std::string& graph, const Variant& v, const Config& cfg, bool homology) {
    ordered_json row;
    row["graph"] = graph;
    row["suspension"] = v.suspension;
    row["n"] = ei_graph_order(v.graph.get());
    int alpha = 0;
    check(ei_independence_number(v.graph.get(), &alpha));
    row["alpha"] = alpha;
    if (homology) {
        check_size(v.graph.get(), cfg);
        int bight = 0, reg = 0, pdim = 0;
        check(ei_big_height(v.graph.get(), &bight));
        check(ei_homological_invariants(v.graph.get(), parse_field(cfg.field), cfg.jobs, &reg, &pdim));
        row["bight"] = bight;
        row["reg"] = reg;
        row["pdim"] = pdim;
    }
    const Poly p = read_poly(ei_independence_polynomial, v.graph.get(), 'x');
    const Poly h = read_poly(ei_h_polynomial, v.graph.get(), 't');
    ei_ainv a{};
    check(ei_a_invariant(v.graph.get(), &a));
    row["indpoly"] = p.coeffs;
    row["M"] = a.M;
    row["a"] = a.a;
    row["hdeg"] = a.hdeg;
    row["h"] = h.coeffs;
    row["indpoly_text"] = p.text;
    row["h_text"] = h.text;
    return row;
}

void emit_rows(const std::vector<ordered_json>& rows, const std::string& format, std::ostream& out) {
    if (format == "json") {
        for (const auto& r : rows) out << r.dump() << "\n";
        return;
    }
    if (rows.empty()) return;
    if (format == "csv") {
        std::vector<std::string> header;
        for (const auto& [k, _] : rows.front().items())
            if (k.find("_text") == std::string::npos) header.push_back(k);
        out << csv_row(header) << "\n";
        for (const auto& r : rows) {
            std::vector<std::string> cells;
            for (const auto& k : header) {
                const auto& v = r.at(k);
                if (v.is_string()) cells.push_back(v.get<std::string>());
                else if (v.is_array()) {
                    // coefficient lists as space-separated integers
                    std::string s;
                    for (const auto& c : v) s += (s.empty() ? "" : " ") + c.dump();
                    cells.push_back(s);
                } else cells.push_back(v.dump());
            }
            out << csv_row(cells) << "\n";
        }
        return;
    }
    bool first = true;
    for (const auto& r : rows) {
        if (!first) out << "\n";
        first = false;
        for (const auto& [k, v] : r.items()) {
            if (k == "indpoly" || k == "h") continue;
            out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

int cmd_invariants(const Config& cfg, bool homology) {
    const Source src = load_graph(cfg);
    std::vector<ordered_json> rows;
    for (const auto& v : variants(src.graph.get(), cfg.suspend)) rows.push_back(invariants_row(src.name, v, cfg, homology));
    emit_rows(rows, cfg.format, std::cout);
    return kExitOk;
}

int cmd_betti(const Config& cfg) {
    const Source src = load_graph(cfg);
    const ei_field field = parse_field(cfg.field);
    bool first = true;
    for (const auto& v : variants(src.graph.get(), cfg.suspend)) {
        check_size(v.graph.get(), cfg);
        ei_betti* raw = nullptr;
        check(ei_betti_table(v.graph.get(), field, cfg.jobs, &raw));
        BettiPtr table(raw);
        if (cfg.format == "json") {
            ordered_json row;
            row["graph"] = src.name;
            row["suspension"] = v.suspension;
            row["n"] = ei_graph_order(v.graph.get());
            row["reg"] = ei_betti_reg(table.get());
            row["pdim"] = ei_betti_pdim(table.get());
            char* s = nullptr;
            check(ei_betti_to_json(table.get(), &s));
            row["betti"] = nlohmann::json::parse(take(s));
            std::cout << row.dump() << "\n";
        } else if (cfg.format == "csv") {
            if (first) std::cout << "graph,suspension,i,j,beta\n";
            for (size_t k = 0; k < ei_betti_entry_count(table.get()); ++k) {
                int i = 0, j = 0;
                uint64_t beta = 0;
                check(ei_betti_entry(table.get(), k, &i, &j, &beta));
                std::cout << csv_row({src.name, v.suspension, std::to_string(i), std::to_string(j),
                                      std::to_string(beta)})
                          << "\n";
            }
        } else {
            if (!first) std::cout << "\n";
            std::cout << src.name << (v.suspension.empty() ? "" : " suspended over " + v.suspension) << "\n";
            char* s = nullptr;
            check(ei_betti_to_text(table.get(), &s));
            std::cout << take(s);
        }
        first = false;
    }
    return kExitOk;
}

int cmd_suspend(const Config& cfg) {
    if (cfg.suspend.empty()) throw UsageError("suspend needs --suspend LIST|full|auto");
    const Source src = load_graph(cfg);
    bool first = true;
    for (const auto& v : variants(src.graph.get(), cfg.suspend)) {
        char* s = nullptr;
        check(ei_graph_to_edge_list(v.graph.get(), &s));
        const std::string text = take(s);
        if (cfg.format == "text") {
            if (!first) std::cout << "\n";
            std::cout << "# " << src.name << " suspended over " << v.suspension << "\n" << text;
        } else {
            // re-read the edge list so json/csv agree with the text form
            std::istringstream in(text);
            std::string line;
            std::vector<std::pair<int, int>> edges;
            int n = 0;
            bool header = true;
            while (std::getline(in, line)) {
                if (line.empty() || line[0] == '#') continue;
                std::istringstream fields(line);
                if (header) {
                    fields >> n;
                    header = false;
                    continue;
                }
                int a = 0, b = 0;
                fields >> a >> b;
                edges.emplace_back(a, b);
            }
            if (cfg.format == "json") {
                ordered_json row;
                row["graph"] = src.name;
                row["suspension"] = v.suspension;
                row["n"] = n;
                row["edges"] = edges;
                std::cout << row.dump() << "\n";
            } else {
                if (first) std::cout << "graph,suspension,u,v\n";
                for (auto [a, b] : edges)
                    std::cout << csv_row({src.name, v.suspension, std::to_string(a), std::to_string(b)}) << "\n";
            }
        }
        first = false;
    }
    return kExitOk;
}

int run_one_verify(const std::string& id, const Config& cfg, bool& header_done) {
    ei_verify_params params{};
    ei_verify_params_default(&params);
    if (!cfg.window.empty()) std::tie(params.n_min, params.n_max) = parse_window(cfg.window);
    params.samples = cfg.samples;
    params.seed = cfg.seed;
    params.field = parse_field(cfg.field);
    params.jobs = cfg.jobs;
    params.max_n = cfg.max_n;
    ei_report* raw = nullptr;
    check(ei_verify(id.c_str(), &params, &raw));
    ReportPtr report(raw);
    const bool failed = ei_report_failures(report.get()) > 0;
    char* s = nullptr;
    if (cfg.format == "json") {
        check(ei_report_json_lines(report.get(), 0, &s));
        std::cout << take(s);
    } else if (cfg.format == "csv") {
        if (!header_done) std::cout << "theorem,id,instance,expected,computed,holds\n";
        header_done = true;
        for (size_t k = 0; k < ei_report_count(report.get()); ++k) {
            std::vector<std::string> cells{id};
            for (const char* f : {"id", "instance", "expected", "computed", "holds"}) {
                char* cell = nullptr;
                check(ei_report_field(report.get(), k, f, &cell));
                cells.push_back(take(cell));
            }
            std::cout << csv_row(cells) << "\n";
        }
    } else {
        check(ei_report_summary(report.get(), &s));
        std::cout << take(s);
        if (failed) {
            check(ei_report_json_lines(report.get(), 1, &s));
            std::cout << take(s);
        }
    }
    return failed ? kExitFailed : kExitOk;
}

int cmd_verify(const Config& cfg) {
    bool header_done = false;
    if (cfg.theorem != "all") return run_one_verify(cfg.theorem, cfg, header_done);
    if (!cfg.window.empty()) throw UsageError("verify all runs default windows; drop --n");
    int status = kExitOk;
    for (size_t k = 0; k < ei_theorem_count(); ++k)
        status = std::max(status, run_one_verify(ei_theorem_name(k), cfg, header_done));
    return status;
}

int cmd_sweep(const Config& cfg) {
    if (cfg.window.empty()) throw UsageError("sweep needs --n A..B");
    if (cfg.family != "path" && cfg.family != "cycle") throw UsageError("--family must be path or cycle");
    const auto [lo, hi] = parse_window(cfg.window);
    std::vector<ordered_json> rows;
    for (int n = lo; n <= hi; ++n) {
        ei_graph* raw = nullptr;
        check(ei_graph_family(cfg.family.c_str(), n, &raw));
        GraphPtr base(raw);
        const std::string name = cfg.family + ":" + std::to_string(n);
        for (const auto& v : variants(base.get(), cfg.suspend)) rows.push_back(invariants_row(name, v, cfg, true));
    }
    emit_rows(rows, cfg.format, std::cout);
    return kExitOk;
}

void add_graph_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--path", cfg.path, "path graph P_N")->check(CLI::NonNegativeNumber);
    cmd->add_option("--cycle", cfg.cycle, "cycle graph C_N (N >= 3)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--edges", cfg.edges, "edge-list file: n on the first line, then 1-based 'u v' pairs");
    cmd->add_option("--suspend", cfg.suspend,
                    "suspension set: comma-separated 1-based vertices or labels, 'full', or 'auto' "
                    "(one run per maximal independent set)");
}

void add_common_options(CLI::App* cmd, Config& cfg, const std::string& default_format) {
    cmd->add_option("--field", cfg.field, "coefficient field: q or gf:P")->capture_default_str();
    cmd->add_option("--format", cfg.format, "json, csv or text (default " + default_format + ")")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--max-n", cfg.max_n, "refuse homology on graphs above this order")
        ->check(CLI::Range(1, 24))
        ->capture_default_str();
    cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "seed for sampled graphs and randomized matchings")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of edge ideals and their suspensions"};
    app.require_subcommand(1);
    Config cfg;

    auto* invariants = app.add_subcommand("invariants", "alpha, bight, reg, pdim, P_G, M, a and h for a graph");
    add_graph_options(invariants, cfg);
    add_common_options(invariants, cfg, "text");

    auto* betti = app.add_subcommand("betti", "graded Betti table via Hochster's formula");
    add_graph_options(betti, cfg);
    add_common_options(betti, cfg, "text");

    auto* indpoly = app.add_subcommand("indpoly", "independence polynomial data only (no homology)");
    add_graph_options(indpoly, cfg);
    add_common_options(indpoly, cfg, "text");

    auto* suspend = app.add_subcommand("suspend", "print the suspended graph as an edge list");
    add_graph_options(suspend, cfg);
    add_common_options(suspend, cfg, "text");

    auto* verify = app.add_subcommand("verify", "check a theorem over a window of instances");
    verify->add_option("theorem", cfg.theorem, "theorem id, or 'all'")->required();
    verify->add_option("--n", cfg.window, "window A..B (default: the theorem's own)");
    verify->add_option("--samples", cfg.samples, "random graphs per n above 5")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_common_options(verify, cfg, "text");

    auto* sweep = app.add_subcommand("sweep", "invariants across a path or cycle range");
    sweep->add_option("--family", cfg.family, "path or cycle")->capture_default_str();
    sweep->add_option("--n", cfg.window, "range A..B")->required();
    sweep->add_option("--suspend", cfg.suspend, "'full', 'auto' or a vertex list applied to every member");
    add_common_options(sweep, cfg, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    if (cfg.format.empty()) cfg.format = sweep->parsed() ? "csv" : "text";

    try {
        if (invariants->parsed()) return cmd_invariants(cfg, true);
        if (indpoly->parsed()) return cmd_invariants(cfg, false);
        if (betti->parsed()) return cmd_betti(cfg);
        if (suspend->parsed()) return cmd_suspend(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
    } catch (const UsageError& e) {
        std::cerr << "edgeideal: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const LibraryError& e) {
        std::cerr << "edgeideal: " << e.what() << "\n";
        return e.status == EI_INTERNAL ? kExitFailed : kExitInvalid;
    }
    return kExitInvalid;
}
