#include "edgeideal/edgeideal.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "edgeideal/betti.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/indpoly.hpp"
#include "edgeideal/suspension.hpp"

using namespace edgeideal;

struct ei_graph {
    Graph g;
};
struct ei_betti {
    BettiTable t;
};
struct ei_report {
    VerificationReport r;
};

namespace {

thread_local std::string last_error;

ei_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return EI_INVALID_ARGUMENT;
        case ErrorCode::LimitExceeded: return EI_LIMIT;
        case ErrorCode::Precondition: return EI_PRECONDITION;
        case ErrorCode::Arithmetic: return EI_ARITHMETIC;
        case ErrorCode::Io: return EI_IO;
    }
    return EI_INTERNAL;
}

template <typename Fn>
ei_status guard(Fn&& fn) {
    try {
        fn();
        last_error.clear();
        return EI_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return EI_LIMIT;
    } catch (const std::exception& e) {
        last_error = e.what();
        return EI_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename T>
T* dup_array(const std::vector<T>& v) {
    T* out = static_cast<T*>(std::malloc(std::max<std::size_t>(v.size(), 1) * sizeof(T)));
    if (!out) throw std::bad_alloc();
    std::copy(v.begin(), v.end(), out);
    return out;
}

Field to_field(ei_field f) {
    return f.prime == 0 ? Field::rational() : Field::prime(f.prime);
}

HochsterOptions hochster(ei_field f, int jobs) {
    HochsterOptions o;
    o.field = to_field(f);
    o.jobs = std::max(1, jobs);
    return o;
}

ei_status masks_out(const std::vector<VertexSet>& sets, uint32_t** masks, size_t* count) {
    std::vector<uint32_t> raw;
    for (auto s : sets) raw.push_back(s.bits());
    *masks = dup_array(raw);
    *count = raw.size();
    return EI_OK;
}

ei_status poly_out(const IntPolynomial& p, int64_t** coeffs, size_t* len) {
    std::vector<int64_t> c(p.coefficients().begin(), p.coefficients().end());
    *coeffs = dup_array(c);
    *len = c.size();
    return EI_OK;
}

}  // namespace

extern "C" {

const char* ei_last_error(void) { return last_error.c_str(); }

const char* ei_status_name(ei_status status) {
    switch (status) {
        case EI_OK: return "ok";
        case EI_INVALID_ARGUMENT: return "invalid argument";
        case EI_LIMIT: return "limit exceeded";
        case EI_PRECONDITION: return "precondition violated";
        case EI_ARITHMETIC: return "arithmetic error";
        case EI_IO: return "i/o error";
        case EI_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* ei_version(void) { return "1.0.0"; }

void ei_string_free(char* s) { std::free(s); }
void ei_masks_free(uint32_t* masks) { std::free(masks); }
void ei_coeffs_free(int64_t* coeffs) { std::free(coeffs); }

ei_status ei_field_parse(const char* spec, ei_field* out) {
    return guard([&] {
        require(spec && out, "null argument");
        const Field f = Field::parse(spec);
        out->prime = static_cast<uint32_t>(f.characteristic());
    });
}

ei_status ei_graph_new(int n, const int* edges, size_t edge_count, ei_graph** out) {
    return guard([&] {
        require(out && (edges || edge_count == 0), "null argument");
        std::vector<Edge> list;
        for (size_t k = 0; k < edge_count; ++k) list.emplace_back(edges[2 * k], edges[2 * k + 1]);
        *out = new ei_graph{build_graph(n, list)};
    });
}

ei_status ei_graph_family(const char* kind, int n, ei_graph** out) {
    return guard([&] {
        require(kind && out, "null argument");
        const std::string k = kind;
        require(k == "path" || k == "cycle", "family must be 'path' or 'cycle'");
        *out = new ei_graph{family(k == "path" ? Family::Path : Family::Cycle, n)};
    });
}

ei_status ei_graph_parse(const char* text, ei_graph** out) {
    return guard([&] {
        require(text && out, "null argument");
        *out = new ei_graph{parse_edge_list(std::string(text))};
    });
}

ei_status ei_graph_read(const char* path, ei_graph** out) {
    return guard([&] {
        require(path && out, "null argument");
        *out = new ei_graph{read_edge_list(path)};
    });
}

void ei_graph_free(ei_graph* g) { delete g; }

int ei_graph_order(const ei_graph* g) { return g ? g->g.order() : 0; }

size_t ei_graph_edge_count(const ei_graph* g) { return g ? static_cast<size_t>(g->g.edge_count()) : 0; }

int ei_graph_index_of(const ei_graph* g, const char* label) {
    if (!g || !label) return 0;
    return g->g.index_of(label) + 1;
}

ei_status ei_graph_to_edge_list(const ei_graph* g, char** out) {
    return guard([&] {
        require(g && out, "null argument");
        *out = dup(to_edge_list(g->g));
    });
}

ei_status ei_graph_format_set(const ei_graph* g, uint32_t mask, char** out) {
    return guard([&] {
        require(g && out, "null argument");
        require(VertexSet(mask).subset_of(g->g.vertices()), "set has vertices outside the graph");
        *out = dup(format_set(g->g, VertexSet(mask)));
    });
}

ei_status ei_graph_suspend(const ei_graph* g, const int* vertices, size_t count, ei_graph** out) {
    return guard([&] {
        require(g && out && (vertices || count == 0), "null argument");
        VertexSet c;
        for (size_t k = 0; k < count; ++k) {
            require(vertices[k] >= 1 && vertices[k] <= g->g.order(), "suspension vertex out of range");
            c.insert(vertices[k] - 1);
        }
        *out = new ei_graph{suspend(g->g, c)};
    });
}

ei_status ei_graph_suspend_mask(const ei_graph* g, uint32_t mask, ei_graph** out) {
    return guard([&] {
        require(g && out, "null argument");
        require(VertexSet(mask).subset_of(g->g.vertices()), "suspension set outside the graph");
        *out = new ei_graph{suspend(g->g, VertexSet(mask))};
    });
}

ei_status ei_graph_suspend_full(const ei_graph* g, ei_graph** out) {
    return guard([&] {
        require(g && out, "null argument");
        *out = new ei_graph{full_suspension(g->g)};
    });
}

ei_status ei_maximal_independent_sets(const ei_graph* g, uint32_t** masks, size_t* count) {
    return guard([&] {
        require(g && masks && count, "null argument");
        masks_out(maximal_independent_sets(g->g), masks, count);
    });
}

ei_status ei_minimal_vertex_covers(const ei_graph* g, uint32_t** masks, size_t* count) {
    return guard([&] {
        require(g && masks && count, "null argument");
        masks_out(minimal_vertex_covers(g->g), masks, count);
    });
}

ei_status ei_independence_number(const ei_graph* g, int* out) {
    return guard([&] {
        require(g && out, "null argument");
        *out = independence_number(g->g);
    });
}

ei_status ei_big_height(const ei_graph* g, int* out) {
    return guard([&] {
        require(g && out, "null argument");
        *out = big_height(g->g);
    });
}

ei_status ei_homological_invariants(const ei_graph* g, ei_field field, int jobs, int* reg, int* pdim) {
    return guard([&] {
        require(g && reg && pdim, "null argument");
        const auto h = homological_invariants(g->g, hochster(field, jobs));
        *reg = h.reg;
        *pdim = h.pdim;
    });
}

ei_status ei_betti_table(const ei_graph* g, ei_field field, int jobs, ei_betti** out) {
    return guard([&] {
        require(g && out, "null argument");
        *out = new ei_betti{hochster_betti_table(g->g, hochster(field, jobs))};
    });
}

ei_status ei_betti_predict_full_suspension(const ei_betti* base, ei_betti** out) {
    return guard([&] {
        require(base && out, "null argument");
        *out = new ei_betti{full_suspension_betti_predict(base->t)};
    });
}

void ei_betti_free(ei_betti* b) { delete b; }

uint64_t ei_betti_get(const ei_betti* b, int i, int j) { return b ? b->t.get(i, j) : 0; }
int ei_betti_pdim(const ei_betti* b) { return b ? b->t.pdim() : 0; }
int ei_betti_reg(const ei_betti* b) { return b ? b->t.reg() : 0; }
int ei_betti_equal(const ei_betti* a, const ei_betti* b) { return a && b && a->t == b->t; }
size_t ei_betti_entry_count(const ei_betti* b) { return b ? b->t.entries().size() : 0; }

ei_status ei_betti_entry(const ei_betti* b, size_t k, int* i, int* j, uint64_t* beta) {
    return guard([&] {
        require(b && i && j && beta, "null argument");
        require(k < b->t.entries().size(), "entry index out of range");
        auto it = std::next(b->t.entries().begin(), static_cast<std::ptrdiff_t>(k));
        *i = it->first.first;
        *j = it->first.second;
        *beta = it->second;
    });
}

ei_status ei_betti_to_json(const ei_betti* b, char** out) {
    return guard([&] {
        require(b && out, "null argument");
        *out = dup(b->t.to_json());
    });
}

ei_status ei_betti_to_text(const ei_betti* b, char** out) {
    return guard([&] {
        require(b && out, "null argument");
        *out = dup(b->t.to_text());
    });
}

ei_status ei_independence_polynomial(const ei_graph* g, int64_t** coeffs, size_t* len) {
    return guard([&] {
        require(g && coeffs && len, "null argument");
        poly_out(independence_polynomial(g->g), coeffs, len);
    });
}

ei_status ei_h_polynomial(const ei_graph* g, int64_t** coeffs, size_t* len) {
    return guard([&] {
        require(g && coeffs && len, "null argument");
        poly_out(h_polynomial(g->g), coeffs, len);
    });
}

ei_status ei_polynomial_to_string(const int64_t* coeffs, size_t len, char var, char** out) {
    return guard([&] {
        require((coeffs || len == 0) && out, "null argument");
        *out = dup(IntPolynomial(std::vector<std::int64_t>(coeffs, coeffs + len)).to_string(var));
    });
}

ei_status ei_a_invariant(const ei_graph* g, ei_ainv* out) {
    return guard([&] {
        require(g && out, "null argument");
        const auto r = a_invariant(g->g);
        *out = ei_ainv{r.alpha, r.M, r.a, r.hdeg};
    });
}

size_t ei_theorem_count(void) { return all_theorems().size(); }

const char* ei_theorem_name(size_t k) {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (auto id : all_theorems()) out.push_back(to_string(id));
        return out;
    }();
    return k < names.size() ? names[k].c_str() : nullptr;
}

void ei_verify_params_default(ei_verify_params* params) {
    if (!params) return;
    const VerifyParams d;
    *params = ei_verify_params{d.n_min, d.n_max, d.samples, d.seed, ei_field{0}, d.jobs, d.max_n};
}

ei_status ei_verify(const char* theorem, const ei_verify_params* params, ei_report** out) {
    return guard([&] {
        require(theorem && params && out, "null argument");
        VerifyParams p;
        p.n_min = params->n_min;
        p.n_max = params->n_max;
        p.samples = params->samples;
        p.seed = params->seed;
        p.field = to_field(params->field);
        p.jobs = std::max(1, params->jobs);
        p.max_n = params->max_n;
        require(p.max_n >= 1 && p.max_n <= kMaxVertices, "max_n outside 1..24");
        *out = new ei_report{verify_theorem(parse_theorem_id(theorem), p)};
    });
}

void ei_report_free(ei_report* r) { delete r; }
size_t ei_report_count(const ei_report* r) { return r ? r->r.records.size() : 0; }
size_t ei_report_failures(const ei_report* r) { return r ? r->r.failures() : 0; }

ei_status ei_report_json_lines(const ei_report* r, int failures_only, char** out) {
    return guard([&] {
        require(r && out, "null argument");
        *out = dup(r->r.to_json_lines(failures_only != 0));
    });
}

ei_status ei_report_summary(const ei_report* r, char** out) {
    return guard([&] {
        require(r && out, "null argument");
        *out = dup(r->r.summary());
    });
}

ei_status ei_report_field(const ei_report* r, size_t k, const char* field, char** out) {
    return guard([&] {
        require(r && field && out, "null argument");
        require(k < r->r.records.size(), "record index out of range");
        const auto& rec = r->r.records[k];
        const std::string f = field;
        if (f == "id") *out = dup(rec.id);
        else if (f == "instance") *out = dup(rec.instance);
        else if (f == "expected") *out = dup(rec.expected);
        else if (f == "computed") *out = dup(rec.computed);
        else if (f == "holds") *out = dup(rec.holds ? "true" : "false");
        else {
            for (const auto& [key, value] : rec.tags)
                if (key == f) {
                    *out = dup(value);
                    return;
                }
            fail(ErrorCode::InvalidArgument, "record has no field '" + f + "'");
        }
    });
}

}  // extern "C"
