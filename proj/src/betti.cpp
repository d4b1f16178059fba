#include "edgeideal/betti.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

namespace edgeideal {

std::uint64_t BettiTable::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::uint64_t value) {
    if (value == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = value;
}

void BettiTable::add(int i, int j, std::uint64_t value) {
    if (value != 0) entries_[{i, j}] += value;
}

int BettiTable::pdim() const {
    int best = 0;
    for (const auto& [key, value] : entries_) best = std::max(best, key.first);
    return best;
}

int BettiTable::reg() const {
    int best = 0;
    for (const auto& [key, value] : entries_) best = std::max(best, key.second - key.first);
    return best;
}

std::string BettiTable::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, value] : entries_) out.push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
    return out.dump();
}

BettiTable BettiTable::from_json(const std::string& text, int variables, Field field) {
    BettiTable table(variables, field);
    try {
        for (const auto& entry : nlohmann::json::parse(text))
            table.add(entry.at("i").get<int>(), entry.at("j").get<int>(), entry.at("beta").get<std::uint64_t>());
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("betti json: ") + e.what());
    }
    return table;
}

std::string BettiTable::to_text() const {
    const int cols = pdim() + 1;
    const int rows = reg() + 1;
    std::vector<std::uint64_t> totals(cols, 0);
    std::size_t width = 1;
    for (const auto& [key, value] : entries_) {
        totals[key.first] += value;
        width = std::max(width, std::to_string(totals[key.first]).size());
    }
    width = std::max(width, std::to_string(cols - 1).size());
    const std::size_t label = std::max<std::size_t>(6, std::to_string(rows - 1).size() + 1);

    std::ostringstream out;
    out << std::setw(static_cast<int>(label)) << "" << ' ';
    for (int i = 0; i < cols; ++i) out << std::setw(static_cast<int>(width)) << i << (i + 1 < cols ? " " : "");
    out << "\n" << std::setw(static_cast<int>(label)) << "total:" << ' ';
    for (int i = 0; i < cols; ++i) out << std::setw(static_cast<int>(width)) << totals[i] << (i + 1 < cols ? " " : "");
    out << '\n';
    for (int row = 0; row < rows; ++row) {
        out << std::setw(static_cast<int>(label)) << (std::to_string(row) + ":") << ' ';
        for (int i = 0; i < cols; ++i) {
            const auto v = get(i, i + row);
            out << std::setw(static_cast<int>(width)) << (v ? std::to_string(v) : ".") << (i + 1 < cols ? " " : "");
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Δ(G)|_W on the ground of G: faces are the independent subsets of W.
SimplicialComplex restricted_independence_complex(const Graph& g, Mask w, const Limits& limits) {
    std::vector<Mask> facets;
    std::vector<std::pair<Mask, int>> stack{{0u, 0}};
    const int n = g.order();
    std::size_t count = 0;
    while (!stack.empty()) {
        auto [set, next] = stack.back();
        stack.pop_back();
        if (++count > limits.max_faces)
            fail(ErrorCode::LimitExceeded, "induced complex exceeds the face limit of " + std::to_string(limits.max_faces));
        bool extendable = false;
        for (int v = 0; v < n; ++v) {
            if (!((w >> v) & 1u) || ((set >> v) & 1u)) continue;
            if ((g.neighborhood(v).bits() & set) == 0) {
                extendable = true;
                if (v >= next) stack.emplace_back(set | (Mask{1} << v), v + 1);
            }
        }
        if (!extendable) facets.push_back(set);
    }
    return SimplicialComplex::from_facets(g.labels(), std::move(facets), limits);
}

bool has_isolated_vertex_within(const Graph& g, Mask w) {
    for (Mask b = w; b; b &= b - 1)
        if ((g.neighborhood(std::countr_zero(b)).bits() & w) == 0) return true;
    return false;
}

void check_order(const Graph& g, const HochsterOptions& options) {
    const int cap = std::min(options.limits.max_vertices, kMaxVertices);
    if (g.order() > cap)
        fail(ErrorCode::LimitExceeded,
             "Hochster sum over " + std::to_string(g.order()) + " vertices exceeds limit " + std::to_string(cap));
}

}  // namespace

std::vector<HomologyProfile> induced_homology_profiles(const Graph& g, const HochsterOptions& options) {
    check_order(g, options);
    const std::size_t total = std::size_t{1} << g.order();
    std::vector<HomologyProfile> profiles(total, HomologyProfile{options.field, {}});

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t w = begin; w < total; w += stride) {
            const Mask mask = static_cast<Mask>(w);
            // an isolated vertex of G|_W is a cone point of Δ(G)|_W
            if (mask != 0 && has_isolated_vertex_within(g, mask)) continue;
            profiles[w] = reduced_homology(restricted_independence_complex(g, mask, options.limits), options.field,
                                           options.limits);
        }
    };

    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(total)));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(jobs);
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                try {
                    work(static_cast<std::size_t>(t), static_cast<std::size_t>(jobs));
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& worker : workers) worker.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return profiles;
}

BettiTable hochster_betti_table(const Graph& g, const HochsterOptions& options) {
    const auto profiles = induced_homology_profiles(g, options);
    BettiTable table(g.order(), options.field);
    for (std::size_t w = 0; w < profiles.size(); ++w) {
        const int j = std::popcount(static_cast<Mask>(w));
        const auto& p = profiles[w];
        for (std::size_t k = 0; k < p.dims.size(); ++k) {
            const int r = static_cast<int>(k) - 1;
            table.add(j - r - 1, j, p.dims[k]);
        }
    }
    return table;
}

HomologicalInvariants homological_invariants(const Graph& g, const HochsterOptions& options) {
    const auto profiles = induced_homology_profiles(g, options);
    HomologicalInvariants out;
    int top_r = -1;
    for (std::size_t w = 0; w < profiles.size(); ++w) {
        const int size = std::popcount(static_cast<Mask>(w));
        const auto& p = profiles[w];
        for (std::size_t k = 0; k < p.dims.size(); ++k) {
            if (p.dims[k] == 0) continue;
            const int r = static_cast<int>(k) - 1;
            top_r = std::max(top_r, r);
            out.pdim = std::max(out.pdim, size - 1 - r);
        }
    }
    out.reg = 1 + top_r;
    return out;
}

BightReport check_bight_bound(const Graph& g, const HochsterOptions& options) {
    BightReport report;
    report.pdim = homological_invariants(g, options).pdim;
    report.bight = big_height(g);
    report.holds = report.pdim >= report.bight;
    return report;
}

BettiTable full_suspension_betti_predict(const BettiTable& base) {
    const int n = base.variables();
    BettiTable out(n + 1, base.field());
    out.set(0, 0, 1);
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) {
            std::uint64_t value = base.get(i, j) + base.get(i - 1, j - 1);
            if (j == i + 1) value += static_cast<std::uint64_t>(binomial(n, i));
            out.set(i, j, value);
        }
    }
    return out;
}

BettiTable full_suspension_betti_predict(const Graph& g, const HochsterOptions& options) {
    return full_suspension_betti_predict(hochster_betti_table(g, options));
}

AdditivityReport check_reg_additivity(const Graph& g1, const Graph& g2, const HochsterOptions& options) {
    AdditivityReport report;
    report.lhs = homological_invariants(disjoint_union(g1, g2), options).reg;
    report.rhs = homological_invariants(g1, options).reg + homological_invariants(g2, options).reg;
    report.holds = report.lhs == report.rhs;
    return report;
}

}  // namespace edgeideal
