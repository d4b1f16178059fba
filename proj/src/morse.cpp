#include "edgeideal/morse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace edgeideal {

MorseMatching::MorseMatching(const SimplicialComplex& complex, std::vector<FacePair> pairs) : pairs_(std::move(pairs)) {
    for (const auto& [lower, upper] : pairs_) {
        if (!complex.contains(lower) || !complex.contains(upper))
            fail(ErrorCode::InvalidArgument, "matching pair references a face outside the complex");
        if ((lower & ~upper) != 0 || std::popcount(upper) != std::popcount(lower) + 1)
            fail(ErrorCode::InvalidArgument, "matching pair is not a codimension-one incidence");
        if (!partner_.emplace(lower, upper).second || !partner_.emplace(upper, lower).second)
            fail(ErrorCode::InvalidArgument, "face " + format_face(complex, partner_.count(lower) ? lower : upper) +
                                                 " is matched twice");
    }
}

std::optional<Mask> MorseMatching::partner(Mask face) const {
    auto it = partner_.find(face);
    if (it == partner_.end()) return std::nullopt;
    return it->second;
}

std::vector<Mask> MorseMatching::critical_faces(const SimplicialComplex& complex) const {
    std::vector<Mask> out;
    for (int d = -1; d <= complex.dimension(); ++d)
        for (Mask f : complex.faces(d))
            if (is_critical(f)) out.push_back(f);
    return out;
}

std::vector<std::size_t> MorseMatching::critical_counts(const SimplicialComplex& complex) const {
    std::vector<std::size_t> out;
    for (int d = -1; d <= complex.dimension(); ++d) {
        const auto& faces = complex.faces(d);
        out.push_back(static_cast<std::size_t>(
            std::count_if(faces.begin(), faces.end(), [&](Mask f) { return is_critical(f); })));
    }
    return out;
}

namespace {

nlohmann::json face_labels(const SimplicialComplex& complex, Mask face) {
    nlohmann::json out = nlohmann::json::array();
    for (Mask b = face; b; b &= b - 1) out.push_back(complex.ground()[std::countr_zero(b)]);
    return out;
}

Mask face_from_labels(const SimplicialComplex& complex, const nlohmann::json& labels) {
    Mask face = 0;
    for (const auto& label : labels) {
        const auto& ground = complex.ground();
        auto it = std::find(ground.begin(), ground.end(), label.get<std::string>());
        if (it == ground.end()) fail(ErrorCode::InvalidArgument, "matching json: unknown label " + label.dump());
        face |= Mask{1} << (it - ground.begin());
    }
    return face;
}

// Faces of `upper` of one dimension lower.
template <typename Fn>
void for_each_facet(Mask upper, Fn&& fn) {
    for (Mask b = upper; b; b &= b - 1) fn(upper & ~(b & -b));
}

// Cofaces of `lower` inside the complex.
template <typename Fn>
void for_each_coface(const SimplicialComplex& complex, Mask lower, Fn&& fn) {
    for (int v = 0; v < complex.ground_size(); ++v) {
        const Mask up = lower | (Mask{1} << v);
        if (up != lower && complex.contains(up)) fn(up);
    }
}

// Successors of `lower` in the layer digraph with upper faces contracted:
// lower -> (unmatched up) -> upper -> (matched down) -> other lower face.
template <typename Fn>
void for_each_gradient_step(const SimplicialComplex& complex, const MorseMatching& m, Mask lower, Fn&& fn) {
    for_each_coface(complex, lower, [&](Mask up) {
        auto down = m.partner(up);
        if (!down || *down == lower || std::popcount(*down) != std::popcount(lower)) return;
        fn(*down);
    });
}

bool layer_has_cycle(const SimplicialComplex& complex, const MorseMatching& m, int d) {
    const auto& lowers = complex.faces(d);
    std::unordered_map<Mask, int> color;  // 0 new, 1 on stack, 2 done
    for (Mask start : lowers) {
        if (color[start] != 0) continue;
        // iterative DFS holding (face, successors, next index)
        std::vector<std::pair<Mask, std::vector<Mask>>> stack;
        std::vector<std::size_t> cursor;
        auto push = [&](Mask f) {
            color[f] = 1;
            std::vector<Mask> next;
            for_each_gradient_step(complex, m, f, [&](Mask s) { next.push_back(s); });
            stack.emplace_back(f, std::move(next));
            cursor.push_back(0);
        };
        push(start);
        while (!stack.empty()) {
            auto& [face, next] = stack.back();
            if (cursor.back() == next.size()) {
                color[face] = 2;
                stack.pop_back();
                cursor.pop_back();
                continue;
            }
            const Mask s = next[cursor.back()++];
            const int c = color[s];
            if (c == 1) return true;
            if (c == 0) push(s);
        }
    }
    return false;
}

// Faces reachable from `from` along gradient steps.
std::vector<Mask> reachable(const SimplicialComplex& complex, const MorseMatching& m, Mask from) {
    std::vector<Mask> seen{from};
    std::vector<Mask> todo{from};
    while (!todo.empty()) {
        const Mask f = todo.back();
        todo.pop_back();
        for_each_gradient_step(complex, m, f, [&](Mask s) {
            if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
                seen.push_back(s);
                todo.push_back(s);
            }
        });
    }
    return seen;
}

}  // namespace

std::string MorseMatching::to_json(const SimplicialComplex& complex) const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [lower, upper] : pairs_)
        out.push_back(nlohmann::json::array({face_labels(complex, lower), face_labels(complex, upper)}));
    return out.dump();
}

MorseMatching MorseMatching::from_json(const SimplicialComplex& complex, const std::string& text) {
    std::vector<FacePair> pairs;
    try {
        for (const auto& pair : nlohmann::json::parse(text))
            pairs.push_back({face_from_labels(complex, pair.at(0)), face_from_labels(complex, pair.at(1))});
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("matching json: ") + e.what());
    }
    return MorseMatching(complex, std::move(pairs));
}

bool verify_acyclic_matching(const SimplicialComplex& complex, const MorseMatching& matching) {
    for (const auto& [lower, upper] : matching.pairs())
        if (!complex.contains(lower) || !complex.contains(upper))
            fail(ErrorCode::InvalidArgument, "matching references a face outside the complex");
    for (int d = -1; d < complex.dimension(); ++d)
        if (layer_has_cycle(complex, matching, d)) return false;
    return true;
}

MorseMatching restrict_matching(const SimplicialComplex& complex, const MorseMatching& matching,
                                const SimplicialComplex& sub) {
    if (!sub.is_subcomplex_of(complex)) fail(ErrorCode::Precondition, "restrict_matching: not a subcomplex");
    std::vector<FacePair> kept;
    for (const auto& pair : matching.pairs())
        if (sub.contains(pair.lower) && sub.contains(pair.upper)) kept.push_back(pair);
    return MorseMatching(sub, std::move(kept));
}

MorseMatching greedy_acyclic_matching(const SimplicialComplex& complex, std::optional<std::uint64_t> seed,
                                      const Limits& limits) {
    if (complex.face_count() > limits.max_faces)
        fail(ErrorCode::LimitExceeded, "matching search: complex exceeds the face limit");
    std::vector<FacePair> candidates;
    for (int d = -1; d < complex.dimension(); ++d)
        for (Mask lower : complex.faces(d)) {
            std::vector<Mask> ups;
            for_each_coface(complex, lower, [&](Mask up) { ups.push_back(up); });
            std::sort(ups.begin(), ups.end(), lex_less);
            for (Mask up : ups) candidates.push_back({lower, up});
        }
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
    }

    MorseMatching current(complex, {});
    std::vector<FacePair> chosen;
    for (const auto& cand : candidates) {
        if (current.partner(cand.lower) || current.partner(cand.upper)) continue;
        // the new downward edge closes a cycle iff another facet of `upper`
        // is reachable from `lower`
        const auto from_lower = reachable(complex, current, cand.lower);
        bool closes = false;
        for_each_facet(cand.upper, [&](Mask other) {
            if (other != cand.lower && std::find(from_lower.begin(), from_lower.end(), other) != from_lower.end())
                closes = true;
        });
        if (closes) continue;
        chosen.push_back(cand);
        current = MorseMatching(complex, chosen);
    }
    if (!verify_acyclic_matching(complex, current))
        fail(ErrorCode::Arithmetic, "greedy matching produced a cycle");  // unreachable unless the search is wrong
    return current;
}

bool MorseInequalityReport::holds() const {
    return std::all_of(rows.begin(), rows.end(), [](const MorseInequalityRow& r) { return r.slack >= 0; });
}

MorseInequalityReport morse_inequality_report(const SimplicialComplex& complex, const MorseMatching& matching,
                                              Field field) {
    if (!verify_acyclic_matching(complex, matching)) fail(ErrorCode::Precondition, "matching is not acyclic");
    const auto counts = matching.critical_counts(complex);
    const auto homology = reduced_homology(complex, field);
    MorseInequalityReport report;
    for (int d = -1; d <= complex.dimension(); ++d) {
        MorseInequalityRow row;
        row.dim = d;
        row.critical = counts[d + 1];
        row.homology = homology.dim(d);
        row.slack = static_cast<std::int64_t>(row.critical) - static_cast<std::int64_t>(row.homology);
        report.rows.push_back(row);
    }
    return report;
}

namespace {

class Coefficients {
public:
    explicit Coefficients(Field field) : p_(field.characteristic()) {}

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        if (p_) return static_cast<std::int64_t>((reduce(a) + reduce(b)) % p_);
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Arithmetic, "Morse boundary coefficient overflow");
        return r;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (p_) return static_cast<std::int64_t>(reduce(a) * reduce(b) % p_);
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Arithmetic, "Morse boundary coefficient overflow");
        return r;
    }

private:
    std::uint64_t reduce(std::int64_t v) const {
        const auto m = static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(((v % m) + m) % m);
    }
    std::uint64_t p_;
};

// Lower faces of the layer (d, d+1) ordered so that a face matched upward comes
// before every other facet of its partner, i.e. gradient steps run backwards.
std::vector<Mask> flow_order(const SimplicialComplex& complex, const MorseMatching& m, int d) {
    std::vector<Mask> post;
    std::unordered_map<Mask, bool> visited;
    for (Mask start : complex.faces(d)) {
        if (visited[start]) continue;
        std::vector<std::pair<Mask, std::vector<Mask>>> stack;
        std::vector<std::size_t> cursor;
        auto push = [&](Mask f) {
            visited[f] = true;
            std::vector<Mask> next;
            for_each_gradient_step(complex, m, f, [&](Mask s) { next.push_back(s); });
            stack.emplace_back(f, std::move(next));
            cursor.push_back(0);
        };
        push(start);
        while (!stack.empty()) {
            auto& [face, next] = stack.back();
            if (cursor.back() == next.size()) {
                post.push_back(face);
                stack.pop_back();
                cursor.pop_back();
                continue;
            }
            const Mask s = next[cursor.back()++];
            if (!visited[s]) push(s);
        }
    }
    return post;
}

}  // namespace

HomologyProfile morse_complex_homology(const SimplicialComplex& complex, const MorseMatching& matching, Field field,
                                       std::size_t max_critical) {
    if (!verify_acyclic_matching(complex, matching)) fail(ErrorCode::Precondition, "matching is not acyclic");
    HomologyProfile out{field, {}};
    if (complex.is_void()) return out;
    const int top = complex.dimension();

    std::vector<std::vector<Mask>> critical(top + 2);
    std::size_t total = 0;
    for (int d = -1; d <= top; ++d)
        for (Mask f : complex.faces(d))
            if (matching.is_critical(f)) {
                critical[d + 1].push_back(f);
                ++total;
            }
    if (total > max_critical) fail(ErrorCode::LimitExceeded, "too many critical cells for the Morse complex");

    const Coefficients k(field);
    std::vector<std::size_t> ranks(top + 3, 0);  // ranks[d + 1] = rank ∂^M_d
    for (int d = 0; d <= top; ++d) {
        const auto& cols = critical[d + 1];
        const auto& rows = critical[d];
        if (cols.empty() || rows.empty()) continue;
        const auto order = flow_order(complex, matching, d - 1);
        std::unordered_map<Mask, std::size_t> row_of;
        for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;

        IntMatrix boundary(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::unordered_map<Mask, std::int64_t> chain;
            for_each_facet(cols[c], [&](Mask f) { chain[f] = incidence(cols[c], f); });
            for (Mask s : order) {
                auto it = chain.find(s);
                if (it == chain.end() || it->second == 0) continue;
                const std::int64_t coef = it->second;
                if (auto r = row_of.find(s); r != row_of.end()) {
                    boundary(r->second, c) = coef;
                    continue;
                }
                const auto up = matching.partner(s);
                if (!up || std::popcount(*up) != std::popcount(s) + 1) continue;  // matched downward: path ends
                // replace s by s - [up:s] ∂(up), which cancels s
                const std::int64_t scale = k.mul(-coef, incidence(*up, s));
                for_each_facet(*up, [&](Mask other) {
                    if (other == s) return;
                    chain[other] = k.add(chain[other], k.mul(scale, incidence(*up, other)));
                });
                it->second = 0;
            }
        }
        ranks[d + 1] = rank(boundary, field);
    }
    out.dims.resize(top + 2);
    for (int d = -1; d <= top; ++d) out.dims[d + 1] = critical[d + 1].size() - ranks[d + 1] - ranks[d + 2];
    return out;
}

}  // namespace edgeideal
