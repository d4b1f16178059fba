#include "edgeideal/complex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace edgeideal {

namespace {

std::vector<Mask> maximal_only(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    // larger sets first so that each candidate only needs checking against kept ones
    std::stable_sort(sets.begin(), sets.end(), [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
    std::vector<Mask> kept;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask k : kept)
            if ((s & ~k) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

void check_ground(const std::vector<std::string>& ground) {
    if (ground.size() > static_cast<std::size_t>(kMaxVertices))
        fail(ErrorCode::LimitExceeded, "ground set exceeds " + std::to_string(kMaxVertices) + " vertices");
    auto sorted = ground;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorCode::InvalidArgument, "ground labels must be distinct");
}

}  // namespace

// Builds the face buckets from a downward-closed face family.
static void bucket_faces(std::vector<Mask>& all, std::vector<std::vector<Mask>>& faces,
                         std::unordered_map<Mask, int>& index) {
    int top = -1;
    for (Mask f : all) top = std::max(top, std::popcount(f) - 1);
    faces.assign(all.empty() ? 0 : top + 2, {});
    for (Mask f : all) faces[std::popcount(f)].push_back(f);
    index.clear();
    index.reserve(all.size());
    for (auto& bucket : faces) {
        std::sort(bucket.begin(), bucket.end(), lex_less);
        for (std::size_t i = 0; i < bucket.size(); ++i) index.emplace(bucket[i], static_cast<int>(i));
    }
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> ground, std::vector<Mask> facets,
                                                 const Limits& limits) {
    check_ground(ground);
    SimplicialComplex c;
    c.ground_ = std::move(ground);
    const Mask universe = static_cast<Mask>(VertexSet::full(c.ground_size()).bits());
    for (Mask f : facets)
        if ((f & ~universe) != 0) fail(ErrorCode::InvalidArgument, "facet uses a vertex outside the ground set");
    c.facets_ = maximal_only(std::move(facets));

    std::unordered_set<Mask> seen;
    for (Mask f : c.facets_) {
        if (std::popcount(f) >= 63 || (std::size_t{1} << std::popcount(f)) > limits.max_faces)
            fail(ErrorCode::LimitExceeded, "complex exceeds the face limit of " + std::to_string(limits.max_faces));
        // all submasks of f, including f and 0
        for (Mask s = f;; s = (s - 1) & f) {
            seen.insert(s);
            if (s == 0) break;
        }
        if (seen.size() > limits.max_faces)
            fail(ErrorCode::LimitExceeded, "complex exceeds the face limit of " + std::to_string(limits.max_faces));
    }
    std::vector<Mask> all(seen.begin(), seen.end());
    bucket_faces(all, c.faces_, c.index_);
    return c;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> ground) {
    check_ground(ground);
    SimplicialComplex c;
    c.ground_ = std::move(ground);
    return c;
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> ground, const Limits& limits) {
    const Mask all = VertexSet::full(static_cast<int>(ground.size())).bits();
    return from_facets(std::move(ground), {all}, limits);
}

const std::vector<Mask>& SimplicialComplex::faces(int d) const {
    static const std::vector<Mask> none;
    const auto i = static_cast<std::size_t>(d + 1);
    return d >= -1 && i < faces_.size() ? faces_[i] : none;
}

int SimplicialComplex::position(Mask face) const {
    auto it = index_.find(face);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> out;
    for (const auto& bucket : faces_) out.push_back(bucket.size());
    return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    if (ground_ != other.ground_) return false;
    for (Mask f : facets_)
        if (!other.contains(f)) return false;
    return true;
}

SimplicialComplex independence_complex(const Graph& g, const Limits& limits) {
    // depth-first generation of independent sets in increasing vertex order
    const int n = g.order();
    std::vector<Mask> facets;
    std::size_t count = 0;
    std::vector<std::pair<Mask, int>> stack{{0u, 0}};
    while (!stack.empty()) {
        auto [set, next] = stack.back();
        stack.pop_back();
        if (++count > limits.max_faces)
            fail(ErrorCode::LimitExceeded, "independence complex exceeds the face limit of " +
                                               std::to_string(limits.max_faces));
        if (is_maximal_independent(g, VertexSet(set))) facets.push_back(set);
        for (int v = n - 1; v >= next; --v)
            if ((g.neighborhood(v).bits() & set) == 0) stack.emplace_back(set | (Mask{1} << v), v + 1);
    }
    return SimplicialComplex::from_facets(g.labels(), std::move(facets), limits);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w) {
    if (!w.subset_of(VertexSet::full(complex.ground_size())))
        fail(ErrorCode::InvalidArgument, "induced_subcomplex: set is not inside the ground set");
    if (complex.is_void()) return complex;
    std::vector<Mask> facets;
    for (Mask f : complex.facets()) facets.push_back(f & w.bits());
    return SimplicialComplex::from_facets(complex.ground(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& first, const SimplicialComplex& second) {
    auto ground = first.ground();
    for (const auto& label : second.ground()) {
        if (std::find(ground.begin(), ground.end(), label) != ground.end())
            fail(ErrorCode::InvalidArgument, "join: label '" + label + "' occurs in both ground sets");
        ground.push_back(label);
    }
    if (first.is_void() || second.is_void()) return SimplicialComplex::void_complex(std::move(ground));
    const int shift = first.ground_size();
    std::vector<Mask> facets;
    for (Mask a : first.facets())
        for (Mask b : second.facets()) facets.push_back(a | (b << shift));
    return SimplicialComplex::from_facets(std::move(ground), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& complex, const std::string& apex) {
    return join(complex, SimplicialComplex::simplex({apex}));
}

SimplicialComplex extend_ground(const SimplicialComplex& complex, const std::vector<std::string>& extra) {
    auto ground = complex.ground();
    ground.insert(ground.end(), extra.begin(), extra.end());
    if (complex.is_void()) return SimplicialComplex::void_complex(std::move(ground));
    return SimplicialComplex::from_facets(std::move(ground), complex.facets());
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground()) fail(ErrorCode::InvalidArgument, "union: ground sets differ");
    if (a.is_void()) return b;
    if (b.is_void()) return a;
    auto facets = a.facets();
    facets.insert(facets.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_facets(a.ground(), std::move(facets));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.ground() != b.ground()) fail(ErrorCode::InvalidArgument, "intersection: ground sets differ");
    if (a.is_void() || b.is_void()) return SimplicialComplex::void_complex(a.ground());
    std::vector<Mask> facets;
    for (Mask x : a.facets())
        for (Mask y : b.facets()) facets.push_back(x & y);
    return SimplicialComplex::from_facets(a.ground(), std::move(facets));
}

bool HomologyProfile::is_zero() const {
    return std::all_of(dims.begin(), dims.end(), [](std::uint64_t d) { return d == 0; });
}

int HomologyProfile::top_nonzero() const {
    for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i)
        if (dims[i] != 0) return i - 1;
    return -2;
}

std::string HomologyProfile::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? "," : "") << dims[i];
    out << "] over " << field.name();
    return out.str();
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
    if (a.field != b.field) return false;
    const std::size_t n = std::max(a.dims.size(), b.dims.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.dim(static_cast<int>(i) - 1) != b.dim(static_cast<int>(i) - 1)) return false;
    return true;
}

int incidence(Mask upper, Mask lower) {
    const Mask removed = upper & ~lower;
    const int below = std::popcount(upper & (removed - 1));
    return (below % 2 == 0) ? 1 : -1;
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int d) {
    const auto& cols = complex.faces(d);
    const auto& rows = complex.faces(d - 1);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (Mask b = cols[c]; b; b &= b - 1) {
            const Mask lower = cols[c] & ~(b & -b);
            m(static_cast<std::size_t>(complex.position(lower)), c) = incidence(cols[c], lower);
        }
    }
    return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field, const Limits& limits) {
    if (complex.face_count() > limits.max_faces)
        fail(ErrorCode::LimitExceeded, "homology: complex exceeds the face limit of " + std::to_string(limits.max_faces));
    HomologyProfile out{field, {}};
    if (complex.is_void()) return out;
    const int top = complex.dimension();
    // ranks[d + 1] = rank ∂_d, d = -1 .. top + 1 (∂_{-1} and ∂_{top+1} vanish)
    std::vector<std::size_t> ranks(top + 3, 0);
    for (int d = 0; d <= top; ++d) ranks[d + 1] = rank(boundary_matrix(complex, d), field);
    out.dims.resize(top + 2);
    for (int r = -1; r <= top; ++r)
        out.dims[r + 1] = complex.faces(r).size() - ranks[r + 1] - ranks[r + 2];
    return out;
}

std::size_t induced_homology_map_rank(const SimplicialComplex& complex, const SimplicialComplex& sub, int r,
                                      Field field) {
    if (!sub.is_subcomplex_of(complex)) fail(ErrorCode::Precondition, "induced map: not a subcomplex");
    if (r < -1 || sub.faces(r).empty()) return 0;
    // cycles of sub, written in the chain basis of the big complex
    const auto cycles = kernel_basis(boundary_matrix(sub, r), field);
    if (cycles.empty()) return 0;
    const auto& sub_faces = sub.faces(r);
    IntMatrix z(complex.faces(r).size(), cycles.size());
    for (std::size_t k = 0; k < cycles.size(); ++k)
        for (std::size_t i = 0; i < sub_faces.size(); ++i)
            z(static_cast<std::size_t>(complex.position(sub_faces[i])), k) = cycles[k][i];
    const IntMatrix b = boundary_matrix(complex, r + 1);
    const std::size_t boundaries = rank(b, field);
    if (b.cols() == 0) return rank(z, field);
    return rank(b.hconcat(z), field) - boundaries;
}

std::string format_face(const SimplicialComplex& complex, Mask face) {
    std::string out = "{";
    bool first = true;
    for (Mask b = face; b; b &= b - 1) {
        if (!first) out += ',';
        out += complex.ground().at(std::countr_zero(b));
        first = false;
    }
    return out + "}";
}

std::string to_facet_list(const SimplicialComplex& complex) {
    std::ostringstream out;
    for (Mask f : complex.facets()) {
        if (f == 0) {
            out << "{}\n";
            continue;
        }
        bool first = true;
        for (Mask b = f; b; b &= b - 1) {
            out << (first ? "" : " ") << complex.ground()[std::countr_zero(b)];
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

SimplicialComplex parse_facet_list(const std::string& text) {
    std::vector<std::string> ground;
    std::vector<Mask> facets;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string label;
        Mask facet = 0;
        bool any = false;
        while (fields >> label) {
            any = true;
            if (label == "{}") continue;
            auto it = std::find(ground.begin(), ground.end(), label);
            if (it == ground.end()) {
                if (ground.size() == static_cast<std::size_t>(kMaxVertices))
                    fail(ErrorCode::LimitExceeded, "facet list uses more than " + std::to_string(kMaxVertices) + " labels");
                ground.push_back(label);
                it = ground.end() - 1;
            }
            facet |= Mask{1} << (it - ground.begin());
        }
        if (any) facets.push_back(facet);
    }
    if (facets.empty()) return SimplicialComplex::void_complex(ground);
    return SimplicialComplex::from_facets(std::move(ground), std::move(facets));
}

}  // namespace edgeideal
