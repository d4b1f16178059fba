#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgeideal/morse.hpp"
#include "edgeideal/suspension.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

std::vector<std::size_t> trimmed(const HomologyProfile& h) {
    std::vector<std::size_t> out(h.dims.begin(), h.dims.end());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// F paired with F + apex for every face F missing the apex
MorseMatching cone_matching(const SimplicialComplex& c, int apex, bool with_empty) {
    std::vector<FacePair> pairs;
    const Mask bit = Mask{1} << apex;
    for (int d = -1; d <= c.dimension(); ++d)
        for (Mask f : c.faces(d)) {
            if (f & bit) continue;
            if (f == 0 && !with_empty) continue;
            if (c.contains(f | bit)) pairs.push_back({f, f | bit});
        }
    return MorseMatching(c, pairs);
}

std::optional<ErrorCode> code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("structural checks") {
    const auto k2 = independence_complex(path_graph(2));
    CHECK(verify_acyclic_matching(k2, MorseMatching(k2, {})));
    CHECK(MorseMatching(k2, {}).critical_counts(k2) == std::vector<std::size_t>{1, 2});
    CHECK(code_of([&] { MorseMatching(k2, {{0b01, 0b11}}); }) == ErrorCode::InvalidArgument);

    const auto tri = SimplicialComplex::simplex(default_labels(3));
    CHECK_THROWS_AS(MorseMatching(tri, {{0b000, 0b011}}), Error);                  // codimension 2
    CHECK_THROWS_AS(MorseMatching(tri, {{0b001, 0b011}, {0b001, 0b101}}), Error);  // face used twice
    CHECK_THROWS_AS(MorseMatching(tri, {{0b010, 0b101}}), Error);                  // not a facet of it
    const MorseMatching m(tri, {{0b001, 0b011}});
    CHECK(m.partner(0b001) == Mask{0b011});
    CHECK(m.partner(0b011) == Mask{0b001});
    CHECK(m.is_critical(0b100));
}

TEST_CASE("a cyclic matching is detected") {
    const auto hollow = SimplicialComplex::from_facets(default_labels(3), {0b011, 0b110, 0b101});
    const MorseMatching cyclic(hollow, {{0b001, 0b011}, {0b010, 0b110}, {0b100, 0b101}});
    CHECK_FALSE(verify_acyclic_matching(hollow, cyclic));
    CHECK(code_of([&] { morse_inequality_report(hollow, cyclic); }) == ErrorCode::Precondition);
    CHECK_THROWS_AS(morse_complex_homology(hollow, cyclic), Error);

    const MorseMatching fine(hollow, {{0b001, 0b011}, {0b010, 0b110}});
    CHECK(verify_acyclic_matching(hollow, fine));
}

TEST_CASE("cone matching on a simplex") {
    const auto s = SimplicialComplex::simplex(default_labels(4));
    const auto without = cone_matching(s, 0, false);
    CHECK(verify_acyclic_matching(s, without));
    CHECK(without.critical_faces(s) == std::vector<Mask>{0, 0b0001});  // ∅ and {x1}

    const auto with = cone_matching(s, 0, true);
    CHECK(verify_acyclic_matching(s, with));
    CHECK(with.critical_faces(s).empty());
    for (const auto& row : morse_inequality_report(s, with).rows) CHECK(row.slack == 0);
    CHECK(morse_complex_homology(s, with).is_zero());

    // restricted to the facet away from the apex nothing survives
    const auto facet = SimplicialComplex::from_facets(default_labels(4), {0b1110});
    CHECK(restrict_matching(s, with, facet).size() == 0);
    CHECK(restrict_matching(s, with, s).pairs() == with.pairs());
}

TEST_CASE("inequalities for the empty matching") {
    const auto d = independence_complex(cycle_graph(6));
    const auto report = morse_inequality_report(d, MorseMatching(d, {}));
    const auto f = d.f_vector();
    const auto h = reduced_homology(d);
    REQUIRE(report.rows.size() == f.size());
    for (const auto& row : report.rows) {
        CHECK(row.critical == f[row.dim + 1]);
        CHECK(row.homology == h.dim(row.dim));
        CHECK(row.slack >= 0);
    }
    CHECK(report.holds());
}

TEST_CASE("greedy matchings") {
    for (int m = 1; m <= 6; ++m) {
        const auto s = SimplicialComplex::simplex(default_labels(m));
        const auto g = greedy_acyclic_matching(s);
        CHECK(verify_acyclic_matching(s, g));
        CHECK(g.critical_faces(s).empty());
    }

    const auto two = independence_complex(disjoint_union(path_graph(2), path_graph(2)));
    const auto g2 = greedy_acyclic_matching(two);
    CHECK(verify_acyclic_matching(two, g2));
    CHECK(g2.critical_counts(two) == std::vector<std::size_t>{0, 0, 1});
    CHECK(trimmed(morse_complex_homology(two, g2)) == std::vector<std::size_t>{0, 0, 1});

    const auto c6 = independence_complex(cycle_graph(6));
    const auto g6 = greedy_acyclic_matching(c6);
    const auto report = morse_inequality_report(c6, g6);
    CHECK(report.holds());
    CHECK(report.rows[2].critical >= 2);
    CHECK(trimmed(morse_complex_homology(c6, g6)) == std::vector<std::size_t>{0, 0, 2});

    const auto c9 = independence_complex(cycle_graph(9));
    const auto g9 = greedy_acyclic_matching(c9);
    CHECK(morse_complex_homology(c9, g9).dim(2) == 2);

    Limits tiny;
    tiny.max_faces = 10;
    CHECK_THROWS_AS(greedy_acyclic_matching(c9, std::nullopt, tiny), Error);
}

TEST_CASE("lexicographic greedy on cycles of length 3k leaves exactly the two spread cells") {
    // observed behaviour of the deterministic scan, frozen as a regression check
    for (int k = 1; k <= 3; ++k) {
        const int n = 3 * k;
        const auto d = independence_complex(cycle_graph(n));
        const auto g = greedy_acyclic_matching(d);
        VertexSet s1, s2;
        for (int v = 1; v < n; v += 3) s1.insert(v);
        for (int v = 2; v < n; v += 3) s2.insert(v);
        CHECK(g.critical_faces(d) == std::vector<Mask>{s1.bits(), s2.bits()});
        CHECK(reduced_homology(d).dim(k - 1) == 2);

        // they survive restriction to Δ(kK2) on the vertices off {x1, x4, ...}
        const auto a = induced_subcomplex(d, s1 | s2);
        const auto r = restrict_matching(d, g, a);
        CHECK(verify_acyclic_matching(a, r));
        CHECK(r.is_critical(s1.bits()));
        CHECK(r.is_critical(s2.bits()));
        CHECK(induced_homology_map_rank(d, a, k - 1) == 1);
    }
}

TEST_CASE("randomized restriction, complexes from graphs n <= 6") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto g = graph_population(n, 1, rng(), false).front();
        const auto d = independence_complex(g);
        const auto m = greedy_acyclic_matching(d, rng());
        REQUIRE(verify_acyclic_matching(d, m));
        const VertexSet w(static_cast<Mask>(rng()) & g.vertices().bits());
        const auto y = induced_subcomplex(d, w);
        const auto r = restrict_matching(d, m, y);
        CHECK(verify_acyclic_matching(y, r));
        for (Mask f : m.critical_faces(d))
            if (y.contains(f)) CHECK(r.is_critical(f));
        for (const auto& p : r.pairs()) CHECK((y.contains(p.lower) && y.contains(p.upper)));
    }
    const auto d = independence_complex(cycle_graph(5));
    const auto other = SimplicialComplex::from_facets(default_labels(5), {0b00011});
    CHECK(code_of([&] { restrict_matching(d, MorseMatching(d, {}), other); }) == ErrorCode::Precondition);
}

TEST_CASE("Morse homology equals simplicial homology") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto g = graph_population(n, 1, rng(), false).front();
        const auto d = independence_complex(g);
        const auto m = trial % 3 == 0 ? greedy_acyclic_matching(d) : greedy_acyclic_matching(d, rng());
        CHECK(morse_complex_homology(d, m) == reduced_homology(d));
        CHECK(morse_complex_homology(d, m, Field::prime(2)) == reduced_homology(d, Field::prime(2)));
        std::vector<Mask> faces;
        for (int r = -1; r <= d.dimension(); ++r)
            for (Mask f : d.faces(r)) faces.push_back(f);
        auto o = oracle::homology(faces);
        while (!o.empty() && o.back() == 0) o.pop_back();
        CHECK(trimmed(morse_complex_homology(d, m)) == o);
        CHECK(morse_inequality_report(d, m).holds());
    }
    const auto d = independence_complex(cycle_graph(6));
    CHECK_THROWS_AS(morse_complex_homology(d, MorseMatching(d, {}), Field::rational(), 5), Error);
}

TEST_CASE("matching JSON") {
    const auto d = independence_complex(cycle_graph(6));
    const auto m = greedy_acyclic_matching(d);
    const auto json = m.to_json(d);
    CHECK(json.rfind(R"([[[],["x1"]])", 0) == 0);
    const auto back = MorseMatching::from_json(d, json);
    CHECK(back.pairs() == m.pairs());
    CHECK_THROWS_AS(MorseMatching::from_json(d, R"([[["x1"],["x1","x2"]]])"), Error);
    CHECK_THROWS_AS(MorseMatching::from_json(d, R"([[["q"],["x1"]]])"), Error);
    CHECK_THROWS_AS(MorseMatching::from_json(d, "nope"), Error);
}
