#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edgeideal/betti.hpp"
#include "edgeideal/indpoly.hpp"
#include "edgeideal/suspension.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

IntPolynomial P(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

IntPolynomial brute(const Graph& g) { return IntPolynomial(oracle::independence_counts(g)); }

// every labelled graph on n vertices, edge slots in (u,v) lex order
std::vector<Graph> all_graphs(int n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint32_t m = 0; m < (1u << slots.size()); ++m) {
        std::vector<Edge> e;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (m >> s & 1u) e.push_back(slots[s]);
        out.emplace_back(n, e);
    }
    return out;
}

}  // namespace

TEST_CASE("IntPolynomial arithmetic") {
    CHECK(P({1, 2, 0, 0}).degree() == 1);
    CHECK(IntPolynomial().degree() == IntPolynomial::kZeroDegree);
    CHECK(P({0, 0}).is_zero());
    CHECK(P({1, 1}) * P({1, -1}) == P({1, 0, -1}));
    CHECK(P({1, 1}).pow(3) == P({1, 3, 3, 1}));
    CHECK(IntPolynomial::linear_power(1, 2, 2) == P({1, 4, 4}));
    CHECK(IntPolynomial::monomial(3, 2) == P({0, 0, 3}));
    CHECK(P({1, 5, 5}).evaluate(-1) == 1);
    CHECK(P({1, 5, 5}).derivative() == P({5, 10}));
    CHECK(P({2, 4}).divide_exact(2) == P({1, 2}));
    CHECK_THROWS_AS(P({2, 3}).divide_exact(2), Error);
    const auto [q, r] = P({1, 4, 3}).divide_by_root(-1);
    CHECK(q == P({1, 3}));
    CHECK(r == 0);
    CHECK(P({1, 4, 3}) - P({1, 4, 3}) == IntPolynomial());
    CHECK(P({1, 5, 5}).to_string() == "1 + 5*x + 5*x^2");
    CHECK(P({1, 3, 0, -2}).to_string('t') == "1 + 3*t - 2*t^3");
    CHECK(P({0, -1}).to_string() == "-x");
    CHECK(IntPolynomial().to_string() == "0");
    CHECK(P({1, 6, 9, 2}).to_json() == "[1,6,9,2]");
    CHECK(IntPolynomial::from_json("[1,6,9,2]") == P({1, 6, 9, 2}));
    CHECK_THROWS_AS(IntPolynomial::from_json("[1,"), Error);

    SUBCASE("overflow is an error, not a wrap") {
        const auto big = IntPolynomial::constant(std::int64_t{1} << 62);
        CHECK_THROWS_AS(big + big, Error);
        CHECK_THROWS_AS(big * P({0, 4}), Error);
        CHECK_THROWS_AS(P({1, 1}).pow(70), Error);
    }
}

TEST_CASE("independence polynomial examples") {
    CHECK(independence_polynomial(build_graph(1, {})) == P({1, 1}));
    CHECK(independence_polynomial(path_graph(2)) == P({1, 2}));
    CHECK(independence_polynomial(cycle_graph(6)) == P({1, 6, 9, 2}));
    CHECK(independence_polynomial(build_graph(3, {})) == P({1, 3, 3, 1}));
    CHECK(family_poly(Family::Path, 3) == P({1, 3, 1}));
    CHECK(family_poly(Family::Cycle, 5) == P({1, 5, 5}));
    CHECK(family_poly(Family::Path, 0) == P({1}));
    CHECK(closed_form_poly(Family::Path, 1) == P({1, 1}));
    CHECK(closed_form_poly(Family::Cycle, 6) == P({1, 6, 9, 2}));
    CHECK_THROWS_AS(family_poly(Family::Cycle, 2), Error);
    CHECK_THROWS_AS(family_poly(Family::Path, -1), Error);
}

TEST_CASE("deletion-contraction agrees with subset counting") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graph_population(n, 0, 1, false)) CHECK(independence_polynomial(g) == brute(g));
    for (int n = 6; n <= 12; ++n)
        for (const auto& g : graph_population(n, 15, 71, false)) CHECK(independence_polynomial(g) == brute(g));
    // large enough that memoization matters
    const auto c22 = independence_polynomial(cycle_graph(22));
    CHECK(c22 == family_poly(Family::Cycle, 22));
}

TEST_CASE("family, closed form and direct computation agree, n <= 14") {
    for (int n = 1; n <= 14; ++n) {
        const auto direct = independence_polynomial(path_graph(n));
        CHECK(family_poly(Family::Path, n) == direct);
        CHECK(closed_form_poly(Family::Path, n) == direct);
        CHECK(direct == brute(path_graph(n)));
    }
    for (int n = 3; n <= 14; ++n) {
        const auto direct = independence_polynomial(cycle_graph(n));
        CHECK(family_poly(Family::Cycle, n) == direct);
        CHECK(closed_form_poly(Family::Cycle, n) == direct);
        CHECK(direct == brute(cycle_graph(n)));
    }
    CHECK(closed_form_poly(Family::Path, 0) == P({1}));
}

TEST_CASE("multiplicity at -1") {
    for (int n = 3; n <= 14; ++n) CHECK(multiplicity_at_minus_one(family_poly(Family::Cycle, n)) == 0);
    CHECK(multiplicity_at_minus_one(P({1, 4, 3})) == 1);
    CHECK(multiplicity_at_minus_one(P({1, 3, 3, 1})) == 3);
    CHECK(multiplicity_at_minus_one(P({2})) == 0);
    CHECK_THROWS_AS(multiplicity_at_minus_one(IntPolynomial()), Error);
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = graph_population(2 + static_cast<int>(rng() % 8), 1, rng(), false).front();
        const auto p = independence_polynomial(g);
        CHECK((multiplicity_at_minus_one(p) == 0) == (p.evaluate(-1) != 0));
    }
}

TEST_CASE("cycle values at -1") {
    // 6-periodic from n = 3: -2, -1, 1, 2, 1, -1
    const std::vector<std::int64_t> pattern{-2, -1, 1, 2, 1, -1};
    for (int n = 3; n <= 20; ++n) {
        const std::int64_t v = family_poly(Family::Cycle, n).evaluate(-1);
        CHECK(v == pattern[(n - 3) % 6]);
        if (n <= 14) CHECK(v == brute(cycle_graph(n)).evaluate(-1));
    }
    for (int l = 1; l <= 6; ++l) CHECK(family_poly(Family::Cycle, 3 * l).evaluate(-1) == (l % 2 ? -2 : 2));
}

TEST_CASE("multiplicative over disjoint unions") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = graph_population(1 + static_cast<int>(rng() % 7), 1, rng(), false).front();
        const auto b = graph_population(1 + static_cast<int>(rng() % 7), 1, rng(), false).front();
        CHECK(independence_polynomial(disjoint_union(a, b)) == independence_polynomial(a) * independence_polynomial(b));
    }
}

TEST_CASE("h-polynomials") {
    CHECK(h_polynomial(path_graph(2)) == P({1, 1}));
    CHECK(h_polynomial(cycle_graph(6)).degree() == 3);
    CHECK(h_polynomial(cycle_graph(6)) == P({1, 3, 0, -2}));
    CHECK(h_polynomial(build_graph(2, {})) == P({1}));
    CHECK(h_polynomial(cycle_graph(3)) == P({1, 2}));
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graph_population(n, 0, 1, false)) CHECK(h_polynomial(g).evaluate(1) > 0);
}

TEST_CASE("a-invariant") {
    for (int n = 1; n <= 12; ++n) {
        const auto r = a_invariant(path_graph(n));
        CHECK(r.a == (n % 3 == 1 ? -1 : 0));
        CHECK(r.alpha == (n + 1) / 2);
        CHECK(r.hdeg == r.alpha - r.M);
    }
    for (int n = 3; n <= 12; ++n) {
        const auto r = a_invariant(cycle_graph(n));
        CHECK(r.a == 0);
        CHECK(r.M == 0);
    }
    const auto e = a_invariant(build_graph(3, {}));
    CHECK(e.alpha == 3);
    CHECK(e.M == 3);
    CHECK(e.a == -3);
    CHECK(e.hdeg == 0);
}

TEST_CASE("deg h = alpha - M, n <= 7") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graph_population(n, 0, 1, false)) {
            const auto r = a_invariant(g);
            CHECK(r.a == -r.M);
            CHECK(r.hdeg == r.alpha - r.M);
            CHECK(h_polynomial(g).degree() == r.hdeg);
        }
    for (int n = 6; n <= 7; ++n)
        for (const auto& g : graph_population(n, 60, 83, false)) {
            const auto r = a_invariant(g);
            CHECK(h_polynomial(g).degree() == r.alpha - r.M);
        }
}

TEST_CASE("K-polynomial identity ties Betti numbers to h") {
    auto check_graph = [](const Graph& g) {
        const int n = g.order();
        const auto table = hochster_betti_table(g);
        std::vector<std::int64_t> k(n + 1, 0);
        for (const auto& [ij, beta] : table.entries())
            k[ij.second] += (ij.first % 2 ? -1 : 1) * static_cast<std::int64_t>(beta);
        const IntPolynomial lhs(k);
        const int alpha = independence_number(g);
        const auto rhs = IntPolynomial::linear_power(1, -1, n - alpha) * h_polynomial(g);
        CHECK(lhs == rhs);
        CHECK(lhs == IntPolynomial(oracle::k_polynomial(g)));
    };
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : graph_population(n, 0, 1, false)) check_graph(g);
    for (const auto& g : graph_population(6, 300, 89, false)) check_graph(g);
}

TEST_CASE("Hilbert series of the full suspension") {
    const auto k2 = hilbert_full_suspension_check(path_graph(2));
    CHECK(k2.d == 1);
    CHECK(k2.h_suspension == P({1, 2}));
    CHECK(k2.identity_holds);

    const auto p4 = hilbert_full_suspension_check(path_graph(4));
    CHECK(p4.a_base == -1);
    CHECK(p4.a_suspension == 0);
    CHECK(p4.a_comparison_holds);

    CHECK_THROWS_AS(hilbert_full_suspension_check(Graph(0, std::vector<Edge>{})), Error);

    std::size_t checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) {
            if (g.edge_count() == 0) continue;
            const auto r = hilbert_full_suspension_check(g);
            CHECK(r.identity_holds);
            CHECK(r.a_comparison_holds);
            CHECK(r.h_suspension == h_polynomial(full_suspension(g)));
            ++checked;
        }
    CHECK(checked == 32768 + 1024 + 64 + 8 + 2 - 5);
}

TEST_CASE("path sequences at -1") {
    const auto s = path_minus_one_sequences(21);
    CHECK(s.agree);
    CHECK(std::vector<std::int64_t>(s.a.begin(), s.a.begin() + 12) ==
          std::vector<std::int64_t>{1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1});
    CHECK(s.b[0] == 0);
    CHECK(s.b[1] == 1);
    for (int k = 0; k <= 6; ++k) CHECK(s.b[3 * k + 1] == (k % 2 ? -1 : 1) * (k + 1));
    // independent of the library: evaluate the brute-force counts
    for (int m = 1; m <= 14; ++m) {
        const auto p = brute(path_graph(m));
        CHECK(s.a[m] == p.evaluate(-1));
        CHECK(s.b[m] == p.derivative().evaluate(-1));
    }
    CHECK_THROWS_AS(path_minus_one_sequences(0), Error);
}
