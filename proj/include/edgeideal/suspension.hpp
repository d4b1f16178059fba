#ifndef EDGEIDEAL_SUSPENSION_HPP
#define EDGEIDEAL_SUSPENSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgeideal/betti.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/indpoly.hpp"

namespace edgeideal {

/// Squarefree monomial ideal; each generator is stored by its support.
/// Generators are kept minimal (no support contains another) and sorted.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(std::vector<std::string> ambient, std::vector<Mask> generators);

    const std::vector<std::string>& ambient() const { return ambient_; }
    const std::vector<Mask>& generators() const { return generators_; }

    /// (I : v)
    MonomialIdeal colon_variable(int v) const;
    /// (I, v)
    MonomialIdeal plus_variable(int v) const;
    MonomialIdeal operator+(const MonomialIdeal& other) const;

    bool contains_monomial(Mask support) const;
    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> ambient_;
    std::vector<Mask> generators_;
};

MonomialIdeal edge_ideal(const Graph& g);
/// (x_i : i ∈ vars) over the labels of g.
MonomialIdeal variable_ideal(const std::vector<std::string>& ambient, VertexSet vars);

/// Shape of a maximal independent set C of P_n or C_n, read off its 0/1
/// string. ell and e describe P = G - N[z], the family graph minus C.
struct CoverProfile {
    Family kind = Family::Path;
    int n = 0;
    VertexSet cover;
    int t = 0;      // |C|
    int ell = 0;    // edges of P
    int e = 0;      // isolated vertices of P
    int delta = 0;  // path only: leading plus trailing zero
    int p = 0;      // gaps "01"
    int q = 0;      // gaps "001"
};

/// Throws Precondition unless C is a maximal independent set of the family graph.
CoverProfile cover_profile(Family kind, int n, VertexSet cover);

/// Paths: every maximal independent set reaching ell = ⌊(n-1)/3⌋.
/// Cycles (n ≡ 0 mod 3): the three sets {x_i, x_{i+3}, ...}, i = 1, 2, 3.
std::vector<VertexSet> extremal_sets(Family kind, int n);

/// {x1, x4, ..., x_n} for n ≡ 1 (mod 3); nullopt otherwise.
std::optional<VertexSet> exceptional_path_set(int n);

/// {x1, x4, ..., x_{3k-2}} for n = 3k.
VertexSet wide_spoke_set(int n);

struct PolyIdentityReport {
    std::string identity;
    IntPolynomial lhs;  // independence polynomial of the suspension
    IntPolynomial rhs;
    bool holds = false;
};

/// P_{G(C)} = P_G + x(1+x)^u, u = |V \ C|; requires V \ C independent.
PolyIdentityReport cover_poly_identity(const Graph& g, VertexSet cover);
/// P_{C_n(C)} = P_{C_n} + x(1+x)^{|C|-ℓ}(1+2x)^ℓ with ℓ = n - 2|C|.
PolyIdentityReport cycle_poly_identity(int n, VertexSet cover);
/// P_{P_n(C)} = P_{P_n} + x(1+x)^e(1+2x)^ℓ.
PolyIdentityReport path_poly_identity(int n, VertexSet cover);

/// The independent set D used to bound pdim from below for P_n(C).
struct PathPdimWitness {
    VertexSet d;
    bool independent = false;
    bool maximal_in_path = false;
    bool meets_cover = false;
    bool maximal_in_suspension = false;
    bool size_is_ceil_n_over_3 = false;
    bool valid() const {
        return independent && maximal_in_path && meets_cover && maximal_in_suspension && size_is_ceil_n_over_3;
    }
};
PathPdimWitness path_pdim_witness(int n, VertexSet cover);

enum class TheoremId {
    FullSuspension,
    CoverSuspension,
    AInvCover,
    WideSpokes,
    CycleSuspension,
    PathSuspension,
    InclusionInjectivity,
    CriticalHomology,
    ColonIdentity,
    EllBounds,
    MorseConsistency,
};

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(const std::string& name);
const std::vector<TheoremId>& all_theorems();

struct InstanceRecord {
    std::string id;        // deterministic, unique within a report
    std::string instance;  // graph, set, seed: enough to rebuild it
    std::string expected;
    std::string computed;
    bool holds = false;
    std::vector<std::pair<std::string, std::string>> tags;  // extra key/value facts

    std::string to_json() const;
    static InstanceRecord from_json(const std::string& line);
    friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::FullSuspension;
    std::vector<InstanceRecord> records;

    std::size_t failures() const;
    bool all_hold() const { return failures() == 0; }
    std::string to_json_lines(bool failures_only = false) const;
    std::string summary() const;
};

struct VerifyParams {
    int n_min = 0;  // 0,0 selects the theorem's default window
    int n_max = 0;
    int samples = 20;  // random graphs per n for n >= 6
    std::uint64_t seed = 1;
    Field field = Field::rational();
    int jobs = 1;
    int max_n = 12;  // refuse windows whose graphs exceed this order
};

/// Default n-window for a theorem when params leave it at 0..0.
std::pair<int, int> default_window(TheoremId id);

VerificationReport verify_theorem(TheoremId id, const VerifyParams& params);

/// Labelled graphs on n vertices: all of them for n <= 5, otherwise
/// `samples` seeded random ones. Optionally drops graphs with isolated vertices.
std::vector<Graph> graph_population(int n, int samples, std::uint64_t seed, bool skip_isolated);

}  // namespace edgeideal

#endif
