#ifndef EDGEIDEAL_BETTI_HPP
#define EDGEIDEAL_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "edgeideal/common.hpp"
#include "edgeideal/complex.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

/// Graded Betti numbers β_{i,j}(R/I) of a quotient of a polynomial ring in
/// `variables` variables. Only nonzero entries are stored.
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(int variables, Field field) : variables_(variables), field_(field) {}

    int variables() const { return variables_; }
    Field field() const { return field_; }

    std::uint64_t get(int i, int j) const;
    void set(int i, int j, std::uint64_t value);
    void add(int i, int j, std::uint64_t value);

    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

    /// Max i with a nonzero entry.
    int pdim() const;
    /// Max j - i over nonzero entries.
    int reg() const;

    /// [{"i":..,"j":..,"beta":..}, ...] in (i, j) order.
    std::string to_json() const;
    static BettiTable from_json(const std::string& text, int variables, Field field);
    /// Macaulay2-style display: columns are i, rows are j - i.
    std::string to_text() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b) {
        return a.variables_ == b.variables_ && a.entries_ == b.entries_;
    }

private:
    int variables_ = 0;
    Field field_;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

struct HochsterOptions {
    Field field = Field::rational();
    Limits limits{};
    /// Worker threads for the subset loop; results do not depend on it.
    int jobs = 1;
};

/// Reduced homology of Δ(G|_W) for every W ⊆ V, indexed by mask.
std::vector<HomologyProfile> induced_homology_profiles(const Graph& g, const HochsterOptions& options = {});

/// β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ(G)|_W).
BettiTable hochster_betti_table(const Graph& g, const HochsterOptions& options = {});

struct HomologicalInvariants {
    int reg = 0;
    int pdim = 0;
    friend bool operator==(const HomologicalInvariants&, const HomologicalInvariants&) = default;
};

/// reg and pdim straight from the nonvanishing pattern, without the table.
HomologicalInvariants homological_invariants(const Graph& g, const HochsterOptions& options = {});

struct BightReport {
    int pdim = 0;
    int bight = 0;
    bool holds = false;
};
BightReport check_bight_bound(const Graph& g, const HochsterOptions& options = {});

/// Table of the full suspension predicted from the table of G.
BettiTable full_suspension_betti_predict(const BettiTable& base);
BettiTable full_suspension_betti_predict(const Graph& g, const HochsterOptions& options = {});

struct AdditivityReport {
    int lhs = 0;  // reg of the disjoint union
    int rhs = 0;  // sum of the parts
    bool holds = false;
};
AdditivityReport check_reg_additivity(const Graph& g1, const Graph& g2, const HochsterOptions& options = {});

}  // namespace edgeideal

#endif
