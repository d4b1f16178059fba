#ifndef EDGEIDEAL_MORSE_HPP
#define EDGEIDEAL_MORSE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "edgeideal/complex.hpp"

namespace edgeideal {

/// A matched Hasse-diagram edge: `lower` is `upper` minus one vertex.
/// The empty face takes part, so a vertex may be matched with ∅.
struct FacePair {
    Mask lower = 0;
    Mask upper = 0;
    friend bool operator==(const FacePair&, const FacePair&) = default;
};

/// Matching on the face poset of a particular complex. Construction checks
/// the structural conditions (faces exist, codimension one, each face used
/// at most once); acyclicity is a separate question.
class MorseMatching {
public:
    MorseMatching() = default;
    MorseMatching(const SimplicialComplex& complex, std::vector<FacePair> pairs);

    const std::vector<FacePair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    /// Partner of a face, if matched.
    std::optional<Mask> partner(Mask face) const;
    bool is_critical(Mask face) const { return !partner(face).has_value(); }

    /// Unmatched faces of `complex`, by dimension then lexicographic.
    std::vector<Mask> critical_faces(const SimplicialComplex& complex) const;
    /// Critical counts for dimensions -1 .. complex.dimension().
    std::vector<std::size_t> critical_counts(const SimplicialComplex& complex) const;

    /// [[["x1"],["x1","x2"]], ...]
    std::string to_json(const SimplicialComplex& complex) const;
    static MorseMatching from_json(const SimplicialComplex& complex, const std::string& text);

private:
    std::vector<FacePair> pairs_;
    std::unordered_map<Mask, Mask> partner_;
};

/// True iff the modified Hasse diagram (matched edges down, the rest up)
/// has no directed cycle. Checked one dimension layer at a time.
bool verify_acyclic_matching(const SimplicialComplex& complex, const MorseMatching& matching);

/// Pairs with both faces in `sub`. Throws Precondition if `sub` is not a subcomplex.
MorseMatching restrict_matching(const SimplicialComplex& complex, const MorseMatching& matching,
                                const SimplicialComplex& sub);

/// Greedy: scan candidate pairs (lexicographic, or shuffled by `seed`) and
/// keep each one whose addition leaves the matching acyclic.
MorseMatching greedy_acyclic_matching(const SimplicialComplex& complex, std::optional<std::uint64_t> seed = std::nullopt,
                                      const Limits& limits = {});

struct MorseInequalityRow {
    int dim = 0;
    std::size_t critical = 0;
    std::uint64_t homology = 0;
    std::int64_t slack = 0;  // critical - homology
};

struct MorseInequalityReport {
    std::vector<MorseInequalityRow> rows;  // dims -1 .. dimension
    bool holds() const;
};

/// Throws Precondition when the matching is not acyclic.
MorseInequalityReport morse_inequality_report(const SimplicialComplex& complex, const MorseMatching& matching,
                                              Field field = Field::rational());

/// Chain complex on critical cells with boundary from signed gradient-path
/// counts; its homology is the reduced homology of the complex.
HomologyProfile morse_complex_homology(const SimplicialComplex& complex, const MorseMatching& matching,
                                       Field field = Field::rational(), std::size_t max_critical = 4096);

}  // namespace edgeideal

#endif
