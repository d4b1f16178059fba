#ifndef EDGEIDEAL_COMPLEX_HPP
#define EDGEIDEAL_COMPLEX_HPP

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "edgeideal/common.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/linalg.hpp"

namespace edgeideal {

/// Lexicographic order on faces of equal size, comparing sorted vertex
/// index lists: the set holding the smallest element of the symmetric
/// difference comes first.
inline bool lex_less(Mask a, Mask b) {
    const Mask diff = a ^ b;
    return diff != 0 && (a & (diff & -diff)) != 0;
}

/// Downward-closed family of subsets of a labelled ground set, stored by
/// facets. All faces are materialized at construction, bucketed by
/// dimension (-1 for the empty face) in lexicographic order.
///
/// The void complex has no faces at all; every other complex contains the
/// empty face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Non-maximal entries of `facets` are dropped.
    static SimplicialComplex from_facets(std::vector<std::string> ground, std::vector<Mask> facets,
                                         const Limits& limits = {});
    static SimplicialComplex void_complex(std::vector<std::string> ground);
    /// Full simplex on the ground set.
    static SimplicialComplex simplex(std::vector<std::string> ground, const Limits& limits = {});

    const std::vector<std::string>& ground() const { return ground_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    const std::vector<Mask>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool contains(Mask face) const { return index_.count(face) != 0; }
    /// Top face dimension; -2 for the void complex.
    int dimension() const { return static_cast<int>(faces_.size()) - 2; }

    /// Faces of dimension d (d >= -1), lexicographic.
    const std::vector<Mask>& faces(int d) const;
    std::size_t face_count() const { return index_.size(); }
    /// Position of a face within faces(dim); -1 if absent.
    int position(Mask face) const;
    /// f_d counts for d = -1 .. dimension().
    std::vector<std::size_t> f_vector() const;

    /// True when every face of this complex is a face of `other` (same ground).
    bool is_subcomplex_of(const SimplicialComplex& other) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.ground_ == b.ground_ && a.facets_ == b.facets_;
    }

private:
    std::vector<std::string> ground_;
    std::vector<Mask> facets_;
    std::vector<std::vector<Mask>> faces_;  // faces_[d + 1]
    std::unordered_map<Mask, int> index_;
};

/// Faces are the independent sets of g.
SimplicialComplex independence_complex(const Graph& g, const Limits& limits = {});

/// Faces of `complex` inside `w`, on the same ground set.
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VertexSet w);

/// Faces F1 ∪ F2; the ground of `second` follows that of `first`.
SimplicialComplex join(const SimplicialComplex& first, const SimplicialComplex& second);

/// join(point apex, complex), apex appended last.
SimplicialComplex cone(const SimplicialComplex& complex, const std::string& apex);

/// Same complex over a larger ground: `extra` labels are appended.
SimplicialComplex extend_ground(const SimplicialComplex& complex, const std::vector<std::string>& extra);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Reduced homology dimensions over a field.
struct HomologyProfile {
    Field field;
    std::vector<std::uint64_t> dims;  // dims[r + 1] = dim H̃_r, r >= -1

    std::uint64_t dim(int r) const {
        const auto i = static_cast<std::size_t>(r + 1);
        return r >= -1 && i < dims.size() ? dims[i] : 0;
    }
    bool is_zero() const;
    /// Largest r with nonzero H̃_r; -2 when all vanish.
    int top_nonzero() const;
    std::string to_string() const;

    friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

/// ∂_d : C_d -> C_{d-1} for d >= 0, with C_{-1} spanned by the empty face.
/// Removing the i-th smallest vertex (0-based) carries sign (-1)^i.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int d);

/// Incidence sign [upper : lower] for lower = upper minus one vertex.
int incidence(Mask upper, Mask lower);

HomologyProfile reduced_homology(const SimplicialComplex& complex, Field field = Field::rational(),
                                 const Limits& limits = {});

/// Rank of H̃_r(sub) -> H̃_r(complex) induced by inclusion.
std::size_t induced_homology_map_rank(const SimplicialComplex& complex, const SimplicialComplex& sub, int r,
                                      Field field = Field::rational());

/// One facet per line, labels separated by spaces.
std::string to_facet_list(const SimplicialComplex& complex);
/// Ground is the set of labels seen, in order of first appearance.
SimplicialComplex parse_facet_list(const std::string& text);

std::string format_face(const SimplicialComplex& complex, Mask face);

}  // namespace edgeideal

#endif
