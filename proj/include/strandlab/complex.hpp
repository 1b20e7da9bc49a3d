#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "strandlab/graph.hpp"

namespace strandlab {

/// A face is a sorted, duplicate-free list of 1-based vertices.
using Face = std::vector<Vertex>;

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept;
};

/// All faces of a complex grouped by dimension, lexicographic within each
/// dimension. Dimension d lives at index d + 1, so the empty face sits at 0.
class FacePoset {
public:
    FacePoset() = default;
    explicit FacePoset(std::vector<std::vector<Face>> by_dimension);

    /// -1 for the empty complex {∅}, -2 when there are no faces at all.
    int dimension() const { return static_cast<int>(levels_.size()) - 2; }
    /// Faces of the given dimension (empty span outside the range).
    std::span<const Face> faces(int dim) const;
    std::size_t count(int dim) const { return faces(dim).size(); }
    /// Position of f within faces(f.size() - 1), if f is a face.
    std::optional<std::size_t> index_of(const Face& f) const;
    bool contains(const Face& f) const { return index_of(f).has_value(); }
    std::size_t total() const;

private:
    std::vector<std::vector<Face>> levels_;
    std::vector<std::unordered_map<Face, std::size_t, FaceHash>> index_;
};

namespace detail {
struct PosetCache;
}

/// Simplicial complex on the ground set [n], stored by its facets.
///
/// Ground-set elements that lie in no face are allowed. The void complex
/// (no faces) and the empty complex {∅} are different values: the latter
/// has reduced homology in degree -1.
class SimplicialComplex {
public:
    /// The void complex on an empty ground set.
    SimplicialComplex();

    /// Deduplicates, drops non-maximal faces and sorts canonically (by size,
    /// then lexicographically). Throws std::invalid_argument on vertices
    /// outside 1..n.
    static SimplicialComplex from_facets(int n, std::vector<Face> facets);
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n);
    static SimplicialComplex full_simplex(int n);

    int ground_size() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_.front().empty(); }
    /// Largest facet size minus one; -1 for {∅} and -2 for the void complex.
    int dimension() const;

    /// True iff f is contained in some facet. f must be sorted.
    bool contains(const Face& f) const;

    /// Lazily computed, shared between copies of this value.
    const FacePoset& poset() const;

    /// f_0, f_1, ..., f_dim.
    std::vector<std::size_t> f_vector() const;

    /// Ground-set elements that are faces.
    std::vector<Vertex> vertices() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex(int n, std::vector<Face> canonical_facets);

    int n_ = 0;
    std::vector<Face> facets_;
    std::shared_ptr<detail::PosetCache> cache_;
};

/// Inclusion-maximal members of a family of sorted faces, canonically sorted.
std::vector<Face> maximal_faces(std::vector<Face> faces);

/// The complex on [n] whose minimal non-faces are the inclusion-minimal
/// members of `nonfaces`. An empty member makes the result void.
SimplicialComplex complex_from_nonfaces(int n, const std::vector<Face>& nonfaces);

/// Faces are the independent sets of g.
SimplicialComplex independence_complex(const Graph& g);

/// Induced subcomplex on w, reindexed to 1..|w| in increasing order of w.
SimplicialComplex induced(const SimplicialComplex& d, std::span<const Vertex> w);

/// Induced subcomplex on the ground set minus one vertex (reindexed).
SimplicialComplex delete_vertex(const SimplicialComplex& d, Vertex x);

/// Link of face f, on the same ground set. Throws if f is not a face.
SimplicialComplex link(const SimplicialComplex& d, const Face& f);

/// Join; the ground set of b is shifted past that of a.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Boundary of the d-simplex on d+1 vertices, a (d-1)-sphere. Requires d >= 1.
SimplicialComplex boundary_of_simplex(int d);

/// Vertices are the nonempty faces of d in canonical order (by dimension,
/// then lexicographic); faces are chains under inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& d);

/// Boundary of the (dim+1)-cross-polytope: dim+1 disjoint antipodal pairs,
/// faces contain at most one vertex of each pair. n defaults to the largest
/// vertex used.
SimplicialComplex octahedral_sphere(int dim, std::span<const std::pair<Vertex, Vertex>> pairs, int n = 0);

/// Complements of non-faces. The full simplex dualizes to the void complex
/// and vice versa.
SimplicialComplex alexander_dual(const SimplicialComplex& d);

/// Inclusion-minimal non-faces, sorted by size then lexicographically.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& d);

struct FlagCheck {
    bool flag = true;
    /// A minimal non-face with at least three vertices when not flag.
    std::optional<Face> witness;
};

FlagCheck is_flag(const SimplicialComplex& d);

Graph one_skeleton(const SimplicialComplex& d);

} // namespace strandlab
