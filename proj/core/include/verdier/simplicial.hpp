#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "verdier/chain_complex.hpp"
#include "verdier/poset.hpp"

namespace verdier {

/// Finite abstract simplicial complex, closed under nonempty subsets.
/// Faces are stored as sorted vertex-index vectors.
class SimplicialComplex {
  public:
    SimplicialComplex() = default; // the empty complex, dimension -1

    static SimplicialComplex from_facets(
        const std::vector<std::vector<std::string>>& facets);
    static SimplicialComplex from_index_faces(std::vector<std::string> vertices,
                                              std::set<std::vector<int>> faces);

    const std::vector<std::string>& vertices() const { return verts_; }
    const std::set<std::vector<int>>& faces() const { return faces_; }
    int dimension() const; // -1 for the empty complex
    long long face_count() const { return static_cast<long long>(faces_.size()); }
    std::vector<std::vector<int>> faces_of_dim(int k) const;
    bool has_face(const std::vector<int>& face) const;

    /// link(K, s) = { t : t disjoint from s, t u s a face }; the empty face
    /// returns K itself.
    SimplicialComplex link(const std::vector<int>& face) const;

    /// Augmented simplicial chain complex; degree -1 carries the
    /// augmentation, so homology of the result is reduced homology.
    ChainComplex boundary_matrices(Ring ring) const;

    long long euler_characteristic() const;

  private:
    std::vector<std::string> verts_;
    std::set<std::vector<int>> faces_;
};

SimplicialComplex order_complex(const FinitePoset& p);

HomologySummary reduced_homology(const SimplicialComplex& k, Ring ring);

/// True iff the reduced homology is the ring concentrated in one degree
/// d >= -1; returns that d. The empty complex is the (-1)-sphere.
std::optional<int> is_sphere_homology(const SimplicialComplex& k, Ring ring);

/// Generalized-homology-sphere test: the complex has the reduced homology of
/// S^dim and the link of every nonempty face s has that of S^(dim - |s|).
bool is_gorenstein_star_complex(const SimplicialComplex& k, Ring ring);

/// Poset of nonempty faces ordered by inclusion; element names join vertex
/// names with commas.
FinitePoset face_poset(const SimplicialComplex& k);

} // namespace verdier
