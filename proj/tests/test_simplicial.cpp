#include "doctest.h"

#include "verdier/corpus.hpp"
#include "verdier/simplicial.hpp"

using namespace verdier;

namespace {

const Ring Z = Ring::integers();

SimplicialComplex full_simplex(int n) {
    std::vector<std::string> facet;
    for (int i = 0; i <= n; ++i)
        facet.push_back(std::to_string(i));
    return SimplicialComplex::from_facets({facet});
}

SimplicialComplex boundary_simplex(int n) {
    std::vector<std::vector<std::string>> facets;
    for (int omit = n; omit >= 0; --omit) {
        std::vector<std::string> facet;
        for (int v = 0; v <= n; ++v)
            if (v != omit)
                facet.push_back(std::to_string(v));
        facets.push_back(facet);
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex rp2_6() {
    std::vector<std::vector<std::string>> facets;
    for (const auto& t : {std::vector<int>{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6},
                          {1, 5, 6}, {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5},
                          {3, 4, 6}}) {
        std::vector<std::string> f;
        for (int v : t)
            f.push_back(std::to_string(v));
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

HomologySummary hs(std::vector<std::pair<int, HomologySummary::Group>> groups) {
    HomologySummary out;
    for (auto& [d, g] : groups)
        out.set(d, g);
    return out;
}

} // namespace

TEST_CASE("order complexes of the basic posets") {
    // a chain gives the full simplex on its elements
    const SimplicialComplex k = order_complex(chain_poset(3));
    CHECK(k.dimension() == 2);
    CHECK(k.face_count() == 7);

    const SimplicialComplex two = order_complex(antichain(2));
    CHECK(two.dimension() == 0);
    CHECK(two.face_count() == 2);

    const FinitePoset p = example_nonregular();
    const SimplicialComplex path =
        order_complex(p.induced_ids({"0", "1", "1'"}));
    CHECK(path.dimension() == 1);
    CHECK(path.faces_of_dim(1).size() == 2); // the edges {0,1} and {0,1'}
}

TEST_CASE("links") {
    const SimplicialComplex full = full_simplex(2);
    const SimplicialComplex lk = full.link({0});
    CHECK(lk.dimension() == 1);
    CHECK(lk.face_count() == 3); // an edge with its two vertices

    const SimplicialComplex hollow = boundary_simplex(2);
    const SimplicialComplex s0 = hollow.link({0});
    CHECK(s0.dimension() == 0);
    CHECK(s0.face_count() == 2);

    CHECK(hollow.link({}).face_count() == hollow.face_count());
    CHECK_THROWS_AS(full.link({0, 5}), Error);
    CHECK_THROWS_AS(boundary_simplex(2).link({0, 1, 2}), NotAFaceError);
}

TEST_CASE("reduced homology in low dimensions") {
    const SimplicialComplex empty;
    CHECK(reduced_homology(empty, Z) == hs({{-1, {1, {}}}}));

    const SimplicialComplex pt = full_simplex(0);
    CHECK(reduced_homology(pt, Z).is_zero());

    CHECK(reduced_homology(boundary_simplex(2), Z) == hs({{1, {1, {}}}}));
    CHECK(reduced_homology(rp2_6(), Z) == hs({{1, {0, {2}}}}));
}

TEST_CASE("sphere detection") {
    CHECK(is_sphere_homology(SimplicialComplex(), Z) == std::optional<int>(-1));
    CHECK_FALSE(is_sphere_homology(full_simplex(0), Z).has_value());
    CHECK(is_sphere_homology(boundary_simplex(2), Z) == std::optional<int>(1));
    CHECK(is_sphere_homology(boundary_simplex(3), Z) == std::optional<int>(2));
    CHECK_FALSE(is_sphere_homology(rp2_6(), Z).has_value());
}

TEST_CASE("Gorenstein* complexes") {
    CHECK(is_gorenstein_star_complex(SimplicialComplex(), Z));
    CHECK(is_gorenstein_star_complex(boundary_simplex(2), Z));
    CHECK(is_gorenstein_star_complex(boundary_simplex(3), Z));
    CHECK_FALSE(is_gorenstein_star_complex(full_simplex(2), Z));
    CHECK_FALSE(is_gorenstein_star_complex(rp2_6(), Z));
    CHECK_FALSE(is_gorenstein_star_complex(rp2_6(), Ring::prime_field(2)));
    CHECK_FALSE(is_gorenstein_star_complex(rp2_6(), Ring::prime_field(3)));
}

TEST_CASE("links of faces of a Gorenstein* complex stay Gorenstein*") {
    const SimplicialComplex k = boundary_simplex(3);
    for (const auto& f : k.faces())
        CHECK(is_gorenstein_star_complex(k.link(f), Z));
}

TEST_CASE("boundary matrices and the augmentation") {
    const ChainComplex pt = full_simplex(0).boundary_matrices(Z);
    CHECK(pt.lowest() == -1);
    CHECK(pt.rank(-1) == 1);
    CHECK(pt.rank(0) == 1);
    CHECK(homology(pt).is_zero());

    const ChainComplex edge = SimplicialComplex::from_facets({{"a", "b"}})
                                  .boundary_matrices(Z);
    CHECK(edge.rank(1) == 1);
    CHECK(edge.rank(0) == 2);
    CHECK(edge.rank(-1) == 1);
    CHECK(homology(edge).is_zero());

    // the hollow triangle's d1 is the incidence matrix of a 3-cycle
    const ChainComplex tri = boundary_simplex(2).boundary_matrices(Z);
    const IntMatrix d1 = tri.differential(1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    long long colsum = 0;
    d1.for_each_nonzero([&](int, int, long long v) { colsum += v; });
    CHECK(colsum == 0); // each edge contributes +1 and -1
}

TEST_CASE("Euler characteristic from faces equals the homological one") {
    for (const SimplicialComplex& k :
         {boundary_simplex(2), boundary_simplex(3), rp2_6(), full_simplex(3)}) {
        long long chi_hom = 1; // unreduced: add back the augmentation
        const HomologySummary h = reduced_homology(k, Z);
        for (const auto& [d, g] : h.groups())
            if (d >= 0)
                chi_hom += (d % 2 == 0 ? 1 : -1) * g.free;
            else
                chi_hom -= g.free; // empty complex convention
        CHECK(k.euler_characteristic() == chi_hom);
    }
}

TEST_CASE("face posets") {
    const FinitePoset p = face_poset(boundary_simplex(2));
    CHECK(p.size() == 6);
    CHECK(p.covers().size() == 6);
    const FinitePoset q = boundary_simplex_poset(2);
    CHECK(q.elements() == p.elements());
}
