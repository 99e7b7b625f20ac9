#include "doctest.h"

#include <random>

#include "verdier/chain_complex.hpp"

using namespace verdier;

namespace {

HomologySummary hs(std::vector<std::pair<int, HomologySummary::Group>> groups) {
    HomologySummary out;
    for (auto& [d, g] : groups)
        out.set(d, g);
    return out;
}

// unreduced chains of the hollow triangle: three vertices, three edges
ChainComplex hollow_triangle_unreduced(Ring ring) {
    IntMatrix d1 = IntMatrix::from_rows({
        {-1, -1, 0},
        {1, 0, -1},
        {0, 1, 1},
    });
    return ChainComplex(ring, 0, {3, 3}, {{1, d1}});
}

// minimal 6-vertex triangulation of the real projective plane
ChainComplex rp2_chains(Ring ring);

std::vector<std::vector<int>> rp2_facets() {
    return {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
            {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
}

ChainComplex rp2_chains(Ring ring) {
    // build boundary matrices by hand from the facet list (unreduced)
    std::map<std::vector<int>, int> vid, eid, tid;
    for (int v = 1; v <= 6; ++v)
        vid[{v}] = static_cast<int>(vid.size());
    for (const auto& t : rp2_facets()) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::vector<int> e = {t[i], t[j]};
                if (!eid.count(e))
                    eid[e] = static_cast<int>(eid.size());
            }
        tid[t] = static_cast<int>(tid.size());
    }
    std::vector<Triplet> d1, d2;
    for (const auto& [e, j] : eid) {
        d1.push_back({vid.at({e[0]}), j, -1});
        d1.push_back({vid.at({e[1]}), j, 1});
    }
    for (const auto& [t, j] : tid) {
        d2.push_back({eid.at({t[1], t[2]}), j, 1});
        d2.push_back({eid.at({t[0], t[2]}), j, -1});
        d2.push_back({eid.at({t[0], t[1]}), j, 1});
    }
    return ChainComplex(ring, 0, {6, 15, 10},
                        {{1, IntMatrix::from_triplets(6, 15, d1)},
                         {2, IntMatrix::from_triplets(15, 10, d2)}});
}

ChainComplex random_complex(std::mt19937_64& rng) {
    // random direct sum of elementary pieces: shifts of (Z -a-> Z) and
    // skyscrapers; homology is known by construction
    std::vector<ChainComplex> parts;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) {
        const int deg = static_cast<int>(rng() % 5) - 2;
        if (rng() % 2 == 0) {
            parts.push_back(ChainComplex::concentrated(Ring::integers(), deg,
                                                       1 + static_cast<int>(rng() % 2)));
        } else {
            const long long a = static_cast<long long>(rng() % 5);
            parts.push_back(ChainComplex(
                Ring::integers(), deg, {1, 1},
                {{deg + 1, IntMatrix::from_rows({{a}})}}));
        }
    }
    return direct_sum(parts);
}

} // namespace

TEST_CASE("construction rejects d o d != 0") {
    IntMatrix d1 = IntMatrix::from_rows({{1}});
    IntMatrix d2 = IntMatrix::from_rows({{1}});
    CHECK_THROWS(ChainComplex(Ring::integers(), 0, {1, 1, 1}, {{1, d1}, {2, d2}}));
}

TEST_CASE("homology of a point and of multiplication by two") {
    ChainComplex pt = ChainComplex::concentrated(Ring::integers(), 0, 1);
    CHECK(homology(pt) == hs({{0, {1, {}}}}));

    ChainComplex times2(Ring::integers(), 0, {1, 1},
                        {{1, IntMatrix::from_rows({{2}})}});
    CHECK(homology(times2) == hs({{0, {0, {2}}}}));
}

TEST_CASE("homology of the hollow triangle, unreduced") {
    CHECK(homology(hollow_triangle_unreduced(Ring::integers())) ==
          hs({{0, {1, {}}}, {1, {1, {}}}}));
}

TEST_CASE("projective plane: integral torsion and universal coefficients") {
    const HomologySummary h = homology(rp2_chains(Ring::integers()));
    CHECK(h == hs({{0, {1, {}}}, {1, {0, {2}}}}));
    // over F2 the dimensions become 1, 1, 1
    const HomologySummary h2 = homology(rp2_chains(Ring::prime_field(2)));
    CHECK(h2 == hs({{0, {1, {}}}, {1, {1, {}}}, {2, {1, {}}}}));
}

TEST_CASE("shift moves homology and squares to the identity sign-wise") {
    const ChainComplex c = rp2_chains(Ring::integers());
    CHECK(shift(c, 0) == c);
    for (int k : {-2, 1, 3})
        CHECK(homology(shift(c, k)) == homology(c).shifted(k));
    CHECK(shift(shift(c, 1), -1) == c);
    ChainComplex pt = ChainComplex::concentrated(Ring::integers(), 0, 1);
    CHECK(shift(pt, -2).lowest() == -2);
}

TEST_CASE("mapping cone of the identity is acyclic") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const ChainComplex c = random_complex(rng);
        CHECK(homology(mapping_cone(ChainMap::identity(c))).is_zero());
        CHECK(is_quasi_iso(ChainMap::identity(c)));
    }
}

TEST_CASE("mapping cone of the zero map splits") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 30; ++i) {
        const ChainComplex c = random_complex(rng);
        const ChainComplex d = random_complex(rng);
        const ChainComplex cone = mapping_cone(ChainMap::zero(c, d));
        CHECK(homology(cone) == homology(d) + homology(c).shifted(1));
    }
}

TEST_CASE("cone of multiplication by two is Z/2") {
    ChainComplex z = ChainComplex::concentrated(Ring::integers(), 0, 1);
    ChainMap f(z, z, {{0, IntMatrix::from_rows({{2}})}});
    CHECK(homology(mapping_cone(f)) == hs({{0, {0, {2}}}}));
    CHECK_FALSE(is_quasi_iso(f));
}

TEST_CASE("zero map between acyclic complexes is a quasi-isomorphism") {
    ChainComplex acyclic(Ring::integers(), 0, {1, 1},
                         {{1, IntMatrix::from_rows({{1}})}});
    CHECK(is_quasi_iso(ChainMap::zero(acyclic, acyclic)));
}

TEST_CASE("direct sums add homology degreewise") {
    CHECK(direct_sum({}).is_zero());
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        const ChainComplex c = random_complex(rng);
        const ChainComplex d = random_complex(rng);
        CHECK(homology(direct_sum({c, d})) == homology(c) + homology(d));
        CHECK(homology(direct_sum({c, ChainComplex::zero(Ring::integers())})) ==
              homology(c));
    }
    CHECK_THROWS_AS(direct_sum({ChainComplex::concentrated(Ring::integers(), 0, 1),
                                ChainComplex::concentrated(Ring::prime_field(2), 0, 1)}),
                    RingMismatchError);
}

TEST_CASE("chain maps must commute with the differentials") {
    ChainComplex times2(Ring::integers(), 0, {1, 1},
                        {{1, IntMatrix::from_rows({{2}})}});
    ChainComplex id1(Ring::integers(), 0, {1, 1},
                     {{1, IntMatrix::from_rows({{1}})}});
    CHECK_THROWS_AS(ChainMap(times2, id1,
                             {{0, IntMatrix::identity(1)}, {1, IntMatrix::identity(1)}}),
                    ValidationError);
}
