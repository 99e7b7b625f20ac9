#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verdier/diagram.hpp"
#include "verdier/simplicial.hpp"

namespace verdier {

FinitePoset antichain(int n);
FinitePoset chain_poset(int n);

/// Face poset of the boundary of the n-simplex: all proper nonempty subsets
/// of {0..n} ordered by inclusion.
FinitePoset boundary_simplex_poset(int n);

/// Face poset of the n-gon: n vertices, n edges, each edge above its two
/// endpoints.
FinitePoset polygon_poset(int n);

/// The four-element poset generated by 0 <= 1 <= 2 and 0 <= 1' <= 2.
FinitePoset example_nonregular();

/// P plus two new incomparable maximal elements above everything.
FinitePoset suspension_poset(const FinitePoset& p);

/// Deterministic random posets: arbitrary (index-increasing random DAG) and
/// graded (random covers between consecutive levels).
FinitePoset random_poset(unsigned long long seed, int size);
FinitePoset random_graded_poset(unsigned long long seed, int size);

/// Deterministic random diagram: a finite direct sum of shifted interval
/// units, strictly functorial by construction.
Diagram random_interval_diagram(unsigned long long seed, const FinitePoset& p, Ring ring);

/// All labeled posets on n elements (every reflexive antisymmetric
/// transitive relation), without isomorphism reduction. Practical for n <= 5.
std::vector<FinitePoset> all_posets(int n);

/// Directory holding the vendored data files; the compiled-in source path
/// unless VERDIER_DATA_DIR is set in the environment.
std::string default_data_dir();

/// Loads the bundled 16-vertex, 90-facet triangulation of the Poincare
/// homology 3-sphere. Verifies the manifest checksum, the f-vector
/// (16, 106, 180, 90) and pseudomanifoldness; DataIntegrityError otherwise.
SimplicialComplex poincare_sphere_complex(const std::string& data_dir = default_data_dir());

struct CorpusEntry {
    std::string name;
    FinitePoset poset;
    std::optional<bool> expect_verdier;
    std::optional<bool> expect_gorenstein;
    std::string provenance; // literature | derived | elementary
    std::string note;
};

/// The named test corpus with expected verdicts. The Poincare face poset is
/// appended when `include_poincare` is set (it needs the data directory).
std::vector<CorpusEntry> corpus_entries(bool include_poincare = false,
                                        const std::string& data_dir = default_data_dir());

} // namespace verdier
