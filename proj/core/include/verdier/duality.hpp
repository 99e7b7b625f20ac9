#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verdier/simplicial.hpp"
#include "verdier/totalization.hpp"

namespace verdier {

/// Knobs shared by the deciders: coefficient ring, worker count, and the
/// scalability policy for the interval-vanishing check on large posets
/// (full below the bound; sampled above it when a sample is requested,
/// otherwise the Gorenstein checker carries the verdict and the vanishing
/// check is reported as skipped).
struct CheckOptions {
    Ring ring = Ring::integers();
    int jobs = 1;
    int full_check_bound = 40;
    std::optional<std::pair<int, unsigned long long>> sample; // (pairs, seed)
};

/// Outcome of one decider run. Witness rows are key/value maps; failures
/// always carry a reproducible witness, successes carry per-check summaries.
struct VerdictReport {
    std::string property;
    bool verdict = false;
    std::vector<std::map<std::string, std::string>> witnesses;
    long long timing_ms = 0;
    std::optional<unsigned long long> seed;
    bool consistent = true; // equivalence checks flip this on disagreement
};

/// The duality functor at the chain level: at(p) is the totalization of F
/// over chains with last element above p, and the transition maps are the
/// identity-on-common-slots support enlargements.
OpDiagram dualize(const Diagram& f);

/// Homology of Gamma(P; unit on [p, q]) -- the vanishing quantity of the
/// main equivalence.
HomologySummary interval_gamma_homology(const FinitePoset& p, int lo, int hi, Ring ring);

/// Verdier decider via interval vanishing: true iff Gamma(P; unit on [p,q])
/// is acyclic for every p < q.
VerdictReport is_verdier(const FinitePoset& p, const CheckOptions& opts = {});

/// Gorenstein* decider: every open interval of P with a bottom and top
/// adjoined has the homology of a sphere (S^{-1} = empty allowed).
VerdictReport is_gorenstein_star_poset(const FinitePoset& p, const CheckOptions& opts = {});

/// Verdier decider via the Gorenstein* condition on every P_{<p}.
VerdictReport is_verdier_via_gorenstein(const FinitePoset& p, const CheckOptions& opts = {});

/// Runs both deciders and flags any disagreement as an internal
/// inconsistency (report.consistent == false); the verdict is the common
/// value (the Gorenstein side when the vanishing side was skipped).
VerdictReport main_theorem_check(const FinitePoset& p, const CheckOptions& opts = {});

/// Checks is_gorenstein_star_poset(P) == is_verdier(P with a top adjoined).
VerdictReport cone_check(const FinitePoset& p, const CheckOptions& opts = {});

/// For Verdier P: the dual of the corepresented sheaf at p is a skyscraper
/// at p concentrated in degree -chain_length_to(p). PreconditionError when
/// P is not Verdier.
VerdictReport generator_image_check(const FinitePoset& p, const CheckOptions& opts = {});

/// For Verdier P: every P_{>p} and P_{<=p} is Verdier again.
VerdictReport hereditary_check(const FinitePoset& p, const CheckOptions& opts = {});

/// For Gorenstein* P and a diagram on P with bottom and top adjoined:
/// being a limit diagram and being a colimit diagram coincide.
VerdictReport limit_colimit_check(const FinitePoset& p, const Diagram& f,
                                  const CheckOptions& opts = {});

/// Full table of HomologySummary(Gamma(P; unit on [p,q])) over pairs
/// p <= q, including the diagonal.
std::map<std::pair<int, int>, HomologySummary> vanishing_table(
    const FinitePoset& p, const CheckOptions& opts = {});

} // namespace verdier
