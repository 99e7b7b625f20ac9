#pragma once

#include <map>
#include <vector>

#include "verdier/diagram.hpp"

namespace verdier {

/// One block of totalization basis slots: the poset chain, the internal
/// degree inside the value complex, and where the block sits in the
/// assembled complex.
struct SlotBlock {
    std::vector<int> chain; // strictly increasing element indices
    int internal_degree = 0;
    int offset = 0; // first basis column within the total degree
    int size = 0;
};

/// Chain-level model of a homotopy (co)limit: the assembled complex plus an
/// audit index mapping every basis slot back to (chain, internal degree).
class TotalizationComplex {
  public:
    TotalizationComplex() = default;
    TotalizationComplex(ChainComplex complex, std::map<int, std::vector<SlotBlock>> blocks)
        : complex_(std::move(complex)), blocks_(std::move(blocks)) {}

    const ChainComplex& complex() const { return complex_; }
    const std::map<int, std::vector<SlotBlock>>& blocks() const { return blocks_; }
    const std::vector<SlotBlock>& blocks_at(int degree) const;

    /// Locates the block of (chain, internal degree), or nullptr.
    const SlotBlock* find(const std::vector<int>& chain, int internal_degree) const;

  private:
    ChainComplex complex_;
    std::map<int, std::vector<SlotBlock>> blocks_;
    static const std::vector<SlotBlock> empty_;
};

/// Normalized cochain-direction totalization over nondegenerate chains:
/// slot (r0 < ... < rk, j) sits in total degree j - k, and the differential
/// into it combines the value's internal differential with
/// (-1)^j sum_i (-1)^i (delete r_i), the last deletion acting through the
/// edge map F(r_{k-1}) -> F(r_k). Quasi-isomorphism class: the derived limit.
TotalizationComplex holim(const Diagram& f);

/// holim of the extension by zero of F restricted to the support set: only
/// slots whose last element satisfies `last_allowed` are materialized.
/// Equals holim(extension_by_zero(restrict(f, S), base)) for cosieves S.
TotalizationComplex holim_supported(const Diagram& f, const std::vector<char>& last_allowed);

/// Simplicial-direction totalization: slot (r0 < ... < rk, j) holds F(r0) in
/// total degree j + k; face 0 acts through the edge map F(r0) -> F(r1).
/// Quasi-isomorphism class: the derived colimit.
TotalizationComplex hocolim(const Diagram& f);

/// Global sections: alias of holim, reported cohomologically by callers.
TotalizationComplex gamma(const FinitePoset& p, const Diagram& f);

/// Identity-on-matching-slots map between two totalizations of the same
/// direction; slots are matched by chain element names and internal degree.
DegreeMaps slot_transfer(const TotalizationComplex& src, const FinitePoset& src_base,
                         const TotalizationComplex& dst, const FinitePoset& dst_base);

/// The map induced on holim/hocolim totalizations by a pointwise diagram
/// map, applied slotwise.
ChainMap induced_holim_map(const DiagramMap& eta, const TotalizationComplex& tot_src,
                           const TotalizationComplex& tot_dst);

/// Canonical cone comparison for a diagram whose base has a least element:
/// F(least) -> holim(F restricted away from it), composite edge maps into the
/// k = 0 slots and zero above.
ChainMap cone_comparison_limit(const Diagram& f);

/// Dual comparison for a greatest element: hocolim(F off the top) -> F(top).
ChainMap cone_comparison_colimit(const Diagram& f);

bool is_limit_diagram(const Diagram& f);
bool is_colimit_diagram(const Diagram& f);

} // namespace verdier
