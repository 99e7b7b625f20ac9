#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "verdier/chain_complex.hpp"
#include "verdier/poset.hpp"

namespace verdier {

/// Degreewise matrices of a map between chain complexes; absent degrees are
/// zero. Source/target shapes live with the owning diagram.
using DegreeMaps = std::map<int, IntMatrix>;

DegreeMaps degree_maps_identity(const ChainComplex& c);

/// Degreewise product g o f; degrees absent on either side are zero.
DegreeMaps degree_maps_compose(const DegreeMaps& g, const DegreeMaps& f);

struct DiagramReport {
    bool ok = true;
    std::string message;
};

/// Strict functor from a finite poset to chain complexes: one complex per
/// element, one chain map per Hasse edge, with composites along any two
/// cover paths agreeing on the nose.
class Diagram {
  public:
    Diagram(FinitePoset base, std::vector<ChainComplex> at,
            std::map<std::pair<int, int>, DegreeMaps> edges);

    const FinitePoset& base() const { return base_; }
    const ChainComplex& at(int p) const { return at_.at(p); }
    Ring ring() const { return ring_; }

    /// Map along the cover p -> q (zero when not stored).
    DegreeMaps edge(int p, int q) const;

    /// Composite along any cover path from p to q (p <= q); identity when
    /// p == q. Well defined for valid diagrams.
    DegreeMaps composite(int p, int q) const;

    /// Chain-map condition on every edge plus full path independence
    /// (checked for every comparable pair, which subsumes the minimal
    /// diamonds).
    DiagramReport validate() const;

  private:
    FinitePoset base_;
    std::vector<ChainComplex> at_;
    std::map<std::pair<int, int>, DegreeMaps> edges_;
    Ring ring_;
};

/// Same data with edge maps running against the order: the map attached to a
/// cover p -> q goes from at(q) to at(p).
class OpDiagram {
  public:
    OpDiagram(FinitePoset base, std::vector<ChainComplex> at,
              std::map<std::pair<int, int>, DegreeMaps> edges);

    const FinitePoset& base() const { return base_; }
    const ChainComplex& at(int p) const { return at_.at(p); }
    Ring ring() const { return ring_; }
    DegreeMaps edge(int p, int q) const;
    DegreeMaps composite(int q, int p) const; // q >= p, maps at(q) -> at(p)
    DiagramReport validate() const;

  private:
    FinitePoset base_;
    std::vector<ChainComplex> at_;
    std::map<std::pair<int, int>, DegreeMaps> edges_;
    Ring ring_;
};

Diagram constant_diagram(const FinitePoset& p, const ChainComplex& c);

/// E on the closed interval [p, q], zero elsewhere, identity edges inside.
/// The default value is the ring in degree 0.
Diagram interval_unit(const FinitePoset& poset, int p, int q, const ChainComplex& value);
Diagram interval_unit(const FinitePoset& poset, int p, int q, Ring ring);

/// E on the sieve P_{<=p}, zero elsewhere.
Diagram corep_sheaf(const FinitePoset& poset, int p, const ChainComplex& value);

/// Restriction to a full subposet (values kept, edges composed along
/// ambient cover paths).
Diagram restrict(const Diagram& f, const std::vector<int>& subset);

/// Zero-fill a diagram on an interval-closed full subposet of `into`;
/// matching is by element name.
Diagram extension_by_zero(const Diagram& f, const FinitePoset& into);

/// Pointwise Kan extensions along a full subposet inclusion (by element
/// name): left at r is hocolim over Q_{<=r}, right at r is holim over
/// Q_{>=r}; edge maps are induced by index-poset inclusions/projections.
Diagram left_kan(const Diagram& f, const FinitePoset& into);
Diagram right_kan(const Diagram& f, const FinitePoset& into);

Diagram diagram_direct_sum(const std::vector<Diagram>& fs);
Diagram shift_diagram(const Diagram& f, int k);

/// Pointwise chain maps F(p) -> G(p) commuting with both edge systems.
class DiagramMap {
  public:
    DiagramMap(const Diagram& source, const Diagram& target,
               std::vector<DegreeMaps> components, bool validate = true);

    const Diagram& source() const { return src_; }
    const Diagram& target() const { return dst_; }
    const DegreeMaps& component(int p) const { return comp_.at(p); }

  private:
    Diagram src_;
    Diagram dst_;
    std::vector<DegreeMaps> comp_;
};

} // namespace verdier
