#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "verdier/errors.hpp"

namespace verdier {

/// A finite poset: ordered element list, the full order relation as a dense
/// boolean matrix, and its Hasse diagram (transitive reduction). Immutable
/// after construction; every derived order (pairs, chains, subposets) is
/// deterministic in the element-list order.
class FinitePoset {
  public:
    FinitePoset() = default; // empty poset

    /// Builds the poset from generating cover edges: leq is the
    /// reflexive-transitive closure, covers are re-derived as the transitive
    /// reduction (redundant input edges dropped).
    static FinitePoset from_covers(
        std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& covers);

    int size() const { return static_cast<int>(elems_.size()); }
    const std::vector<std::string>& elements() const { return elems_; }
    const std::string& element(int i) const { return elems_.at(i); }
    int index_of(const std::string& id) const;
    bool contains(const std::string& id) const { return index_.count(id) > 0; }

    bool leq(int p, int q) const { return leq_[p][q]; }
    bool lt(int p, int q) const { return p != q && leq_[p][q]; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    FinitePoset opposite() const;
    FinitePoset induced(std::vector<int> subset) const;
    FinitePoset induced_ids(const std::vector<std::string>& subset) const;
    FinitePoset add_bottom() const;
    FinitePoset add_top() const;

    std::optional<int> least_element() const;
    std::optional<int> greatest_element() const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    std::vector<int> down_set(int p) const;      // P_{<=p}
    std::vector<int> strict_down(int p) const;   // P_{<p}
    std::vector<int> up_set(int p) const;        // P_{>=p}
    std::vector<int> strict_up(int p) const;     // P_{>p}
    std::vector<int> open_interval(int p, int q) const;
    std::vector<int> closed_interval(int p, int q) const;

    /// All (p, q) with p < q, ordered by index pairs.
    std::vector<std::pair<int, int>> comparable_pairs() const;

    /// Every nonempty strictly increasing chain, grouped by length and
    /// lexicographic in the element-list order. When `last_in` is given only
    /// chains whose last element satisfies it are produced.
    std::vector<std::vector<int>> strict_chains() const;
    std::vector<std::vector<int>> chains_with_last_in(const std::vector<char>& allowed) const;
    std::vector<std::vector<int>> chains_with_first_in(const std::vector<char>& allowed) const;

    /// Indices in some linear extension of the order.
    std::vector<int> linear_extension() const;

    /// Rank function normalized to 0 on the minima of every connected
    /// component of the Hasse diagram, or nothing when none exists.
    std::optional<std::vector<int>> rank_function() const;

    /// Common length of all maximal chains of P_{<=p}; NotGradedError when
    /// they disagree.
    int chain_length_to(int p) const;

  private:
    std::vector<std::string> elems_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<int, int>> covers_;

    static FinitePoset from_relation(std::vector<std::string> elems,
                                     std::vector<std::vector<bool>> leq);
    std::string fresh_name(const std::string& base) const;
    friend class PosetBuilder;
};

/// Direct constructor from an already transitively closed relation, used by
/// the exhaustive enumerator. Validates nothing beyond shape.
class PosetBuilder {
  public:
    static FinitePoset from_closed_relation(std::vector<std::string> elems,
                                            std::vector<std::vector<bool>> leq);
};

} // namespace verdier
