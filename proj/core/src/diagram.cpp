#include "verdier/diagram.hpp"

#include <algorithm>
#include <queue>

#include "verdier/totalization.hpp"

namespace verdier {

DegreeMaps degree_maps_identity(const ChainComplex& c) {
    DegreeMaps m;
    for (int n = c.lowest(); n <= c.highest(); ++n)
        if (c.rank(n) > 0)
            m[n] = IntMatrix::identity(c.rank(n));
    return m;
}

DegreeMaps degree_maps_compose(const DegreeMaps& g, const DegreeMaps& f) {
    DegreeMaps out;
    for (const auto& [n, fm] : f) {
        auto it = g.find(n);
        if (it == g.end())
            continue;
        IntMatrix prod = it->second * fm;
        if (!prod.is_zero())
            out[n] = std::move(prod);
    }
    return out;
}

namespace {

// shared by Diagram and OpDiagram
struct Core {
    const FinitePoset& base;
    const std::vector<ChainComplex>& at;
    const std::map<std::pair<int, int>, DegreeMaps>& edges;
    bool contravariant; // edge for cover (p,q) maps at(q) -> at(p)

    int src_of(const std::pair<int, int>& cover) const {
        return contravariant ? cover.second : cover.first;
    }
    int dst_of(const std::pair<int, int>& cover) const {
        return contravariant ? cover.first : cover.second;
    }

    DegreeMaps edge(int p, int q) const {
        auto it = edges.find({p, q});
        return it == edges.end() ? DegreeMaps{} : it->second;
    }

    // composite along cover paths from low to high (covariant) or high to
    // low (contravariant); `from`/`to` are poset elements with from <= to in
    // the direction of travel.
    DegreeMaps composite(int from, int to) const {
        // BFS over covers from `from` upwards to `to` (covariant orientation)
        const int lo = contravariant ? to : from;
        const int hi = contravariant ? from : to;
        if (lo == hi)
            return degree_maps_identity(at[lo]);
        if (!base.leq(lo, hi))
            throw NotComparableError("no path between elements");
        std::vector<int> parent(base.size(), -1);
        std::queue<int> bfs;
        bfs.push(lo);
        std::vector<char> seen(base.size(), 0);
        seen[lo] = 1;
        while (!bfs.empty() && !seen[hi]) {
            const int v = bfs.front();
            bfs.pop();
            for (const auto& [a, b] : base.covers()) {
                if (a != v || !base.leq(b, hi) || seen[b])
                    continue;
                seen[b] = 1;
                parent[b] = a;
                bfs.push(b);
            }
        }
        std::vector<int> path; // hi back to lo
        for (int v = hi; v != -1; v = parent[v])
            path.push_back(v);
        std::reverse(path.begin(), path.end());
        // compose edge maps along the path, in the travel direction
        DegreeMaps acc;
        bool first = true;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            const DegreeMaps step = edge(path[i], path[i + 1]);
            if (first) {
                acc = step;
                first = false;
            } else if (contravariant) {
                // step maps at(path[i+1]) down to at(path[i])
                acc = degree_maps_compose(acc, step);
            } else {
                acc = degree_maps_compose(step, acc);
            }
        }
        return acc;
    }
};

DiagramReport validate_core(const Core& core) {
    const FinitePoset& P = core.base;
    // edges must be chain maps over the shared ring
    for (const auto& [cover, maps] : core.edges) {
        const auto& [p, q] = cover;
        bool is_cover = false;
        for (const auto& c : P.covers())
            is_cover |= c == cover;
        if (!is_cover)
            return {false, "edge (" + P.element(p) + "," + P.element(q) +
                               ") is not a Hasse edge"};
        const ChainComplex& s = core.at[core.src_of(cover)];
        const ChainComplex& t = core.at[core.dst_of(cover)];
        try {
            ChainMap(s, t, maps);
        } catch (const Error& e) {
            return {false, "edge (" + P.element(p) + "," + P.element(q) +
                               "): " + e.what()};
        }
    }
    // full path independence by dynamic programming over comparable pairs
    std::map<std::pair<int, int>, DegreeMaps> comp;
    auto maps_equal = [&](const DegreeMaps& a, const DegreeMaps& b) {
        for (const auto& [n, m] : a) {
            auto it = b.find(n);
            if (it == b.end()) {
                if (!m.is_zero())
                    return false;
            } else if (!(m == it->second))
                return false;
        }
        for (const auto& [n, m] : b)
            if (a.find(n) == a.end() && !m.is_zero())
                return false;
        return true;
    };
    std::vector<std::vector<int>> covers_into(P.size());
    for (const auto& [a, b] : P.covers())
        covers_into[b].push_back(a);
    for (int q : P.linear_extension()) {
        for (int p = 0; p < P.size(); ++p) {
            if (!P.lt(p, q))
                continue;
            bool have = false;
            DegreeMaps reference;
            for (int r : covers_into[q]) {
                if (!P.leq(p, r))
                    continue;
                const DegreeMaps& below =
                    (p == r) ? degree_maps_identity(core.at[p]) : comp.at({p, r});
                DegreeMaps candidate;
                if (core.contravariant)
                    candidate = degree_maps_compose(below, core.edge(r, q));
                else
                    candidate = degree_maps_compose(core.edge(r, q), below);
                if (!have) {
                    reference = std::move(candidate);
                    have = true;
                } else if (!maps_equal(reference, candidate)) {
                    return {false, "path independence fails on the pair (" +
                                       P.element(p) + "," + P.element(q) + ")"};
                }
            }
            comp[{p, q}] = std::move(reference);
        }
    }
    return {};
}

} // namespace

Diagram::Diagram(FinitePoset base, std::vector<ChainComplex> at,
                 std::map<std::pair<int, int>, DegreeMaps> edges)
    : base_(std::move(base)), at_(std::move(at)), edges_(std::move(edges)) {
    if (static_cast<int>(at_.size()) != base_.size())
        throw Error("diagram needs one complex per element");
    ring_ = at_.empty() ? Ring::integers() : at_[0].ring();
    for (const auto& c : at_)
        if (!(c.ring() == ring_))
            throw RingMismatchError("diagram values over mixed rings");
}

DegreeMaps Diagram::edge(int p, int q) const {
    auto it = edges_.find({p, q});
    return it == edges_.end() ? DegreeMaps{} : it->second;
}

DegreeMaps Diagram::composite(int p, int q) const {
    return Core{base_, at_, edges_, false}.composite(p, q);
}

DiagramReport Diagram::validate() const {
    return validate_core(Core{base_, at_, edges_, false});
}

OpDiagram::OpDiagram(FinitePoset base, std::vector<ChainComplex> at,
                     std::map<std::pair<int, int>, DegreeMaps> edges)
    : base_(std::move(base)), at_(std::move(at)), edges_(std::move(edges)) {
    if (static_cast<int>(at_.size()) != base_.size())
        throw Error("diagram needs one complex per element");
    ring_ = at_.empty() ? Ring::integers() : at_[0].ring();
    for (const auto& c : at_)
        if (!(c.ring() == ring_))
            throw RingMismatchError("diagram values over mixed rings");
}

DegreeMaps OpDiagram::edge(int p, int q) const {
    auto it = edges_.find({p, q});
    return it == edges_.end() ? DegreeMaps{} : it->second;
}

DegreeMaps OpDiagram::composite(int q, int p) const {
    return Core{base_, at_, edges_, true}.composite(q, p);
}

DiagramReport OpDiagram::validate() const {
    return validate_core(Core{base_, at_, edges_, true});
}

Diagram constant_diagram(const FinitePoset& p, const ChainComplex& c) {
    std::vector<ChainComplex> at(p.size(), c);
    std::map<std::pair<int, int>, DegreeMaps> edges;
    const DegreeMaps id = degree_maps_identity(c);
    for (const auto& cover : p.covers())
        edges[cover] = id;
    return Diagram(p, std::move(at), std::move(edges));
}

Diagram interval_unit(const FinitePoset& poset, int p, int q,
                      const ChainComplex& value) {
    if (!poset.leq(p, q))
        throw NotComparableError("interval unit needs p <= q");
    std::vector<ChainComplex> at(poset.size(), ChainComplex::zero(value.ring()));
    for (int r : poset.closed_interval(p, q))
        at[r] = value;
    std::map<std::pair<int, int>, DegreeMaps> edges;
    const DegreeMaps id = degree_maps_identity(value);
    for (const auto& [a, b] : poset.covers())
        if (!at[a].is_zero() && !at[b].is_zero())
            edges[{a, b}] = id;
    return Diagram(poset, std::move(at), std::move(edges));
}

Diagram interval_unit(const FinitePoset& poset, int p, int q, Ring ring) {
    return interval_unit(poset, p, q, ChainComplex::concentrated(ring, 0, 1));
}

Diagram corep_sheaf(const FinitePoset& poset, int p, const ChainComplex& value) {
    std::vector<ChainComplex> at(poset.size(), ChainComplex::zero(value.ring()));
    for (int r : poset.down_set(p))
        at[r] = value;
    std::map<std::pair<int, int>, DegreeMaps> edges;
    const DegreeMaps id = degree_maps_identity(value);
    for (const auto& [a, b] : poset.covers())
        if (!at[a].is_zero() && !at[b].is_zero())
            edges[{a, b}] = id;
    return Diagram(poset, std::move(at), std::move(edges));
}

Diagram restrict(const Diagram& f, const std::vector<int>& subset) {
    std::vector<int> idx = subset;
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    const FinitePoset Q = f.base().induced(idx);
    std::vector<ChainComplex> at;
    at.reserve(idx.size());
    for (int i : idx)
        at.push_back(f.at(i));
    std::map<std::pair<int, int>, DegreeMaps> edges;
    for (const auto& [a, b] : Q.covers()) {
        DegreeMaps m = f.composite(idx[a], idx[b]);
        if (!m.empty())
            edges[{a, b}] = std::move(m);
    }
    return Diagram(Q, std::move(at), std::move(edges));
}

Diagram extension_by_zero(const Diagram& f, const FinitePoset& into) {
    const FinitePoset& Q = f.base();
    std::vector<int> where(Q.size());
    for (int i = 0; i < Q.size(); ++i)
        where[i] = into.index_of(Q.element(i));
    // interval-closedness of the image
    std::vector<int> image = where;
    std::sort(image.begin(), image.end());
    for (int a : image)
        for (int b : image)
            if (into.lt(a, b))
                for (int r : into.open_interval(a, b))
                    if (!std::binary_search(image.begin(), image.end(), r))
                        throw NotIntervalClosedError(
                            "subposet is not interval-closed in the ambient poset");
    // order compatibility must hold for a full subposet
    for (int i = 0; i < Q.size(); ++i)
        for (int j = 0; j < Q.size(); ++j)
            if (Q.leq(i, j) != into.leq(where[i], where[j]))
                throw Error("subposet is not full in the ambient poset");
    std::vector<ChainComplex> at(into.size(), ChainComplex::zero(f.ring()));
    std::vector<int> back(into.size(), -1);
    for (int i = 0; i < Q.size(); ++i) {
        at[where[i]] = f.at(i);
        back[where[i]] = i;
    }
    std::map<std::pair<int, int>, DegreeMaps> edges;
    for (const auto& [a, b] : into.covers()) {
        if (back[a] < 0 || back[b] < 0)
            continue;
        DegreeMaps m = f.edge(back[a], back[b]);
        if (!m.empty())
            edges[{a, b}] = std::move(m);
    }
    return Diagram(into, std::move(at), std::move(edges));
}

Diagram diagram_direct_sum(const std::vector<Diagram>& fs) {
    if (fs.empty())
        throw Error("empty diagram sum");
    const FinitePoset& P = fs[0].base();
    for (const auto& f : fs)
        if (f.base().elements() != P.elements())
            throw Error("diagram sum needs a common base poset");
    std::vector<ChainComplex> at;
    for (int p = 0; p < P.size(); ++p) {
        std::vector<ChainComplex> parts;
        parts.reserve(fs.size());
        for (const auto& f : fs)
            parts.push_back(f.at(p));
        at.push_back(direct_sum(parts));
    }
    std::map<std::pair<int, int>, DegreeMaps> edges;
    for (const auto& cover : P.covers()) {
        const auto& [a, b] = cover;
        DegreeMaps sum;
        const int lo = std::min(at[a].lowest(), at[b].lowest());
        const int hi = std::max(at[a].highest(), at[b].highest());
        for (int n = lo; n <= hi; ++n) {
            std::vector<IntMatrix> blocks;
            bool nonzero = false;
            for (const auto& f : fs) {
                auto maps = f.edge(cover.first, cover.second);
                auto it = maps.find(n);
                IntMatrix m = it != maps.end()
                                   ? it->second
                                   : IntMatrix::zero(f.at(b).rank(n), f.at(a).rank(n));
                nonzero = nonzero || !m.is_zero();
                blocks.push_back(std::move(m));
            }
            if (nonzero)
                sum[n] = block_diag(blocks);
        }
        if (!sum.empty())
            edges[cover] = std::move(sum);
    }
    return Diagram(P, std::move(at), std::move(edges));
}

Diagram shift_diagram(const Diagram& f, int k) {
    const FinitePoset& P = f.base();
    std::vector<ChainComplex> at;
    at.reserve(P.size());
    for (int p = 0; p < P.size(); ++p)
        at.push_back(shift(f.at(p), k));
    std::map<std::pair<int, int>, DegreeMaps> edges;
    for (const auto& cover : P.covers()) {
        DegreeMaps shifted;
        for (const auto& [n, m] : f.edge(cover.first, cover.second))
            shifted[n + k] = m;
        if (!shifted.empty())
            edges[cover] = std::move(shifted);
    }
    return Diagram(P, std::move(at), std::move(edges));
}

DiagramMap::DiagramMap(const Diagram& source, const Diagram& target,
                       std::vector<DegreeMaps> components, bool validate)
    : src_(source), dst_(target), comp_(std::move(components)) {
    const FinitePoset& P = source.base();
    if (target.base().elements() != P.elements())
        throw Error("diagram map needs a common base poset");
    if (static_cast<int>(comp_.size()) != P.size())
        throw Error("diagram map needs one component per element");
    if (!validate)
        return;
    for (int p = 0; p < P.size(); ++p)
        ChainMap(source.at(p), target.at(p), comp_[p]); // chain-map check
    for (const auto& [a, b] : P.covers()) {
        const DegreeMaps lhs = degree_maps_compose(target.edge(a, b), comp_[a]);
        const DegreeMaps rhs = degree_maps_compose(comp_[b], source.edge(a, b));
        for (const auto& [n, m] : lhs) {
            auto it = rhs.find(n);
            const IntMatrix other =
                it != rhs.end()
                    ? it->second
                    : IntMatrix::zero(m.rows(), m.cols());
            if (!(m == other))
                throw ValidationError("diagram map is not natural on a cover edge");
        }
        for (const auto& [n, m] : rhs)
            if (lhs.find(n) == lhs.end() && !m.is_zero())
                throw ValidationError("diagram map is not natural on a cover edge");
    }
}

namespace {

Diagram pointwise_kan(const Diagram& f, const FinitePoset& into, bool left) {
    const FinitePoset& Q = f.base();
    std::vector<int> where(Q.size());
    for (int i = 0; i < Q.size(); ++i)
        where[i] = into.index_of(Q.element(i));
    std::vector<ChainComplex> at;
    std::vector<TotalizationComplex> tots;
    std::vector<FinitePoset> bases;
    tots.reserve(into.size());
    for (int r = 0; r < into.size(); ++r) {
        std::vector<int> idx; // Q_{<=r} for a left, Q_{>=r} for a right extension
        for (int i = 0; i < Q.size(); ++i)
            if (left ? into.leq(where[i], r) : into.leq(r, where[i]))
                idx.push_back(i);
        const Diagram g = restrict(f, idx);
        bases.push_back(g.base());
        tots.push_back(left ? hocolim(g) : holim(g));
        at.push_back(tots.back().complex());
    }
    std::map<std::pair<int, int>, DegreeMaps> edges;
    for (const auto& [a, b] : into.covers()) {
        // left: slot inclusion along Q_{<=a} into Q_{<=b};
        // right: slot projection from Q_{>=a} onto Q_{>=b}
        DegreeMaps m = slot_transfer(tots[a], bases[a], tots[b], bases[b]);
        if (!m.empty())
            edges[{a, b}] = std::move(m);
    }
    return Diagram(into, std::move(at), std::move(edges));
}

} // namespace

Diagram left_kan(const Diagram& f, const FinitePoset& into) {
    return pointwise_kan(f, into, true);
}

Diagram right_kan(const Diagram& f, const FinitePoset& into) {
    return pointwise_kan(f, into, false);
}

} // namespace verdier
