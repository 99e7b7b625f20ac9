#include "verdier/totalization.hpp"

#include <algorithm>

namespace verdier {

const std::vector<SlotBlock> TotalizationComplex::empty_;

const std::vector<SlotBlock>& TotalizationComplex::blocks_at(int degree) const {
    auto it = blocks_.find(degree);
    return it == blocks_.end() ? empty_ : it->second;
}

const SlotBlock* TotalizationComplex::find(const std::vector<int>& chain,
                                           int internal_degree) const {
    for (const auto& [n, blocks] : blocks_) {
        for (const auto& b : blocks)
            if (b.internal_degree == internal_degree && b.chain == chain)
                return &b;
    }
    return nullptr;
}

namespace {

struct Assembly {
    std::map<int, std::vector<SlotBlock>> blocks;
    std::map<int, int> rank;
    // (chain, j) -> (degree, block index)
    std::map<std::pair<std::vector<int>, int>, std::pair<int, int>> loc;

    void add(std::vector<int> chain, int j, int degree, int size) {
        auto& bucket = blocks[degree];
        SlotBlock b;
        b.chain = std::move(chain);
        b.internal_degree = j;
        b.size = size;
        b.offset = rank[degree];
        rank[degree] += size;
        loc[{b.chain, j}] = {degree, static_cast<int>(bucket.size())};
        bucket.push_back(std::move(b));
    }

    const SlotBlock* get(const std::vector<int>& chain, int j) const {
        auto it = loc.find({chain, j});
        if (it == loc.end())
            return nullptr;
        return &blocks.at(it->second.first)[it->second.second];
    }
};

int sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

TotalizationComplex assemble(const Diagram& f, const std::vector<std::vector<int>>& chains,
                             bool limit_direction) {
    const FinitePoset& P = f.base();
    Assembly a;
    for (const auto& chain : chains) {
        const int k = static_cast<int>(chain.size()) - 1;
        const int value_at = limit_direction ? chain.back() : chain.front();
        const ChainComplex& c = f.at(value_at);
        for (int j = c.lowest(); j <= c.highest(); ++j)
            if (c.rank(j) > 0)
                a.add(chain, j, limit_direction ? j - k : j + k, c.rank(j));
    }
    if (a.blocks.empty())
        return TotalizationComplex(ChainComplex::zero(f.ring()), {});

    // cache the composite edge maps that actually occur
    std::map<std::pair<int, int>, DegreeMaps> edge_cache;
    auto composite = [&](int from, int to) -> const DegreeMaps& {
        auto it = edge_cache.find({from, to});
        if (it == edge_cache.end())
            it = edge_cache.emplace(std::make_pair(from, to), f.composite(from, to)).first;
        return it->second;
    };

    std::map<int, std::vector<Triplet>> trips; // degree -> triplets of d_degree
    auto emit_block = [&](int degree, const SlotBlock& dst, const SlotBlock& src,
                          const IntMatrix& m, int sign) {
        auto& t = trips[degree];
        m.for_each_nonzero([&](int r, int c, long long v) {
            t.push_back({dst.offset + r, src.offset + c,
                         sign > 0 ? v : checked_neg(v)});
        });
    };

    for (const auto& [degree, bucket] : a.blocks) {
        for (const SlotBlock& src : bucket) {
            const int k = static_cast<int>(src.chain.size()) - 1;
            const int value_at = limit_direction ? src.chain.back() : src.chain.front();
            const ChainComplex& c = f.at(value_at);
            // internal differential: (chain, j) -> (chain, j-1), plus sign
            if (c.rank(src.internal_degree - 1) > 0 &&
                c.has_differential(src.internal_degree)) {
                const SlotBlock* dst = a.get(src.chain, src.internal_degree - 1);
                if (dst)
                    emit_block(degree, *dst, src, c.differential(src.internal_degree), 1);
            }
            if (limit_direction) {
                // cofaces into this slot come from the deletions of its chain
                const std::vector<int>& ch = src.chain;
                const int j = src.internal_degree;
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> shorter = ch;
                    shorter.erase(shorter.begin() + i);
                    if (shorter.empty())
                        continue;
                    const SlotBlock* from = a.get(shorter, j);
                    if (!from)
                        continue;
                    const int sgn = sign_pow(j) * sign_pow(i);
                    if (i < k) {
                        // same last element, identity block
                        emit_block(degree + 1, src, *from, IntMatrix::identity(src.size),
                                   sgn);
                    } else {
                        // deleting the last element: act through the edge map
                        const DegreeMaps& e = composite(shorter.back(), ch.back());
                        auto it = e.find(j);
                        if (it != e.end())
                            emit_block(degree + 1, src, *from, it->second, sgn);
                    }
                }
            } else {
                // faces: src maps onto each deletion of its own chain
                const std::vector<int>& ch = src.chain;
                const int j = src.internal_degree;
                for (int i = 0; i <= k; ++i) {
                    std::vector<int> shorter = ch;
                    shorter.erase(shorter.begin() + i);
                    if (shorter.empty())
                        continue;
                    const SlotBlock* dst = a.get(shorter, j);
                    if (!dst)
                        continue;
                    const int sgn = sign_pow(j) * sign_pow(i);
                    if (i > 0) {
                        emit_block(degree, *dst, src, IntMatrix::identity(src.size), sgn);
                    } else {
                        const DegreeMaps& e = composite(ch[0], ch[1]);
                        auto it = e.find(j);
                        if (it != e.end())
                            emit_block(degree, *dst, src, it->second, sgn);
                    }
                }
            }
        }
    }

    const int lo = a.rank.begin()->first;
    const int hi = a.rank.rbegin()->first;
    std::vector<int> ranks(hi - lo + 1, 0);
    for (const auto& [n, r] : a.rank)
        ranks[n - lo] = r;
    std::map<int, IntMatrix> diff;
    for (auto& [n, t] : trips) {
        const int rows = n - 1 - lo >= 0 && n - 1 <= hi ? ranks[n - 1 - lo] : 0;
        const int cols = n - lo >= 0 && n <= hi ? ranks[n - lo] : 0;
        if (rows == 0 || cols == 0 || t.empty())
            continue;
        diff[n] = IntMatrix::from_triplets(rows, cols, std::move(t));
    }
    // d o d = 0 is asserted by the ChainComplex constructor
    return TotalizationComplex(ChainComplex(f.ring(), lo, std::move(ranks), std::move(diff)),
                               std::move(a.blocks));
}

} // namespace

TotalizationComplex holim(const Diagram& f) {
    std::vector<char> allowed(f.base().size(), 1);
    return holim_supported(f, allowed);
}

TotalizationComplex holim_supported(const Diagram& f,
                                    const std::vector<char>& last_allowed) {
    std::vector<char> allowed(f.base().size(), 0);
    for (int p = 0; p < f.base().size(); ++p)
        allowed[p] = last_allowed[p] && !f.at(p).is_zero();
    return assemble(f, f.base().chains_with_last_in(allowed), true);
}

TotalizationComplex hocolim(const Diagram& f) {
    std::vector<char> allowed(f.base().size(), 0);
    for (int p = 0; p < f.base().size(); ++p)
        allowed[p] = !f.at(p).is_zero();
    return assemble(f, f.base().chains_with_first_in(allowed), false);
}

TotalizationComplex gamma(const FinitePoset& p, const Diagram& f) {
    if (f.base().elements() != p.elements())
        throw Error("gamma: diagram is not based on the given poset");
    return holim(f);
}

DegreeMaps slot_transfer(const TotalizationComplex& src, const FinitePoset& src_base,
                         const TotalizationComplex& dst, const FinitePoset& dst_base) {
    std::map<int, std::vector<Triplet>> trips;
    for (const auto& [degree, bucket] : src.blocks()) {
        for (const SlotBlock& s : bucket) {
            std::vector<int> renamed;
            renamed.reserve(s.chain.size());
            bool ok = true;
            for (int e : s.chain) {
                const std::string& name = src_base.element(e);
                if (!dst_base.contains(name)) {
                    ok = false;
                    break;
                }
                renamed.push_back(dst_base.index_of(name));
            }
            if (!ok)
                continue;
            const SlotBlock* d = dst.find(renamed, s.internal_degree);
            if (!d)
                continue;
            auto& t = trips[degree];
            for (int i = 0; i < s.size; ++i)
                t.push_back({d->offset + i, s.offset + i, 1});
        }
    }
    DegreeMaps out;
    for (auto& [n, t] : trips)
        out[n] = IntMatrix::from_triplets(dst.complex().rank(n), src.complex().rank(n),
                                          std::move(t));
    return out;
}

ChainMap induced_holim_map(const DiagramMap& eta, const TotalizationComplex& tot_src,
                           const TotalizationComplex& tot_dst) {
    std::map<int, std::vector<Triplet>> trips;
    const bool limit_direction = true;
    (void)limit_direction;
    for (const auto& [degree, bucket] : tot_src.blocks()) {
        for (const SlotBlock& s : bucket) {
            const SlotBlock* d = tot_dst.find(s.chain, s.internal_degree);
            if (!d)
                continue;
            const int p = s.chain.back();
            const auto& comp = eta.component(p);
            auto it = comp.find(s.internal_degree);
            if (it == comp.end())
                continue;
            auto& t = trips[degree];
            it->second.for_each_nonzero([&](int r, int c, long long v) {
                t.push_back({d->offset + r, s.offset + c, v});
            });
        }
    }
    DegreeMaps comps;
    for (auto& [n, t] : trips)
        comps[n] = IntMatrix::from_triplets(tot_dst.complex().rank(n),
                                            tot_src.complex().rank(n), std::move(t));
    return ChainMap(tot_src.complex(), tot_dst.complex(), std::move(comps));
}

ChainMap cone_comparison_limit(const Diagram& f) {
    const auto least = f.base().least_element();
    if (!least)
        throw NoLeastElementError("cone comparison needs a least element");
    std::vector<int> rest;
    for (int p = 0; p < f.base().size(); ++p)
        if (p != *least)
            rest.push_back(p);
    const Diagram g = restrict(f, rest);
    const TotalizationComplex t = holim(g);
    const ChainComplex& src = f.at(*least);
    std::map<int, std::vector<Triplet>> trips;
    for (const auto& [degree, bucket] : t.blocks()) {
        for (const SlotBlock& b : bucket) {
            if (b.chain.size() != 1)
                continue;
            const int r_ambient = rest[b.chain[0]];
            const DegreeMaps e = f.composite(*least, r_ambient);
            auto it = e.find(b.internal_degree);
            if (it == e.end())
                continue;
            auto& tr = trips[degree];
            it->second.for_each_nonzero([&](int r, int c, long long v) {
                tr.push_back({b.offset + r, c, v});
            });
        }
    }
    DegreeMaps comps;
    for (auto& [n, tr] : trips)
        comps[n] =
            IntMatrix::from_triplets(t.complex().rank(n), src.rank(n), std::move(tr));
    return ChainMap(src, t.complex(), std::move(comps));
}

ChainMap cone_comparison_colimit(const Diagram& f) {
    const auto greatest = f.base().greatest_element();
    if (!greatest)
        throw NoGreatestElementError("cone comparison needs a greatest element");
    std::vector<int> rest;
    for (int p = 0; p < f.base().size(); ++p)
        if (p != *greatest)
            rest.push_back(p);
    const Diagram g = restrict(f, rest);
    const TotalizationComplex t = hocolim(g);
    const ChainComplex& dst = f.at(*greatest);
    std::map<int, std::vector<Triplet>> trips;
    for (const auto& [degree, bucket] : t.blocks()) {
        for (const SlotBlock& b : bucket) {
            if (b.chain.size() != 1)
                continue;
            const int r_ambient = rest[b.chain[0]];
            const DegreeMaps e = f.composite(r_ambient, *greatest);
            auto it = e.find(b.internal_degree);
            if (it == e.end())
                continue;
            auto& tr = trips[degree];
            it->second.for_each_nonzero([&](int r, int c, long long v) {
                tr.push_back({r, b.offset + c, v});
            });
        }
    }
    DegreeMaps comps;
    for (auto& [n, tr] : trips)
        comps[n] =
            IntMatrix::from_triplets(dst.rank(n), t.complex().rank(n), std::move(tr));
    return ChainMap(t.complex(), dst, std::move(comps));
}

bool is_limit_diagram(const Diagram& f) { return is_quasi_iso(cone_comparison_limit(f)); }

bool is_colimit_diagram(const Diagram& f) {
    return is_quasi_iso(cone_comparison_colimit(f));
}

} // namespace verdier
