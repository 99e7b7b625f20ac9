#include "verdier/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace verdier {

namespace {

std::vector<std::pair<int, int>> transitive_reduction(
    const std::vector<std::vector<bool>>& leq) {
    const int n = static_cast<int>(leq.size());
    std::vector<std::pair<int, int>> covers;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (p == q || !leq[p][q])
                continue;
            bool direct = true;
            for (int r = 0; r < n && direct; ++r)
                if (r != p && r != q && leq[p][r] && leq[r][q])
                    direct = false;
            if (direct)
                covers.push_back({p, q});
        }
    return covers;
}

} // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> elems,
                                       std::vector<std::vector<bool>> leq) {
    FinitePoset P;
    P.elems_ = std::move(elems);
    for (int i = 0; i < static_cast<int>(P.elems_.size()); ++i) {
        if (!P.index_.emplace(P.elems_[i], i).second)
            throw UnknownElementError("duplicate element '" + P.elems_[i] + "'");
    }
    P.leq_ = std::move(leq);
    P.covers_ = transitive_reduction(P.leq_);
    return P;
}

FinitePoset PosetBuilder::from_closed_relation(std::vector<std::string> elems,
                                               std::vector<std::vector<bool>> leq) {
    return FinitePoset::from_relation(std::move(elems), std::move(leq));
}

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
    const int n = static_cast<int>(elements.size());
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(elements[i], i).second)
            throw UnknownElementError("duplicate element '" + elements[i] + "'");

    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (const auto& [a, b] : covers) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end())
            throw UnknownElementError("cover references unknown element '" + a + "'");
        if (ib == index.end())
            throw UnknownElementError("cover references unknown element '" + b + "'");
        if (ia->second == ib->second)
            throw CycleError("cover loop at element '" + a + "'");
        succ[ia->second].push_back(ib->second);
        ++indeg[ib->second];
    }

    // Kahn topological order; leftovers mean a directed cycle.
    std::vector<int> order;
    std::queue<int> ready;
    std::vector<int> deg = indeg;
    for (int i = 0; i < n; ++i)
        if (deg[i] == 0)
            ready.push(i);
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop();
        order.push_back(v);
        for (int w : succ[v])
            if (--deg[w] == 0)
                ready.push(w);
    }
    if (static_cast<int>(order.size()) != n)
        throw CycleError("cover relation contains a directed cycle");

    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        leq[v][v] = true;
        for (int w : succ[v])
            for (int q = 0; q < n; ++q)
                if (leq[w][q])
                    leq[v][q] = true;
    }
    return from_relation(std::move(elements), std::move(leq));
}

int FinitePoset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw UnknownElementError("unknown element '" + id + "'");
    return it->second;
}

FinitePoset FinitePoset::opposite() const {
    const int n = size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            leq[p][q] = leq_[q][p];
    return from_relation(elems_, std::move(leq));
}

FinitePoset FinitePoset::induced(std::vector<int> subset) const {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int i : subset)
        if (i < 0 || i >= size())
            throw UnknownElementError("induced subset index out of range");
    const int m = static_cast<int>(subset.size());
    std::vector<std::string> elems;
    elems.reserve(m);
    for (int i : subset)
        elems.push_back(elems_[i]);
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            leq[a][b] = leq_[subset[a]][subset[b]];
    return from_relation(std::move(elems), std::move(leq));
}

FinitePoset FinitePoset::induced_ids(const std::vector<std::string>& subset) const {
    std::vector<int> idx;
    idx.reserve(subset.size());
    for (const auto& s : subset)
        idx.push_back(index_of(s));
    return induced(std::move(idx));
}

std::string FinitePoset::fresh_name(const std::string& base) const {
    std::string name = base;
    while (index_.count(name) > 0)
        name += "'";
    return name;
}

FinitePoset FinitePoset::add_bottom() const {
    const int n = size();
    std::vector<std::string> elems;
    elems.reserve(n + 1);
    elems.push_back(fresh_name("⊥"));
    elems.insert(elems.end(), elems_.begin(), elems_.end());
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
    for (int q = 0; q <= n; ++q)
        leq[0][q] = true;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            leq[p + 1][q + 1] = leq_[p][q];
    return from_relation(std::move(elems), std::move(leq));
}

FinitePoset FinitePoset::add_top() const {
    const int n = size();
    std::vector<std::string> elems = elems_;
    elems.push_back(fresh_name("⊤"));
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            leq[p][q] = leq_[p][q];
    for (int p = 0; p <= n; ++p)
        leq[p][n] = true;
    return from_relation(std::move(elems), std::move(leq));
}

std::optional<int> FinitePoset::least_element() const {
    for (int p = 0; p < size(); ++p) {
        bool least = true;
        for (int q = 0; q < size() && least; ++q)
            least = leq_[p][q];
        if (least)
            return p;
    }
    return std::nullopt;
}

std::optional<int> FinitePoset::greatest_element() const {
    for (int p = 0; p < size(); ++p) {
        bool greatest = true;
        for (int q = 0; q < size() && greatest; ++q)
            greatest = leq_[q][p];
        if (greatest)
            return p;
    }
    return std::nullopt;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> out;
    for (int p = 0; p < size(); ++p) {
        bool minimal = true;
        for (int q = 0; q < size() && minimal; ++q)
            minimal = !lt(q, p);
        if (minimal)
            out.push_back(p);
    }
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> out;
    for (int p = 0; p < size(); ++p) {
        bool maximal = true;
        for (int q = 0; q < size() && maximal; ++q)
            maximal = !lt(p, q);
        if (maximal)
            out.push_back(p);
    }
    return out;
}

std::vector<int> FinitePoset::down_set(int p) const {
    std::vector<int> out;
    for (int q = 0; q < size(); ++q)
        if (leq_[q][p])
            out.push_back(q);
    return out;
}

std::vector<int> FinitePoset::strict_down(int p) const {
    std::vector<int> out;
    for (int q = 0; q < size(); ++q)
        if (lt(q, p))
            out.push_back(q);
    return out;
}

std::vector<int> FinitePoset::up_set(int p) const {
    std::vector<int> out;
    for (int q = 0; q < size(); ++q)
        if (leq_[p][q])
            out.push_back(q);
    return out;
}

std::vector<int> FinitePoset::strict_up(int p) const {
    std::vector<int> out;
    for (int q = 0; q < size(); ++q)
        if (lt(p, q))
            out.push_back(q);
    return out;
}

std::vector<int> FinitePoset::open_interval(int p, int q) const {
    std::vector<int> out;
    for (int r = 0; r < size(); ++r)
        if (lt(p, r) && lt(r, q))
            out.push_back(r);
    return out;
}

std::vector<int> FinitePoset::closed_interval(int p, int q) const {
    std::vector<int> out;
    for (int r = 0; r < size(); ++r)
        if (leq_[p][r] && leq_[r][q])
            out.push_back(r);
    return out;
}

std::vector<std::pair<int, int>> FinitePoset::comparable_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < size(); ++p)
        for (int q = 0; q < size(); ++q)
            if (lt(p, q))
                out.push_back({p, q});
    return out;
}

std::vector<int> FinitePoset::linear_extension() const {
    std::vector<int> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> weight(size(), 0);
    for (int p = 0; p < size(); ++p)
        weight[p] = static_cast<int>(down_set(p).size());
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return weight[a] < weight[b]; });
    return order;
}

namespace {
void sort_chains(std::vector<std::vector<int>>& chains) {
    std::sort(chains.begin(), chains.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
}
} // namespace

std::vector<std::vector<int>> FinitePoset::chains_with_last_in(
    const std::vector<char>& allowed) const {
    // ending_at[z] = every chain with last element z, built along a linear
    // extension; only elements below some allowed element are materialized.
    std::vector<char> needed(size(), 0);
    for (int a = 0; a < size(); ++a)
        if (allowed[a])
            for (int q : down_set(a))
                needed[q] = 1;
    std::vector<std::vector<std::vector<int>>> ending(size());
    std::vector<std::vector<int>> out;
    for (int z : linear_extension()) {
        if (!needed[z])
            continue;
        auto& bucket = ending[z];
        bucket.push_back({z});
        for (int y : strict_down(z)) {
            for (const auto& c : ending[y]) {
                std::vector<int> ext = c;
                ext.push_back(z);
                bucket.push_back(std::move(ext));
            }
        }
        if (allowed[z])
            out.insert(out.end(), bucket.begin(), bucket.end());
    }
    sort_chains(out);
    return out;
}

std::vector<std::vector<int>> FinitePoset::chains_with_first_in(
    const std::vector<char>& allowed) const {
    std::vector<char> needed(size(), 0);
    for (int a = 0; a < size(); ++a)
        if (allowed[a])
            for (int q : up_set(a))
                needed[q] = 1;
    std::vector<std::vector<std::vector<int>>> starting(size());
    std::vector<std::vector<int>> out;
    const auto order = linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int z = *it;
        if (!needed[z])
            continue;
        auto& bucket = starting[z];
        bucket.push_back({z});
        for (int y : strict_up(z)) {
            for (const auto& c : starting[y]) {
                std::vector<int> ext;
                ext.reserve(c.size() + 1);
                ext.push_back(z);
                ext.insert(ext.end(), c.begin(), c.end());
                bucket.push_back(std::move(ext));
            }
        }
        if (allowed[z])
            out.insert(out.end(), bucket.begin(), bucket.end());
    }
    sort_chains(out);
    return out;
}

std::vector<std::vector<int>> FinitePoset::strict_chains() const {
    return chains_with_last_in(std::vector<char>(size(), 1));
}

std::optional<std::vector<int>> FinitePoset::rank_function() const {
    const int n = size();
    std::vector<std::vector<std::pair<int, int>>> nbr(n); // (other, delta)
    for (const auto& [p, q] : covers_) {
        nbr[p].push_back({q, +1});
        nbr[q].push_back({p, -1});
    }
    std::vector<int> rank(n, 0);
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> members;
        std::queue<int> bfs;
        comp[s] = s;
        rank[s] = 0;
        bfs.push(s);
        while (!bfs.empty()) {
            const int v = bfs.front();
            bfs.pop();
            members.push_back(v);
            for (const auto& [w, d] : nbr[v]) {
                if (comp[w] < 0) {
                    comp[w] = s;
                    rank[w] = rank[v] + d;
                    bfs.push(w);
                } else if (rank[w] != rank[v] + d) {
                    return std::nullopt;
                }
            }
        }
        int lo = 0;
        for (int v : members)
            lo = std::min(lo, rank[v]);
        for (int v : members)
            rank[v] -= lo;
    }
    return rank;
}

int FinitePoset::chain_length_to(int p) const {
    const auto below = down_set(p);
    const FinitePoset sub = induced(below);
    const int target = sub.index_of(elems_[p]);
    // lengths[x] = set of lengths of maximal chains from a minimal element to x
    std::vector<std::vector<int>> incoming(sub.size());
    for (const auto& [a, b] : sub.covers())
        incoming[b].push_back(a);
    std::vector<std::pair<int, int>> range(sub.size(), {-1, -1}); // min,max
    for (int z : sub.linear_extension()) {
        if (incoming[z].empty()) {
            range[z] = {0, 0};
            continue;
        }
        int lo = INT32_MAX, hi = INT32_MIN;
        for (int y : incoming[z]) {
            lo = std::min(lo, range[y].first + 1);
            hi = std::max(hi, range[y].second + 1);
        }
        range[z] = {lo, hi};
    }
    if (range[target].first != range[target].second)
        throw NotGradedError("maximal chains into '" + elems_[p] +
                             "' have different lengths");
    return range[target].first;
}

} // namespace verdier
