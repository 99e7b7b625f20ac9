#include "verdier/chain_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "verdier/snf.hpp"

namespace verdier {

Ring Ring::prime_field(long long p) {
    if (p < 2)
        throw Error("field characteristic must be a prime");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw Error("field characteristic must be a prime");
    return Ring{p};
}

Ring Ring::parse(const std::string& name) {
    if (name == "Z")
        return integers();
    if (name.size() >= 2 && name[0] == 'F') {
        try {
            return prime_field(std::stoll(name.substr(1)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw FormatError("unknown ring '" + name + "' (expected Z or F<p>)");
}

void HomologySummary::set(int degree, Group g) {
    if (g.is_zero())
        groups_.erase(degree);
    else
        groups_[degree] = std::move(g);
}

HomologySummary::Group HomologySummary::at(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? Group{} : it->second;
}

bool HomologySummary::is_zero() const { return groups_.empty(); }

std::optional<int> HomologySummary::concentrated_degree() const {
    if (groups_.size() != 1)
        return std::nullopt;
    return groups_.begin()->first;
}

HomologySummary HomologySummary::shifted(int k) const {
    HomologySummary out;
    for (const auto& [d, g] : groups_)
        out.groups_[d + k] = g;
    return out;
}

namespace {
// canonical divisor-chain form of a finite abelian torsion list
std::vector<long long> normalize_torsion(std::vector<long long> t) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j) {
                if (t[j] % t[i] == 0)
                    continue;
                const long long g = std::gcd(t[i], t[j]);
                t[j] = t[i] / g * t[j];
                t[i] = g;
                changed = true;
            }
    }
    std::erase_if(t, [](long long v) { return v == 1; });
    std::sort(t.begin(), t.end());
    return t;
}
} // namespace

HomologySummary HomologySummary::operator+(const HomologySummary& other) const {
    HomologySummary out = *this;
    for (const auto& [d, g] : other.groups_) {
        Group merged = out.at(d);
        merged.free += g.free;
        merged.torsion.insert(merged.torsion.end(), g.torsion.begin(), g.torsion.end());
        merged.torsion = normalize_torsion(std::move(merged.torsion));
        out.set(d, merged);
    }
    return out;
}

namespace {
std::string group_to_string(const HomologySummary::Group& g, const std::string& ring) {
    std::ostringstream os;
    bool first = true;
    if (g.free > 0) {
        os << ring;
        if (g.free > 1)
            os << "^" << g.free;
        first = false;
    }
    for (long long t : g.torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}
} // namespace

std::string HomologySummary::to_string() const {
    if (groups_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, g] : groups_) {
        if (!first)
            os << ", ";
        os << "H_" << d << " = " << group_to_string(g, "Z");
        first = false;
    }
    return os.str();
}

std::string HomologySummary::to_cohomological_string() const {
    if (groups_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = groups_.rbegin(); it != groups_.rend(); ++it) {
        if (!first)
            os << ", ";
        os << "H^" << -it->first << " = " << group_to_string(it->second, "Z");
        first = false;
    }
    return os.str();
}

ChainComplex::ChainComplex(Ring ring, int lowest, std::vector<int> ranks,
                           std::map<int, IntMatrix> differentials, bool validate)
    : ring_(ring), lo_(lowest), ranks_(std::move(ranks)), diff_(std::move(differentials)) {
    // trim zero ranks at both ends
    while (!ranks_.empty() && ranks_.back() == 0)
        ranks_.pop_back();
    while (!ranks_.empty() && ranks_.front() == 0) {
        ranks_.erase(ranks_.begin());
        ++lo_;
    }
    for (int r : ranks_)
        if (r < 0)
            throw Error("negative rank");
    std::erase_if(diff_, [&](const auto& kv) {
        return kv.second.is_zero() || rank(kv.first) == 0 || rank(kv.first - 1) == 0;
    });
    for (const auto& [n, m] : diff_) {
        if (m.rows() != rank(n - 1) || m.cols() != rank(n))
            throw Error("differential shape mismatch at degree " + std::to_string(n));
    }
    if (validate)
        check_d_squared();
}

void ChainComplex::check_d_squared() const {
    for (const auto& [n, m] : diff_) {
        if (!has_differential(n - 1))
            continue;
        IntMatrix prod = differential(n - 1) * m;
        bool zero = true;
        prod.for_each_nonzero([&](int, int, long long v) {
            if (ring_.is_field() ? (v % ring_.p != 0) : (v != 0))
                zero = false;
        });
        if (!zero)
            throw Error("d o d != 0 at degree " + std::to_string(n));
    }
}

ChainComplex ChainComplex::zero(Ring ring) { return ChainComplex(ring, 0, {}, {}); }

ChainComplex ChainComplex::concentrated(Ring ring, int degree, int rank) {
    return ChainComplex(ring, degree, {rank}, {});
}

int ChainComplex::rank(int degree) const {
    const int idx = degree - lo_;
    if (idx < 0 || idx >= static_cast<int>(ranks_.size()))
        return 0;
    return ranks_[idx];
}

bool ChainComplex::is_zero() const { return ranks_.empty(); }

long long ChainComplex::total_rank() const {
    long long t = 0;
    for (int r : ranks_)
        t += r;
    return t;
}

IntMatrix ChainComplex::differential(int degree) const {
    auto it = diff_.find(degree);
    if (it != diff_.end())
        return it->second;
    return IntMatrix::zero(rank(degree - 1), rank(degree));
}

bool ChainComplex::operator==(const ChainComplex& other) const {
    if (!(ring_ == other.ring_) || lo_ != other.lo_ || ranks_ != other.ranks_)
        return false;
    for (int n = lowest(); n <= highest() + 1; ++n)
        if (!(differential(n) == other.differential(n)))
            return false;
    return true;
}

HomologySummary homology(const ChainComplex& c) {
    HomologySummary out;
    if (c.is_zero())
        return out;
    const Ring ring = c.ring();
    // rank of each differential; invariant factors are needed over Z only
    std::map<int, int> dr;
    std::map<int, std::vector<long long>> dfac;
    for (int n = c.lowest(); n <= c.highest() + 1; ++n) {
        if (c.rank(n) == 0 || c.rank(n - 1) == 0 || !c.has_differential(n)) {
            dr[n] = 0;
            continue;
        }
        const IntMatrix d = c.differential(n);
        if (ring.is_field()) {
            dr[n] = rank_mod_p(d, ring.p);
        } else {
            auto f = invariant_factors(d);
            dr[n] = static_cast<int>(f.size());
            dfac[n] = std::move(f);
        }
    }
    for (int n = c.lowest(); n <= c.highest(); ++n) {
        HomologySummary::Group g;
        g.free = c.rank(n) - dr[n] - dr[n + 1];
        if (!ring.is_field()) {
            for (long long t : dfac[n + 1])
                if (t > 1)
                    g.torsion.push_back(t);
        }
        out.set(n, g);
    }
    return out;
}

ChainComplex shift(const ChainComplex& c, int k) {
    if (c.is_zero())
        return c;
    std::vector<int> ranks;
    std::map<int, IntMatrix> diff;
    for (int n = c.lowest(); n <= c.highest(); ++n)
        ranks.push_back(c.rank(n));
    const long long sign = (k % 2 == 0) ? 1 : -1;
    for (int n = c.lowest(); n <= c.highest() + 1; ++n)
        if (c.has_differential(n))
            diff[n + k] = c.differential(n).scaled(sign);
    return ChainComplex(c.ring(), c.lowest() + k, std::move(ranks), std::move(diff),
                        false);
}

ChainComplex direct_sum(const std::vector<ChainComplex>& cs) {
    if (cs.empty())
        return ChainComplex::zero(Ring::integers());
    const Ring ring = cs[0].ring();
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& c : cs) {
        if (!(c.ring() == ring))
            throw RingMismatchError("direct sum over mixed rings");
        if (c.is_zero())
            continue;
        if (!any) {
            lo = c.lowest();
            hi = c.highest();
            any = true;
        } else {
            lo = std::min(lo, c.lowest());
            hi = std::max(hi, c.highest());
        }
    }
    if (!any)
        return ChainComplex::zero(ring);
    std::vector<int> ranks(hi - lo + 1, 0);
    std::map<int, IntMatrix> diff;
    for (int n = lo; n <= hi; ++n) {
        for (const auto& c : cs)
            ranks[n - lo] += c.rank(n);
    }
    for (int n = lo; n <= hi + 1; ++n) {
        std::vector<IntMatrix> blocks;
        bool nonzero = false;
        for (const auto& c : cs) {
            blocks.push_back(c.differential(n));
            nonzero = nonzero || !blocks.back().is_zero();
        }
        if (nonzero)
            diff[n] = block_diag(blocks);
    }
    return ChainComplex(ring, lo, std::move(ranks), std::move(diff), false);
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target,
                   std::map<int, IntMatrix> components, bool validate)
    : src_(std::move(source)), dst_(std::move(target)), comp_(std::move(components)) {
    if (!(src_.ring() == dst_.ring()))
        throw RingMismatchError("chain map over mixed rings");
    std::erase_if(comp_, [&](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [n, m] : comp_)
        if (m.rows() != dst_.rank(n) || m.cols() != src_.rank(n))
            throw Error("chain map component shape mismatch at degree " +
                        std::to_string(n));
    if (validate) {
        const long long p = src_.ring().p;
        auto equal_mod = [&](const IntMatrix& a, const IntMatrix& b) {
            bool eq = true;
            auto probe = [&](int r, int c, long long) {
                const long long w = a.at(r, c) - b.at(r, c);
                if (p == 0 ? w != 0 : w % p != 0)
                    eq = false;
            };
            a.for_each_nonzero(probe);
            b.for_each_nonzero(probe);
            return eq;
        };
        const int lo = std::min(src_.lowest(), dst_.lowest());
        const int hi = std::max(src_.highest(), dst_.highest());
        for (int n = lo; n <= hi; ++n) {
            if (!equal_mod(dst_.differential(n) * component(n),
                           component(n - 1) * src_.differential(n)))
                throw ValidationError(
                    "chain map does not commute with differentials at degree " +
                    std::to_string(n));
        }
    }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
    std::map<int, IntMatrix> comp;
    for (int n = c.lowest(); n <= c.highest(); ++n)
        if (c.rank(n) > 0)
            comp[n] = IntMatrix::identity(c.rank(n));
    return ChainMap(c, c, std::move(comp), false);
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
    return ChainMap(source, target, {}, false);
}

IntMatrix ChainMap::component(int degree) const {
    auto it = comp_.find(degree);
    if (it != comp_.end())
        return it->second;
    return IntMatrix::zero(dst_.rank(degree), src_.rank(degree));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    std::map<int, IntMatrix> comp;
    const int lo = std::min(f.source().lowest(), g.target().lowest());
    const int hi = std::max(f.source().highest(), g.target().highest());
    for (int n = lo; n <= hi; ++n) {
        IntMatrix m = g.component(n) * f.component(n);
        if (!m.is_zero())
            comp[n] = m;
    }
    return ChainMap(f.source(), g.target(), std::move(comp), false);
}

ChainComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    if (s.is_zero() && t.is_zero())
        return ChainComplex::zero(s.ring());
    const int lo = std::min(t.lowest(), s.lowest() + 1);
    const int hi = std::max(t.highest(), s.highest() + 1);
    std::vector<int> ranks;
    for (int n = lo; n <= hi; ++n)
        ranks.push_back(t.rank(n) + s.rank(n - 1));
    std::map<int, IntMatrix> diff;
    for (int n = lo; n <= hi + 1; ++n) {
        IntMatrix m = block_2x2(t.differential(n), f.component(n - 1),
                                IntMatrix::zero(s.rank(n - 2), t.rank(n)),
                                s.differential(n - 1).scaled(-1));
        if (!m.is_zero())
            diff[n] = m;
    }
    return ChainComplex(s.ring(), lo, std::move(ranks), std::move(diff), false);
}

bool is_quasi_iso(const ChainMap& f) { return homology(mapping_cone(f)).is_zero(); }

} // namespace verdier
