#include "verdier/snf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace verdier {

namespace {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

template <class I>
I ck_add(const I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>)
        return checked_add(a, b);
    else
        return a + b;
}

template <class I>
I ck_mul(const I& a, const I& b) {
    if constexpr (std::is_same_v<I, long long>)
        return checked_mul(a, b);
    else
        return a * b;
}

template <class I>
I ck_neg(const I& a) {
    if constexpr (std::is_same_v<I, long long>)
        return checked_neg(a);
    else
        return -a;
}

template <class I>
I iabs(const I& a) {
    return a < 0 ? ck_neg(a) : a;
}

template <class I>
I igcd(I a, I b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        I t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long to_ll(long long v) { return v; }
long long to_ll(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw ArithmeticOverflowError("Smith form entry exceeds 64 bits");
    return static_cast<long long>(v);
}

/// Sparse elimination engine shared by the decomposition, the invariant
/// factor computation and the mod-p rank.
template <class I>
class SmithEngine {
  public:
    SmithEngine(const IntMatrix& m, bool track_uv)
        : nrows_(m.rows()), ncols_(m.cols()), track_(track_uv) {
        rows_.resize(nrows_);
        colrows_.resize(ncols_);
        m.for_each_nonzero([&](int r, int c, long long v) {
            rows_[r][c] = I(v);
            colrows_[c].insert(r);
        });
        for (int c = 0; c < ncols_; ++c)
            if (!colrows_[c].empty())
                order_.insert({static_cast<int>(colrows_[c].size()), c});
        if (track_) {
            urows_.resize(nrows_);
            for (int r = 0; r < nrows_; ++r)
                urows_[r][r] = I(1);
            vcols_.resize(ncols_);
            for (int c = 0; c < ncols_; ++c)
                vcols_[c][c] = I(1);
        }
    }

    void run() {
        while (!order_.empty()) {
            auto [nnz, c] = *order_.begin();
            if (nnz == 0) {
                order_.erase(order_.begin());
                continue;
            }
            auto [pr, pc] = choose_pivot();
            clean(pr, pc);
        }
        finish_chain();
    }

    std::vector<long long> diagonal() const {
        std::vector<long long> d;
        d.reserve(pivots_.size());
        for (const auto& p : pivots_)
            d.push_back(to_ll(p.value));
        return d;
    }

    SmithDecomposition decomposition() const {
        std::vector<Triplet> st, ut, vt;
        // permute pivots onto the leading diagonal
        std::vector<int> rowperm(nrows_, -1), colperm(ncols_, -1);
        for (size_t i = 0; i < pivots_.size(); ++i) {
            rowperm[pivots_[i].row] = static_cast<int>(i);
            colperm[pivots_[i].col] = static_cast<int>(i);
            st.push_back({static_cast<int>(i), static_cast<int>(i), to_ll(pivots_[i].value)});
        }
        int next = static_cast<int>(pivots_.size());
        for (int r = 0; r < nrows_; ++r)
            if (rowperm[r] < 0)
                rowperm[r] = next++;
        next = static_cast<int>(pivots_.size());
        for (int c = 0; c < ncols_; ++c)
            if (colperm[c] < 0)
                colperm[c] = next++;
        for (int r = 0; r < nrows_; ++r)
            for (const auto& [c, v] : urows_[r])
                ut.push_back({rowperm[r], c, to_ll(v)});
        for (int c = 0; c < ncols_; ++c)
            for (const auto& [r, v] : vcols_[c])
                vt.push_back({r, colperm[c], to_ll(v)});
        SmithDecomposition out;
        out.s = IntMatrix::from_triplets(nrows_, ncols_, std::move(st));
        out.u = IntMatrix::from_triplets(nrows_, nrows_, std::move(ut));
        out.v = IntMatrix::from_triplets(ncols_, ncols_, std::move(vt));
        return out;
    }

  private:
    struct Pivot {
        int row;
        int col;
        I value;
    };

    int nrows_;
    int ncols_;
    bool track_;
    std::vector<std::map<int, I>> rows_;
    std::vector<std::set<int>> colrows_;
    std::set<std::pair<int, int>> order_; // (column nnz, column)
    std::vector<std::map<int, I>> urows_;
    std::vector<std::map<int, I>> vcols_;
    std::vector<Pivot> pivots_;

    void order_erase(int c) {
        order_.erase({static_cast<int>(colrows_[c].size()), c});
    }
    void order_insert(int c) {
        if (!colrows_[c].empty())
            order_.insert({static_cast<int>(colrows_[c].size()), c});
    }

    void set_entry(int r, int c, const I& v) {
        auto it = rows_[r].find(c);
        if (v == 0) {
            if (it != rows_[r].end()) {
                rows_[r].erase(it);
                order_erase(c);
                colrows_[c].erase(r);
                order_insert(c);
            }
            return;
        }
        if (it == rows_[r].end()) {
            rows_[r][c] = v;
            order_erase(c);
            colrows_[c].insert(r);
            order_insert(c);
        } else {
            it->second = v;
        }
    }

    // row[dst] -= q * row[src]
    void row_op(int dst, int src, const I& q) {
        if (q == 0)
            return;
        std::vector<std::pair<int, I>> src_entries(rows_[src].begin(), rows_[src].end());
        for (const auto& [c, v] : src_entries) {
            I cur = 0;
            auto it = rows_[dst].find(c);
            if (it != rows_[dst].end())
                cur = it->second;
            set_entry(dst, c, ck_add(cur, ck_neg(ck_mul(q, v))));
        }
        if (track_) {
            for (const auto& [c, v] : urows_[src]) {
                I& slot = urows_[dst][c];
                slot = ck_add(slot, ck_neg(ck_mul(q, v)));
                if (slot == 0)
                    urows_[dst].erase(c);
            }
        }
    }

    // col[dst] -= q * col[src]
    void col_op(int dst, int src, const I& q) {
        if (q == 0)
            return;
        std::vector<int> rs(colrows_[src].begin(), colrows_[src].end());
        for (int r : rs) {
            const I v = rows_[r][src];
            I cur = 0;
            auto it = rows_[r].find(dst);
            if (it != rows_[r].end())
                cur = it->second;
            set_entry(r, dst, ck_add(cur, ck_neg(ck_mul(q, v))));
        }
        if (track_) {
            for (const auto& [r, v] : vcols_[src]) {
                I& slot = vcols_[dst][r];
                slot = ck_add(slot, ck_neg(ck_mul(q, v)));
                if (slot == 0)
                    vcols_[dst].erase(r);
            }
        }
    }

    void negate_row(int r) {
        for (auto& [c, v] : rows_[r])
            v = ck_neg(v);
        if (track_)
            for (auto& [c, v] : urows_[r])
                v = ck_neg(v);
    }

    std::pair<int, int> choose_pivot() {
        // Probe the sparsest few columns for a unit entry; otherwise take the
        // smallest-magnitude entry seen. Limits both fill-in and coefficient
        // growth.
        constexpr int kProbe = 12;
        int best_r = -1, best_c = -1;
        I best_v = 0;
        long long best_fill = -1;
        int probed = 0;
        for (auto it = order_.begin(); it != order_.end() && probed < kProbe; ++it, ++probed) {
            const int c = it->second;
            const long long cn = static_cast<long long>(colrows_[c].size());
            for (int r : colrows_[c]) {
                const I v = rows_[r].at(c);
                const long long fill =
                    (static_cast<long long>(rows_[r].size()) - 1) * (cn - 1);
                const bool better =
                    best_r < 0 || iabs(v) < iabs(best_v) ||
                    (iabs(v) == iabs(best_v) && fill < best_fill);
                if (better) {
                    best_r = r;
                    best_c = c;
                    best_v = v;
                    best_fill = fill;
                }
            }
            if (iabs(best_v) == 1 && probed >= 1)
                break;
        }
        return {best_r, best_c};
    }

    // Clears the pivot's column and row, moving the pivot when a remainder
    // turns out smaller, then retires it.
    void clean(int r, int c) {
        for (;;) {
            // column phase: reduce column c to a single entry
            while (colrows_[c].size() > 1) {
                int mr = -1;
                I mv = 0;
                for (int rr : colrows_[c]) {
                    const I v = rows_[rr].at(c);
                    if (mr < 0 || iabs(v) < iabs(mv)) {
                        mr = rr;
                        mv = v;
                    }
                }
                std::vector<int> others(colrows_[c].begin(), colrows_[c].end());
                for (int rr : others) {
                    if (rr == mr)
                        continue;
                    const I q = rows_[rr].at(c) / mv;
                    row_op(rr, mr, q);
                }
                r = mr;
            }
            r = *colrows_[c].begin();
            const I piv = rows_[r].at(c);
            // row phase: reduce all other entries of row r modulo the pivot
            std::vector<std::pair<int, I>> entries(rows_[r].begin(), rows_[r].end());
            int next_c = -1;
            I next_v = 0;
            for (const auto& [cc, vv] : entries) {
                if (cc == c)
                    continue;
                const I q = vv / piv;
                col_op(cc, c, q);
                auto it = rows_[r].find(cc);
                if (it != rows_[r].end()) {
                    if (next_c < 0 || iabs(it->second) < iabs(next_v)) {
                        next_c = cc;
                        next_v = it->second;
                    }
                }
            }
            if (next_c < 0) {
                retire(r, c, piv);
                return;
            }
            c = next_c;
        }
    }

    void retire(int r, int c, I v) {
        if (v < 0) {
            negate_row(r);
            v = ck_neg(v);
        }
        pivots_.push_back({r, c, v});
        order_erase(c);
        colrows_[c].clear();
        rows_[r].clear();
    }

    // Enforce the divisibility chain d1 | d2 | ... on the retired pivots.
    void finish_chain() {
        if (pivots_.empty())
            return;
        std::sort(pivots_.begin(), pivots_.end(),
                  [](const Pivot& a, const Pivot& b) { return iabs(a.value) < iabs(b.value); });
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i + 1 < pivots_.size(); ++i) {
                for (size_t j = i + 1; j < pivots_.size(); ++j) {
                    I a = pivots_[i].value, b = pivots_[j].value;
                    if (b % a == 0)
                        continue;
                    changed = true;
                    const I g = igcd(a, b);
                    const I l = (a / g) * b;
                    if (track_)
                        chain_fix_ops(pivots_[i], pivots_[j], g);
                    pivots_[i].value = g;
                    pivots_[j].value = l;
                }
            }
        }
    }

    // Realize (a, b) -> (gcd, lcm) on the diagonal with unimodular ops:
    //   [[a,0],[0,b]] --r_i += r_j--> [[a,b],[0,b]]
    //   column mix by [[x, -b/g],[y, a/g]] (det 1, g = x a + y b)
    //   --> [[g,0],[y b, lcm]], then clear the (j,i) entry with a row op.
    void chain_fix_ops(const Pivot& pi, const Pivot& pj, const I& g) {
        const I a = pi.value, b = pj.value;
        I x, y;
        ext_gcd(a, b, x, y);
        const int ri = pi.row, rj = pj.row, ci = pi.col, cj = pj.col;
        // the pivot rows/cols were cleared from the working matrix; operate on u/v only,
        // which is valid because s is diagonal outside the 2x2 block.
        // row_i += row_j on S corresponds to U: row ri += row rj.
        add_row_tracked(ri, rj, I(1));
        // column mix on (ci, cj)
        std::map<int, I> vci = vcols_[ci], vcj = vcols_[cj];
        mix_into(vcols_[ci], vci, x, vcj, y);
        mix_into(vcols_[cj], vci, ck_neg(b / g), vcj, a / g);
        // clear S[rj][ci] = y*b with row rj -= (y*b/g) * row ri
        add_row_tracked(rj, ri, ck_neg(ck_mul(y, b) / g));
        // note: value updates happen in finish_chain
    }

    void add_row_tracked(int dst, int src, const I& coef) {
        if (!track_)
            return;
        for (const auto& [c, v] : urows_[src]) {
            I& slot = urows_[dst][c];
            slot = ck_add(slot, ck_mul(coef, v));
            if (slot == 0)
                urows_[dst].erase(c);
        }
    }

    static void mix_into(std::map<int, I>& out, const std::map<int, I>& a, const I& ca,
                         const std::map<int, I>& b, const I& cb) {
        out.clear();
        for (const auto& [r, v] : a) {
            I& slot = out[r];
            slot = ck_add(slot, ck_mul(ca, v));
        }
        for (const auto& [r, v] : b) {
            I& slot = out[r];
            slot = ck_add(slot, ck_mul(cb, v));
        }
        std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    }

    static void ext_gcd(const I& a, const I& b, I& x, I& y) {
        I old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const I q = old_r / r;
            I tmp = ck_add(old_r, ck_neg(ck_mul(q, r)));
            old_r = r;
            r = tmp;
            tmp = ck_add(old_s, ck_neg(ck_mul(q, s)));
            old_s = s;
            s = tmp;
            tmp = ck_add(old_t, ck_neg(ck_mul(q, t)));
            old_t = t;
            t = tmp;
        }
        if (old_r < 0) {
            old_s = ck_neg(old_s);
            old_t = ck_neg(old_t);
        }
        x = old_s;
        y = old_t;
    }
};

template <class I>
std::vector<long long> run_factors(const IntMatrix& m) {
    SmithEngine<I> eng(m, false);
    eng.run();
    auto d = eng.diagonal();
    std::sort(d.begin(), d.end());
    return d;
}

template <class I>
SmithDecomposition run_decomposition(const IntMatrix& m) {
    SmithEngine<I> eng(m, true);
    eng.run();
    return eng.decomposition();
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m, bool allow_bigint) {
    try {
        return run_decomposition<long long>(m);
    } catch (const ArithmeticOverflowError&) {
        if (!allow_bigint)
            throw;
        return run_decomposition<BigInt>(m);
    }
}

std::vector<long long> invariant_factors(const IntMatrix& m, bool allow_bigint) {
    try {
        return run_factors<long long>(m);
    } catch (const ArithmeticOverflowError&) {
        if (!allow_bigint)
            throw;
        return run_factors<BigInt>(m);
    }
}

namespace {

using BigRows = std::vector<std::vector<BigInt>>;

BigRows to_big(const IntMatrix& m) {
    BigRows out(m.rows(), std::vector<BigInt>(m.cols(), 0));
    m.for_each_nonzero([&](int r, int c, long long v) { out[r][c] = v; });
    return out;
}

BigRows big_mul(const BigRows& a, const BigRows& b) {
    const size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    BigRows out(n, std::vector<BigInt>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0)
                continue;
            for (size_t c = 0; c < m; ++c)
                out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

// fraction-free Bareiss determinant
BigInt big_det(BigRows m) {
    const size_t n = m.size();
    if (n == 0)
        return 1;
    BigInt prev = 1;
    long long sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

bool verify_decomposition(const IntMatrix& m, const SmithDecomposition& d) {
    if (d.u.rows() != m.rows() || d.u.cols() != m.rows() || d.v.rows() != m.cols() ||
        d.v.cols() != m.cols() || d.s.rows() != m.rows() || d.s.cols() != m.cols())
        return false;
    const BigRows prod = big_mul(big_mul(to_big(d.u), to_big(m)), to_big(d.v));
    const BigRows s = to_big(d.s);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (prod[r][c] != s[r][c])
                return false;
    long long prev = 0;
    bool chain_ok = true;
    d.s.for_each_nonzero([&](int r, int c, long long v) {
        if (r != c || v <= 0 || (prev != 0 && v % prev != 0))
            chain_ok = false;
        prev = v;
    });
    if (!chain_ok)
        return false;
    const BigInt du = big_det(to_big(d.u));
    const BigInt dv = big_det(to_big(d.v));
    return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

int rank_mod_p(const IntMatrix& m, long long p) {
    if (p <= 1)
        throw Error("rank_mod_p needs a prime modulus");
    auto norm = [&](long long v) { return ((v % p) + p) % p; };
    // modular inverse by extended gcd
    auto inv = [&](long long a) {
        long long old_r = p, r = norm(a), old_t = 0, t = 1;
        while (r != 0) {
            const long long q = old_r / r;
            long long tmp = old_r - q * r;
            old_r = r;
            r = tmp;
            tmp = old_t - q * t;
            old_t = t;
            t = tmp;
        }
        if (old_r != 1)
            throw Error("modulus is not prime");
        return norm(old_t);
    };

    std::vector<std::map<int, long long>> rows(m.rows());
    std::vector<std::set<int>> colrows(m.cols());
    m.for_each_nonzero([&](int r, int c, long long v) {
        const long long w = norm(v);
        if (w != 0) {
            rows[r][c] = w;
            colrows[c].insert(r);
        }
    });
    int rank = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (colrows[c].empty())
            continue;
        // pick the sparsest row in this column
        int pr = -1;
        size_t best = SIZE_MAX;
        for (int r : colrows[c])
            if (rows[r].size() < best) {
                best = rows[r].size();
                pr = r;
            }
        ++rank;
        const long long pinv = inv(rows[pr][c]);
        std::vector<int> others(colrows[c].begin(), colrows[c].end());
        for (int r : others) {
            if (r == pr)
                continue;
            const long long q = norm(rows[r][c] * pinv % p);
            for (const auto& [cc, vv] : rows[pr]) {
                long long& slot = rows[r][cc];
                slot = norm(slot - q * vv % p);
                if (slot == 0) {
                    rows[r].erase(cc);
                    colrows[cc].erase(r);
                } else if (colrows[cc].find(r) == colrows[cc].end()) {
                    colrows[cc].insert(r);
                }
            }
        }
        for (const auto& [cc, vv] : rows[pr])
            colrows[cc].erase(pr);
        rows[pr].clear();
    }
    return rank;
}

} // namespace verdier
