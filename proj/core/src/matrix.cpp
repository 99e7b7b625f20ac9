#include "verdier/matrix.hpp"

#include <algorithm>
#include <unordered_map>

namespace verdier {

namespace {
// Keep small matrices dense; switch to CSR once they are large and sparse.
constexpr long long kDenseCellCap = 1 << 14;
constexpr double kDensityThreshold = 0.25;
} // namespace

void IntMatrix::build(int rows, int cols, std::vector<Triplet>&& entries) {
    rows_ = rows;
    cols_ = cols;
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    // merge duplicates
    std::vector<Triplet> merged;
    merged.reserve(entries.size());
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw Error("matrix triplet out of range");
        if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col)
            merged.back().value = checked_add(merged.back().value, t.value);
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Triplet& t) { return t.value == 0; });

    const long long cells = static_cast<long long>(rows) * cols;
    const double density = cells == 0 ? 0.0 : static_cast<double>(merged.size()) / cells;
    dense_ = cells <= kDenseCellCap || density >= kDensityThreshold;
    if (dense_) {
        d_.assign(static_cast<size_t>(cells), 0);
        for (const auto& t : merged)
            d_[static_cast<size_t>(t.row) * cols + t.col] = t.value;
    } else {
        rowptr_.assign(rows + 1, 0);
        colidx_.reserve(merged.size());
        val_.reserve(merged.size());
        for (const auto& t : merged)
            ++rowptr_[t.row + 1];
        for (int r = 0; r < rows; ++r)
            rowptr_[r + 1] += rowptr_[r];
        for (const auto& t : merged) {
            colidx_.push_back(t.col);
            val_.push_back(t.value);
        }
    }
}

IntMatrix IntMatrix::zero(int rows, int cols) {
    IntMatrix m;
    m.build(rows, cols, {});
    return m;
}

IntMatrix IntMatrix::identity(int n) {
    std::vector<Triplet> ts;
    ts.reserve(n);
    for (int i = 0; i < n; ++i)
        ts.push_back({i, i, 1});
    IntMatrix m;
    m.build(n, n, std::move(ts));
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    std::vector<Triplet> ts;
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            if (rows[i][j] != 0)
                ts.push_back({i, j, rows[i][j]});
    }
    IntMatrix m;
    m.build(r, c, std::move(ts));
    return m;
}

IntMatrix IntMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
    IntMatrix m;
    m.build(rows, cols, std::move(entries));
    return m;
}

long long IntMatrix::nnz() const {
    if (dense_) {
        long long n = 0;
        for (long long v : d_)
            n += v != 0;
        return n;
    }
    return static_cast<long long>(val_.size());
}

long long IntMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw Error("matrix index out of range");
    if (dense_)
        return d_[static_cast<size_t>(r) * cols_ + c];
    const auto begin = colidx_.begin() + rowptr_[r];
    const auto end = colidx_.begin() + rowptr_[r + 1];
    const auto it = std::lower_bound(begin, end, c);
    if (it != end && *it == c)
        return val_[static_cast<size_t>(it - colidx_.begin())];
    return 0;
}

void IntMatrix::for_each_nonzero(
    const std::function<void(int, int, long long)>& fn) const {
    if (dense_) {
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) {
                const long long v = d_[static_cast<size_t>(r) * cols_ + c];
                if (v != 0)
                    fn(r, c, v);
            }
        return;
    }
    for (int r = 0; r < rows_; ++r)
        for (int k = rowptr_[r]; k < rowptr_[r + 1]; ++k)
            fn(r, colidx_[k], val_[k]);
}

IntMatrix IntMatrix::transposed() const {
    std::vector<Triplet> ts;
    ts.reserve(static_cast<size_t>(nnz()));
    for_each_nonzero([&](int r, int c, long long v) { ts.push_back({c, r, v}); });
    IntMatrix m;
    m.build(cols_, rows_, std::move(ts));
    return m;
}

IntMatrix IntMatrix::scaled(long long s) const {
    std::vector<Triplet> ts;
    ts.reserve(static_cast<size_t>(nnz()));
    for_each_nonzero(
        [&](int r, int c, long long v) { ts.push_back({r, c, checked_mul(v, s)}); });
    IntMatrix m;
    m.build(rows_, cols_, std::move(ts));
    return m;
}

std::vector<std::vector<long long>> IntMatrix::to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_, 0));
    for_each_nonzero([&](int r, int c, long long v) { out[r][c] = v; });
    return out;
}

std::vector<Triplet> IntMatrix::to_triplets() const {
    std::vector<Triplet> ts;
    ts.reserve(static_cast<size_t>(nnz()));
    for_each_nonzero([&](int r, int c, long long v) { ts.push_back({r, c, v}); });
    return ts;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        return false;
    return to_triplets().size() == other.to_triplets().size() &&
           [&] {
               bool eq = true;
               for_each_nonzero([&](int r, int c, long long v) {
                   if (other.at(r, c) != v)
                       eq = false;
               });
               return eq;
           }();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw Error("matrix shape mismatch in product");
    // row-sparse accumulation: result row i = sum_k a(i,k) * b-row(k)
    std::vector<std::vector<std::pair<int, long long>>> browse(b.rows());
    b.for_each_nonzero(
        [&](int r, int c, long long v) { browse[r].push_back({c, v}); });
    std::vector<Triplet> ts;
    std::unordered_map<int, long long> acc;
    int current = -1;
    auto flush = [&]() {
        for (const auto& [c, v] : acc)
            if (v != 0)
                ts.push_back({current, c, v});
        acc.clear();
    };
    // gather a's nonzeros grouped by row
    std::vector<Triplet> ats = a.to_triplets();
    for (const auto& t : ats) {
        if (t.row != current) {
            if (current >= 0)
                flush();
            current = t.row;
        }
        for (const auto& [c, v] : browse[t.col]) {
            long long& slot = acc[c];
            slot = checked_add(slot, checked_mul(t.value, v));
        }
    }
    if (current >= 0)
        flush();
    return IntMatrix::from_triplets(a.rows(), b.cols(), std::move(ts));
}

IntMatrix block_2x2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                    const IntMatrix& d) {
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
        b.cols() != d.cols())
        throw Error("block shapes mismatch");
    std::vector<Triplet> ts;
    const int r0 = a.rows();
    const int c0 = a.cols();
    a.for_each_nonzero([&](int r, int cc, long long v) { ts.push_back({r, cc, v}); });
    b.for_each_nonzero([&](int r, int cc, long long v) { ts.push_back({r, cc + c0, v}); });
    c.for_each_nonzero([&](int r, int cc, long long v) { ts.push_back({r + r0, cc, v}); });
    d.for_each_nonzero(
        [&](int r, int cc, long long v) { ts.push_back({r + r0, cc + c0, v}); });
    return IntMatrix::from_triplets(a.rows() + c.rows(), a.cols() + b.cols(),
                                    std::move(ts));
}

IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    std::vector<Triplet> ts;
    int r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        b.for_each_nonzero(
            [&](int r, int c, long long v) { ts.push_back({r + r0, c + c0, v}); });
        r0 += b.rows();
        c0 += b.cols();
    }
    return IntMatrix::from_triplets(rows, cols, std::move(ts));
}

} // namespace verdier
