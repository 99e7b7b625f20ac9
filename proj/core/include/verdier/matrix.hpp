#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "verdier/errors.hpp"

namespace verdier {

/// Overflow-checked 64-bit arithmetic used throughout the exact kernels.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflowError("64-bit addition overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflowError("64-bit multiplication overflow");
    return r;
}

inline long long checked_neg(long long a) {
    if (a == INT64_MIN)
        throw ArithmeticOverflowError("64-bit negation overflow");
    return -a;
}

struct Triplet {
    int row;
    int col;
    long long value;
};

/// Exact integer matrix. Small or dense matrices are stored row-major,
/// large sparse ones as CSR; the choice is made at construction and is
/// invisible through the interface.
class IntMatrix {
  public:
    IntMatrix() = default;

    static IntMatrix zero(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);
    static IntMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long nnz() const;
    bool is_zero() const { return nnz() == 0; }

    long long at(int r, int c) const;

    /// Visits every stored nonzero as (row, col, value), row-major order.
    void for_each_nonzero(const std::function<void(int, int, long long)>& fn) const;

    IntMatrix transposed() const;
    IntMatrix scaled(long long s) const;
    std::vector<std::vector<long long>> to_rows() const;
    std::vector<Triplet> to_triplets() const;

    bool operator==(const IntMatrix& other) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  private:
    int rows_ = 0;
    int cols_ = 0;
    bool dense_ = true;
    std::vector<long long> d_;        // dense storage, row-major
    std::vector<int> rowptr_;         // CSR storage
    std::vector<int> colidx_;
    std::vector<long long> val_;

    void build(int rows, int cols, std::vector<Triplet>&& entries);
};

/// Stacks blocks [[a, b], [c, d]] with compatible shapes.
IntMatrix block_2x2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                    const IntMatrix& d);

/// Block-diagonal assembly of arbitrarily many matrices.
IntMatrix block_diag(const std::vector<IntMatrix>& blocks);

} // namespace verdier
