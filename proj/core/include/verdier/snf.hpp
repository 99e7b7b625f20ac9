#pragma once

#include <vector>

#include "verdier/matrix.hpp"

namespace verdier {

/// Result of a Smith decomposition: u * m * v = s with u, v unimodular and
/// s diagonal with a divisibility chain d1 | d2 | ...
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
};

/// Exact Smith normal form over Z. Pivoting prefers unit entries and low
/// fill-in. Arithmetic runs in checked 64-bit integers and transparently
/// restarts in arbitrary precision on overflow unless `allow_bigint` is off,
/// in which case ArithmeticOverflowError propagates.
SmithDecomposition smith_normal_form(const IntMatrix& m, bool allow_bigint = true);

/// The nonzero diagonal of the Smith form (all positive, divisibility chain),
/// without the unimodular factors. This is the homology workhorse.
std::vector<long long> invariant_factors(const IntMatrix& m, bool allow_bigint = true);

/// Rank of m over the prime field F_p.
int rank_mod_p(const IntMatrix& m, long long p);

/// Exact postcondition check, evaluated in arbitrary precision: u*m*v == s,
/// s diagonal with a divisibility chain, det(u), det(v) in {1, -1}.
bool verify_decomposition(const IntMatrix& m, const SmithDecomposition& d);

} // namespace verdier
