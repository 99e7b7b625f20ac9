#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verdier/matrix.hpp"

namespace verdier {

/// Coefficient ring: the integers (p == 0) or a prime field F_p.
struct Ring {
    long long p = 0;

    static Ring integers() { return Ring{0}; }
    static Ring prime_field(long long p);
    static Ring parse(const std::string& name);

    bool is_field() const { return p != 0; }
    std::string name() const { return p == 0 ? "Z" : "F" + std::to_string(p); }
    bool operator==(const Ring&) const = default;
};

/// Per-degree free rank and torsion divisors, the comparison currency for
/// every homological check in this library.
class HomologySummary {
  public:
    struct Group {
        long long free = 0;
        std::vector<long long> torsion; // each > 1, divisor chain

        bool is_zero() const { return free == 0 && torsion.empty(); }
        bool operator==(const Group&) const = default;
    };

    void set(int degree, Group g);
    Group at(int degree) const;
    bool is_zero() const;
    const std::map<int, Group>& groups() const { return groups_; }

    /// Degree of the single nonzero group, if the summary is concentrated.
    std::optional<int> concentrated_degree() const;

    HomologySummary shifted(int k) const;
    HomologySummary operator+(const HomologySummary& other) const;
    bool operator==(const HomologySummary&) const = default;

    std::string to_string() const;              // homological degrees
    std::string to_cohomological_string() const; // H^n = group at degree -n

  private:
    std::map<int, Group> groups_; // nonzero groups only
};

/// Bounded complex of finitely generated free modules, homological grading:
/// the differential at degree n maps C_n -> C_{n-1}.
class ChainComplex {
  public:
    ChainComplex() = default; // zero complex over Z

    ChainComplex(Ring ring, int lowest, std::vector<int> ranks,
                 std::map<int, IntMatrix> differentials, bool validate = true);

    static ChainComplex zero(Ring ring);
    static ChainComplex concentrated(Ring ring, int degree, int rank);

    Ring ring() const { return ring_; }
    int lowest() const { return lo_; }
    int highest() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
    int rank(int degree) const;
    bool is_zero() const;
    long long total_rank() const;

    /// Differential C_n -> C_{n-1}; a zero matrix of the right shape when absent.
    IntMatrix differential(int degree) const;
    bool has_differential(int degree) const { return diff_.count(degree) > 0; }

    bool operator==(const ChainComplex& other) const;

  private:
    Ring ring_ = Ring::integers();
    int lo_ = 0;
    std::vector<int> ranks_; // empty means the zero complex
    std::map<int, IntMatrix> diff_;

    void check_d_squared() const;
};

HomologySummary homology(const ChainComplex& c);
ChainComplex shift(const ChainComplex& c, int k);
ChainComplex direct_sum(const std::vector<ChainComplex>& cs);

/// Degreewise matrices commuting with the differentials.
class ChainMap {
  public:
    ChainMap(ChainComplex source, ChainComplex target,
             std::map<int, IntMatrix> components, bool validate = true);

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return dst_; }
    IntMatrix component(int degree) const;

  private:
    ChainComplex src_;
    ChainComplex dst_;
    std::map<int, IntMatrix> comp_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainComplex mapping_cone(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

} // namespace verdier
