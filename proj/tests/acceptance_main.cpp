// Acceptance suite: one line per criterion, exit 0 only if every criterion
// passes. Heavy checks run with a worker pool sized by the JOBS environment
// variable (default: hardware concurrency).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "verdier/corpus.hpp"
#include "verdier/duality.hpp"
#include "verdier/json_io.hpp"
#include "verdier/parallel.hpp"
#include "verdier/snf.hpp"

using namespace verdier;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void finish(bool ok, const std::string& detail = "") {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        std::cout << "criterion " << number_ << " [" << title_ << "]: "
                  << (ok ? "PASS" : "FAIL") << " (" << ms << " ms)";
        if (!detail.empty())
            std::cout << " " << detail;
        std::cout << std::endl;
        if (!ok)
            ++failures;
    }

  private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
};

int jobs() {
    if (const char* env = std::getenv("JOBS"))
        return std::max(1, atoi(env));
    return std::max(1u, std::thread::hardware_concurrency());
}

ChainComplex unit_value() { return ChainComplex::concentrated(Ring::integers(), 0, 1); }

// 1. exhaustive main-theorem equivalence on <= 5 labeled elements
void criterion_1() {
    Criterion c(1, "main theorem, exhaustive universe on <= 5 elements");
    long long checked = 0, disagreements = 0;
    for (int n = 0; n <= 5; ++n) {
        const auto universe = all_posets(n);
        std::vector<char> bad(universe.size(), 0);
        parallel_for(static_cast<int>(universe.size()), jobs(), [&](int i) {
            CheckOptions opts;
            const bool iii = is_verdier(universe[i], opts).verdict;
            const bool ii = is_verdier_via_gorenstein(universe[i], opts).verdict;
            if (iii != ii)
                bad[i] = 1;
        });
        checked += static_cast<long long>(universe.size());
        for (char b : bad)
            disagreements += b;
    }
    std::ostringstream os;
    os << checked << " posets, " << disagreements << " disagreements";
    c.finish(disagreements == 0, os.str());
}

// 2. the named examples reproduce exactly
void criterion_2() {
    Criterion c(2, "named examples reproduce");
    bool ok = true;
    std::string detail;

    const FinitePoset nonreg = example_nonregular();
    const VerdictReport rep = is_verdier(nonreg);
    if (rep.verdict || rep.witnesses.empty() ||
        rep.witnesses[0].at("pair_low") != "0" ||
        rep.witnesses[0].at("pair_high") != "1" ||
        rep.witnesses[0].at("gamma_cohomology") != "H^0 = Z") {
        ok = false;
        detail += "[nonregular example] ";
    }

    for (int n = 1; n <= 3 && ok; ++n)
        if (!is_verdier(boundary_simplex_poset(n)).verdict) {
            ok = false;
            detail += "[boundary simplex " + std::to_string(n) + "] ";
        }
    for (int n = 3; n <= 8 && ok; ++n)
        if (!is_verdier(polygon_poset(n)).verdict) {
            ok = false;
            detail += "[polygon " + std::to_string(n) + "] ";
        }

    for (int k = 2; k <= 6 && ok; ++k) {
        const FinitePoset p = antichain(k).add_top();
        const int top = *p.greatest_element();
        HomologySummary expected;
        expected.set(-1, {k - 1, {}});
        if (!(homology(holim(interval_unit(p, top, top, Ring::integers())).complex()) ==
              expected)) {
            ok = false;
            detail += "[skyscraper family k=" + std::to_string(k) + "] ";
        }
    }
    c.finish(ok, detail);
}

// 3. cone corollary: Gorenstein* iff the coned poset is Verdier
void criterion_3() {
    Criterion c(3, "cone corollary on <= 4 elements plus the corpus");
    long long checked = 0, disagreements = 0;
    for (int n = 0; n <= 4; ++n) {
        const auto universe = all_posets(n);
        std::vector<char> bad(universe.size(), 0);
        parallel_for(static_cast<int>(universe.size()), jobs(), [&](int i) {
            if (!cone_check(universe[i]).verdict)
                bad[i] = 1;
        });
        checked += static_cast<long long>(universe.size());
        for (char b : bad)
            disagreements += b;
    }
    for (const CorpusEntry& e : corpus_entries(false)) {
        CheckOptions opts;
        opts.jobs = jobs();
        ++checked;
        if (!cone_check(e.poset, opts).verdict)
            ++disagreements;
    }
    std::ostringstream os;
    os << checked << " posets, " << disagreements << " disagreements";
    c.finish(disagreements == 0, os.str());
}

// 4. generator images under the duality functor
void criterion_4() {
    Criterion c(4, "generator images for Verdier corpus posets");
    bool ok = true;
    std::string detail;
    for (const CorpusEntry& e : corpus_entries(false)) {
        if (!e.expect_verdier.value_or(false) || e.poset.size() > 20)
            continue;
        CheckOptions opts;
        opts.jobs = jobs();
        const VerdictReport rep = generator_image_check(e.poset, opts);
        if (!rep.verdict) {
            ok = false;
            detail += "[" + e.name + "] ";
        }
    }
    c.finish(ok, detail);
}

// 5. poset cohomology equals order-complex cohomology
void criterion_5() {
    Criterion c(5, "poset vs. order-complex cohomology, 200 random posets");
    std::vector<char> bad(200, 0);
    parallel_for(200, jobs(), [&](int i) {
        const FinitePoset p = random_poset(1000 + i, 1 + i % 7);
        const HomologySummary lhs =
            homology(gamma(p, constant_diagram(p, unit_value())).complex());
        // unreduced cohomology of the order complex in nonpositive degrees
        const ChainComplex chains =
            order_complex(p).boundary_matrices(Ring::integers());
        std::vector<int> ranks;
        std::map<int, IntMatrix> diff;
        const int top = chains.highest();
        for (int n = top; n >= 0; --n)
            ranks.push_back(chains.rank(n));
        for (int n = 1; n <= top; ++n)
            diff[-(n - 1)] = chains.differential(n).transposed();
        const HomologySummary rhs =
            homology(ChainComplex(Ring::integers(), -top, ranks, diff));
        if (!(lhs == rhs))
            bad[i] = 1;
    });
    int disagreements = 0;
    for (char b : bad)
        disagreements += b;
    c.finish(disagreements == 0, std::to_string(disagreements) + " disagreements");
}

// 6. the two Gorenstein* checkers agree on the exhaustive universe
void criterion_6() {
    Criterion c(6, "Gorenstein* poset vs. order-complex checker, <= 5 elements");
    long long checked = 0, disagreements = 0;
    for (int n = 0; n <= 5; ++n) {
        const auto universe = all_posets(n);
        std::vector<char> bad(universe.size(), 0);
        parallel_for(static_cast<int>(universe.size()), jobs(), [&](int i) {
            const bool poset_side = is_gorenstein_star_poset(universe[i]).verdict;
            const bool complex_side = is_gorenstein_star_complex(
                order_complex(universe[i]), Ring::integers());
            if (poset_side != complex_side)
                bad[i] = 1;
        });
        checked += static_cast<long long>(universe.size());
        for (char b : bad)
            disagreements += b;
    }
    std::ostringstream os;
    os << checked << " posets, " << disagreements << " disagreements";
    c.finish(disagreements == 0, os.str());
}

// 7. limit iff colimit for diagrams over coned Gorenstein* posets
void criterion_7() {
    Criterion c(7, "limit iff colimit on Gorenstein* corpus posets");
    std::vector<FinitePoset> posets = {antichain(2), boundary_simplex_poset(1),
                                       boundary_simplex_poset(2),
                                       boundary_simplex_poset(3)};
    for (int n = 3; n <= 6; ++n)
        posets.push_back(polygon_poset(n));
    long long disagreements = 0, checked = 0;
    for (const FinitePoset& p : posets) {
        const FinitePoset box = p.add_bottom().add_top();
        std::vector<char> bad(50, 0);
        parallel_for(50, jobs(), [&](int i) {
            const Diagram f =
                random_interval_diagram(777 + i, box, Ring::integers());
            if (is_limit_diagram(f) != is_colimit_diagram(f))
                bad[i] = 1;
        });
        checked += 50;
        for (char b : bad)
            disagreements += b;
    }
    std::ostringstream os;
    os << checked << " diagrams, " << disagreements << " disagreements";
    c.finish(disagreements == 0, os.str());
}

// 8. hereditary Verdier subposets across the corpus
void criterion_8() {
    Criterion c(8, "hereditary Verdier subposets");
    bool ok = true;
    std::string detail;
    for (const CorpusEntry& e : corpus_entries(true)) {
        if (!e.expect_verdier.value_or(false))
            continue;
        CheckOptions opts;
        opts.jobs = jobs();
        const VerdictReport rep = hereditary_check(e.poset, opts);
        if (!rep.verdict) {
            ok = false;
            detail += "[" + e.name + "] ";
        }
    }
    c.finish(ok, detail);
}

// 9. the Poincare-sphere scale test
void criterion_9() {
    Criterion c(9, "Poincare homology sphere at scale");
    bool ok = true;
    std::string detail;
    const SimplicialComplex k = poincare_sphere_complex();
    if (!is_gorenstein_star_complex(k, Ring::integers())) {
        ok = false;
        detail += "[complex-side Gorenstein*] ";
    }
    const FinitePoset p = face_poset(k);
    if (p.size() != 392) {
        ok = false;
        detail += "[face poset size] ";
    }
    // condition (ii) in full on the coned poset
    CheckOptions opts;
    opts.jobs = jobs();
    const FinitePoset coned = p.add_top();
    if (!is_verdier_via_gorenstein(coned, opts).verdict) {
        ok = false;
        detail += "[condition (ii) on the coned poset] ";
    }
    // condition (iii) on a seeded sample of 200 pairs
    CheckOptions sampled = opts;
    sampled.sample = {{200, 2026}};
    const VerdictReport rep = is_verdier(coned, sampled);
    if (!rep.verdict) {
        ok = false;
        detail += "[sampled condition (iii)] ";
    }
    c.finish(ok, detail);
}

// 10. exact linear algebra soundness under fuzzing
void criterion_10() {
    Criterion c(10, "exact linear algebra fuzzing");
    std::atomic<long long> bad{0};
    parallel_for(10000, jobs(), [&](int i) {
        std::mt19937_64 rng(31337 + i);
        const int r = static_cast<int>(rng() % 7);
        const int cc = static_cast<int>(rng() % 7);
        std::vector<Triplet> ts;
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < cc; ++b)
                if (rng() % 2 == 0)
                    ts.push_back({a, b, static_cast<long long>(rng() % 19) - 9});
        const IntMatrix m = IntMatrix::from_triplets(r, cc, std::move(ts));
        const SmithDecomposition d = smith_normal_form(m);
        // u*m*v = s, unimodular factors and the divisibility chain, all
        // re-verified in exact big-integer arithmetic
        if (!verify_decomposition(m, d))
            ++bad;
    });
    parallel_for(1000, jobs(), [&](int i) {
        std::mt19937_64 rng(999 + i);
        // random direct sums of elementary complexes, then cone(id) acyclicity
        std::vector<ChainComplex> parts;
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < n; ++j) {
            const int deg = static_cast<int>(rng() % 5) - 2;
            if (rng() % 2 == 0)
                parts.push_back(ChainComplex::concentrated(
                    Ring::integers(), deg, 1 + static_cast<int>(rng() % 3)));
            else
                parts.push_back(ChainComplex(
                    Ring::integers(), deg, {1, 1},
                    {{deg + 1,
                      IntMatrix::from_rows({{static_cast<long long>(rng() % 7)}})}}));
        }
        const ChainComplex sum = direct_sum(parts);
        if (!homology(mapping_cone(ChainMap::identity(sum))).is_zero())
            ++bad;
        // d o d != 0 must be rejected
        try {
            ChainComplex(Ring::integers(), 0, {1, 1, 1},
                         {{1, IntMatrix::from_rows({{1}})},
                          {2, IntMatrix::from_rows({{1}})}});
            ++bad;
        } catch (const Error&) {
        }
    });
    c.finish(bad == 0, std::to_string(bad.load()) + " failures");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) +
                                      " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
