#include "verdier/duality.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "verdier/parallel.hpp"

namespace verdier {

namespace {

class Stopwatch {
  public:
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

using Row = std::map<std::string, std::string>;

} // namespace

OpDiagram dualize(const Diagram& f) {
    const FinitePoset& P = f.base();
    std::vector<TotalizationComplex> tots;
    tots.reserve(P.size());
    std::vector<ChainComplex> at;
    for (int p = 0; p < P.size(); ++p) {
        std::vector<char> above(P.size(), 0);
        for (int q : P.up_set(p))
            above[q] = 1;
        tots.push_back(holim_supported(f, above));
        at.push_back(tots.back().complex());
    }
    // for p' covered by p, the support P_{>=p'} contains P_{>=p}: the edge
    // at(p) -> at(p') is the identity on the common slots
    std::map<std::pair<int, int>, DegreeMaps> edges;
    for (const auto& [lo, hi] : P.covers()) {
        DegreeMaps m = slot_transfer(tots[hi], P, tots[lo], P);
        if (!m.empty())
            edges[{lo, hi}] = std::move(m);
    }
    return OpDiagram(P, std::move(at), std::move(edges));
}

HomologySummary interval_gamma_homology(const FinitePoset& p, int lo, int hi, Ring ring) {
    const Diagram unit = interval_unit(p, lo, hi, ring);
    std::vector<char> allowed(p.size(), 1);
    return homology(holim_supported(unit, allowed).complex());
}

namespace {

struct PairSelection {
    std::vector<std::pair<int, int>> pairs;
    std::optional<unsigned long long> seed;
    bool sampled = false;
};

PairSelection select_pairs(const FinitePoset& p, const CheckOptions& opts) {
    PairSelection sel;
    sel.pairs = p.comparable_pairs();
    if (p.size() <= opts.full_check_bound || !opts.sample)
        return sel;
    const auto [count, seed] = *opts.sample;
    std::mt19937_64 rng(seed);
    std::shuffle(sel.pairs.begin(), sel.pairs.end(), rng);
    if (static_cast<int>(sel.pairs.size()) > count)
        sel.pairs.resize(count);
    std::sort(sel.pairs.begin(), sel.pairs.end());
    sel.seed = seed;
    sel.sampled = true;
    return sel;
}

} // namespace

VerdictReport is_verdier(const FinitePoset& p, const CheckOptions& opts) {
    Stopwatch clock;
    VerdictReport rep;
    rep.property = "verdier";
    if (p.size() > opts.full_check_bound && !opts.sample) {
        // the Gorenstein checker carries the verdict; the vanishing check is
        // reported as skipped, never as a silent partial pass
        VerdictReport inner = is_verdier_via_gorenstein(p, opts);
        rep.verdict = inner.verdict;
        rep.witnesses.push_back(
            {{"check", "interval-vanishing"},
             {"status", "skipped: poset exceeds the full-check bound and no pair "
                        "sample was requested"}});
        rep.witnesses.push_back({{"check", "gorenstein-below-every-element"},
                                 {"verdict", inner.verdict ? "true" : "false"}});
        for (const auto& w : inner.witnesses)
            rep.witnesses.push_back(w);
        rep.timing_ms = clock.ms();
        return rep;
    }
    const PairSelection sel = select_pairs(p, opts);
    rep.seed = sel.seed;
    std::vector<std::optional<HomologySummary>> failures(sel.pairs.size());
    parallel_for(static_cast<int>(sel.pairs.size()), opts.jobs, [&](int i) {
        const auto [a, b] = sel.pairs[i];
        HomologySummary h = interval_gamma_homology(p, a, b, opts.ring);
        if (!h.is_zero())
            failures[i] = std::move(h);
    });
    rep.verdict = true;
    for (size_t i = 0; i < sel.pairs.size(); ++i) {
        if (!failures[i])
            continue;
        rep.verdict = false;
        rep.witnesses.push_back({{"pair_low", p.element(sel.pairs[i].first)},
                                 {"pair_high", p.element(sel.pairs[i].second)},
                                 {"gamma_homology", failures[i]->to_string()},
                                 {"gamma_cohomology", failures[i]->to_cohomological_string()}});
        break;
    }
    if (rep.verdict)
        rep.witnesses.push_back(
            {{"pairs_checked", std::to_string(sel.pairs.size())},
             {"mode", sel.sampled ? "sampled" : "full"},
             {"ring", opts.ring.name()}});
    rep.timing_ms = clock.ms();
    return rep;
}

VerdictReport is_gorenstein_star_poset(const FinitePoset& p, const CheckOptions& opts) {
    Stopwatch clock;
    VerdictReport rep;
    rep.property = "gorenstein-star";
    const FinitePoset b = p.add_bottom().add_top();
    const auto pairs = b.comparable_pairs();
    std::vector<std::optional<HomologySummary>> failures(pairs.size());
    parallel_for(static_cast<int>(pairs.size()), opts.jobs, [&](int i) {
        const auto [lo, hi] = pairs[i];
        const SimplicialComplex k = order_complex(b.induced(b.open_interval(lo, hi)));
        if (!is_sphere_homology(k, opts.ring))
            failures[i] = reduced_homology(k, opts.ring);
    });
    rep.verdict = true;
    for (size_t i = 0; i < pairs.size(); ++i) {
        if (!failures[i])
            continue;
        rep.verdict = false;
        rep.witnesses.push_back({{"pair_low", b.element(pairs[i].first)},
                                 {"pair_high", b.element(pairs[i].second)},
                                 {"interval_reduced_homology", failures[i]->to_string()}});
        break;
    }
    if (rep.verdict)
        rep.witnesses.push_back({{"pairs_checked", std::to_string(pairs.size())},
                                 {"ring", opts.ring.name()}});
    rep.timing_ms = clock.ms();
    return rep;
}

VerdictReport is_verdier_via_gorenstein(const FinitePoset& p, const CheckOptions& opts) {
    Stopwatch clock;
    VerdictReport rep;
    rep.property = "verdier-via-gorenstein";
    CheckOptions inner = opts;
    inner.jobs = 1;
    std::vector<std::optional<VerdictReport>> failures(p.size());
    parallel_for(p.size(), opts.jobs, [&](int q) {
        const FinitePoset below = p.induced(p.strict_down(q));
        VerdictReport sub = is_gorenstein_star_poset(below, inner);
        if (!sub.verdict)
            failures[q] = std::move(sub);
    });
    rep.verdict = true;
    for (int q = 0; q < p.size(); ++q) {
        if (!failures[q])
            continue;
        rep.verdict = false;
        Row row{{"element", p.element(q)},
                {"reason", "P_{<p} is not Gorenstein*"}};
        if (!failures[q]->witnesses.empty())
            for (const auto& [k, v] : failures[q]->witnesses.front())
                row["interval_" + k] = v;
        rep.witnesses.push_back(std::move(row));
        break;
    }
    if (rep.verdict)
        rep.witnesses.push_back({{"elements_checked", std::to_string(p.size())},
                                 {"ring", opts.ring.name()}});
    rep.timing_ms = clock.ms();
    return rep;
}

VerdictReport main_theorem_check(const FinitePoset& p, const CheckOptions& opts) {
    Stopwatch clock;
    VerdictReport rep;
    rep.property = "main-theorem-equivalence";
    const VerdictReport gor = is_verdier_via_gorenstein(p, opts);
    VerdictReport van;
    bool vanishing_ran = true;
    if (p.size() > opts.full_check_bound && !opts.sample) {
        vanishing_ran = false;
    } else {
        van = is_verdier(p, opts);
        rep.seed = van.seed;
    }
    rep.verdict = gor.verdict;
    rep.consistent = !vanishing_ran || (van.verdict == gor.verdict);
    rep.witnesses.push_back({{"condition", "gorenstein-below-every-element"},
                             {"verdict", gor.verdict ? "true" : "false"}});
    rep.witnesses.push_back(
        {{"condition", "interval-vanishing"},
         {"verdict", vanishing_ran ? (van.verdict ? "true" : "false") : "skipped"}});
    if (!rep.consistent) {
        Row row{{"inconsistency", "the two equivalent conditions disagree (internal bug)"}};
        for (const auto& w : van.witnesses)
            for (const auto& [k, v] : w)
                row["vanishing_" + k] = v;
        rep.witnesses.push_back(std::move(row));
    } else if (!rep.verdict) {
        for (const auto& w : (vanishing_ran ? van : gor).witnesses)
            rep.witnesses.push_back(w);
    }
    rep.timing_ms = clock.ms();
    return rep;
}

VerdictReport cone_check(const FinitePoset& p, const CheckOptions& opts) {
    Stopwatch clock;
    VerdictReport rep;
    rep.property = "cone-corollary";
    const VerdictReport gor = is_gorenstein_star_poset(p, opts);
    const VerdictReport van = is_verdier(p.add_top(), opts);
    rep.seed = van.seed;
    rep.verdict = gor.verdict == van.verdict;
    rep.consistent = rep.verdict;
    rep.witnesses.push_back({{"gorenstein_star", gor.verdict ? "true" : "false"},
                             {"verdier_after_adding_top", van.verdict ? "true" : "false"}});
    rep.timing_ms = clock.ms();
    return rep;
}

VerdictReport generator_image_check(const FinitePoset& p, const CheckOptions& opts) {
    Stopwatch clock;
    if (!is_verdier(p, opts).verdict)
        throw PreconditionError("generator images are only predicted for Verdier posets");
    VerdictReport rep;
    rep.property = "generator-images";
    std::vector<std::optional<Row>> failures(p.size());
    parallel_for(p.size(), opts.jobs, [&](int q) {
        const Diagram gen =
            corep_sheaf(p, q, ChainComplex::concentrated(opts.ring, 0, 1));
        const OpDiagram dual = dualize(gen);
        const int expected_degree = -p.chain_length_to(q);
        for (int r = 0; r < p.size(); ++r) {
            const HomologySummary h = homology(dual.at(r));
            HomologySummary want;
            if (r == q)
                want.set(expected_degree, {1, {}});
            if (!(h == want)) {
                failures[q] = Row{{"generator_at", p.element(q)},
                                  {"value_at", p.element(r)},
                                  {"expected", want.to_string()},
                                  {"found", h.to_string()}};
                return;
            }
        }
    });
    rep.verdict = true;
    for (int q = 0; q < p.size(); ++q) {
        if (!failures[q])
            continue;
        rep.verdict = false;
        rep.witnesses.push_back(*failures[q]);
        break;
    }
    if (rep.verdict)
        rep.witnesses.push_back({{"generators_checked", std::to_string(p.size())}});
    rep.timing_ms = clock.ms();
    return rep;
}

VerdictReport hereditary_check(const FinitePoset& p, const CheckOptions& opts) {
    Stopwatch clock;
    if (!is_verdier(p, opts).verdict)
        throw PreconditionError("hereditary properties are only asserted for Verdier posets");
    VerdictReport rep;
    rep.property = "hereditary-verdier";
    CheckOptions inner = opts;
    inner.jobs = 1;
    std::vector<std::optional<Row>> failures(p.size());
    parallel_for(p.size(), opts.jobs, [&](int q) {
        const FinitePoset above = p.induced(p.strict_up(q));
        if (!is_verdier(above, inner).verdict) {
            failures[q] = Row{{"element", p.element(q)}, {"subposet", "P_{>p}"}};
            return;
        }
        const FinitePoset below = p.induced(p.down_set(q));
        if (!is_verdier(below, inner).verdict)
            failures[q] = Row{{"element", p.element(q)}, {"subposet", "P_{<=p}"}};
    });
    rep.verdict = true;
    for (int q = 0; q < p.size(); ++q) {
        if (!failures[q])
            continue;
        rep.verdict = false;
        rep.witnesses.push_back(*failures[q]);
        break;
    }
    if (rep.verdict)
        rep.witnesses.push_back({{"elements_checked", std::to_string(p.size())}});
    rep.timing_ms = clock.ms();
    return rep;
}

VerdictReport limit_colimit_check(const FinitePoset& p, const Diagram& f,
                                  const CheckOptions& opts) {
    Stopwatch clock;
    if (!is_gorenstein_star_poset(p, opts).verdict)
        throw PreconditionError("the limit-colimit equivalence needs a Gorenstein* poset");
    const DiagramReport valid = f.validate();
    if (!valid.ok)
        throw PreconditionError("invalid diagram: " + valid.message);
    VerdictReport rep;
    rep.property = "limit-iff-colimit";
    const bool lim = is_limit_diagram(f);
    const bool colim = is_colimit_diagram(f);
    rep.verdict = lim == colim;
    rep.consistent = rep.verdict;
    rep.witnesses.push_back({{"is_limit", lim ? "true" : "false"},
                             {"is_colimit", colim ? "true" : "false"}});
    rep.timing_ms = clock.ms();
    return rep;
}

std::map<std::pair<int, int>, HomologySummary> vanishing_table(const FinitePoset& p,
                                                               const CheckOptions& opts) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.leq(a, b))
                pairs.push_back({a, b});
    std::vector<HomologySummary> results(pairs.size());
    parallel_for(static_cast<int>(pairs.size()), opts.jobs, [&](int i) {
        results[i] = interval_gamma_homology(p, pairs[i].first, pairs[i].second, opts.ring);
    });
    std::map<std::pair<int, int>, HomologySummary> out;
    for (size_t i = 0; i < pairs.size(); ++i)
        out[pairs[i]] = std::move(results[i]);
    return out;
}

} // namespace verdier
