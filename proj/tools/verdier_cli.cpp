// Command-line front end: decide Verdier/Gorenstein* properties, compute
// poset cohomology and duals, generate corpus objects, re-verify the corpus.
//
// Exit codes: 0 the property holds / success, 1 the property fails or a
// corpus mismatch, 2 malformed input, 3 internal inconsistency between the
// two equivalent deciders.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "verdier/corpus.hpp"
#include "verdier/duality.hpp"
#include "verdier/json_io.hpp"

using namespace verdier;

namespace {

struct GlobalFlags {
    std::string ring = "Z";
    int jobs = 1;
    std::string format = "text";
    int full_check_bound = 40;
    int sample_pairs = 0;
    unsigned long long seed = 0;
    bool seed_given = false;

    CheckOptions options() const {
        CheckOptions o;
        o.ring = Ring::parse(ring);
        o.jobs = jobs;
        o.full_check_bound = full_check_bound;
        if (sample_pairs > 0)
            o.sample = {{sample_pairs, seed_given ? seed : 0}};
        return o;
    }
};

void add_global_flags(CLI::App* cmd, GlobalFlags& g) {
    cmd->add_option("--ring", g.ring, "coefficient ring: Z or F<p>")
        ->default_val("Z");
    cmd->add_option("--jobs", g.jobs, "worker threads")->default_val(1);
    cmd->add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("text");
    cmd->add_option("--full-check-bound", g.full_check_bound,
                    "largest poset checked pair-exhaustively")
        ->default_val(40);
    cmd->add_option("--sample-pairs", g.sample_pairs,
                    "sample this many pairs on oversized posets");
    cmd->add_option("--seed", g.seed, "sampling seed")
        ->each([&g](const std::string&) { g.seed_given = true; });
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit_report(const VerdictReport& rep, const GlobalFlags& g) {
    if (g.format == "json")
        std::cout << report_to_json(rep) << "\n";
    else
        std::cout << report_to_text(rep);
}

int run_check(const std::string& path, const std::string& which,
              const GlobalFlags& g) {
    const FinitePoset p = poset_from_json(slurp_file(path));
    const CheckOptions opts = g.options();
    if (which == "verdier") {
        const VerdictReport rep = is_verdier(p, opts);
        emit_report(rep, g);
        return rep.verdict ? 0 : 1;
    }
    if (which == "gorenstein") {
        const VerdictReport rep = is_gorenstein_star_poset(p, opts);
        emit_report(rep, g);
        return rep.verdict ? 0 : 1;
    }
    const VerdictReport rep = main_theorem_check(p, opts);
    emit_report(rep, g);
    if (!rep.consistent)
        return 3;
    return rep.verdict ? 0 : 1;
}

void print_summary_table(const std::string& label, const HomologySummary& h,
                         const GlobalFlags& g) {
    if (g.format == "json") {
        nlohmann::json j;
        j["object"] = label;
        nlohmann::json groups = nlohmann::json::object();
        for (const auto& [d, grp] : h.groups()) {
            nlohmann::json entry;
            entry["free_rank"] = grp.free;
            entry["torsion"] = grp.torsion;
            groups["H^" + std::to_string(-d)] = std::move(entry);
        }
        j["cohomology"] = std::move(groups);
        std::cout << j.dump(1, ' ') << "\n";
    } else {
        std::cout << label << ": " << h.to_cohomological_string() << "\n";
    }
}

int run_gamma(const std::string& poset_path, const std::string& diagram_path,
              const std::vector<std::string>& interval, const GlobalFlags& g) {
    const FinitePoset p = poset_from_json(slurp_file(poset_path));
    const CheckOptions opts = g.options();
    if (!interval.empty()) {
        const int lo = p.index_of(interval[0]);
        const int hi = p.index_of(interval[1]);
        if (!p.leq(lo, hi))
            throw FormatError("interval endpoints must satisfy p <= q");
        const HomologySummary h = interval_gamma_homology(p, lo, hi, opts.ring);
        print_summary_table("gamma(P; unit[" + interval[0] + "," + interval[1] + "])",
                            h, g);
        return 0;
    }
    const Diagram f = diagram_from_json(slurp_file(diagram_path));
    if (f.base().elements() != p.elements())
        throw FormatError("diagram base does not match the poset file");
    const DiagramReport valid = f.validate();
    if (!valid.ok)
        throw FormatError("invalid diagram: " + valid.message);
    const HomologySummary h = homology(gamma(p, f).complex());
    print_summary_table("gamma(P; F)", h, g);
    return 0;
}

int run_dualize(const std::string& poset_path, const std::string& diagram_path,
                const std::string& out_path, const GlobalFlags& g) {
    const FinitePoset p = poset_from_json(slurp_file(poset_path));
    const Diagram f = diagram_from_json(slurp_file(diagram_path));
    if (f.base().elements() != p.elements())
        throw FormatError("diagram base does not match the poset file");
    const DiagramReport valid = f.validate();
    if (!valid.ok)
        throw FormatError("invalid diagram: " + valid.message);
    const OpDiagram dual = dualize(f);
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write '" + out_path + "'");
    out << opdiagram_to_json(dual) << "\n";
    for (int r = 0; r < p.size(); ++r)
        print_summary_table("D(F) at " + p.element(r), homology(dual.at(r)), g);
    return 0;
}

int run_generate(const std::string& kind, const std::vector<long long>& params,
                 const std::string& out_path) {
    std::string payload;
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw FormatError("kind '" + kind + "' takes " + std::to_string(n) +
                              " numeric parameter(s)");
    };
    if (kind == "boundary-simplex") {
        need(1);
        payload = poset_to_json(boundary_simplex_poset(static_cast<int>(params[0])));
    } else if (kind == "polygon") {
        need(1);
        payload = poset_to_json(polygon_poset(static_cast<int>(params[0])));
    } else if (kind == "chain") {
        need(1);
        payload = poset_to_json(chain_poset(static_cast<int>(params[0])));
    } else if (kind == "antichain") {
        need(1);
        payload = poset_to_json(antichain(static_cast<int>(params[0])));
    } else if (kind == "example-nonregular") {
        need(0);
        payload = poset_to_json(example_nonregular());
    } else if (kind == "random-poset") {
        need(2);
        payload = poset_to_json(random_poset(
            static_cast<unsigned long long>(params[0]), static_cast<int>(params[1])));
    } else if (kind == "random-graded") {
        need(2);
        payload = poset_to_json(random_graded_poset(
            static_cast<unsigned long long>(params[0]), static_cast<int>(params[1])));
    } else if (kind == "poincare-complex") {
        need(0);
        payload = complex_to_json(poincare_sphere_complex());
    } else if (kind == "poincare-face-poset") {
        need(0);
        payload = poset_to_json(face_poset(poincare_sphere_complex()));
    } else {
        throw FormatError("unknown kind '" + kind + "'");
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write '" + out_path + "'");
    out << payload << "\n";
    return 0;
}

int run_corpus_verify(bool with_poincare, const GlobalFlags& g) {
    const CheckOptions opts = g.options();
    int mismatches = 0;
    for (const CorpusEntry& e : corpus_entries(with_poincare)) {
        std::vector<std::string> failed;
        if (e.expect_verdier) {
            const bool got = is_verdier(e.poset, opts).verdict;
            if (got != *e.expect_verdier)
                failed.push_back("verdier");
        }
        if (e.expect_gorenstein) {
            const bool got = is_gorenstein_star_poset(e.poset, opts).verdict;
            if (got != *e.expect_gorenstein)
                failed.push_back("gorenstein");
        }
        std::cout << e.name << " [" << e.provenance << "]: "
                  << (failed.empty() ? "ok" : "MISMATCH");
        for (const auto& f : failed)
            std::cout << " " << f;
        std::cout << "\n";
        mismatches += !failed.empty();
    }
    return mismatches == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verdier/Gorenstein* deciders and sheaf-cosheaf duality for finite posets"};
    app.require_subcommand(1);

    GlobalFlags g;

    std::string check_path, which = "both";
    CLI::App* check = app.add_subcommand("check", "run the deciders on a poset file");
    check->add_option("poset", check_path, "poset JSON file")->required();
    check->add_option("--which", which, "verdier | gorenstein | both")
        ->check(CLI::IsMember({"verdier", "gorenstein", "both"}))
        ->default_val("both");
    add_global_flags(check, g);

    std::string gamma_poset, gamma_diagram;
    std::vector<std::string> gamma_interval;
    CLI::App* gam = app.add_subcommand("gamma", "cohomology of a diagram over a poset");
    gam->add_option("poset", gamma_poset, "poset JSON file")->required();
    gam->add_option("--diagram", gamma_diagram, "diagram JSON file");
    gam->add_option("--interval", gamma_interval, "interval unit endpoints p q")
        ->expected(2);
    add_global_flags(gam, g);

    std::string dual_poset, dual_diagram, dual_out;
    CLI::App* dual = app.add_subcommand("dualize", "write the chain-level dual");
    dual->add_option("poset", dual_poset, "poset JSON file")->required();
    dual->add_option("diagram", dual_diagram, "diagram JSON file")->required();
    dual->add_option("--out", dual_out, "output path for the dual")->required();
    add_global_flags(dual, g);

    std::string gen_kind, gen_out;
    std::vector<long long> gen_params;
    CLI::App* gen = app.add_subcommand("generate", "write a corpus object");
    gen->add_option("kind", gen_kind, "object kind")->required();
    gen->add_option("params", gen_params, "numeric parameters");
    gen->add_option("--out", gen_out, "output path")->required();

    bool with_poincare = false;
    CLI::App* corpus = app.add_subcommand("corpus-verify",
                                          "re-derive every corpus expectation");
    corpus->add_flag("--with-poincare", with_poincare,
                     "include the Poincare-sphere face poset");
    add_global_flags(corpus, g);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return run_check(check_path, which, g);
        if (gam->parsed()) {
            if (gamma_interval.empty() == gamma_diagram.empty())
                throw FormatError("gamma needs exactly one of --diagram or --interval");
            return run_gamma(gamma_poset, gamma_diagram, gamma_interval, g);
        }
        if (dual->parsed())
            return run_dualize(dual_poset, dual_diagram, dual_out, g);
        if (gen->parsed())
            return run_generate(gen_kind, gen_params, gen_out);
        if (corpus->parsed())
            return run_corpus_verify(with_poincare, g);
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CycleError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownElementError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
