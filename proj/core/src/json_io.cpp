#include "verdier/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace verdier {

namespace {

using nlohmann::json;

constexpr const char* kArrow = "→";

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw FormatError("malformed JSON");
    return j;
}

std::string dump(const json& j) { return j.dump(1, ' '); }

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (const auto& r : m.to_rows()) {
        json row = json::array();
        for (long long v : r)
            row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw FormatError("matrix with wrong row count");
    std::vector<std::vector<long long>> m;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw FormatError("matrix with wrong column count");
        std::vector<long long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw FormatError("matrix entries must be integers");
            r.push_back(v.get<long long>());
        }
        m.push_back(std::move(r));
    }
    if (rows == 0 || cols == 0)
        return IntMatrix::zero(rows, cols);
    return IntMatrix::from_rows(m);
}

json complex_value_to_json(const ChainComplex& c) {
    json at;
    at["degrees"] = json::array({c.lowest(), c.highest()});
    json ranks = json::object();
    json diffs = json::object();
    for (int n = c.lowest(); n <= c.highest(); ++n)
        if (c.rank(n) > 0)
            ranks[std::to_string(n)] = c.rank(n);
    for (int n = c.lowest(); n <= c.highest() + 1; ++n)
        if (c.has_differential(n))
            diffs[std::to_string(n)] = matrix_to_json(c.differential(n));
    at["ranks"] = std::move(ranks);
    at["differentials"] = std::move(diffs);
    return at;
}

ChainComplex complex_value_from_json(const json& j, Ring ring) {
    if (!j.contains("degrees") || !j["degrees"].is_array() || j["degrees"].size() != 2)
        throw FormatError("value needs a [lo, hi] degree range");
    const int lo = j["degrees"][0].get<int>();
    const int hi = j["degrees"][1].get<int>();
    if (hi < lo)
        return ChainComplex::zero(ring);
    std::vector<int> ranks(hi - lo + 1, 0);
    if (j.contains("ranks"))
        for (const auto& [key, val] : j["ranks"].items()) {
            const int n = std::stoi(key);
            if (n < lo || n > hi)
                throw FormatError("rank outside the degree range");
            ranks[n - lo] = val.get<int>();
        }
    auto rank_at = [&](int n) { return (n < lo || n > hi) ? 0 : ranks[n - lo]; };
    std::map<int, IntMatrix> diffs;
    if (j.contains("differentials"))
        for (const auto& [key, val] : j["differentials"].items()) {
            const int n = std::stoi(key);
            diffs[n] = matrix_from_json(val, rank_at(n - 1), rank_at(n));
        }
    return ChainComplex(ring, lo, std::move(ranks), std::move(diffs));
}

std::pair<std::string, std::string> split_arrow(const std::string& key) {
    const std::string arrow = kArrow;
    const auto pos = key.find(arrow);
    if (pos == std::string::npos)
        throw FormatError("edge key must look like 'p" + arrow + "q'");
    return {key.substr(0, pos), key.substr(pos + arrow.size())};
}

} // namespace

std::string poset_to_json(const FinitePoset& p) {
    json j;
    j["elements"] = p.elements();
    json covers = json::array();
    for (const auto& [a, b] : p.covers())
        covers.push_back(json::array({p.element(a), p.element(b)}));
    j["covers"] = std::move(covers);
    return dump(j);
}

FinitePoset poset_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.contains("elements") || !j["elements"].is_array())
        throw FormatError("poset needs an 'elements' array");
    std::vector<std::string> elems;
    for (const auto& e : j["elements"]) {
        if (!e.is_string())
            throw FormatError("elements must be strings");
        elems.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers")) {
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
                throw FormatError("covers must be [low, high] string pairs");
            covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
        }
    }
    return FinitePoset::from_covers(std::move(elems), covers);
}

std::string complex_to_json(const SimplicialComplex& k) {
    json j;
    json facets = json::array();
    // facets = faces maximal under inclusion
    for (const auto& f : k.faces()) {
        bool maximal = true;
        for (const auto& g : k.faces()) {
            if (g.size() <= f.size() || g == f)
                continue;
            if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            json facet = json::array();
            for (int v : f)
                facet.push_back(k.vertices()[v]);
            facets.push_back(std::move(facet));
        }
    }
    j["facets"] = std::move(facets);
    return dump(j);
}

SimplicialComplex complex_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.contains("facets") || !j["facets"].is_array())
        throw FormatError("complex needs a 'facets' array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array())
            throw FormatError("each facet must be an array of vertices");
        std::vector<std::string> facet;
        for (const auto& v : f) {
            if (!v.is_string())
                throw FormatError("vertices must be strings");
            facet.push_back(v.get<std::string>());
        }
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

std::string diagram_to_json(const Diagram& f) {
    json j;
    j["poset"] = json::parse(poset_to_json(f.base()));
    j["ring"] = f.ring().name();
    json at = json::object();
    for (int p = 0; p < f.base().size(); ++p)
        at[f.base().element(p)] = complex_value_to_json(f.at(p));
    j["at"] = std::move(at);
    json edges = json::object();
    for (const auto& [a, b] : f.base().covers()) {
        const DegreeMaps maps = f.edge(a, b);
        if (maps.empty())
            continue;
        json degs = json::object();
        for (const auto& [n, m] : maps)
            degs[std::to_string(n)] = matrix_to_json(m);
        edges[f.base().element(a) + kArrow + f.base().element(b)] = std::move(degs);
    }
    j["edges"] = std::move(edges);
    return dump(j);
}

Diagram diagram_from_json(const std::string& text) {
    json j = parse_or_throw(text);
    if (!j.contains("poset"))
        throw FormatError("diagram needs a 'poset'");
    const FinitePoset base = poset_from_json(j["poset"].dump());
    const Ring ring = Ring::parse(j.value("ring", std::string("Z")));
    std::vector<ChainComplex> at(base.size(), ChainComplex::zero(ring));
    if (j.contains("at"))
        for (const auto& [name, val] : j["at"].items())
            at[base.index_of(name)] = complex_value_from_json(val, ring);
    std::map<std::pair<int, int>, DegreeMaps> edges;
    if (j.contains("edges")) {
        for (const auto& [key, val] : j["edges"].items()) {
            const auto [from, to] = split_arrow(key);
            const int a = base.index_of(from);
            const int b = base.index_of(to);
            bool is_cover = false;
            for (const auto& c : base.covers())
                is_cover |= c == std::make_pair(a, b);
            if (!is_cover)
                throw FormatError("edge '" + key + "' is not a Hasse edge");
            DegreeMaps maps;
            for (const auto& [deg, m] : val.items()) {
                const int n = std::stoi(deg);
                maps[n] = matrix_from_json(m, at[b].rank(n), at[a].rank(n));
            }
            edges[{a, b}] = std::move(maps);
        }
    }
    return Diagram(base, std::move(at), std::move(edges));
}

std::string opdiagram_to_json(const OpDiagram& f) {
    json j;
    j["poset"] = json::parse(poset_to_json(f.base()));
    j["ring"] = f.ring().name();
    json at = json::object();
    for (int p = 0; p < f.base().size(); ++p)
        at[f.base().element(p)] = complex_value_to_json(f.at(p));
    j["at"] = std::move(at);
    json edges = json::object();
    for (const auto& [a, b] : f.base().covers()) {
        const DegreeMaps maps = f.edge(a, b);
        if (maps.empty())
            continue;
        json degs = json::object();
        for (const auto& [n, m] : maps)
            degs[std::to_string(n)] = matrix_to_json(m);
        // the map runs against the order, from at(b) down to at(a)
        edges[f.base().element(b) + kArrow + f.base().element(a)] = std::move(degs);
    }
    j["edges"] = std::move(edges);
    return dump(j);
}

std::string report_to_json(const VerdictReport& r) {
    json j;
    j["property"] = r.property;
    j["verdict"] = r.verdict;
    j["timing_ms"] = r.timing_ms;
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    json ws = json::array();
    for (const auto& w : r.witnesses) {
        json row = json::object();
        for (const auto& [k, v] : w)
            row[k] = v;
        ws.push_back(std::move(row));
    }
    j["witnesses"] = std::move(ws);
    return dump(j);
}

std::string report_to_text(const VerdictReport& r) {
    std::ostringstream os;
    os << r.property << ": " << (r.verdict ? "PASS" : "FAIL");
    if (!r.consistent)
        os << " (INTERNAL INCONSISTENCY)";
    os << "  [" << r.timing_ms << " ms]";
    if (r.seed)
        os << " seed=" << *r.seed;
    os << "\n";
    for (const auto& w : r.witnesses) {
        os << "  -";
        for (const auto& [k, v] : w)
            os << " " << k << "=" << v;
        os << "\n";
    }
    return os.str();
}

} // namespace verdier
