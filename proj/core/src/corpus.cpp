#include "verdier/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "json.hpp"

#include "verdier/json_io.hpp"

#ifndef VERDIER_DATA_DIR
#define VERDIER_DATA_DIR "."
#endif

namespace verdier {

FinitePoset antichain(int n) {
    std::vector<std::string> elems;
    for (int i = 0; i < n; ++i)
        elems.push_back("a" + std::to_string(i));
    return FinitePoset::from_covers(std::move(elems), {});
}

FinitePoset chain_poset(int n) {
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i) {
        elems.push_back(std::to_string(i));
        if (i > 0)
            covers.push_back({std::to_string(i - 1), std::to_string(i)});
    }
    return FinitePoset::from_covers(std::move(elems), covers);
}

FinitePoset boundary_simplex_poset(int n) {
    if (n < 1)
        throw Error("boundary_simplex_poset needs n >= 1");
    // list the facet omitting the last vertex first so the vertex order is 0..n
    std::vector<std::vector<std::string>> facets;
    for (int omit = n; omit >= 0; --omit) {
        std::vector<std::string> facet;
        for (int v = 0; v <= n; ++v)
            if (v != omit)
                facet.push_back(std::to_string(v));
        facets.push_back(std::move(facet));
    }
    return face_poset(SimplicialComplex::from_facets(facets));
}

FinitePoset polygon_poset(int n) {
    if (n < 3)
        throw Error("polygon_poset needs n >= 3");
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
        elems.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        const std::string e = "e" + std::to_string(i);
        elems.push_back(e);
        covers.push_back({"v" + std::to_string(i), e});
        covers.push_back({"v" + std::to_string((i + 1) % n), e});
    }
    return FinitePoset::from_covers(std::move(elems), covers);
}

FinitePoset example_nonregular() {
    return FinitePoset::from_covers({"0", "1", "1'", "2"},
                                    {{"0", "1"}, {"0", "1'"}, {"1", "2"}, {"1'", "2"}});
}

FinitePoset suspension_poset(const FinitePoset& p) {
    std::vector<std::string> elems = p.elements();
    std::string s0 = "s";
    while (p.contains(s0))
        s0 += "'";
    std::string s1 = s0 + "'";
    while (p.contains(s1))
        s1 += "'";
    elems.push_back(s0);
    elems.push_back(s1);
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& [a, b] : p.covers())
        covers.push_back({p.element(a), p.element(b)});
    for (int m : p.maximal_elements()) {
        covers.push_back({p.element(m), s0});
        covers.push_back({p.element(m), s1});
    }
    if (p.size() == 0) {
        // suspension of the empty poset is the two-point antichain
        return FinitePoset::from_covers(std::move(elems), {});
    }
    return FinitePoset::from_covers(std::move(elems), covers);
}

FinitePoset random_poset(unsigned long long seed, int size) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> elems;
    for (int i = 0; i < size; ++i)
        elems.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (rng() % 3 == 0)
                covers.push_back({elems[i], elems[j]});
    return FinitePoset::from_covers(std::move(elems), covers);
}

FinitePoset random_graded_poset(unsigned long long seed, int size) {
    std::mt19937_64 rng(seed);
    const int levels = 2 + static_cast<int>(rng() % 2);
    std::vector<int> level(size);
    for (int i = 0; i < size; ++i)
        level[i] = static_cast<int>(rng() % levels);
    std::vector<std::string> elems;
    for (int i = 0; i < size; ++i)
        elems.push_back("g" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (level[j] == level[i] + 1 && rng() % 2 == 0)
                covers.push_back({elems[i], elems[j]});
    return FinitePoset::from_covers(std::move(elems), covers);
}

Diagram random_interval_diagram(unsigned long long seed, const FinitePoset& p, Ring ring) {
    if (p.size() == 0)
        throw Error("random diagram needs a nonempty poset");
    std::mt19937_64 rng(seed);
    const int summands = 1 + static_cast<int>(rng() % 3);
    std::vector<Diagram> parts;
    for (int s = 0; s < summands; ++s) {
        const int lo = static_cast<int>(rng() % p.size());
        const auto ups = p.up_set(lo);
        const int hi = ups[rng() % ups.size()];
        ChainComplex value;
        switch (rng() % 4) {
        case 0:
            value = ChainComplex::concentrated(ring, 0, 1);
            break;
        case 1:
            value = ChainComplex::concentrated(ring, 0, 2);
            break;
        case 2:
            value = ChainComplex(ring, 0, {1, 1},
                                 {{1, IntMatrix::from_rows({{2}})}});
            break;
        default:
            value = ChainComplex::concentrated(ring, 1, 1);
            break;
        }
        const int k = static_cast<int>(rng() % 3) - 1;
        parts.push_back(shift_diagram(interval_unit(p, lo, hi, value), k));
    }
    return diagram_direct_sum(parts);
}

std::vector<FinitePoset> all_posets(int n) {
    std::vector<FinitePoset> out;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    if (n == 0) {
        out.push_back(FinitePoset::from_covers({}, {}));
        return out;
    }
    const int npairs = n * (n - 1);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairs.push_back({i, j});
    std::vector<int> pair_index(n * n, -1);
    for (size_t k = 0; k < pairs.size(); ++k)
        pair_index[pairs[k].first * n + pairs[k].second] = static_cast<int>(k);
    for (unsigned long long mask = 0; mask < (1ull << npairs); ++mask) {
        // antisymmetry
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                const int a = pair_index[i * n + j];
                const int b = pair_index[j * n + i];
                if ((mask >> a & 1) && (mask >> b & 1))
                    ok = false;
            }
        if (!ok)
            continue;
        // transitivity on bit rows
        std::vector<unsigned> row(n, 0);
        for (size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1)
                row[pairs[k].first] |= 1u << pairs[k].second;
        for (int i = 0; i < n && ok; ++i) {
            unsigned reach = 0;
            for (int j = 0; j < n; ++j)
                if (row[i] >> j & 1)
                    reach |= row[j];
            if ((reach & ~row[i]) != 0)
                ok = false;
        }
        if (!ok)
            continue;
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) {
            leq[i][i] = true;
            for (int j = 0; j < n; ++j)
                if (row[i] >> j & 1)
                    leq[i][j] = true;
        }
        out.push_back(PosetBuilder::from_closed_relation(names, std::move(leq)));
    }
    return out;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("VERDIER_DATA_DIR"))
        return env;
    return VERDIER_DATA_DIR;
}

namespace {

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
        EVP_MD_CTX_free(ctx);
        throw Error("sha256 failure");
    }
    EVP_MD_CTX_free(ctx);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataIntegrityError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

SimplicialComplex poincare_sphere_complex(const std::string& data_dir) {
    const std::string name = "poincare_sphere_16.json";
    const std::string raw = slurp(data_dir + "/" + name);
    const std::string manifest_raw = slurp(data_dir + "/MANIFEST.json");
    nlohmann::json manifest = nlohmann::json::parse(manifest_raw);
    if (!manifest.contains(name))
        throw DataIntegrityError("manifest has no entry for " + name);
    if (sha256_hex(raw) != manifest[name].get<std::string>())
        throw DataIntegrityError("checksum mismatch for " + name);
    SimplicialComplex k = complex_from_json(raw);
    if (k.vertices().size() != 16)
        throw DataIntegrityError("expected 16 vertices");
    const auto facets = k.faces_of_dim(3);
    if (facets.size() != 90)
        throw DataIntegrityError("expected 90 tetrahedra");
    if (k.faces_of_dim(2).size() != 180 || k.faces_of_dim(1).size() != 106)
        throw DataIntegrityError("unexpected f-vector");
    // pseudomanifold: every triangle lies in exactly two tetrahedra
    std::map<std::vector<int>, int> tri_count;
    for (const auto& t : facets)
        for (size_t i = 0; i < t.size(); ++i) {
            std::vector<int> tri = t;
            tri.erase(tri.begin() + static_cast<long>(i));
            ++tri_count[tri];
        }
    for (const auto& [tri, c] : tri_count)
        if (c != 2)
            throw DataIntegrityError("not a pseudomanifold");
    return k;
}

std::vector<CorpusEntry> corpus_entries(bool include_poincare,
                                        const std::string& data_dir) {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, FinitePoset p, std::optional<bool> verdier,
                   std::optional<bool> gorenstein, std::string provenance,
                   std::string note) {
        out.push_back({std::move(name), std::move(p), verdier, gorenstein,
                       std::move(provenance), std::move(note)});
    };
    add("empty", FinitePoset::from_covers({}, {}), true, true, "elementary",
        "no comparable pairs; the closed interval of the completion is empty");
    add("singleton", antichain(1), true, false, "derived",
        "no pairs, but the full interval is a point");
    add("antichain-2", antichain(2), true, true, "derived", "the 0-sphere poset");
    add("antichain-3", antichain(3), true, false, "derived",
        "three points are not a homology sphere");
    add("chain-2", chain_poset(2), false, false, "derived",
        "an edge is contractible");
    add("chain-3", chain_poset(3), false, false, "derived", "");
    add("chain-4", chain_poset(4), false, false, "derived", "");
    add("chain-5", chain_poset(5), false, false, "derived", "");
    add("example-nonregular", example_nonregular(), false, false, "literature",
        "witness pair (0,1)");
    add("diamond", antichain(2).add_bottom().add_top(), false, false, "derived",
        "cone points kill sphere homology");
    add("boundary-simplex-1", boundary_simplex_poset(1), true, true, "literature", "");
    add("boundary-simplex-2", boundary_simplex_poset(2), true, true, "literature", "");
    add("boundary-simplex-3", boundary_simplex_poset(3), true, true, "literature", "");
    for (int n = 3; n <= 8; ++n)
        add("polygon-" + std::to_string(n), polygon_poset(n), true, true,
            n == 3 ? "literature" : "derived", "face posets of regular CW circles");
    add("suspension-antichain-2", suspension_poset(antichain(2)), true, true,
        "derived", "order complex is a 4-cycle");
    add("suspension-suspension-antichain-2",
        suspension_poset(suspension_poset(antichain(2))), true, true, "derived",
        "iterated suspensions stay Gorenstein*");
    if (include_poincare) {
        add("poincare-face-poset", face_poset(poincare_sphere_complex(data_dir)), true,
            true, "literature",
            "face poset of a homology-sphere triangulation; its adjoined-top "
            "poset is Verdier without being a regular CW face poset");
    }
    return out;
}

} // namespace verdier
