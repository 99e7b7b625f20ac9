#include "verdier/simplicial.hpp"

#include <algorithm>
#include <map>

namespace verdier {

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
    SimplicialComplex k;
    // vertex order: first appearance across the facet list
    std::map<std::string, int> index;
    for (const auto& facet : facets) {
        if (facet.empty())
            throw Error("empty facet");
        for (const auto& v : facet)
            if (index.emplace(v, static_cast<int>(k.verts_.size())).second)
                k.verts_.push_back(v);
    }
    for (const auto& facet : facets) {
        std::vector<int> f;
        f.reserve(facet.size());
        for (const auto& v : facet)
            f.push_back(index[v]);
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error("facet repeats a vertex");
        // downward closure over nonempty subsets
        const int m = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i))
                    sub.push_back(f[i]);
            k.faces_.insert(std::move(sub));
        }
    }
    return k;
}

SimplicialComplex SimplicialComplex::from_index_faces(std::vector<std::string> vertices,
                                                      std::set<std::vector<int>> faces) {
    SimplicialComplex k;
    k.verts_ = std::move(vertices);
    k.faces_ = std::move(faces);
    for (const auto& f : k.faces_) {
        if (f.empty() || !std::is_sorted(f.begin(), f.end()))
            throw Error("faces must be nonempty sorted index vectors");
        if (f.back() >= static_cast<int>(k.verts_.size()) || f.front() < 0)
            throw Error("face index out of range");
        if (f.size() > 1) {
            for (size_t i = 0; i < f.size(); ++i) {
                std::vector<int> sub = f;
                sub.erase(sub.begin() + static_cast<long>(i));
                if (k.faces_.find(sub) == k.faces_.end())
                    throw Error("face set not closed under subsets");
            }
        }
    }
    return k;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : faces_)
        d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int k) const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_)
        if (static_cast<int>(f.size()) == k + 1)
            out.push_back(f);
    return out; // set iteration is already lexicographic
}

bool SimplicialComplex::has_face(const std::vector<int>& face) const {
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    return faces_.find(f) != faces_.end();
}

SimplicialComplex SimplicialComplex::link(const std::vector<int>& face) const {
    if (face.empty())
        return *this;
    std::vector<int> s = face;
    std::sort(s.begin(), s.end());
    if (faces_.find(s) == faces_.end())
        throw NotAFaceError("link of a non-face");
    std::set<std::vector<int>> lk;
    for (const auto& t : faces_) {
        std::vector<int> inter;
        std::set_intersection(t.begin(), t.end(), s.begin(), s.end(),
                              std::back_inserter(inter));
        if (!inter.empty())
            continue;
        std::vector<int> uni;
        std::set_union(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(uni));
        if (faces_.find(uni) != faces_.end())
            lk.insert(t);
    }
    // restrict the vertex list to vertices of the link, keeping their order
    std::vector<char> used(verts_.size(), 0);
    for (const auto& t : lk)
        for (int v : t)
            used[v] = 1;
    std::vector<std::string> verts;
    std::vector<int> remap(verts_.size(), -1);
    for (size_t i = 0; i < verts_.size(); ++i)
        if (used[i]) {
            remap[i] = static_cast<int>(verts.size());
            verts.push_back(verts_[i]);
        }
    std::set<std::vector<int>> faces;
    for (const auto& t : lk) {
        std::vector<int> f;
        f.reserve(t.size());
        for (int v : t)
            f.push_back(remap[v]);
        faces.insert(std::move(f));
    }
    SimplicialComplex out;
    out.verts_ = std::move(verts);
    out.faces_ = std::move(faces);
    return out;
}

ChainComplex SimplicialComplex::boundary_matrices(Ring ring) const {
    if (faces_.empty())
        return ChainComplex::concentrated(ring, -1, 1);
    const int dim = dimension();
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    std::vector<int> ranks(dim + 2, 0);
    ranks[0] = 1; // augmentation in degree -1
    for (const auto& f : faces_) {
        const int k = static_cast<int>(f.size()) - 1;
        index[k].emplace(f, static_cast<int>(index[k].size()));
    }
    for (int k = 0; k <= dim; ++k)
        ranks[k + 1] = static_cast<int>(index[k].size());
    std::map<int, IntMatrix> diff;
    {
        // augmentation: every vertex maps to 1
        std::vector<Triplet> ts;
        for (const auto& [f, j] : index[0])
            ts.push_back({0, j, 1});
        diff[0] = IntMatrix::from_triplets(1, ranks[1], std::move(ts));
    }
    for (int k = 1; k <= dim; ++k) {
        std::vector<Triplet> ts;
        for (const auto& [f, j] : index[k]) {
            for (size_t i = 0; i < f.size(); ++i) {
                std::vector<int> sub = f;
                sub.erase(sub.begin() + static_cast<long>(i));
                ts.push_back({index[k - 1].at(sub), j, (i % 2 == 0) ? 1 : -1});
            }
        }
        diff[k] = IntMatrix::from_triplets(ranks[k], ranks[k + 1], std::move(ts));
    }
    return ChainComplex(ring, -1, std::move(ranks), std::move(diff));
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (const auto& f : faces_)
        chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

SimplicialComplex order_complex(const FinitePoset& p) {
    std::set<std::vector<int>> faces;
    for (auto& chain : p.strict_chains()) {
        std::sort(chain.begin(), chain.end());
        faces.insert(chain);
    }
    return SimplicialComplex::from_index_faces(p.elements(), std::move(faces));
}

HomologySummary reduced_homology(const SimplicialComplex& k, Ring ring) {
    return homology(k.boundary_matrices(ring));
}

std::optional<int> is_sphere_homology(const SimplicialComplex& k, Ring ring) {
    const HomologySummary h = reduced_homology(k, ring);
    const auto d = h.concentrated_degree();
    if (!d)
        return std::nullopt;
    const auto g = h.at(*d);
    if (g.free == 1 && g.torsion.empty())
        return d;
    return std::nullopt;
}

bool is_gorenstein_star_complex(const SimplicialComplex& k, Ring ring) {
    const int n = k.dimension();
    if (is_sphere_homology(k, ring) != std::optional<int>(n))
        return false;
    for (const auto& f : k.faces()) {
        const int expected = n - static_cast<int>(f.size());
        if (is_sphere_homology(k.link(f), ring) != std::optional<int>(expected))
            return false;
    }
    return true;
}

FinitePoset face_poset(const SimplicialComplex& k) {
    std::vector<std::vector<int>> faces(k.faces().begin(), k.faces().end());
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    std::map<std::vector<int>, std::string> name;
    std::vector<std::string> elems;
    for (const auto& f : faces) {
        std::string id;
        for (size_t i = 0; i < f.size(); ++i) {
            if (i)
                id += ",";
            id += k.vertices()[f[i]];
        }
        name[f] = id;
        elems.push_back(id);
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& f : faces) {
        if (f.size() == 1)
            continue;
        for (size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub = f;
            sub.erase(sub.begin() + static_cast<long>(i));
            covers.push_back({name.at(sub), name.at(f)});
        }
    }
    return FinitePoset::from_covers(std::move(elems), covers);
}

} // namespace verdier
