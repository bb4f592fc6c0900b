#include "obtop/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace obtop {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::uint64_t hashCombine(std::uint64_t h, std::uint64_t v)
{
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const
{
    static const std::vector<Simplex> empty;
    if (k < 0 || k >= static_cast<int>(byDim_.size())) return empty;
    return byDim_[k];
}

int SimplicialComplex::count(int k) const
{
    return static_cast<int>(simplices(k).size());
}

int SimplicialComplex::indexOf(const Simplex& s) const
{
    int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k >= static_cast<int>(index_.size())) return -1;
    auto it = index_[k].find(s);
    return it == index_[k].end() ? -1 : it->second;
}

long long SimplicialComplex::eulerCharacteristic() const
{
    long long chi = 0;
    for (int k = 0; k <= dimension(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(count(k));
    return chi;
}

std::size_t SimplicialComplex::totalSimplices() const
{
    std::size_t n = 0;
    for (const auto& lst : byDim_) n += lst.size();
    return n;
}

bool SimplicialComplex::connected() const
{
    if (vertexCount_ == 0) return false;
    UnionFind uf(vertexCount_);
    for (const Simplex& e : simplices(1)) uf.unite(e[0], e[1]);
    int root = uf.find(0);
    for (int v = 1; v < vertexCount_; ++v)
        if (uf.find(v) != root) return false;
    return true;
}

std::vector<Simplex> SimplicialComplex::facets() const
{
    std::vector<Simplex> out;
    for (int k = 0; k <= dimension(); ++k) {
        std::vector<char> covered(count(k), 0);
        for (const Simplex& s : simplices(k + 1)) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                covered[indexOf(face)] = 1;
            }
        }
        for (int i = 0; i < count(k); ++i)
            if (!covered[i]) out.push_back(simplex(k, i));
    }
    return out;
}

SimplicialComplex build_complex(const std::vector<Simplex>& top, int vertex_count)
{
    int maxVertex = -1;
    std::vector<std::set<Simplex>> byDim;
    auto insertWithFaces = [&](const Simplex& s) {
        int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(byDim.size())) byDim.resize(d + 1);
        // all nonempty subsets; s is sorted so subsets come out sorted
        for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            byDim[face.size() - 1].insert(std::move(face));
        }
    };
    for (const Simplex& raw : top) {
        if (raw.empty()) throw std::invalid_argument("malformed simplex: empty tuple");
        Simplex s = raw;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0) throw std::invalid_argument("malformed simplex: negative vertex");
            if (i > 0 && s[i] == s[i - 1])
                throw std::invalid_argument("malformed simplex: repeated vertex");
        }
        maxVertex = std::max(maxVertex, s.back());
        insertWithFaces(s);
    }
    int nv = maxVertex + 1;
    if (vertex_count >= 0) {
        if (vertex_count < nv)
            throw std::invalid_argument("build_complex: vertex_count below used indices");
        nv = vertex_count;
    }
    SimplicialComplex K;
    K.vertexCount_ = nv;
    if (nv > 0 && byDim.empty()) byDim.resize(1);
    for (int v = 0; v < nv; ++v) byDim[0].insert(Simplex{v});

    K.byDim_.resize(byDim.size());
    K.index_.resize(byDim.size());
    std::uint64_t fp = hashCombine(0, static_cast<std::uint64_t>(nv));
    SimplexHash sh;
    for (std::size_t k = 0; k < byDim.size(); ++k) {
        K.byDim_[k].assign(byDim[k].begin(), byDim[k].end());
        for (std::size_t i = 0; i < K.byDim_[k].size(); ++i) {
            K.index_[k][K.byDim_[k][i]] = static_cast<int>(i);
            fp = hashCombine(fp, sh(K.byDim_[k][i]));
        }
    }
    K.fingerprint_ = fp;
    return K;
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& K, int k)
{
    if (k < 1 || k > K.dimension())
        throw std::out_of_range("boundary_matrix: dimension out of range");
    SparseIntMatrix D(K.count(k - 1), K.count(k));
    for (int j = 0; j < K.count(k); ++j) {
        const Simplex& s = K.simplex(k, j);
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            D.set(K.indexOf(face), j, (drop % 2 == 0) ? 1 : -1);
        }
    }
    return D;
}

SimplicialPair::SimplicialPair(ComplexPtr total, std::vector<int> subVertices)
    : total_(std::move(total)), subVertices_(std::move(subVertices))
{
    std::sort(subVertices_.begin(), subVertices_.end());
    subVertices_.erase(std::unique(subVertices_.begin(), subVertices_.end()),
                       subVertices_.end());
    vertexInSub_.assign(total_->vertexCount(), 0);
    for (int v : subVertices_) {
        if (v < 0 || v >= total_->vertexCount())
            throw std::invalid_argument("SimplicialPair: sub vertex out of range");
        vertexInSub_[v] = 1;
    }
    simplexInSub_.resize(total_->dimension() + 1);
    std::uint64_t fp = total_->fingerprint();
    for (int v : subVertices_) fp = hashCombine(fp, static_cast<std::uint64_t>(v));
    fingerprint_ = fp;
}

SimplicialPair SimplicialPair::absolute(ComplexPtr total)
{
    return SimplicialPair(std::move(total), {});
}

void SimplicialPair::fillDim(int k) const
{
    auto& flags = simplexInSub_[k];
    if (!flags.empty() || total_->count(k) == 0) return;
    flags.resize(total_->count(k));
    for (int i = 0; i < total_->count(k); ++i) {
        bool in = true;
        for (int v : total_->simplex(k, i))
            if (!vertexInSub_[v]) {
                in = false;
                break;
            }
        flags[i] = in ? 1 : 0;
    }
}

bool SimplicialPair::inSub(int k, int idx) const
{
    if (subVertices_.empty()) return false;
    if (k < 0 || k > total_->dimension()) return false;
    fillDim(k);
    return simplexInSub_[k][idx] != 0;
}

SimplicialComplex SimplicialPair::subComplex() const
{
    std::vector<int> newId(total_->vertexCount(), -1);
    for (std::size_t i = 0; i < subVertices_.size(); ++i)
        newId[subVertices_[i]] = static_cast<int>(i);
    std::vector<Simplex> tops;
    for (int k = 0; k <= total_->dimension(); ++k) {
        for (int i = 0; i < total_->count(k); ++i) {
            if (!inSub(k, i)) continue;
            Simplex s = total_->simplex(k, i);
            for (int& v : s) v = newId[v];
            tops.push_back(std::move(s));
        }
    }
    return build_complex(tops, static_cast<int>(subVertices_.size()));
}

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target,
                             std::vector<int> vertexImages)
    : source_(std::move(source)), target_(std::move(target)),
      vertexImages_(std::move(vertexImages))
{
    if (static_cast<int>(vertexImages_.size()) != source_->vertexCount())
        throw std::invalid_argument("SimplicialMap: vertex_images must cover all vertices");
    for (int v : vertexImages_)
        if (v < 0 || v >= target_->vertexCount())
            throw std::invalid_argument("SimplicialMap: image vertex out of range");
    for (int k = 0; k <= source_->dimension(); ++k) {
        for (const Simplex& s : source_->simplices(k)) {
            Simplex img;
            img.reserve(s.size());
            for (int v : s) img.push_back(vertexImages_[v]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!target_->contains(img))
                throw std::invalid_argument("SimplicialMap: image of a simplex is not a simplex");
        }
    }
}

SimplicialMap SimplicialMap::identity(ComplexPtr K)
{
    std::vector<int> ids(K->vertexCount());
    std::iota(ids.begin(), ids.end(), 0);
    return SimplicialMap(K, K, std::move(ids));
}

SimplicialMap SimplicialMap::constant(ComplexPtr source, ComplexPtr target, int targetVertex)
{
    return SimplicialMap(std::move(source), std::move(target),
                         std::vector<int>(source ? source->vertexCount() : 0, targetVertex));
}

SimplicialMap compose(const SimplicialMap& outer, const SimplicialMap& inner)
{
    if (inner.target().fingerprint() != outer.source().fingerprint())
        throw std::invalid_argument("compose: middle complexes differ");
    std::vector<int> imgs(inner.source().vertexCount());
    for (int v = 0; v < inner.source().vertexCount(); ++v)
        imgs[v] = outer.image(inner.image(v));
    return SimplicialMap(inner.sourcePtr(), outer.targetPtr(), std::move(imgs));
}

SparseIntMatrix induced_chain_map(const SimplicialMap& f, int k)
{
    SparseIntMatrix M(f.target().count(k), f.source().count(k));
    for (int j = 0; j < f.source().count(k); ++j) {
        const Simplex& s = f.source().simplex(k, j);
        Simplex img;
        img.reserve(s.size());
        for (int v : s) img.push_back(f.image(v));
        bool degenerate = false;
        int inversions = 0;
        for (std::size_t a = 0; a < img.size() && !degenerate; ++a)
            for (std::size_t b = a + 1; b < img.size(); ++b) {
                if (img[a] == img[b]) {
                    degenerate = true;
                    break;
                }
                if (img[a] > img[b]) ++inversions;
            }
        if (degenerate) continue;
        Simplex sorted = img;
        std::sort(sorted.begin(), sorted.end());
        M.set(f.target().indexOf(sorted), j, (inversions % 2 == 0) ? 1 : -1);
    }
    return M;
}

SimplicialComplex product_complex(const SimplicialComplex& K, const SimplicialComplex& L)
{
    if (K.vertexCount() == 0 || L.vertexCount() == 0)
        throw std::invalid_argument("product_complex: empty factor");
    const int nL = L.vertexCount();
    std::vector<Simplex> tops;
    std::vector<std::pair<int, int>> path;
    for (const Simplex& sigma : K.facets()) {
        for (const Simplex& tau : L.facets()) {
            const int p = static_cast<int>(sigma.size()) - 1;
            const int q = static_cast<int>(tau.size()) - 1;
            // monotone unit-step lattice paths through sigma x tau
            path.assign(1, {0, 0});
            auto emit = [&]() {
                Simplex s;
                s.reserve(path.size());
                for (auto [a, b] : path) s.push_back(sigma[a] * nL + tau[b]);
                tops.push_back(std::move(s));
            };
            std::function<void()> rec = [&]() {
                auto [a, b] = path.back();
                if (a == p && b == q) {
                    emit();
                    return;
                }
                if (a < p) {
                    path.push_back({a + 1, b});
                    rec();
                    path.pop_back();
                }
                if (b < q) {
                    path.push_back({a, b + 1});
                    rec();
                    path.pop_back();
                }
            };
            rec();
        }
    }
    return build_complex(tops, K.vertexCount() * nL);
}

SimplicialComplex join_complexes(const SimplicialComplex& K, const SimplicialComplex& L)
{
    if (K.vertexCount() == 0) return L;
    if (L.vertexCount() == 0) return K;
    const int off = K.vertexCount();
    std::vector<Simplex> tops;
    for (const Simplex& sigma : K.facets()) {
        for (const Simplex& tau : L.facets()) {
            Simplex s = sigma;
            for (int v : tau) s.push_back(v + off);
            tops.push_back(std::move(s));
        }
    }
    return build_complex(tops, K.vertexCount() + L.vertexCount());
}

SimplicialComplex cone_complex(const SimplicialComplex& K)
{
    SimplicialComplex pt = build_complex({{0}}, 1);
    return join_complexes(K, pt);
}

SimplicialComplex suspension(const SimplicialComplex& K)
{
    SimplicialComplex two = build_complex({{0}, {1}}, 2);
    return join_complexes(K, two);
}

Subdivision barycentric_subdivision(const SimplicialComplex& K)
{
    Subdivision out;
    std::vector<int> offset(K.dimension() + 2, 0);
    for (int k = 0; k <= K.dimension(); ++k) offset[k + 1] = offset[k] + K.count(k);
    const int nv = offset[K.dimension() + 1];
    out.vertexSimplex.resize(nv);
    out.lastVertexImages.resize(nv);
    for (int k = 0; k <= K.dimension(); ++k)
        for (int i = 0; i < K.count(k); ++i) {
            out.vertexSimplex[offset[k] + i] = {k, i};
            out.lastVertexImages[offset[k] + i] = K.simplex(k, i).back();
        }
    std::vector<Simplex> tops;
    for (const Simplex& F : K.facets()) {
        const int d = static_cast<int>(F.size()) - 1;
        std::vector<int> perm(d + 1);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Simplex chain;
            Simplex prefix;
            for (int i = 0; i <= d; ++i) {
                prefix.push_back(F[perm[i]]);
                Simplex sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                int k = static_cast<int>(sorted.size()) - 1;
                chain.push_back(offset[k] + K.indexOf(sorted));
            }
            tops.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    out.sd = build_complex(tops, nv);
    return out;
}

SimplicialComplex quotient_complex(const SimplicialComplex& K,
                                   const std::vector<int>& vertexClass,
                                   int expectedFacetMultiplicity)
{
    if (static_cast<int>(vertexClass.size()) != K.vertexCount())
        throw std::invalid_argument("quotient_complex: class map must cover all vertices");
    int nv = 0;
    for (int c : vertexClass) nv = std::max(nv, c + 1);
    std::vector<Simplex> tops;
    std::map<Simplex, int> multiplicity;
    for (const Simplex& F : K.facets()) {
        Simplex img;
        img.reserve(F.size());
        for (int v : F) img.push_back(vertexClass[v]);
        std::sort(img.begin(), img.end());
        for (std::size_t i = 1; i < img.size(); ++i)
            if (img[i] == img[i - 1])
                throw std::invalid_argument("quotient_complex: a simplex degenerates");
        ++multiplicity[img];
        tops.push_back(std::move(img));
    }
    if (expectedFacetMultiplicity > 0)
        for (const auto& [s, m] : multiplicity)
            if (m != expectedFacetMultiplicity)
                throw std::invalid_argument("quotient_complex: unexpected facet multiplicity");
    return build_complex(tops, nv);
}

SimplicialComplex relabel_complex(const SimplicialComplex& K, const std::vector<int>& perm)
{
    if (static_cast<int>(perm.size()) != K.vertexCount())
        throw std::invalid_argument("relabel_complex: permutation size mismatch");
    std::vector<char> seen(K.vertexCount(), 0);
    for (int v : perm) {
        if (v < 0 || v >= K.vertexCount() || seen[v])
            throw std::invalid_argument("relabel_complex: not a permutation");
        seen[v] = 1;
    }
    std::vector<Simplex> tops;
    for (const Simplex& F : K.facets()) {
        Simplex s = F;
        for (int& v : s) v = perm[v];
        tops.push_back(std::move(s));
    }
    return build_complex(tops, K.vertexCount());
}

bool is_closed_pseudomanifold(const SimplicialComplex& K, std::string* why)
{
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int d = K.dimension();
    if (d < 1) return fail("dimension below 1");
    for (const Simplex& F : K.facets())
        if (static_cast<int>(F.size()) != d + 1) return fail("not pure");
    // every ridge in exactly two facets
    std::vector<int> ridgeCount(K.count(d - 1), 0);
    for (const Simplex& F : K.simplices(d)) {
        Simplex face;
        for (std::size_t drop = 0; drop < F.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < F.size(); ++i)
                if (i != drop) face.push_back(F[i]);
            ++ridgeCount[K.indexOf(face)];
        }
    }
    for (int c : ridgeCount)
        if (c != 2) return fail("a ridge is not in exactly two facets");
    // strong connectivity through ridges
    UnionFind uf(K.count(d));
    std::unordered_map<Simplex, int, SimplexHash> firstFacet;
    for (int j = 0; j < K.count(d); ++j) {
        const Simplex& F = K.simplex(d, j);
        Simplex face;
        for (std::size_t drop = 0; drop < F.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < F.size(); ++i)
                if (i != drop) face.push_back(F[i]);
            auto [it, fresh] = firstFacet.try_emplace(face, j);
            if (!fresh) uf.unite(it->second, j);
        }
    }
    int root = uf.find(0);
    for (int j = 1; j < K.count(d); ++j)
        if (uf.find(j) != root) return fail("facet graph disconnected");
    return true;
}

std::optional<std::vector<int>> coherent_orientation(const SimplicialComplex& K)
{
    std::string why;
    if (!is_closed_pseudomanifold(K, &why))
        throw std::invalid_argument("coherent_orientation: " + why);
    const int d = K.dimension();
    // ridge -> the (facet, sign of face) incidences
    std::vector<std::vector<std::pair<int, int>>> inc(K.count(d - 1));
    for (int j = 0; j < K.count(d); ++j) {
        const Simplex& F = K.simplex(d, j);
        Simplex face;
        for (std::size_t drop = 0; drop < F.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < F.size(); ++i)
                if (i != drop) face.push_back(F[i]);
            inc[K.indexOf(face)].push_back({j, drop % 2 == 0 ? 1 : -1});
        }
    }
    std::vector<int> sign(K.count(d), 0);
    std::vector<int> stack = {0};
    sign[0] = 1;
    std::vector<std::vector<int>> facetRidges(K.count(d));
    for (int r = 0; r < K.count(d - 1); ++r)
        for (auto& [f, s] : inc[r]) facetRidges[f].push_back(r);
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int r : facetRidges[f]) {
            const auto& pair = inc[r];
            int g = pair[0].first == f ? pair[1].first : pair[0].first;
            int ef = pair[0].first == f ? pair[0].second : pair[1].second;
            int eg = pair[0].first == f ? pair[1].second : pair[0].second;
            int need = -sign[f] * ef * eg;  // so that ef*sf + eg*sg = 0
            if (sign[g] == 0) {
                sign[g] = need;
                stack.push_back(g);
            } else if (sign[g] != need) {
                return std::nullopt;
            }
        }
    }
    return sign;
}

} // namespace obtop
