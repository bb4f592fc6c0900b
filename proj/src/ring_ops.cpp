#include "obtop/ring_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace obtop {

namespace {

void requireSameSpace(const CohomologyClass& x, const CohomologyClass& y)
{
    if (x.space.fingerprint() != y.space.fingerprint() || !(x.coeff == y.coeff))
        throw std::invalid_argument("cup: classes live on different spaces or coefficients");
}

} // namespace

IntVec cup_cochain(const SimplicialComplex& K, const IntVec& u, int p,
                   const IntVec& v, int q)
{
    const int n = p + q;
    IntVec out(K.count(n), 0);
    if (p < 0 || q < 0) return out;
    Simplex front, back;
    for (int s = 0; s < K.count(n); ++s) {
        const Simplex& sigma = K.simplex(n, s);
        front.assign(sigma.begin(), sigma.begin() + p + 1);
        back.assign(sigma.begin() + p, sigma.end());
        const Int& uf = u[K.indexOf(front)];
        if (uf == 0) continue;
        out[s] = uf * v[K.indexOf(back)];
    }
    return out;
}

CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y)
{
    requireSameSpace(x, y);
    IntVec prod = cup_cochain(x.space.total(), x.cochain, x.degree, y.cochain, y.degree);
    return make_class(x.space, x.degree + y.degree, x.coeff, std::move(prod));
}

std::vector<long long> cup_i_cochain(const SimplicialComplex& K,
                                     const std::vector<long long>& u, int p,
                                     const std::vector<long long>& v, int q, int i)
{
    const int n = p + q - i;
    std::vector<long long> out(std::max(0, K.count(n)), 0);
    if (i < 0 || p < 0 || q < 0 || n < 0 || n > K.dimension()) return out;

    // cut points 0 <= j_0 < ... < j_i <= n carve [0..n] into overlapping
    // intervals; u eats the even ones, v the odd ones
    std::vector<int> js(i + 1);
    Simplex uFace, vFace;
    for (int s = 0; s < K.count(n); ++s) {
        const Simplex& sigma = K.simplex(n, s);
        long long acc = 0;
        // iterate over all (i+1)-subsets of {0..n}
        for (int t = 0; t <= i; ++t) js[t] = t;
        while (true) {
            // interval sizes: even union must have exactly p+1 vertices
            int uCount = js[0] + 1;
            for (int t = 2; t <= i + 1; t += 2) {
                int lo = js[t - 1], hi = (t <= i) ? js[t] : n;
                uCount += hi - lo + 1;
            }
            if (uCount == p + 1) {
                uFace.clear();
                vFace.clear();
                for (int a = 0; a <= js[0]; ++a) uFace.push_back(sigma[a]);
                for (int t = 1; t <= i + 1; ++t) {
                    int lo = js[t - 1], hi = (t <= i) ? js[t] : n;
                    Simplex& dst = (t % 2 == 1) ? vFace : uFace;
                    for (int a = lo; a <= hi; ++a) dst.push_back(sigma[a]);
                }
                long long uv = u[K.indexOf(uFace)] & 1;
                if (uv) acc ^= v[K.indexOf(vFace)] & 1;
            }
            // next subset
            int t = i;
            while (t >= 0 && js[t] == n - (i - t)) --t;
            if (t < 0) break;
            ++js[t];
            for (int r = t + 1; r <= i; ++r) js[r] = js[r - 1] + 1;
        }
        out[s] = acc;
    }
    return out;
}

CohomologyClass steenrod_sq(int k, const CohomologyClass& x)
{
    if (!(x.coeff == Coeff::mod2()))
        throw std::invalid_argument("steenrod_sq: class must have Z2 coefficients");
    if (k < 0) throw std::invalid_argument("steenrod_sq: negative k");
    const int n = x.degree;
    const int outDeg = n + k;
    const SimplicialComplex& K = x.space.total();
    if (k > n) return zero_class(x.space, outDeg, x.coeff);
    std::vector<long long> u(x.cochain.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        u[j] = (x.cochain[j] % 2 != 0) ? 1 : 0;
    std::vector<long long> sq = cup_i_cochain(K, u, n, u, n, n - k);
    IntVec out(sq.size());
    for (std::size_t j = 0; j < sq.size(); ++j) out[j] = sq[j];
    return make_class(x.space, outDeg, x.coeff, std::move(out));
}

CohomologyClass apply_theta(const FibrationProfile& profile, const CohomologyClass& x)
{
    if (profile.name == FibrationProfile::Hopf) {
        if (x.degree != profile.n + 1)
            throw std::invalid_argument("apply_theta: class degree must be n+1");
        if (!x.coeff.isZ())
            throw std::invalid_argument("apply_theta: Hopf profile expects integer coefficients");
        if (profile.sign != 1 && profile.sign != -1)
            throw std::invalid_argument("apply_theta: Hopf profile sign unresolved");
        return class_scale(Int(profile.sign), cup(x, x));
    }
    if (profile.name == FibrationProfile::Su3S4) {
        if (x.degree != profile.n + 1)
            throw std::invalid_argument("apply_theta: class degree must be n+1");
        CohomologyClass x2;
        if (x.coeff.isZ()) {
            IntVec reduced(x.cochain.size());
            for (std::size_t j = 0; j < reduced.size(); ++j)
                reduced[j] = (x.cochain[j] % 2 + 2) % 2;
            x2 = make_class(x.space, x.degree, Coeff::mod2(), std::move(reduced));
        } else if (x.coeff == Coeff::mod2()) {
            x2 = x;
        } else {
            throw std::invalid_argument("apply_theta: unsupported coefficients");
        }
        return steenrod_sq(2, x2);
    }
    throw std::invalid_argument("apply_theta: profile not implemented");
}

MappingCylinder whitehead_cylinder(const SimplicialMap& f)
{
    MappingCylinder out;
    out.sourceSd = barycentric_subdivision(f.source());
    const SimplicialComplex& sd = out.sourceSd.sd;
    const int nSd = sd.vertexCount();
    const int nT = f.target().vertexCount();
    out.sdVertexIds.resize(nSd);
    for (int v = 0; v < nSd; ++v) out.sdVertexIds[v] = v;
    out.targetVertexIds.resize(nT);
    for (int w = 0; w < nT; ++w) out.targetVertexIds[w] = nSd + w;

    std::vector<Simplex> tops;
    for (const Simplex& F : f.target().facets()) {
        Simplex s = F;
        for (int& v : s) v += nSd;
        tops.push_back(std::move(s));
    }
    // every sd-simplex is a chain of simplices of the source; glue faces
    // of the image of its smallest member
    for (int k = 0; k <= sd.dimension(); ++k) {
        for (const Simplex& chain : sd.simplices(k)) {
            int minDim = f.source().dimension() + 1, minIdx = -1;
            for (int v : chain) {
                auto [d, idx] = out.sourceSd.vertexSimplex[v];
                if (d < minDim) {
                    minDim = d;
                    minIdx = idx;
                }
            }
            Simplex img;
            for (int v : f.source().simplex(minDim, minIdx)) img.push_back(f.image(v));
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            tops.push_back(chain);
            for (unsigned mask = 1; mask < (1u << img.size()); ++mask) {
                Simplex piece = chain;
                for (std::size_t b = 0; b < img.size(); ++b)
                    if (mask & (1u << b)) piece.push_back(img[b] + nSd);
                tops.push_back(std::move(piece));
            }
        }
    }
    out.complex = std::make_shared<const SimplicialComplex>(build_complex(tops, nSd + nT));
    return out;
}

MappingCone mapping_cone(const SimplicialMap& f)
{
    MappingCone out;
    out.cylinder = whitehead_cylinder(f);
    const SimplicialComplex& cyl = *out.cylinder.complex;
    const int apex = cyl.vertexCount();
    out.apexId = apex;
    std::vector<Simplex> tops = cyl.facets();
    // cone off the subdivided source end
    for (const Simplex& F : out.cylinder.sourceSd.sd.facets()) {
        Simplex s = F;
        s.push_back(apex);
        tops.push_back(std::move(s));
    }
    auto cone = std::make_shared<const SimplicialComplex>(build_complex(tops, apex + 1));
    std::vector<int> sub = out.cylinder.targetVertexIds;
    out.pair = SimplicialPair(cone, std::move(sub));
    return out;
}

SparseIntMatrix subdivision_chain_map(const SimplicialComplex& K, const Subdivision& S, int k)
{
    // offsets of barycenter ids per dimension
    std::vector<int> offset(K.dimension() + 2, 0);
    for (int d = 0; d <= K.dimension(); ++d) offset[d + 1] = offset[d] + K.count(d);
    SparseIntMatrix M(S.sd.count(k), K.count(k));
    for (int j = 0; j < K.count(k); ++j) {
        const Simplex& sigma = K.simplex(k, j);
        std::vector<int> perm(sigma.size());
        for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = static_cast<int>(t);
        do {
            int inversions = 0;
            for (std::size_t a = 0; a < perm.size(); ++a)
                for (std::size_t b = a + 1; b < perm.size(); ++b)
                    if (perm[a] > perm[b]) ++inversions;
            Simplex chain;
            Simplex prefix;
            for (std::size_t t = 0; t < perm.size(); ++t) {
                prefix.push_back(sigma[perm[t]]);
                Simplex sorted = prefix;
                std::sort(sorted.begin(), sorted.end());
                chain.push_back(offset[sorted.size() - 1] + K.indexOf(sorted));
            }
            std::sort(chain.begin(), chain.end());
            M.add(S.sd.indexOf(chain), j, (inversions % 2 == 0) ? 1 : -1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return M;
}

Int hopf_invariant(const SimplicialMap& f)
{
    const SimplicialComplex& S3 = f.source();
    const SimplicialComplex& S2 = f.target();
    std::string why;
    if (!is_closed_pseudomanifold(S3, &why) || S3.dimension() != 3)
        throw std::invalid_argument("hopf_invariant: source fails the S^3 model check");
    if (!is_closed_pseudomanifold(S2, &why) || S2.dimension() != 2)
        throw std::invalid_argument("hopf_invariant: target fails the S^2 model check");
    Coeff Z = Coeff::integers();
    if (!(homology(S3, 1, Z).trivial() && homology(S3, 2, Z).trivial()))
        throw std::invalid_argument("hopf_invariant: source does not have S^3 homology");
    if (!(homology(S2, 1, Z).trivial() && homology(S2, 2, Z).freeRank == 1))
        throw std::invalid_argument("hopf_invariant: target does not have S^2 homology");
    auto orient = coherent_orientation(S3);
    if (!orient) throw std::invalid_argument("hopf_invariant: source not orientable");

    MappingCone cone = mapping_cone(f);
    const SimplicialComplex& C = cone.pair.total();
    SimplicialPair absC = SimplicialPair::absolute(cone.pair.totalPtr());

    HomologyGroup H2 = cohomology(absC, 2, Z);
    if (H2.freeRank != 1 || !H2.torsion.empty())
        throw std::logic_error("hopf_invariant: cone H^2 is not Z");
    const IntVec& u = H2.generators.back();

    // push the fundamental cycle into the cone through sd, then fill it
    // inside the cylinder part
    const Subdivision& sd = cone.cylinder.sourceSd;
    SparseIntMatrix sdMap = subdivision_chain_map(S3, sd, 3);
    IntVec z(S3.count(3));
    for (int i = 0; i < S3.count(3); ++i) z[i] = (*orient)[i];
    IntVec sdz = sdMap.apply(z);
    // re-index sd 3-simplices into the cone complex
    IntVec sdzC(C.count(3), 0);
    for (int i = 0; i < sd.sd.count(3); ++i) {
        if (sdz[i] == 0) continue;
        sdzC[C.indexOf(sd.sd.simplex(3, i))] = sdz[i];
    }
    // boundary matrix restricted to cylinder 4-simplices (no apex)
    std::vector<int> cylCols;
    for (int j = 0; j < C.count(4); ++j)
        if (C.simplex(4, j).back() != cone.apexId) cylCols.push_back(j);
    SparseIntMatrix full = boundary_matrix(C, 4);
    SparseIntMatrix restricted(C.count(3), static_cast<int>(cylCols.size()));
    std::vector<int> colPos(C.count(4), -1);
    for (std::size_t i = 0; i < cylCols.size(); ++i) colPos[cylCols[i]] = static_cast<int>(i);
    for (const auto& [rc, v] : full.entries())
        if (colPos[rc.second] >= 0) restricted.set(rc.first, colPos[rc.second], v);
    auto Y = solve_integer(restricted, sdzC);
    if (!Y) throw std::logic_error("hopf_invariant: cycle does not bound in the cylinder");

    // W = apex * sd(z) - Y is a 4-cycle pairing +1 against the source
    // orientation; <u cup u, W> is the invariant
    IntVec W(C.count(4), 0);
    for (int i = 0; i < sd.sd.count(3); ++i) {
        if (sdz[i] == 0) continue;
        Simplex s = sd.sd.simplex(3, i);
        s.push_back(cone.apexId);
        W[C.indexOf(s)] = sdz[i];
    }
    for (std::size_t i = 0; i < cylCols.size(); ++i) W[cylCols[i]] -= (*Y)[i];

    IntVec uu = cup_cochain(C, u, 2, u, 2);
    Int H = 0;
    for (int s = 0; s < C.count(4); ++s) H += uu[s] * W[s];
    return H;
}

} // namespace obtop
