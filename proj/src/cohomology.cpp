#include "obtop/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace obtop {

namespace detail {

/// Everything needed to coordinate further cocycles against a computed
/// group. Over Z: c = tail of V*x picks out kernel coordinates, then
/// z = UpInv*c lands in the Smith basis of the image lattice. Over F_p:
/// one solver for [image basis | generators] does the same job.
struct GroupContext {
    Coeff coeff;
    std::vector<int> freeIds;
    int fullSize = 0;
    int nFree = 0;

    // Z route
    bool zeroA = true;
    SparseIntMatrix V;
    int rankA = 0;
    int kernelDim = 0;
    SparseIntMatrix Kbasis;
    SparseIntMatrix UpInv;
    std::vector<Int> allDivisors;
    int rankC = 0;
    int numOnes = 0;

    // F_p route
    std::shared_ptr<FieldSolver> Esolver;
    std::vector<int> genCols;
};

} // namespace detail

using detail::GroupContext;

namespace {

IntVec restrictTo(const IntVec& full, const std::vector<int>& ids)
{
    IntVec out(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = full[ids[i]];
    return out;
}

IntVec expandFrom(const IntVec& small, const std::vector<int>& ids, int fullSize)
{
    IntVec out(fullSize, 0);
    for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = small[i];
    return out;
}

Int normalizeMod(const Int& v, const Int& m)
{
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

/// ker A / im B with generators; freeIds maps the reduced indexing back
/// to the full simplex list.
HomologyGroup quotient_group(const SparseIntMatrix& A, const SparseIntMatrix& B,
                             const Coeff& coeff, int degree,
                             std::vector<int> freeIds, int fullSize)
{
    auto ctx = std::make_shared<GroupContext>();
    ctx->coeff = coeff;
    ctx->fullSize = fullSize;
    ctx->nFree = A.cols();
    ctx->freeIds = std::move(freeIds);

    HomologyGroup G;
    G.degree = degree;
    G.coeff = coeff;
    G.context = ctx;

    const int n = A.cols();
    if (n == 0) return G;

    if (coeff.isZ()) {
        std::vector<IntVec> kernelCols;
        if (A.rows() == 0) {
            ctx->zeroA = true;
            ctx->kernelDim = n;
        } else {
            ctx->zeroA = false;
            SnfOptions o;
            o.wantU = o.wantUinv = false;
            o.wantV = o.wantVinv = true;
            SmithDecomposition S = smith_normal_form(A, o);
            ctx->rankA = S.rank;
            ctx->kernelDim = n - S.rank;
            ctx->V = std::move(S.V);
            ctx->Kbasis = SparseIntMatrix(n, ctx->kernelDim);
            for (const auto& [rc, v] : S.Vinv.entries())
                if (rc.second >= S.rank)
                    ctx->Kbasis.set(rc.first, rc.second - S.rank, v);
        }
        const int kk = ctx->kernelDim;
        if (kk == 0) return G;

        // image generators in kernel coordinates: tail rows of V * B
        SparseIntMatrix C(kk, B.cols());
        if (B.cols() > 0) {
            if (ctx->zeroA) {
                for (const auto& [rc, v] : B.entries()) C.set(rc.first, rc.second, v);
            } else {
                SparseIntMatrix VB = ctx->V.multiply(B);
                for (const auto& [rc, v] : VB.entries()) {
                    if (rc.first < ctx->rankA)
                        throw std::logic_error("quotient_group: image not in kernel");
                    C.set(rc.first - ctx->rankA, rc.second, v);
                }
            }
        }
        SnfOptions o2;
        o2.wantU = o2.wantUinv = true;
        o2.wantV = o2.wantVinv = false;
        SmithDecomposition S2 = smith_normal_form(C, o2);
        ctx->rankC = S2.rank;
        ctx->UpInv = std::move(S2.Uinv);
        ctx->allDivisors = S2.divisors;
        int numOnes = 0;
        for (const Int& d : S2.divisors)
            if (d == 1) ++numOnes;
        ctx->numOnes = numOnes;
        G.freeRank = kk - S2.rank;
        for (int i = numOnes; i < S2.rank; ++i) G.torsion.push_back(S2.divisors[i]);

        // generator slots: torsion then free; pull the needed U' columns
        std::vector<int> slots;
        for (int i = numOnes; i < S2.rank; ++i) slots.push_back(i);
        for (int i = S2.rank; i < kk; ++i) slots.push_back(i);
        std::map<int, IntVec> upCol;
        for (int s : slots) upCol[s] = IntVec(kk, 0);
        for (const auto& [rc, v] : S2.U.entries()) {
            auto it = upCol.find(rc.second);
            if (it != upCol.end()) it->second[rc.first] = v;
        }
        for (int s : slots) {
            IntVec inKernel = ctx->zeroA ? upCol[s] : ctx->Kbasis.apply(upCol[s]);
            G.generators.push_back(expandFrom(inKernel, ctx->freeIds, fullSize));
        }
        return G;
    }

    // Field coefficients. Kernel basis from one elimination; a second,
    // incremental elimination picks independent image columns and then
    // greedily extends them to a kernel basis — the added vectors are the
    // homology generators.
    const long long p = coeff.p;
    std::vector<FpVec> kernel;
    if (A.rows() == 0) {
        kernel.resize(n);
        for (int i = 0; i < n; ++i) kernel[i] = {{i, 1}};
    } else {
        FieldSolver GA(A, p);
        kernel = GA.kernelBasis();
    }
    const int kk = static_cast<int>(kernel.size());

    // incremental echelon over F_p (rows as maps, leading index order)
    std::map<int, std::map<int, long long>> echelon;  // lead -> reduced row
    auto modinv = [p](long long a) {
        long long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return (t % p + p) % p;
    };
    auto tryInsert = [&](std::map<int, long long> v) {
        while (!v.empty()) {
            int lead = v.begin()->first;
            auto it = echelon.find(lead);
            if (it == echelon.end()) {
                long long iv = modinv(v.begin()->second);
                for (auto& [c, val] : v) val = val * iv % p;
                echelon.emplace(lead, std::move(v));
                return true;
            }
            long long f = (p - v.begin()->second) % p;
            for (const auto& [c, val] : it->second) {
                long long nv = ((v.count(c) ? v[c] : 0) + f * val) % p;
                if (nv == 0) v.erase(c); else v[c] = nv;
            }
        }
        return false;
    };

    std::vector<FpVec> bcols(B.cols());
    for (const auto& [rc, v] : B.entries()) {
        long long m = v.convert_to<long long>() % p;
        if (m < 0) m += p;
        if (m != 0) bcols[rc.second].emplace_back(rc.first, m);
    }
    std::vector<FpVec> chosen;  // image basis then generators
    for (int c = 0; c < B.cols(); ++c) {
        if (tryInsert(std::map<int, long long>(bcols[c].begin(), bcols[c].end())))
            chosen.push_back(bcols[c]);
    }
    const int rIm = static_cast<int>(chosen.size());
    std::vector<int> genPositions;
    for (int i = 0; i < kk; ++i) {
        if (tryInsert(std::map<int, long long>(kernel[i].begin(), kernel[i].end()))) {
            genPositions.push_back(static_cast<int>(chosen.size()));
            chosen.push_back(kernel[i]);
        }
    }
    if (static_cast<int>(genPositions.size()) != kk - rIm)
        throw std::logic_error("quotient_group: field rank bookkeeping broke");
    SparseIntMatrix Epiv(n, static_cast<int>(chosen.size()));
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (const auto& [r, v] : chosen[i]) Epiv.set(r, static_cast<int>(i), v);
    ctx->Esolver = std::make_shared<FieldSolver>(Epiv, p);
    ctx->genCols = genPositions;
    G.freeRank = static_cast<int>(genPositions.size());
    for (int gc : genPositions) {
        IntVec gen(n, 0);
        for (const auto& [r, v] : chosen[gc]) gen[r] = v;
        G.generators.push_back(expandFrom(gen, ctx->freeIds, fullSize));
    }
    return G;
}

/// Memoization. Group cache keys mix the space fingerprint, degree and
/// coefficient; solver caches key on the matrix content itself so that
/// pairs sharing coboundary matrices share the expensive decompositions.
enum class CacheKind { Homology, Cohomology, CobSnf, CobGfp };
using CacheKey = std::tuple<std::uint64_t, int, int, long long, int>;

std::mutex g_cacheMutex;
std::map<CacheKey, std::shared_ptr<const HomologyGroup>> g_groupCache;
std::map<CacheKey, std::shared_ptr<const SmithDecomposition>> g_snfCache;
std::map<CacheKey, std::shared_ptr<const FieldSolver>> g_fieldCache;

CacheKey makeKey(std::uint64_t fp, int k, const Coeff& c, CacheKind kind)
{
    return {fp, k, static_cast<int>(c.kind), c.p, static_cast<int>(kind)};
}

std::uint64_t matrix_fingerprint(const SparseIntMatrix& M)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    mix(static_cast<std::uint64_t>(M.rows()));
    mix(static_cast<std::uint64_t>(M.cols()));
    for (const auto& [rc, v] : M.entries()) {
        mix(static_cast<std::uint64_t>(rc.first));
        mix(static_cast<std::uint64_t>(rc.second));
        if (v >= -2 && v <= 2)
            mix(static_cast<std::uint64_t>(v.convert_to<long long>() + 3));
        else
            mix(std::hash<std::string>{}(v.str()));
    }
    return h;
}

} // namespace

void clear_engine_caches()
{
    std::lock_guard<std::mutex> lock(g_cacheMutex);
    g_groupCache.clear();
    g_snfCache.clear();
    g_fieldCache.clear();
}

std::string HomologyGroup::str() const
{
    if (coeff.isZ()) {
        std::ostringstream os;
        bool first = true;
        if (freeRank > 0) {
            os << "Z^" << freeRank;
            first = false;
        }
        for (const Int& t : torsion) {
            if (!first) os << " + ";
            os << "Z/" << t;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
    if (freeRank == 0) return "0";
    std::ostringstream os;
    os << "Z" << coeff.p << "^" << freeRank;
    return os.str();
}

CoboundaryMatrix coboundary_matrix(const SimplicialPair& P, int k)
{
    const SimplicialComplex& K = P.total();
    CoboundaryMatrix out;
    auto freeList = [&](int d) {
        std::vector<int> ids;
        for (int i = 0; i < K.count(d); ++i)
            if (!P.inSub(d, i)) ids.push_back(i);
        return ids;
    };
    out.colIds = k >= 0 ? freeList(k) : std::vector<int>{};
    out.rowIds = freeList(k + 1);
    std::vector<int> colPos(K.count(k), -1);
    for (std::size_t i = 0; i < out.colIds.size(); ++i) colPos[out.colIds[i]] = static_cast<int>(i);
    out.M = SparseIntMatrix(static_cast<int>(out.rowIds.size()),
                            static_cast<int>(out.colIds.size()));
    for (std::size_t r = 0; r < out.rowIds.size(); ++r) {
        const Simplex& s = K.simplex(k + 1, out.rowIds[r]);
        Simplex face;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            int idx = K.indexOf(face);
            if (colPos[idx] < 0) continue;  // cochain vanishes on the subcomplex
            out.M.set(static_cast<int>(r), colPos[idx], (drop % 2 == 0) ? 1 : -1);
        }
    }
    return out;
}

HomologyGroup homology(const SimplicialComplex& K, int k, const Coeff& coeff)
{
    if (k < 0) throw std::out_of_range("homology: negative degree");
    CacheKey key = makeKey(K.fingerprint(), k, coeff, CacheKind::Homology);
    {
        std::lock_guard<std::mutex> lock(g_cacheMutex);
        auto it = g_groupCache.find(key);
        if (it != g_groupCache.end()) return *it->second;
    }
    HomologyGroup G;
    if (k > K.dimension()) {
        G.degree = k;
        G.coeff = coeff;
    } else {
        const int n = K.count(k);
        SparseIntMatrix A = (k == 0) ? SparseIntMatrix(0, n) : boundary_matrix(K, k);
        SparseIntMatrix B = (k == K.dimension()) ? SparseIntMatrix(n, 0)
                                                 : boundary_matrix(K, k + 1);
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        G = quotient_group(A, B, coeff, k, std::move(ids), n);
        G.degree = k;
    }
    auto stored = std::make_shared<const HomologyGroup>(G);
    std::lock_guard<std::mutex> lock(g_cacheMutex);
    g_groupCache.emplace(key, stored);
    return G;
}

HomologyGroup cohomology(const SimplicialPair& P, int k, const Coeff& coeff)
{
    if (k < 0) throw std::out_of_range("cohomology: negative degree");
    CacheKey key = makeKey(P.fingerprint(), k, coeff, CacheKind::Cohomology);
    {
        std::lock_guard<std::mutex> lock(g_cacheMutex);
        auto it = g_groupCache.find(key);
        if (it != g_groupCache.end()) return *it->second;
    }
    HomologyGroup G;
    if (k > P.total().dimension()) {
        G.degree = k;
        G.coeff = coeff;
    } else {
        // delta_k: C^k -> C^{k+1}; the image of delta_{k-1} is quotiented out
        CoboundaryMatrix dk = coboundary_matrix(P, k);
        CoboundaryMatrix dk1 = coboundary_matrix(P, k - 1);
        G = quotient_group(dk.M, dk1.M, coeff, k, dk.colIds, P.total().count(k));
        G.degree = k;
    }
    auto stored = std::make_shared<const HomologyGroup>(G);
    std::lock_guard<std::mutex> lock(g_cacheMutex);
    g_groupCache.emplace(key, stored);
    return G;
}

HomologyGroup cohomology(ComplexPtr K, int k, const Coeff& coeff)
{
    return cohomology(SimplicialPair::absolute(std::move(K)), k, coeff);
}

namespace {

void validateClassShape(const CohomologyClass& x, const CohomologyClass& y)
{
    if (x.space.fingerprint() != y.space.fingerprint() || x.degree != y.degree ||
        !(x.coeff == y.coeff))
        throw std::invalid_argument("classes live on different spaces/degrees/coefficients");
}

const GroupContext& contextOf(const HomologyGroup& G)
{
    if (!G.context) throw std::logic_error("group lacks a context");
    return *G.context;
}

IntVec coordinatesOf(const SimplicialPair& P, int k, const Coeff& coeff, const IntVec& full)
{
    HomologyGroup G = cohomology(P, k, coeff);
    const GroupContext& ctx = contextOf(G);
    IntVec x = restrictTo(full, ctx.freeIds);
    if (coeff.isZ()) {
        IntVec c;
        if (ctx.zeroA) {
            c = x;
        } else {
            IntVec z = ctx.V.apply(x);
            for (int i = 0; i < ctx.rankA; ++i)
                if (z[i] != 0) throw std::logic_error("coordinates: not a cocycle");
            c.assign(z.begin() + ctx.rankA, z.end());
        }
        IntVec zc = ctx.UpInv.apply(c);
        IntVec coords;
        for (int i = ctx.numOnes; i < ctx.rankC; ++i)
            coords.push_back(normalizeMod(zc[i], ctx.allDivisors[i]));
        for (int i = ctx.rankC; i < ctx.kernelDim; ++i) coords.push_back(zc[i]);
        return coords;
    }
    std::vector<long long> xm(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        xm[i] = normalizeMod(x[i], ctx.coeff.p).convert_to<long long>();
    if (!ctx.Esolver) {
        if (std::any_of(xm.begin(), xm.end(), [](long long v) { return v != 0; }))
            throw std::logic_error("coordinates: nonzero cocycle in trivial group");
        return {};
    }
    auto sol = ctx.Esolver->solve(xm);
    if (!sol) throw std::logic_error("coordinates: cocycle outside kernel span");
    IntVec coords;
    for (int gc : ctx.genCols) coords.push_back((*sol)[gc]);
    return coords;
}

} // namespace

CohomologyClass make_class(const SimplicialPair& P, int k, const Coeff& coeff, IntVec cochain)
{
    const SimplicialComplex& K = P.total();
    if (k < 0 || static_cast<int>(cochain.size()) != K.count(k))
        throw std::invalid_argument("make_class: cochain has wrong length");
    for (int i = 0; i < K.count(k); ++i)
        if (P.inSub(k, i) && cochain[i] != 0)
            throw std::invalid_argument("make_class: relative cochain must vanish on the subcomplex");
    if (!coeff.isZ())
        for (Int& v : cochain) v = normalizeMod(v, coeff.p);
    // cocycle check
    CoboundaryMatrix dk = coboundary_matrix(P, k);
    IntVec delta = dk.M.apply(restrictTo(cochain, dk.colIds));
    for (const Int& v : delta) {
        Int r = coeff.isZ() ? v : normalizeMod(v, coeff.p);
        if (r != 0) throw std::invalid_argument("make_class: cochain is not a cocycle");
    }
    CohomologyClass x;
    x.space = P;
    x.degree = k;
    x.coeff = coeff;
    x.cochain = std::move(cochain);
    x.coordinates = coordinatesOf(P, k, coeff, x.cochain);
    return x;
}

CohomologyClass generator_class(const SimplicialPair& P, int k, const Coeff& coeff, int i)
{
    HomologyGroup G = cohomology(P, k, coeff);
    if (i < 0 || i >= G.generatorCount())
        throw std::out_of_range("generator_class: index out of range");
    return make_class(P, k, coeff, G.generators[i]);
}

CohomologyClass class_from_coordinates(const SimplicialPair& P, int k, const Coeff& coeff,
                                       const IntVec& coords)
{
    HomologyGroup G = cohomology(P, k, coeff);
    if (static_cast<int>(coords.size()) != G.generatorCount())
        throw std::invalid_argument("class_from_coordinates: wrong coordinate count");
    IntVec cochain(P.total().count(k), 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (int j = 0; j < P.total().count(k); ++j)
            if (G.generators[i][j] != 0) cochain[j] += coords[i] * G.generators[i][j];
    return make_class(P, k, coeff, std::move(cochain));
}

CohomologyClass zero_class(const SimplicialPair& P, int k, const Coeff& coeff)
{
    return make_class(P, k, coeff, IntVec(P.total().count(k), 0));
}

CohomologyClass pullback(const SimplicialMap& f, const CohomologyClass& x)
{
    if (x.space.total().fingerprint() != f.target().fingerprint())
        throw std::invalid_argument("pullback: class does not live on the map's target");
    SparseIntMatrix M = induced_chain_map(f, x.degree);
    // (f# u)(sigma) = u(f_# sigma): transpose action
    IntVec out(f.source().count(x.degree), 0);
    for (const auto& [rc, v] : M.entries()) out[rc.second] += v * x.cochain[rc.first];
    return make_class(SimplicialPair::absolute(f.sourcePtr()), x.degree, x.coeff,
                      std::move(out));
}

bool is_cohomologous(const CohomologyClass& x, const CohomologyClass& y)
{
    validateClassShape(x, y);
    const SimplicialPair& P = x.space;
    const int k = x.degree;
    CoboundaryMatrix dkm1 = coboundary_matrix(P, k - 1);
    IntVec diffFull(x.cochain.size());
    for (std::size_t i = 0; i < x.cochain.size(); ++i) diffFull[i] = x.cochain[i] - y.cochain[i];
    CoboundaryMatrix dk = coboundary_matrix(P, k);
    IntVec diff = restrictTo(diffFull, dk.colIds);
    if (x.coeff.isZ()) {
        CacheKey key = makeKey(matrix_fingerprint(dkm1.M), k, x.coeff, CacheKind::CobSnf);
        std::shared_ptr<const SmithDecomposition> S;
        {
            std::lock_guard<std::mutex> lock(g_cacheMutex);
            auto it = g_snfCache.find(key);
            if (it != g_snfCache.end()) S = it->second;
        }
        if (!S) {
            SnfOptions o;
            o.wantU = o.wantV = false;
            o.wantUinv = o.wantVinv = true;
            S = std::make_shared<const SmithDecomposition>(smith_normal_form(dkm1.M, o));
            std::lock_guard<std::mutex> lock(g_cacheMutex);
            g_snfCache.emplace(key, S);
        }
        // solve dkm1 * w = diff using the cached decomposition
        IntVec yv = S->Uinv.apply(diff);
        for (int i = 0; i < static_cast<int>(yv.size()); ++i) {
            if (i < S->rank) {
                if (yv[i] % S->divisors[i] != 0) return false;
            } else if (yv[i] != 0) {
                return false;
            }
        }
        return true;
    }
    CacheKey key = makeKey(matrix_fingerprint(dkm1.M), k, x.coeff, CacheKind::CobGfp);
    std::shared_ptr<const FieldSolver> GS;
    {
        std::lock_guard<std::mutex> lock(g_cacheMutex);
        auto it = g_fieldCache.find(key);
        if (it != g_fieldCache.end()) GS = it->second;
    }
    if (!GS) {
        GS = std::make_shared<const FieldSolver>(dkm1.M, x.coeff.p);
        std::lock_guard<std::mutex> lock(g_cacheMutex);
        g_fieldCache.emplace(key, GS);
    }
    std::vector<long long> rhs(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i)
        rhs[i] = normalizeMod(diff[i], x.coeff.p).convert_to<long long>();
    return GS->solve(rhs).has_value();
}

bool is_zero_class(const CohomologyClass& x)
{
    return is_cohomologous(x, zero_class(x.space, x.degree, x.coeff));
}

CohomologyClass class_sum(const CohomologyClass& x, const CohomologyClass& y)
{
    validateClassShape(x, y);
    IntVec sum(x.cochain.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = x.cochain[i] + y.cochain[i];
    return make_class(x.space, x.degree, x.coeff, std::move(sum));
}

CohomologyClass class_scale(const Int& c, const CohomologyClass& x)
{
    IntVec s(x.cochain.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = c * x.cochain[i];
    return make_class(x.space, x.degree, x.coeff, std::move(s));
}

CohomologyClass class_negate(const CohomologyClass& x)
{
    return class_scale(Int(-1), x);
}

Int degree(const SimplicialMap& f)
{
    const SimplicialComplex& S = f.source();
    const SimplicialComplex& T = f.target();
    std::string why;
    if (!is_closed_pseudomanifold(S, &why))
        throw std::invalid_argument("degree: source is not a closed pseudomanifold (" + why + ")");
    if (!is_closed_pseudomanifold(T, &why))
        throw std::invalid_argument("degree: target is not a closed pseudomanifold (" + why + ")");
    if (S.dimension() != T.dimension())
        throw std::invalid_argument("degree: dimension mismatch");
    auto os = coherent_orientation(S);
    auto ot = coherent_orientation(T);
    if (!os || !ot)
        throw std::invalid_argument("degree: undefined for non-orientable input");
    const int d = S.dimension();
    SparseIntMatrix M = induced_chain_map(f, d);
    IntVec zs(S.count(d)), img;
    for (int i = 0; i < S.count(d); ++i) zs[i] = (*os)[i];
    img = M.apply(zs);
    // top boundaries vanish for a closed pseudomanifold, so the multiple
    // is exact on the nose
    Int deg = 0;
    bool found = false;
    for (int i = 0; i < T.count(d); ++i) {
        if ((*ot)[i] == 0) continue;
        Int want = img[i];
        Int have = (*ot)[i];
        if (!found) {
            if (want % have != 0) throw std::logic_error("degree: image is not a multiple");
            deg = want / have;
            found = true;
        } else if (want != deg * have) {
            throw std::logic_error("degree: image is not a coherent multiple");
        }
    }
    return deg;
}

} // namespace obtop
