#include "obtop/manifold.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace obtop {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void requireClosedConnected(const SimplicialComplex& K)
{
    std::string why;
    if (!is_closed_pseudomanifold(K, &why))
        throw std::invalid_argument("model error: not a closed pseudomanifold (" + why + ")");
    if (!K.connected())
        throw std::invalid_argument("model error: complex is disconnected");
}

/// Signature of a symmetric matrix by rational Lagrange diagonalization.
int symmetric_signature(std::vector<std::vector<Rational>> M)
{
    const int n = static_cast<int>(M.size());
    int pos = 0, neg = 0;
    for (int k = 0; k < n; ++k) {
        if (M[k][k] == 0) {
            // find j > k with M[j][j] != 0 or an off-diagonal hyperbolic pair
            int j = -1;
            for (int t = k + 1; t < n; ++t)
                if (M[k][t] != 0) {
                    j = t;
                    break;
                }
            if (j == -1) continue;  // zero row: contributes nothing
            // row/col k += row/col j makes the diagonal nonzero
            for (int t = 0; t < n; ++t) M[k][t] += M[j][t];
            for (int t = 0; t < n; ++t) M[t][k] += M[t][j];
        }
        Rational d = M[k][k];
        if (d > 0) ++pos;
        else if (d < 0) ++neg;
        else continue;
        for (int r = k + 1; r < n; ++r) {
            Rational f = M[r][k] / d;
            if (f == 0) continue;
            for (int t = 0; t < n; ++t) M[r][t] -= f * M[k][t];
            for (int t = 0; t < n; ++t) M[t][r] -= f * M[t][k];
        }
    }
    return pos - neg;
}

} // namespace

FundamentalClassResult fundamental_class(const SimplicialComplex& K, const Coeff& coeff,
                                         int orientationSign)
{
    requireClosedConnected(K);
    if (orientationSign != 1 && orientationSign != -1)
        throw std::invalid_argument("fundamental_class: orientation sign must be +-1");
    const int d = K.dimension();
    FundamentalClassResult out;
    auto orient = coherent_orientation(K);
    out.orientable = orient.has_value();
    if (coeff.isZ()) {
        if (!orient) return out;  // non-orientable marker: empty cycle
        out.cycle.resize(K.count(d));
        for (int i = 0; i < K.count(d); ++i)
            out.cycle[i] = Int(orientationSign) * (*orient)[i];
        return out;
    }
    if (!(coeff == Coeff::mod2()))
        throw std::invalid_argument("fundamental_class: coefficients must be Z or Z2");
    out.cycle.assign(K.count(d), 1);
    return out;
}

Int pair_with_fundamental(const SimplicialComplex& K, const IntVec& cochain,
                          int orientationSign)
{
    FundamentalClassResult fc = fundamental_class(K, Coeff::integers(), orientationSign);
    if (!fc.orientable)
        throw std::invalid_argument("model error: pairing needs an orientable manifold");
    const int d = K.dimension();
    if (static_cast<int>(cochain.size()) != K.count(d))
        throw std::invalid_argument("pair_with_fundamental: degree mismatch");
    Int acc = 0;
    for (int i = 0; i < K.count(d); ++i) acc += cochain[i] * fc.cycle[i];
    return acc;
}

IntersectionForm intersection_form(const SimplicialComplex& K, int orientationSign)
{
    requireClosedConnected(K);
    if (K.dimension() != 4)
        throw std::invalid_argument("intersection_form: need a 4-dimensional complex");
    FundamentalClassResult fc = fundamental_class(K, Coeff::integers(), orientationSign);
    if (!fc.orientable)
        throw std::invalid_argument("intersection_form: manifold must be orientable");

    auto Kptr = std::make_shared<const SimplicialComplex>(K);
    SimplicialPair P = SimplicialPair::absolute(Kptr);
    HomologyGroup H2 = cohomology(P, 2, Coeff::integers());
    IntersectionForm F;
    F.torsion = H2.torsion;
    const int t = static_cast<int>(H2.torsion.size());
    for (int i = t; i < H2.generatorCount(); ++i)
        F.basis.push_back(generator_class(P, 2, Coeff::integers(), i));
    const int r = static_cast<int>(F.basis.size());
    F.matrix.assign(r, std::vector<Int>(r, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
            IntVec prod = cup_cochain(K, F.basis[i].cochain, 2, F.basis[j].cochain, 2);
            Int val = 0;
            for (int s = 0; s < K.count(4); ++s) val += prod[s] * fc.cycle[s];
            F.matrix[i][j] = val;
            F.matrix[j][i] = val;  // symmetric when paired against a cycle
        }
    }
    std::vector<std::vector<Rational>> M(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) M[i][j] = Rational(F.matrix[i][j]);
    F.signature = symmetric_signature(std::move(M));
    if (r == 0) {
        F.determinant = 1;
    } else {
        SparseIntMatrix A(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (F.matrix[i][j] != 0) A.set(i, j, F.matrix[i][j]);
        SmithDecomposition S = smith_normal_form(A);
        Int det = (S.rank == r) ? Int(1) : Int(0);
        for (const Int& dvr : S.divisors) det *= dvr;
        F.determinant = det;  // |det|
    }
    return F;
}

Int self_intersection(const SimplicialComplex& K, const CohomologyClass& x,
                      int orientationSign)
{
    if (x.space.total().fingerprint() != K.fingerprint() || x.degree != 2 ||
        !x.coeff.isZ())
        throw std::invalid_argument("self_intersection: need an integral H^2 class on K");
    FundamentalClassResult fc = fundamental_class(K, Coeff::integers(), orientationSign);
    if (!fc.orientable)
        throw std::invalid_argument("self_intersection: manifold must be orientable");
    IntVec prod = cup_cochain(K, x.cochain, 2, x.cochain, 2);
    Int val = 0;
    for (int s = 0; s < K.count(4); ++s) val += prod[s] * fc.cycle[s];
    return val;
}

ThomModel make_thom_model(const SimplicialPair& pair, int rank,
                          const std::optional<Int>& expectedEuler,
                          const std::optional<int>& expectedW2)
{
    if (rank != 2 && rank != 4)
        throw std::invalid_argument("model error: Thom model rank must be 2 or 4");
    ThomModel T;
    T.pair = pair;
    T.rank = rank;
    if (rank == 2) {
        Coeff Z = Coeff::integers();
        HomologyGroup Hr = cohomology(pair, 2, Z);
        if (Hr.freeRank != 1 || !Hr.torsion.empty())
            throw std::invalid_argument("model error: H^2 of the pair is not infinite cyclic");
        HomologyGroup Htop = cohomology(pair, 4, Z);
        if (Htop.freeRank != 1 || !Htop.torsion.empty())
            throw std::invalid_argument("model error: H^4 of the pair is not infinite cyclic");
        T.thomClass = generator_class(pair, 2, Z, 0);
        T.topClass = generator_class(pair, 4, Z, 0);
        CohomologyClass sq = cup(T.thomClass, T.thomClass);
        Int c = sq.coordinates[0];
        // normalize [DN] so the euler number is nonnegative
        if (c < 0) {
            T.topClass = class_negate(T.topClass);
            c = -c;
        }
        T.eulerNumber = c;
        if (expectedEuler && *expectedEuler != T.eulerNumber)
            throw std::invalid_argument("model error: stored euler number does not match");
        return T;
    }
    Coeff Z2 = Coeff::mod2();
    HomologyGroup Hr = cohomology(pair, 4, Z2);
    if (Hr.freeRank != 1)
        throw std::invalid_argument("model error: H^4 of the pair is not Z2");
    HomologyGroup Htop = cohomology(pair, 6, Z2);
    if (Htop.freeRank != 1)
        throw std::invalid_argument("model error: H^6 of the pair is not Z2");
    T.thomClass = generator_class(pair, 4, Z2, 0);
    if (is_zero_class(T.thomClass))
        throw std::invalid_argument("model error: Thom class must generate");
    T.topClass = generator_class(pair, 6, Z2, 0);
    CohomologyClass sq = steenrod_sq(2, T.thomClass);
    T.w2 = static_cast<int>(sq.coordinates[0].convert_to<long long>() % 2);
    if (expectedW2 && (*expectedW2 % 2 + 2) % 2 != T.w2)
        throw std::invalid_argument("model error: stored w2 does not match");
    return T;
}

Int thom_square(const ThomModel& T, const Int& n)
{
    if (T.rank != 2)
        throw std::invalid_argument("model error: thom_square needs a rank-2 model");
    CohomologyClass ntau = class_scale(n, T.thomClass);
    CohomologyClass sq = cup(ntau, ntau);
    // coefficient against the normalized top class
    Int c = sq.coordinates[0];
    Int t = T.topClass.coordinates[0];
    if (t == 0 || c % t != 0)
        throw std::logic_error("thom_square: top class does not divide the square");
    return c / t;
}

int sq2_thom(const ThomModel& T)
{
    if (T.rank != 4)
        throw std::invalid_argument("model error: sq2_thom needs a rank-4 model");
    if (is_zero_class(T.thomClass))
        throw std::invalid_argument("model error: Thom class must generate");
    CohomologyClass sq = steenrod_sq(2, T.thomClass);
    Int c = sq.coordinates[0];
    Int t = T.topClass.coordinates[0];
    if (t % 2 == 0) throw std::logic_error("sq2_thom: degenerate top class");
    return static_cast<int>(((c.convert_to<long long>() % 2) + 2) % 2);
}

} // namespace obtop
