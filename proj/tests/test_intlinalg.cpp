#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "obtop/intlinalg.hpp"

using namespace obtop;

namespace {

Int det(const std::vector<std::vector<Int>>& M)
{
    const int n = static_cast<int>(M.size());
    if (n == 0) return 1;
    if (n == 1) return M[0][0];
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (M[0][j] == 0) continue;
        std::vector<std::vector<Int>> sub;
        for (int r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(M[r][c]);
            sub.push_back(std::move(row));
        }
        Int term = M[0][j] * det(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

/// Independent oracle: d_k = gcd(k-minors) / gcd((k-1)-minors).
std::vector<Int> divisorsByMinors(const SparseIntMatrix& A)
{
    const int m = A.rows(), n = A.cols();
    std::vector<std::vector<Int>> D(m, std::vector<Int>(n, 0));
    for (const auto& [rc, v] : A.entries()) D[rc.first][rc.second] = v;
    std::vector<Int> gcds;  // gcds[k-1] = gcd of k x k minors
    for (int k = 1; k <= std::min(m, n); ++k) {
        Int g = 0;
        std::vector<int> rows(k), cols(k);
        std::function<void(int, int)> pickRows = [&](int idx, int start) {
            if (idx == k) {
                std::function<void(int, int)> pickCols = [&](int jdx, int cstart) {
                    if (jdx == k) {
                        std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
                        for (int a = 0; a < k; ++a)
                            for (int b = 0; b < k; ++b) sub[a][b] = D[rows[a]][cols[b]];
                        g = boost::multiprecision::gcd(g, det(sub));
                        return;
                    }
                    for (int c = cstart; c < n; ++c) {
                        cols[jdx] = c;
                        pickCols(jdx + 1, c + 1);
                    }
                };
                pickCols(0, 0);
                return;
            }
            for (int r = start; r < m; ++r) {
                rows[idx] = r;
                pickRows(idx + 1, r + 1);
            }
        };
        pickRows(0, 0);
        gcds.push_back(boost::multiprecision::abs(g));
    }
    std::vector<Int> divisors;
    Int prev = 1;
    for (const Int& g : gcds) {
        if (g == 0) break;
        divisors.push_back(g / prev);
        prev = g;
    }
    return divisors;
}

SparseIntMatrix randomMatrix(std::mt19937& rng, int maxDim, int maxAbs)
{
    std::uniform_int_distribution<int> dim(1, maxDim), val(-maxAbs, maxAbs);
    SparseIntMatrix A(dim(rng), dim(rng));
    for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c) A.set(r, c, val(rng));
    return A;
}

void checkDecomposition(const SparseIntMatrix& A, const SmithDecomposition& S)
{
    // A = U D V exactly
    CHECK(S.U.multiply(S.D).multiply(S.V) == A);
    // transforms are mutually inverse and unimodular
    CHECK(S.U.multiply(S.Uinv) == SparseIntMatrix::identity(A.rows()));
    CHECK(S.V.multiply(S.Vinv) == SparseIntMatrix::identity(A.cols()));
    // divisor chain
    for (std::size_t i = 0; i + 1 < S.divisors.size(); ++i) {
        CHECK(S.divisors[i] > 0);
        CHECK(S.divisors[i + 1] % S.divisors[i] == 0);
    }
}

} // namespace

TEST_CASE("smith normal form on the pinned examples")
{
    SUBCASE("zero matrix")
    {
        SparseIntMatrix Z(3, 2);
        SmithDecomposition S = smith_normal_form(Z);
        CHECK(S.divisors.empty());
        CHECK(S.D.nnz() == 0);
        checkDecomposition(Z, S);
    }
    SUBCASE("identity")
    {
        SparseIntMatrix I = SparseIntMatrix::identity(4);
        SmithDecomposition S = smith_normal_form(I);
        REQUIRE(S.divisors.size() == 4);
        for (const Int& d : S.divisors) CHECK(d == 1);
        checkDecomposition(I, S);
    }
    SUBCASE("2x2 with torsion")
    {
        SparseIntMatrix A = SparseIntMatrix::fromDense({{2, 4}, {6, 8}});
        SmithDecomposition S = smith_normal_form(A);
        REQUIRE(S.divisors.size() == 2);
        CHECK(S.divisors[0] == 2);
        CHECK(S.divisors[1] == 4);
        checkDecomposition(A, S);
        // oracle cross-check: d1 = gcd of entries, d1*d2 = |det|
        std::vector<Int> oracle = divisorsByMinors(A);
        CHECK(oracle == S.divisors);
    }
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle on random input")
{
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 250; ++trial) {
        SparseIntMatrix A = randomMatrix(rng, 4, 3);
        SmithDecomposition S = smith_normal_form(A);
        checkDecomposition(A, S);
        CHECK(S.divisors == divisorsByMinors(A));
    }
}

TEST_CASE("smith normal form is deterministic")
{
    std::mt19937 rng(99);
    SparseIntMatrix A = randomMatrix(rng, 4, 3);
    SmithDecomposition S1 = smith_normal_form(A);
    SmithDecomposition S2 = smith_normal_form(A);
    CHECK(S1.divisors == S2.divisors);
    CHECK(S1.U == S2.U);
    CHECK(S1.V == S2.V);
}

TEST_CASE("integer solving")
{
    SUBCASE("identity system")
    {
        SparseIntMatrix I = SparseIntMatrix::identity(3);
        IntVec b = {Int(5), Int(-7), Int(0)};
        auto x = solve_integer(I, b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SUBCASE("parity obstruction")
    {
        SparseIntMatrix A = SparseIntMatrix::fromDense({{2}});
        CHECK_FALSE(solve_integer(A, {Int(1)}).has_value());
    }
    SUBCASE("2x2 solvable")
    {
        SparseIntMatrix A = SparseIntMatrix::fromDense({{2, 4}, {6, 8}});
        auto x = solve_integer(A, {Int(2), Int(6)});
        REQUIRE(x.has_value());
        CHECK(*x == IntVec{Int(1), Int(0)});
    }
    SUBCASE("random systems resubstitute")
    {
        std::mt19937 rng(4242);
        std::uniform_int_distribution<int> val(-3, 3);
        for (int trial = 0; trial < 100; ++trial) {
            SparseIntMatrix A = randomMatrix(rng, 4, 3);
            IntVec x0(A.cols());
            for (Int& v : x0) v = val(rng);
            IntVec b = A.apply(x0);
            auto x = solve_integer(A, b);
            REQUIRE(x.has_value());
            CHECK(A.apply(*x) == b);
        }
    }
    SUBCASE("shape mismatch throws")
    {
        SparseIntMatrix A(2, 2);
        CHECK_THROWS_AS(solve_integer(A, {Int(1)}), std::invalid_argument);
    }
}

TEST_CASE("kernel basis spans the kernel lattice")
{
    SparseIntMatrix A = SparseIntMatrix::fromDense({{1, 1, 1}, {0, 2, 2}});
    auto basis = kernel_basis(A);
    REQUIRE(basis.size() == 1);
    for (const IntVec& v : basis) {
        IntVec y = A.apply(v);
        for (const Int& c : y) CHECK(c == 0);
    }
}

TEST_CASE("mod-p reduction")
{
    CHECK(reduce_mod_p(IntVec{Int(2), Int(3), Int(4)}, 2) ==
          std::vector<long long>{0, 1, 0});
    SparseIntMatrix I = SparseIntMatrix::identity(3);
    CHECK(reduce_mod_p(I, 2) == I);
    SparseIntMatrix A = SparseIntMatrix::fromDense({{2, 4}, {6, 8}});
    CHECK(reduce_mod_p(A, 2).nnz() == 0);
    CHECK_THROWS_AS(reduce_mod_p(A, 4), std::invalid_argument);
    CHECK(reduce_mod_p(IntVec{Int(-1)}, 3) == std::vector<long long>{2});
}

TEST_CASE("field solvers agree with brute force")
{
    std::mt19937 rng(7);
    for (long long p : {2ll, 3ll, 5ll}) {
        for (int trial = 0; trial < 60; ++trial) {
            SparseIntMatrix A = randomMatrix(rng, 4, 3);
            FieldSolver FS(A, p);
            // kernel vectors really lie in the kernel
            for (const FpVec& v : FS.kernelBasis()) {
                std::vector<long long> x(A.cols(), 0);
                for (auto [i, val] : v) x[i] = val;
                IntVec xi(x.begin(), x.end());
                for (const Int& c : A.apply(xi)) CHECK(c % p == 0);
            }
            // rank + kernel dimension = columns
            CHECK(FS.rank() + static_cast<int>(FS.kernelBasis().size()) == A.cols());
            // solvable systems solve, and solutions verify
            std::uniform_int_distribution<int> val(0, static_cast<int>(p) - 1);
            std::vector<long long> x0(A.cols());
            for (auto& v : x0) v = val(rng);
            IntVec xi(x0.begin(), x0.end());
            IntVec b = A.apply(xi);
            std::vector<long long> bm(b.size());
            for (std::size_t i = 0; i < b.size(); ++i)
                bm[i] = ((b[i] % p) + p).convert_to<long long>() % p;
            auto x = FS.solve(bm);
            REQUIRE(x.has_value());
            IntVec xs(x->begin(), x->end());
            IntVec back = A.apply(xs);
            for (std::size_t i = 0; i < back.size(); ++i)
                CHECK((back[i] - b[i]) % p == 0);
        }
    }
}
