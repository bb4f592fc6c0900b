/**
 * Exact sparse integer linear algebra: Smith normal form with unimodular
 * transforms, integer linear system solving, and mod-p reduction.
 */

#ifndef OBTOP_INTLINALG_HPP
#define OBTOP_INTLINALG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace obtop {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

/// Sparse matrix over Z. Zero entries are never stored.
class SparseIntMatrix {
  public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols)
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("SparseIntMatrix: negative shape");
    }

    static SparseIntMatrix identity(int n);
    static SparseIntMatrix fromDense(const std::vector<std::vector<long long>>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, Int v);
    void add(int r, int c, const Int& v);
    Int at(int r, int c) const;

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    SparseIntMatrix transpose() const;
    IntVec apply(const IntVec& x) const;          // A * x
    SparseIntMatrix multiply(const SparseIntMatrix& B) const;

    bool operator==(const SparseIntMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, Int> entries_;

    void checkIndex(int r, int c) const;
};

/// A = U * D * V with U, V unimodular and D diagonal, each divisor
/// dividing the next. Uinv and Vinv are carried along because kernels
/// and integer solving need them anyway.
struct SmithDecomposition {
    SparseIntMatrix U, D, V;
    SparseIntMatrix Uinv, Vinv;
    std::vector<Int> divisors;
    int rank = 0;
};

struct SnfOptions {
    bool wantU = true;
    bool wantUinv = true;
    bool wantV = true;
    bool wantVinv = true;
};

SmithDecomposition smith_normal_form(const SparseIntMatrix& A,
                                     const SnfOptions& opts = SnfOptions{});

/// Basis of { x : A x = 0 } as a lattice (columns are basis vectors).
std::vector<IntVec> kernel_basis(const SparseIntMatrix& A);

/// Integer solution of A x = b, or nullopt when none exists over Z.
std::optional<IntVec> solve_integer(const SparseIntMatrix& A, const IntVec& b);

bool is_prime(long long p);

/// Entrywise reduction into {0, ..., p-1}.
SparseIntMatrix reduce_mod_p(const SparseIntMatrix& A, long long p);
std::vector<long long> reduce_mod_p(const IntVec& v, long long p);

/// Sparse F_p vector as (index, value) pairs, indices ascending.
using FpVec = std::vector<std::pair<int, long long>>;

/// Gaussian elimination over the prime field F_p (sparse rows).
/// Row-echelon data is cached so rank / solve / kernel share one pass.
class GfpSolver {
  public:
    GfpSolver(const SparseIntMatrix& A, long long p);

    int rank() const { return rank_; }
    long long p() const { return p_; }

    /// Kernel basis over F_p, sparse vectors.
    std::vector<FpVec> kernelBasis() const;

    /// Solution of A x = b over F_p, or nullopt.
    std::optional<std::vector<long long>> solve(const std::vector<long long>& b) const;

  private:
    long long p_;
    int rows_, cols_;
    int rank_ = 0;
    // reduced rows of [A | I_m]; pivcol_[i] is the pivot column of row i
    std::vector<std::map<int, long long>> rowsA_;
    std::vector<std::map<int, long long>> rowsT_;
    std::vector<int> pivcol_;
    std::vector<int> pivotOfCol_;  // column -> reduced row index, or -1

    long long inv(long long a) const;
};

/// Dense packed Gauss-Jordan over F_2; rows hold [A | transform] bits.
/// Orders of magnitude faster than the generic solver on the complexes
/// the corpus actually produces.
class Gf2Solver {
  public:
    Gf2Solver(const SparseIntMatrix& A);

    int rank() const { return rank_; }
    std::vector<FpVec> kernelBasis() const;
    std::optional<std::vector<long long>> solve(const std::vector<long long>& b) const;

  private:
    int rows_, cols_, wordsA_, wordsT_;
    int rank_ = 0;
    std::vector<std::vector<std::uint64_t>> rowA_, rowT_;
    std::vector<int> pivcol_;
    std::vector<int> pivotOfCol_;

    bool getA(int r, int c) const
    {
        return (rowA_[r][c >> 6] >> (c & 63)) & 1;
    }
};

/// Uniform front end over GfpSolver / Gf2Solver.
class FieldSolver {
  public:
    FieldSolver(const SparseIntMatrix& A, long long p);
    int rank() const;
    std::vector<FpVec> kernelBasis() const;
    std::optional<std::vector<long long>> solve(const std::vector<long long>& b) const;
    long long p() const { return p_; }

  private:
    long long p_;
    std::shared_ptr<GfpSolver> odd_;
    std::shared_ptr<Gf2Solver> two_;
};

} // namespace obtop

#endif
