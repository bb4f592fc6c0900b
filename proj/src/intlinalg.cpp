#include "obtop/intlinalg.hpp"

#include <algorithm>
#include <set>

namespace obtop {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// Mutable sparse workspace for the Smith reduction. The matrix is kept
/// as row maps plus a column->rows index so both row and column
/// operations stay cheap. Unimodular transforms are accumulated in the
/// orientation that makes each update a single row or column splice:
///   row op  W <- E W  updates  U <- U E^-1 (U by columns), Uinv <- E Uinv (rows)
///   col op  W <- W F  updates  V <- F^-1 V (V by rows),    Vinv <- Vinv F (cols)
struct Workspace {
    int m, n;
    std::vector<std::map<int, Int>> row;      // row -> (col -> value)
    std::vector<std::set<int>> colRows;       // col -> rows with a nonzero
    SnfOptions opts;
    std::vector<std::map<int, Int>> Ucols, UinvRows, Vrows, VinvCols;

    Workspace(const SparseIntMatrix& A, const SnfOptions& o)
        : m(A.rows()), n(A.cols()), row(A.rows()), colRows(A.cols()), opts(o)
    {
        for (const auto& [rc, v] : A.entries()) {
            row[rc.first][rc.second] = v;
            colRows[rc.second].insert(rc.first);
        }
        if (opts.wantU) Ucols.assign(m, {});
        if (opts.wantUinv) UinvRows.assign(m, {});
        if (opts.wantV) Vrows.assign(n, {});
        if (opts.wantVinv) VinvCols.assign(n, {});
        for (int i = 0; i < m; ++i) {
            if (opts.wantU) Ucols[i][i] = 1;
            if (opts.wantUinv) UinvRows[i][i] = 1;
        }
        for (int j = 0; j < n; ++j) {
            if (opts.wantV) Vrows[j][j] = 1;
            if (opts.wantVinv) VinvCols[j][j] = 1;
        }
    }

    void swapRows(int i, int j)
    {
        if (i == j) return;
        for (const auto& [c, v] : row[i]) colRows[c].erase(i);
        for (const auto& [c, v] : row[j]) colRows[c].erase(j);
        std::swap(row[i], row[j]);
        for (const auto& [c, v] : row[i]) colRows[c].insert(i);
        for (const auto& [c, v] : row[j]) colRows[c].insert(j);
        if (opts.wantU) std::swap(Ucols[i], Ucols[j]);
        if (opts.wantUinv) std::swap(UinvRows[i], UinvRows[j]);
    }

    void swapCols(int i, int j)
    {
        if (i == j) return;
        std::set<int> touched = colRows[i];
        touched.insert(colRows[j].begin(), colRows[j].end());
        for (int r : touched) {
            auto it = row[r].find(i), jt = row[r].find(j);
            Int vi = it == row[r].end() ? Int(0) : it->second;
            Int vj = jt == row[r].end() ? Int(0) : jt->second;
            if (it != row[r].end()) row[r].erase(it);
            if (jt != row[r].end()) row[r].erase(jt);
            if (vj != 0) row[r][i] = vj;
            if (vi != 0) row[r][j] = vi;
        }
        std::swap(colRows[i], colRows[j]);
        if (opts.wantV) std::swap(Vrows[i], Vrows[j]);
        if (opts.wantVinv) std::swap(VinvCols[i], VinvCols[j]);
    }

    void negateRow(int i)
    {
        for (auto& [c, v] : row[i]) v = -v;
        if (opts.wantU)
            for (auto& [r, v] : Ucols[i]) v = -v;
        if (opts.wantUinv)
            for (auto& [c, v] : UinvRows[i]) v = -v;
    }

    // row[dst] += q * row[src]
    void rowAxpy(int dst, int src, const Int& q)
    {
        if (q == 0) return;
        for (const auto& [c, v] : row[src]) {
            auto it = row[dst].find(c);
            if (it == row[dst].end()) {
                row[dst][c] = q * v;
                colRows[c].insert(dst);
            } else {
                it->second += q * v;
                if (it->second == 0) {
                    row[dst].erase(it);
                    colRows[c].erase(dst);
                }
            }
        }
        if (opts.wantU) {  // col_src(U) -= q * col_dst(U)
            auto& cs = Ucols[src];
            for (const auto& [r, v] : Ucols[dst]) {
                auto it = cs.find(r);
                if (it == cs.end()) cs[r] = -q * v;
                else {
                    it->second -= q * v;
                    if (it->second == 0) cs.erase(it);
                }
            }
        }
        if (opts.wantUinv) {  // row_dst(Uinv) += q * row_src(Uinv)
            auto& rd = UinvRows[dst];
            for (const auto& [c, v] : UinvRows[src]) {
                auto it = rd.find(c);
                if (it == rd.end()) rd[c] = q * v;
                else {
                    it->second += q * v;
                    if (it->second == 0) rd.erase(it);
                }
            }
        }
    }

    // col[dst] += q * col[src]
    void colAxpy(int dst, int src, const Int& q)
    {
        if (q == 0) return;
        std::vector<int> srcRows(colRows[src].begin(), colRows[src].end());
        for (int r : srcRows) {
            const Int& v = row[r][src];
            auto it = row[r].find(dst);
            if (it == row[r].end()) {
                row[r][dst] = q * v;
                colRows[dst].insert(r);
            } else {
                it->second += q * v;
                if (it->second == 0) {
                    row[r].erase(it);
                    colRows[dst].erase(r);
                }
            }
        }
        if (opts.wantV) {  // row_src(V) -= q * row_dst(V)
            auto& rs = Vrows[src];
            for (const auto& [c, v] : Vrows[dst]) {
                auto it = rs.find(c);
                if (it == rs.end()) rs[c] = -q * v;
                else {
                    it->second -= q * v;
                    if (it->second == 0) rs.erase(it);
                }
            }
        }
        if (opts.wantVinv) {  // col_dst(Vinv) += q * col_src(Vinv)
            auto& cd = VinvCols[dst];
            for (const auto& [r, v] : VinvCols[src]) {
                auto it = cd.find(r);
                if (it == cd.end()) cd[r] = q * v;
                else {
                    it->second += q * v;
                    if (it->second == 0) cd.erase(it);
                }
            }
        }
    }

    /// Clear column k and row k against the pivot at (k,k) until (k,k)
    /// is the only nonzero in both. Classic Euclidean descent: the pivot
    /// strictly shrinks whenever a remainder survives.
    void eliminateAt(int k)
    {
        while (true) {
            // Bring a minimal-absolute-value entry of column k to (k,k).
            while (true) {
                int bestRow = -1;
                Int bestAbs = 0;
                for (int r : colRows[k]) {
                    if (r < k) continue;
                    Int a = abs(row[r][k]);
                    if (bestRow == -1 || a < bestAbs ||
                        (a == bestAbs && r < bestRow)) {
                        bestRow = r;
                        bestAbs = a;
                    }
                }
                swapRows(k, bestRow);
                const Int p = row[k][k];
                bool clean = true;
                std::vector<int> rows(colRows[k].begin(), colRows[k].end());
                for (int r : rows) {
                    if (r == k) continue;
                    Int q = row[r][k] / p;  // truncated; remainder < |p|
                    rowAxpy(r, k, -q);
                    if (row[r].count(k)) clean = false;
                }
                if (clean) break;
            }
            // Column k is clean; reduce row k by column operations. These
            // only touch row k because column k has a single entry.
            const Int p = row[k][k];
            bool rowClean = true;
            std::vector<int> cols;
            for (const auto& [c, v] : row[k])
                if (c != k) cols.push_back(c);
            for (int c : cols) {
                Int q = row[k][c] / p;
                colAxpy(c, k, -q);
                if (row[k].count(c)) rowClean = false;
            }
            if (rowClean) break;
            // A remainder survived in row k: swap it into column k and
            // run the column pass again with the smaller pivot.
            int bestCol = -1;
            Int bestAbs = 0;
            for (const auto& [c, v] : row[k]) {
                if (c == k) continue;
                Int a = abs(v);
                if (bestCol == -1 || a < bestAbs || (a == bestAbs && c < bestCol)) {
                    bestCol = c;
                    bestAbs = a;
                }
            }
            swapCols(k, bestCol);
        }
        if (row[k][k] < 0) negateRow(k);
    }
};

} // namespace

SparseIntMatrix SparseIntMatrix::identity(int n)
{
    SparseIntMatrix I(n, n);
    for (int i = 0; i < n; ++i) I.set(i, i, 1);
    return I;
}

SparseIntMatrix SparseIntMatrix::fromDense(const std::vector<std::vector<long long>>& d)
{
    int m = static_cast<int>(d.size());
    int n = m == 0 ? 0 : static_cast<int>(d[0].size());
    SparseIntMatrix A(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(d[i].size()) != n)
            throw std::invalid_argument("fromDense: ragged rows");
        for (int j = 0; j < n; ++j)
            if (d[i][j] != 0) A.set(i, j, d[i][j]);
    }
    return A;
}

void SparseIntMatrix::checkIndex(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseIntMatrix: index out of bounds");
}

void SparseIntMatrix::set(int r, int c, Int v)
{
    checkIndex(r, c);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void SparseIntMatrix::add(int r, int c, const Int& v)
{
    checkIndex(r, c);
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        if (v != 0) entries_[{r, c}] = v;
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

Int SparseIntMatrix::at(int r, int c) const
{
    checkIndex(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Int(0) : it->second;
}

SparseIntMatrix SparseIntMatrix::transpose() const
{
    SparseIntMatrix T(cols_, rows_);
    for (const auto& [rc, v] : entries_) T.set(rc.second, rc.first, v);
    return T;
}

IntVec SparseIntMatrix::apply(const IntVec& x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw std::invalid_argument("apply: shape mismatch");
    IntVec y(rows_, 0);
    for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
    return y;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& B) const
{
    if (cols_ != B.rows_)
        throw std::invalid_argument("multiply: shape mismatch");
    // row index of B
    std::vector<std::vector<std::pair<int, Int>>> brow(B.rows_);
    for (const auto& [rc, v] : B.entries_) brow[rc.first].emplace_back(rc.second, v);
    SparseIntMatrix C(rows_, B.cols_);
    for (const auto& [rc, v] : entries_)
        for (const auto& [c2, w] : brow[rc.second]) C.add(rc.first, c2, v * w);
    return C;
}

SmithDecomposition smith_normal_form(const SparseIntMatrix& A, const SnfOptions& opts)
{
    Workspace W(A, opts);
    const int kmax = std::min(A.rows(), A.cols());
    int rank = 0;
    for (int k = 0; k < kmax; ++k) {
        // Pivot search: prefer a +-1 in a thin column, fall back to the
        // globally smallest entry. Ties break on (column nnz, row, col)
        // so the reduction is deterministic.
        int pr = -1, pc = -1;
        Int pv = 0;
        bool haveUnit = false;
        for (int c = 0; c < W.n; ++c) {
            std::size_t cn = 0;
            for (int r : W.colRows[c])
                if (r >= k) ++cn;
            if (cn == 0) continue;
            for (int r : W.colRows[c]) {
                if (r < k) continue;
                Int a = abs(W.row[r][c]);
                bool better;
                if (pr == -1)
                    better = true;
                else if ((a == 1) != haveUnit)
                    better = (a == 1);
                else
                    better = a < abs(pv);
                if (better) {
                    pr = r;
                    pc = c;
                    pv = W.row[r][c];
                    haveUnit = (a == 1);
                }
            }
        }
        if (pr == -1) break;  // submatrix is zero
        W.swapRows(k, pr);
        W.swapCols(k, pc);
        W.eliminateAt(k);
        ++rank;
    }
    // Enforce the divisor chain d1 | d2 | ... by folding offending pairs.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                if (W.row[j][j] % W.row[i][i] != 0) {
                    W.colAxpy(i, j, 1);
                    W.eliminateAt(i);
                    changed = true;
                }
            }
        }
    }

    SmithDecomposition out;
    out.rank = rank;
    out.divisors.reserve(rank);
    out.D = SparseIntMatrix(A.rows(), A.cols());
    for (int k = 0; k < rank; ++k) {
        out.divisors.push_back(W.row[k][k]);
        out.D.set(k, k, W.row[k][k]);
    }
    auto fromCols = [](const std::vector<std::map<int, Int>>& cols, int dim) {
        SparseIntMatrix M(dim, dim);
        for (int c = 0; c < dim; ++c)
            for (const auto& [r, v] : cols[c]) M.set(r, c, v);
        return M;
    };
    auto fromRows = [](const std::vector<std::map<int, Int>>& rows, int dim) {
        SparseIntMatrix M(dim, dim);
        for (int r = 0; r < dim; ++r)
            for (const auto& [c, v] : rows[r]) M.set(r, c, v);
        return M;
    };
    if (opts.wantU) out.U = fromCols(W.Ucols, A.rows());
    if (opts.wantUinv) out.Uinv = fromRows(W.UinvRows, A.rows());
    if (opts.wantV) out.V = fromRows(W.Vrows, A.cols());
    if (opts.wantVinv) out.Vinv = fromCols(W.VinvCols, A.cols());
    return out;
}

std::vector<IntVec> kernel_basis(const SparseIntMatrix& A)
{
    SnfOptions o;
    o.wantU = o.wantUinv = o.wantV = false;
    o.wantVinv = true;
    SmithDecomposition S = smith_normal_form(A, o);
    std::vector<IntVec> basis;
    for (int c = S.rank; c < A.cols(); ++c) {
        IntVec v(A.cols(), 0);
        for (const auto& [rc, val] : S.Vinv.entries())
            if (rc.second == c) v[rc.first] = val;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<IntVec> solve_integer(const SparseIntMatrix& A, const IntVec& b)
{
    if (static_cast<int>(b.size()) != A.rows())
        throw std::invalid_argument("solve_integer: shape mismatch");
    SnfOptions o;
    o.wantU = o.wantV = false;
    o.wantUinv = o.wantVinv = true;
    SmithDecomposition S = smith_normal_form(A, o);
    IntVec y = S.Uinv.apply(b);
    IntVec z(A.cols(), 0);
    for (int i = 0; i < A.rows(); ++i) {
        if (i < S.rank) {
            if (y[i] % S.divisors[i] != 0) return std::nullopt;
            if (i < A.cols()) z[i] = y[i] / S.divisors[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    IntVec x = S.Vinv.apply(z);
    if (A.apply(x) != b)
        throw std::logic_error("solve_integer: verification failed");
    return x;
}

bool is_prime(long long p)
{
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {
long long modReduce(const Int& v, long long p)
{
    Int r = v % p;
    if (r < 0) r += p;
    return r.convert_to<long long>();
}
} // namespace

SparseIntMatrix reduce_mod_p(const SparseIntMatrix& A, long long p)
{
    if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: p must be prime");
    SparseIntMatrix B(A.rows(), A.cols());
    for (const auto& [rc, v] : A.entries()) B.set(rc.first, rc.second, modReduce(v, p));
    return B;
}

std::vector<long long> reduce_mod_p(const IntVec& v, long long p)
{
    if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: p must be prime");
    std::vector<long long> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = modReduce(v[i], p);
    return out;
}

GfpSolver::GfpSolver(const SparseIntMatrix& A, long long p)
    : p_(p), rows_(A.rows()), cols_(A.cols())
{
    if (!is_prime(p)) throw std::invalid_argument("GfpSolver: p must be prime");
    rowsA_.assign(rows_, {});
    rowsT_.assign(rows_, {});
    pivcol_.assign(rows_, -1);
    pivotOfCol_.assign(cols_, -1);
    std::vector<std::map<int, long long>> work(rows_);
    for (const auto& [rc, v] : A.entries()) {
        long long m = modReduce(v, p);
        if (m != 0) work[rc.first][rc.second] = m;
    }
    // Gauss-Jordan, processing rows in order; pivot = first surviving
    // column without a pivot. Every pivot column present in the incoming
    // row must be cleared: reduced rows only carry free columns besides
    // their own pivot, so one ascending sweep suffices.
    for (int r = 0; r < rows_; ++r) {
        std::map<int, long long> cur = std::move(work[r]);
        std::map<int, long long> tr;
        tr[r] = 1;
        auto it = cur.begin();
        while (it != cur.end()) {
            int c = it->first;
            int pr = pivotOfCol_[c];
            if (pr == -1) {
                ++it;
                continue;
            }
            long long f = (p_ - it->second) % p_;
            for (const auto& [cc, vv] : rowsA_[pr]) {
                long long nv = (cur.count(cc) ? cur[cc] : 0) + f * vv % p_;
                nv %= p_;
                if (nv == 0) cur.erase(cc); else cur[cc] = nv;
            }
            for (const auto& [cc, vv] : rowsT_[pr]) {
                long long nv = (tr.count(cc) ? tr[cc] : 0) + f * vv % p_;
                nv %= p_;
                if (nv == 0) tr.erase(cc); else tr[cc] = nv;
            }
            it = cur.upper_bound(c);
        }
        // new pivot = first entry at a pivotless column (all entries now)
        if (cur.empty()) {
            rowsA_[r] = {};
            rowsT_[r] = std::move(tr);
            continue;
        }
        int c = cur.begin()->first;
        long long iv = inv(cur.begin()->second);
        for (auto& [cc, vv] : cur) vv = vv * iv % p_;
        for (auto& [cc, vv] : tr) vv = vv * iv % p_;
        // clear column c from earlier reduced rows
        for (int r2 = 0; r2 < r; ++r2) {
            auto it = rowsA_[r2].find(c);
            if (it == rowsA_[r2].end()) continue;
            long long f = (p_ - it->second) % p_;
            for (const auto& [cc, vv] : cur) {
                long long nv = (rowsA_[r2].count(cc) ? rowsA_[r2][cc] : 0) + f * vv % p_;
                nv %= p_;
                if (nv == 0) rowsA_[r2].erase(cc); else rowsA_[r2][cc] = nv;
            }
            for (const auto& [cc, vv] : tr) {
                long long nv = (rowsT_[r2].count(cc) ? rowsT_[r2][cc] : 0) + f * vv % p_;
                nv %= p_;
                if (nv == 0) rowsT_[r2].erase(cc); else rowsT_[r2][cc] = nv;
            }
        }
        rowsA_[r] = std::move(cur);
        rowsT_[r] = std::move(tr);
        pivcol_[r] = c;
        pivotOfCol_[c] = r;
        ++rank_;
    }
}

long long GfpSolver::inv(long long a) const
{
    long long t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return (t % p_ + p_) % p_;
}

std::vector<FpVec> GfpSolver::kernelBasis() const
{
    std::vector<FpVec> basis;
    for (int f = 0; f < cols_; ++f) {
        if (pivotOfCol_[f] != -1) continue;
        std::map<int, long long> v;
        v[f] = 1;
        for (int r = 0; r < rows_; ++r) {
            if (pivcol_[r] == -1) continue;
            auto it = rowsA_[r].find(f);
            if (it != rowsA_[r].end()) v[pivcol_[r]] = (p_ - it->second) % p_;
        }
        basis.emplace_back(v.begin(), v.end());
    }
    return basis;
}

Gf2Solver::Gf2Solver(const SparseIntMatrix& A)
    : rows_(A.rows()), cols_(A.cols()),
      wordsA_((A.cols() + 63) / 64), wordsT_((A.rows() + 63) / 64)
{
    rowA_.assign(rows_, std::vector<std::uint64_t>(wordsA_, 0));
    rowT_.assign(rows_, std::vector<std::uint64_t>(wordsT_, 0));
    pivcol_.assign(rows_, -1);
    pivotOfCol_.assign(cols_, -1);
    for (const auto& [rc, v] : A.entries())
        if (v % 2 != 0) rowA_[rc.first][rc.second >> 6] ^= 1ull << (rc.second & 63);
    for (int r = 0; r < rows_; ++r) rowT_[r][r >> 6] = 1ull << (r & 63);

    auto firstBit = [&](const std::vector<std::uint64_t>& w) {
        for (int i = 0; i < wordsA_; ++i)
            if (w[i]) return (i << 6) + __builtin_ctzll(w[i]);
        return -1;
    };
    auto xorInto = [&](int dst, int src) {
        for (int i = 0; i < wordsA_; ++i) rowA_[dst][i] ^= rowA_[src][i];
        for (int i = 0; i < wordsT_; ++i) rowT_[dst][i] ^= rowT_[src][i];
    };
    auto nextBit = [&](const std::vector<std::uint64_t>& w, int after) {
        int start = after + 1;
        for (int i = start >> 6; i < wordsA_; ++i) {
            std::uint64_t bits = w[i];
            if (i == start >> 6) bits &= ~0ull << (start & 63);
            if (bits) return (i << 6) + __builtin_ctzll(bits);
        }
        return -1;
    };
    for (int r = 0; r < rows_; ++r) {
        // clear every pivot column present, ascending; reduced rows only
        // carry free columns past their pivot, so one sweep suffices
        int c = firstBit(rowA_[r]);
        while (c != -1) {
            int pr = pivotOfCol_[c];
            if (pr != -1) xorInto(r, pr);  // clears bit c, toggles free bits > c
            c = nextBit(rowA_[r], c);
        }
        c = firstBit(rowA_[r]);
        if (c == -1) continue;
        for (int r2 = 0; r2 < r; ++r2)
            if (getA(r2, c)) xorInto(r2, r);
        pivcol_[r] = c;
        pivotOfCol_[c] = r;
        ++rank_;
    }
}

std::vector<FpVec> Gf2Solver::kernelBasis() const
{
    std::vector<FpVec> basis;
    for (int f = 0; f < cols_; ++f) {
        if (pivotOfCol_[f] != -1) continue;
        std::map<int, long long> v;
        v[f] = 1;
        for (int r = 0; r < rows_; ++r)
            if (pivcol_[r] != -1 && getA(r, f)) v[pivcol_[r]] = 1;
        basis.emplace_back(v.begin(), v.end());
    }
    return basis;
}

std::optional<std::vector<long long>> Gf2Solver::solve(const std::vector<long long>& b) const
{
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("Gf2Solver::solve: shape mismatch");
    std::vector<std::uint64_t> bw(wordsT_, 0);
    for (int i = 0; i < rows_; ++i)
        if (b[i] % 2 != 0) bw[i >> 6] ^= 1ull << (i & 63);
    std::vector<long long> x(cols_, 0);
    for (int r = 0; r < rows_; ++r) {
        int parity = 0;
        for (int i = 0; i < wordsT_; ++i)
            parity ^= __builtin_parityll(rowT_[r][i] & bw[i]);
        if (pivcol_[r] == -1) {
            if (parity) return std::nullopt;
        } else {
            x[pivcol_[r]] = parity;
        }
    }
    return x;
}

FieldSolver::FieldSolver(const SparseIntMatrix& A, long long p) : p_(p)
{
    if (p == 2)
        two_ = std::make_shared<Gf2Solver>(A);
    else
        odd_ = std::make_shared<GfpSolver>(A, p);
}

int FieldSolver::rank() const { return two_ ? two_->rank() : odd_->rank(); }

std::vector<FpVec> FieldSolver::kernelBasis() const
{
    return two_ ? two_->kernelBasis() : odd_->kernelBasis();
}

std::optional<std::vector<long long>> FieldSolver::solve(const std::vector<long long>& b) const
{
    return two_ ? two_->solve(b) : odd_->solve(b);
}

std::optional<std::vector<long long>> GfpSolver::solve(const std::vector<long long>& b) const
{
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("GfpSolver::solve: shape mismatch");
    std::vector<long long> x(cols_, 0);
    for (int r = 0; r < rows_; ++r) {
        long long c = 0;
        for (const auto& [j, v] : rowsT_[r]) c = (c + v * ((b[j] % p_ + p_) % p_)) % p_;
        if (pivcol_[r] == -1) {
            if (c != 0) return std::nullopt;
        } else {
            x[pivcol_[r]] = c;
        }
    }
    return x;
}

} // namespace obtop
