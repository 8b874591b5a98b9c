#include "coxcalc/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace coxcalc {

IntMat IntMat::identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rs) {
    if (rs.empty()) return IntMat(0, 0);
    IntMat M(int(rs.size()), int(rs[0].size()));
    for (int i = 0; i < M.rows; ++i) {
        if (int(rs[i].size()) != M.cols) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < M.cols; ++j) M.at(i, j) = rs[i][j];
    }
    return M;
}

IntVec IntMat::row(int i) const {
    IntVec r(cols);
    for (int j = 0; j < cols; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMat::col(int j) const {
    IntVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
}

IntMat IntMat::transpose() const {
    IntMat T(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

bool IntMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row_multiple(int dst, int src, const Int& q) {
    for (int c = 0; c < cols; ++c) at(dst, c) += q * at(src, c);
}

void IntMat::add_col_multiple(int dst, int src, const Int& q) {
    for (int r = 0; r < rows; ++r) at(r, dst) += q * at(r, src);
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(int j) {
    for (int r = 0; r < rows; ++r) at(r, j) = -at(r, j);
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]" << (i + 1 == rows ? "]" : "\n");
    }
    if (rows == 0) os << "[]";
    return os.str();
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul shape");
    IntMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

IntVec mat_apply(const IntMat& A, const IntVec& x) {
    if (int(x.size()) != A.cols) throw std::invalid_argument("mat_apply shape");
    IntVec y(A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

IntVec row_apply(const IntVec& x, const IntMat& A) {
    if (int(x.size()) != A.rows) throw std::invalid_argument("row_apply shape");
    IntVec y(A.cols);
    for (int j = 0; j < A.cols; ++j)
        for (int i = 0; i < A.rows; ++i) y[j] += x[i] * A.at(i, j);
    return y;
}

IntMat hstack(const IntMat& A, const IntMat& B) {
    if (A.rows != B.rows) throw std::invalid_argument("hstack shape");
    IntMat C(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

IntMat vstack(const IntMat& A, const IntMat& B) {
    if (A.cols != B.cols) throw std::invalid_argument("vstack shape");
    IntMat C(A.rows + B.rows, A.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rows; ++i)
        for (int j = 0; j < B.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
    return C;
}

namespace {

// Row-Hermite reduce S in place, mirroring every row operation into U.
// Afterwards pivots are positive, entries below a pivot are zero and entries
// above it are reduced into [0, pivot).
void hermite_rows_tracked(IntMat& S, IntMat& U) {
    int pr = 0;
    for (int col = 0; col < S.cols && pr < S.rows; ++col) {
        while (true) {
            int best = -1;
            Int ba;
            for (int i = pr; i < S.rows; ++i) {
                if (S.at(i, col) == 0) continue;
                Int a = abs(S.at(i, col));
                if (best < 0 || a < ba) {
                    best = i;
                    ba = a;
                }
            }
            if (best < 0) break;
            S.swap_rows(pr, best);
            U.swap_rows(pr, best);
            bool clean = true;
            for (int i = pr + 1; i < S.rows; ++i) {
                if (S.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(i, col).get_mpz_t(), S.at(pr, col).get_mpz_t());
                S.add_row_multiple(i, pr, -q);
                U.add_row_multiple(i, pr, -q);
                if (S.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pr < S.rows && S.at(pr, col) != 0) {
            if (S.at(pr, col) < 0) {
                S.negate_row(pr);
                U.negate_row(pr);
            }
            for (int i = 0; i < pr; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(i, col).get_mpz_t(), S.at(pr, col).get_mpz_t());
                S.add_row_multiple(i, pr, -q);
                U.add_row_multiple(i, pr, -q);
            }
            ++pr;
        }
    }
}

// Column-Hermite analogue, mirroring column operations into V.
void hermite_cols_tracked(IntMat& S, IntMat& V) {
    int pc = 0;
    for (int row = 0; row < S.rows && pc < S.cols; ++row) {
        while (true) {
            int best = -1;
            Int ba;
            for (int j = pc; j < S.cols; ++j) {
                if (S.at(row, j) == 0) continue;
                Int a = abs(S.at(row, j));
                if (best < 0 || a < ba) {
                    best = j;
                    ba = a;
                }
            }
            if (best < 0) break;
            S.swap_cols(pc, best);
            V.swap_cols(pc, best);
            bool clean = true;
            for (int j = pc + 1; j < S.cols; ++j) {
                if (S.at(row, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(row, j).get_mpz_t(), S.at(row, pc).get_mpz_t());
                S.add_col_multiple(j, pc, -q);
                V.add_col_multiple(j, pc, -q);
                if (S.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pc < S.cols && S.at(row, pc) != 0) {
            if (S.at(row, pc) < 0) {
                S.negate_col(pc);
                V.negate_col(pc);
            }
            for (int j = 0; j < pc; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S.at(row, j).get_mpz_t(), S.at(row, pc).get_mpz_t());
                S.add_col_multiple(j, pc, -q);
                V.add_col_multiple(j, pc, -q);
            }
            ++pc;
        }
    }
}

// Every nonzero entry is the only one in both its row and its column.
bool is_monomial(const IntMat& S) {
    std::vector<int> row_count(S.rows), col_count(S.cols);
    for (int i = 0; i < S.rows; ++i)
        for (int j = 0; j < S.cols; ++j)
            if (S.at(i, j) != 0) {
                if (++row_count[i] > 1) return false;
                if (++col_count[j] > 1) return false;
            }
    return true;
}

}  // namespace

SmithResult smith(const IntMat& M) {
    SmithResult r;
    r.S = M;
    r.U = IntMat::identity(M.rows);
    r.V = IntMat::identity(M.cols);
    IntMat& S = r.S;

    // Alternate row and column Hermite reduction. Each pass keeps entries
    // reduced modulo the pivots, which avoids the coefficient explosion of
    // one-shot elimination.
    int guard = 0;
    while (!is_monomial(S)) {
        hermite_rows_tracked(S, r.U);
        if (is_monomial(S)) break;
        hermite_cols_tracked(S, r.V);
        if (++guard > 10000) throw std::logic_error("smith: no convergence");
    }

    // move the nonzero entries onto the leading diagonal
    int k = 0;
    while (true) {
        int pi = -1, pj = -1;
        for (int i = k; i < S.rows && pi < 0; ++i)
            for (int j = k; j < S.cols && pi < 0; ++j)
                if (S.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        S.swap_rows(k, pi);
        r.U.swap_rows(k, pi);
        S.swap_cols(k, pj);
        r.V.swap_cols(k, pj);
        if (S.at(k, k) < 0) {
            S.negate_row(k);
            r.U.negate_row(k);
        }
        ++k;
    }
    r.rank = k;

    // enforce the divisibility chain with pairwise gcd/lcm steps
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < r.rank; ++i)
            for (int j = i + 1; j < r.rank; ++j) {
                const Int di = S.at(i, i), dj = S.at(j, j);
                if (dj % di == 0) continue;
                changed = true;
                Int g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), di.get_mpz_t(),
                           dj.get_mpz_t());
                // rows (i,j) <- [[x, y], [-dj/g, di/g]] * rows (i,j), det 1
                Int a = x, b = y, c = -dj / g, d = di / g;
                for (IntMat* T : {&S, &r.U}) {
                    for (int col = 0; col < T->cols; ++col) {
                        Int ri = T->at(i, col), rj = T->at(j, col);
                        T->at(i, col) = a * ri + b * rj;
                        T->at(j, col) = c * ri + d * rj;
                    }
                }
                // block is now [[x*di, y*dj], [-l, l]] with l = di*dj/g
                S.add_col_multiple(i, j, 1);
                r.V.add_col_multiple(i, j, 1);
                Int q = (y * dj) / g;
                S.add_col_multiple(j, i, -q);
                r.V.add_col_multiple(j, i, -q);
            }
    }
    return r;
}

IntVec SmithResult::invariants() const {
    IntVec d;
    for (int i = 0; i < rank; ++i) d.push_back(S.at(i, i));
    return d;
}

IntVec SmithResult::nontrivial_torsion() const {
    IntVec d;
    for (int i = 0; i < rank; ++i)
        if (S.at(i, i) >= 2) d.push_back(S.at(i, i));
    return d;
}

IntMat hnf_rows(const IntMat& M) {
    IntMat H = M;
    int pivot_row = 0;
    for (int col = 0; col < H.cols && pivot_row < H.rows; ++col) {
        // gcd the column below pivot_row into one row
        while (true) {
            int best = -1;
            Int bestabs;
            for (int i = pivot_row; i < H.rows; ++i) {
                if (H.at(i, col) == 0) continue;
                Int a = abs(H.at(i, col));
                if (best < 0 || a < bestabs) {
                    best = i;
                    bestabs = a;
                }
            }
            if (best < 0) break;  // column clear
            H.swap_rows(pivot_row, best);
            bool reduced_all = true;
            for (int i = pivot_row + 1; i < H.rows; ++i) {
                if (H.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H.at(i, col).get_mpz_t(), H.at(pivot_row, col).get_mpz_t());
                H.add_row_multiple(i, pivot_row, -q);
                if (H.at(i, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (pivot_row < H.rows && H.at(pivot_row, col) != 0) {
            if (H.at(pivot_row, col) < 0) H.negate_row(pivot_row);
            // reduce entries above the pivot into [0, pivot)
            for (int i = 0; i < pivot_row; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), H.at(i, col).get_mpz_t(), H.at(pivot_row, col).get_mpz_t());
                H.add_row_multiple(i, pivot_row, -q);
            }
            ++pivot_row;
        }
    }
    // drop zero rows (all rows >= pivot_row are zero by construction)
    IntMat R(pivot_row, H.cols);
    for (int i = 0; i < pivot_row; ++i)
        for (int j = 0; j < H.cols; ++j) R.at(i, j) = H.at(i, j);
    return R;
}

IntMat right_kernel(const IntMat& M) {
    SmithResult sm = smith(M);
    // columns rank..cols-1 of V span the kernel; they form a saturated basis
    int k = M.cols - sm.rank;
    IntMat K(k, M.cols);
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < M.cols; ++i) K.at(t, i) = sm.V.at(i, sm.rank + t);
    return K;
}

int rank_of(const IntMat& M) { return smith(M).rank; }

Int determinant(const IntMat& M) {
    if (M.rows != M.cols) throw std::invalid_argument("determinant: not square");
    int n = M.rows;
    if (n == 0) return 1;
    IntMat A = M;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            A.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j);
                mpz_divexact(A.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b) {
    SmithResult sm = smith(A);
    IntVec c = mat_apply(sm.U, b);  // S y = c, x = V y
    IntVec y(A.cols);
    for (int i = 0; i < sm.rank; ++i) {
        if (c[i] % sm.S.at(i, i) != 0) return std::nullopt;
        y[i] = c[i] / sm.S.at(i, i);
    }
    for (int i = sm.rank; i < A.rows; ++i)
        if (c[i] != 0) return std::nullopt;
    return mat_apply(sm.V, y);
}

Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(IntVec& v) {
    Int g = vec_gcd(v);
    if (g <= 1) return;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVec primitive_of(IntVec v) {
    make_primitive(v);
    return v;
}

bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace coxcalc
