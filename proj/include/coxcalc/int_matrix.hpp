#pragma once
#include <gmpxx.h>
#include <optional>
#include <string>
#include <vector>

namespace coxcalc {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<IntVec>& rs);

    Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    IntVec row(int i) const;
    IntVec col(int j) const;
    IntMat transpose() const;
    bool is_zero() const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& q);  // row dst += q * row src
    void add_col_multiple(int dst, int src, const Int& q);
    void negate_row(int i);
    void negate_col(int j);

    std::string to_string() const;
};

IntMat mat_mul(const IntMat& A, const IntMat& B);
IntVec mat_apply(const IntMat& A, const IntVec& x);       // A*x
IntVec row_apply(const IntVec& x, const IntMat& A);       // x^T * A
IntMat hstack(const IntMat& A, const IntMat& B);
IntMat vstack(const IntMat& A, const IntMat& B);

// Smith normal form: U*M*V = S with U, V unimodular and S diagonal,
// s_1 | s_2 | ... | s_k, all nonnegative.
struct SmithResult {
    IntMat S, U, V;
    int rank = 0;
    IntVec invariants() const;       // diagonal entries, including 1s, excluding 0s
    IntVec nontrivial_torsion() const;  // diagonal entries >= 2
};
SmithResult smith(const IntMat& M);

// Row-style Hermite normal form of the row lattice: pivots positive, pivot
// columns strictly increasing, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped, so equal row lattices give identical results.
IntMat hnf_rows(const IntMat& M);

// Basis of {x : M x = 0}, one basis vector per returned row. Saturated.
IntMat right_kernel(const IntMat& M);

int rank_of(const IntMat& M);
Int determinant(const IntMat& M);  // square only, Bareiss

// One integer solution of A x = b, if any.
std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b);

Int vec_gcd(const IntVec& v);
void make_primitive(IntVec& v);    // divide by gcd, first nonzero entry > 0 NOT forced
IntVec primitive_of(IntVec v);

bool lex_less(const IntVec& a, const IntVec& b);

}  // namespace coxcalc
