#pragma once
#include <array>

#include "coxcalc/abelian.hpp"
#include "coxcalc/polynomial.hpp"

namespace coxcalc {

// Graded affine presentation: variables with degrees in K and homogeneous
// relations. The generators are assumed pairwise nonassociated primes in the
// graded sense; inputs constructed here guarantee that, user-supplied ones
// carry the flag untouched.
struct GradedPresentation {
    std::vector<std::string> vars;
    AbelianGroup K;
    std::vector<IntVec> degrees;  // one K-element per variable
    std::vector<Polynomial> relations;
    bool trusted_prime_generators = true;

    int nvars() const { return int(vars.size()); }
    IntVec free_degree(int i) const;  // free part of degrees[i]

    void validate() const;  // shapes and homogeneity; throws invalid_argument
};

IntVec degree_of(const Polynomial& p, const GradedPresentation& pres);
bool is_homogeneous(const Polynomial& p, const GradedPresentation& pres);
std::vector<IntVec> relation_degrees(const GradedPresentation& pres);

// Input data for the complexity-one construction: r+1 variable blocks with
// exponents ls, m free variables, pairwise independent points A in Q^2 and the
// lower rows [d, dprime] completing the ray matrix.
struct APData {
    int r = 0;
    std::vector<int> ns;
    std::vector<std::vector<Int>> ls;
    int m = 0;
    int s = 0;
    std::vector<std::array<Int, 2>> A;
    IntMat d;       // s x n
    IntMat dprime;  // s x m

    int n() const;
    IntMat P() const;  // (r+s) x (n+m) block matrix
    void validate() const;

    std::vector<std::string> var_names() const;  // T_ij blocks then S_k
};

// The graded algebra defined by the data: trinomial chain relations graded by
// the cokernel of the transposed ray matrix.
GradedPresentation build_rap(const APData& ap);

// Chain relations alone (grading supplied by the caller): for consecutive
// triples (i, i+1, i+2), det(a_j,a_k) M_i + det(a_k,a_i) M_j + det(a_i,a_j) M_k
// with M_i the block monomial.
std::vector<Polynomial> chain_relations(const std::vector<std::array<Int, 2>>& A,
                                        const std::vector<std::vector<Int>>& ls, int m);

// The relations alone as a presentation over the trivial grading group, one
// block of variables per point plus m free ones. Callers install the grading
// afterwards; with K = 0 the homogeneity checks hold vacuously.
GradedPresentation cox_ring_complexity_one(const std::vector<std::array<Int, 2>>& A,
                                           const std::vector<std::vector<Int>>& ls, int m);

bool is_sincere(const APData& ap);  // every block has n_i >= 2 or exponent >= 2, and r >= 2
bool is_ufd(const APData& ap);      // the block exponent gcds are pairwise coprime
bool is_almost_free(const GradedPresentation& pres);

// Isotropy orders along a resolution chain: the numerators of the truncated
// continued fractions b_1 - 1/(b_2 - 1/(...)), starting from the empty
// fraction (order one).
std::vector<Int> ow_isotropy_orders(const std::vector<Int>& labels);

struct OWGraph {
    std::vector<std::vector<Int>> arms;  // positive labels, arm i curve j
    Int b_plus = 0, b_minus = 0;
    bool has_fplus = false, has_fminus = false;
};

}  // namespace coxcalc
