#include "coxcalc/abelian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxcalc {

Int AbelianGroup::order() const {
    if (rank > 0) return 0;
    Int n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

IntVec AbelianGroup::normalize(IntVec x) const {
    if (int(x.size()) != dims()) throw std::invalid_argument("element length");
    for (size_t i = 0; i < torsion.size(); ++i) {
        Int& c = x[rank + i];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), torsion[i].get_mpz_t());
    }
    return x;
}

bool AbelianGroup::is_zero(const IntVec& x) const {
    IntVec y = normalize(x);
    for (const auto& c : y)
        if (c != 0) return false;
    return true;
}

IntVec AbelianGroup::add(const IntVec& x, const IntVec& y) const {
    IntVec z(dims());
    for (int i = 0; i < dims(); ++i) z[i] = x[i] + y[i];
    return normalize(z);
}

IntVec AbelianGroup::scale(const Int& c, const IntVec& x) const {
    IntVec z(dims());
    for (int i = 0; i < dims(); ++i) z[i] = c * x[i];
    return normalize(z);
}

IntVec AbelianGroup::neg(const IntVec& x) const { return scale(-1, x); }

IntMat AbelianGroup::relation_lattice() const {
    IntMat L(int(torsion.size()), dims());
    for (size_t i = 0; i < torsion.size(); ++i) L.at(int(i), rank + int(i)) = torsion[i];
    return L;
}

IntMat AbelianGroup::lifted_lattice(const std::vector<IntVec>& gens) const {
    IntMat G(int(gens.size()), dims());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (int(gens[i].size()) != dims()) throw std::invalid_argument("generator length");
        for (int j = 0; j < dims(); ++j) G.at(int(i), j) = gens[i][j];
    }
    return vstack(G, relation_lattice());
}

std::string AbelianGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

GroupHom::GroupHom(AbelianGroup s, AbelianGroup t, IntMat m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
    if (matrix.rows != target.dims() || matrix.cols != source.dims())
        throw std::invalid_argument("hom matrix shape");
    // d * (image of torsion generator) must vanish in the target
    for (size_t i = 0; i < source.torsion.size(); ++i) {
        IntVec img = matrix.col(source.rank + int(i));
        for (auto& c : img) c *= source.torsion[i];
        if (!target.is_zero(img)) throw std::invalid_argument("hom not well defined");
    }
}

CokernelResult cokernel(const IntMat& M) {
    SmithResult sm = smith(M);
    int a = M.rows, r = sm.rank;
    AbelianGroup K;
    K.rank = a - r;
    std::vector<int> tors_rows;
    for (int i = 0; i < r; ++i)
        if (sm.S.at(i, i) >= 2) {
            K.torsion.push_back(sm.S.at(i, i));
            tors_rows.push_back(i);
        }
    IntMat proj(K.dims(), a);
    for (int i = 0; i < K.rank; ++i)
        for (int j = 0; j < a; ++j) proj.at(i, j) = sm.U.at(r + i, j);
    for (size_t t = 0; t < tors_rows.size(); ++t)
        for (int j = 0; j < a; ++j) proj.at(K.rank + int(t), j) = sm.U.at(tors_rows[t], j);
    CokernelResult res;
    res.group = K;
    res.proj = GroupHom(AbelianGroup(a, {}), K, proj);
    return res;
}

IntMat gale_dual(const AbelianGroup& K, const IntMat& Q) {
    if (Q.rows != K.dims()) throw std::invalid_argument("degree matrix shape");
    std::vector<IntVec> cols;
    for (int j = 0; j < Q.cols; ++j) cols.push_back(Q.col(j));
    if (subgroup_index(K, cols) != 1) throw std::invalid_argument("degree map not surjective");
    int n = Q.cols, t = int(K.torsion.size());
    // solve Q v + T w = 0 in Z^{dims}: kernel of [Q | T], keep the v parts
    IntMat T(K.dims(), t);
    for (int i = 0; i < t; ++i) T.at(K.rank + i, i) = K.torsion[i];
    IntMat ker = right_kernel(hstack(Q, T));
    IntMat V(ker.rows, n);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < n; ++j) V.at(i, j) = ker.at(i, j);
    return hnf_rows(V);
}

Int subgroup_index(const AbelianGroup& K, const std::vector<IntVec>& gens) {
    IntMat L = K.lifted_lattice(gens);
    SmithResult sm = smith(L);
    if (sm.rank < K.dims()) return 0;
    Int idx = 1;
    for (int i = 0; i < sm.rank; ++i) idx *= sm.S.at(i, i);
    return idx;
}

bool generates(const AbelianGroup& K, const std::vector<IntVec>& gens) {
    return subgroup_index(K, gens) == 1;
}

bool subgroup_contains(const AbelianGroup& K, const std::vector<IntVec>& gens, const IntVec& x) {
    IntMat L = K.lifted_lattice(gens);
    return solve_integer(L.transpose(), K.normalize(x)).has_value();
}

Int element_order(const AbelianGroup& K, const IntVec& x) {
    IntVec y = K.normalize(x);
    for (int i = 0; i < K.rank; ++i)
        if (y[i] != 0) return 0;
    Int n = 1;
    for (size_t i = 0; i < K.torsion.size(); ++i) {
        const Int& d = K.torsion[i];
        Int g;
        mpz_gcd(g.get_mpz_t(), y[K.rank + int(i)].get_mpz_t(), d.get_mpz_t());
        Int step = d / g;
        mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), step.get_mpz_t());
    }
    return n;
}

QuotientResult quotient_group(const AbelianGroup& K, const std::vector<IntVec>& gens) {
    IntMat L = K.lifted_lattice(gens);
    CokernelResult ck = cokernel(L.transpose());
    QuotientResult res;
    res.group = ck.group;
    res.proj = GroupHom(K, ck.group, ck.proj.matrix);
    return res;
}

std::vector<IntVec> subgroup_intersect(const AbelianGroup& K, const std::vector<IntVec>& a,
                                       const std::vector<IntVec>& b) {
    IntMat A = hnf_rows(K.lifted_lattice(a));
    IntMat B = hnf_rows(K.lifted_lattice(b));
    // x in both lattices: x = y A = z B; solve A^T y - B^T z = 0
    IntMat neg_bt = B.transpose();
    for (auto& c : neg_bt.a) c = -c;
    IntMat ker = right_kernel(hstack(A.transpose(), neg_bt));
    std::vector<IntVec> rows;
    for (int i = 0; i < ker.rows; ++i) {
        IntVec y(A.rows);
        for (int j = 0; j < A.rows; ++j) y[j] = ker.at(i, j);
        rows.push_back(row_apply(y, A));
    }
    IntMat H = hnf_rows(IntMat::from_rows(rows.empty() ? std::vector<IntVec>{IntVec(K.dims())} : rows));
    std::vector<IntVec> out;
    for (int i = 0; i < H.rows; ++i) out.push_back(K.normalize(H.row(i)));
    return out;
}

bool same_row_lattice(const IntMat& A, const IntMat& B) { return hnf_rows(A) == hnf_rows(B); }

std::optional<IntMat> change_of_basis(const IntMat& Q1, const IntMat& Q2) {
    if (Q1.rows != Q2.rows || Q1.cols != Q2.cols) return std::nullopt;
    int s = Q1.rows;
    // A Q1 = Q2 row by row: Q1^T a_i = (row i of Q2)
    IntMat A(s, s);
    IntMat Q1t = Q1.transpose();
    for (int i = 0; i < s; ++i) {
        auto sol = solve_integer(Q1t, Q2.row(i));
        if (!sol) return std::nullopt;
        for (int j = 0; j < s; ++j) A.at(i, j) = (*sol)[j];
    }
    Int d = determinant(A);
    if (d != 1 && d != -1) return std::nullopt;
    if (!(mat_mul(A, Q1) == Q2)) return std::nullopt;
    return A;
}

}  // namespace coxcalc
