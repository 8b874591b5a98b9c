#pragma once
#include <optional>

#include "coxcalc/int_matrix.hpp"

namespace coxcalc {

// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_t with d_i | d_{i+1},
// each d_i >= 2. Elements are integer vectors of length rank + t, free coordinates
// first, torsion coordinates reduced mod d_i.
struct AbelianGroup {
    int rank = 0;
    IntVec torsion;

    AbelianGroup() = default;
    AbelianGroup(int r, IntVec t) : rank(r), torsion(std::move(t)) {}

    int dims() const { return rank + int(torsion.size()); }
    bool is_trivial() const { return dims() == 0; }
    bool is_free() const { return torsion.empty(); }
    Int order() const;  // 0 means infinite

    IntVec normalize(IntVec x) const;
    bool is_zero(const IntVec& x) const;
    IntVec add(const IntVec& x, const IntVec& y) const;
    IntVec scale(const Int& c, const IntVec& x) const;
    IntVec neg(const IntVec& x) const;

    bool operator==(const AbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }

    // Basis of the relation lattice L < Z^dims (rows d_i * e_{rank+i}).
    IntMat relation_lattice() const;
    // Rows: supplied generators plus relation rows; its row lattice is the full
    // preimage of <gens> in Z^dims.
    IntMat lifted_lattice(const std::vector<IntVec>& gens) const;

    std::string to_string() const;  // e.g. "Z^2 + Z/3"
};

struct GroupHom {
    AbelianGroup source, target;
    IntMat matrix;  // target.dims() x source.dims()

    GroupHom() = default;
    GroupHom(AbelianGroup s, AbelianGroup t, IntMat m);  // throws if not well defined

    IntVec apply(const IntVec& x) const { return target.normalize(mat_apply(matrix, x)); }
};

struct CokernelResult {
    AbelianGroup group;
    GroupHom proj;  // from Z^rows(M) onto group
};

// Z^rows(M) modulo the column lattice of M.
CokernelResult cokernel(const IntMat& M);

// Basis (rows) of {v in Z^n : Q(v) = 0}, where Q maps Z^n to K via the given
// degree matrix (columns are images of unit vectors). Rows in Hermite form.
// Throws if the columns do not generate K.
IntMat gale_dual(const AbelianGroup& K, const IntMat& Q);

// Index [K : <gens>]; 0 means infinite.
Int subgroup_index(const AbelianGroup& K, const std::vector<IntVec>& gens);
bool generates(const AbelianGroup& K, const std::vector<IntVec>& gens);
bool subgroup_contains(const AbelianGroup& K, const std::vector<IntVec>& gens, const IntVec& x);
Int element_order(const AbelianGroup& K, const IntVec& x);  // 0 means infinite

struct QuotientResult {
    AbelianGroup group;
    GroupHom proj;  // from K onto the quotient
};
QuotientResult quotient_group(const AbelianGroup& K, const std::vector<IntVec>& gens);

// Generators of the intersection of the two subgroups.
std::vector<IntVec> subgroup_intersect(const AbelianGroup& K, const std::vector<IntVec>& a,
                                       const std::vector<IntVec>& b);

// Equality of row lattices (Hermite forms agree).
bool same_row_lattice(const IntMat& A, const IntMat& B);

// Unimodular A with A*Q1 = Q2, if one exists (full-row-rank free gradings only).
std::optional<IntMat> change_of_basis(const IntMat& Q1, const IntMat& Q2);

}  // namespace coxcalc
