#pragma once
#include <vector>

#include "coxcalc/int_matrix.hpp"

namespace coxcalc {

// Rational convex polyhedral cone with both descriptions kept in a canonical
// form, so equality is plain field comparison.
//
// V-side: extreme rays (primitive integer, reduced against the lineality
// space, lexicographically sorted) plus a Hermite basis of the lineality
// lattice. H-side: facet normals (primitive, reduced against the span
// equations, sorted) plus a Hermite basis of the equation lattice cutting out
// the linear span.
struct Cone {
    int ambient = 0;
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
    std::vector<IntVec> facets;     // inward normals u, cone side is u.x >= 0
    std::vector<IntVec> equations;  // u.x = 0 on the span

    static Cone from_rays(int ambient, const std::vector<IntVec>& gens);
    static Cone from_rays_and_lines(int ambient, const std::vector<IntVec>& gens,
                                    const std::vector<IntVec>& lines);
    static Cone from_inequalities(int ambient, const std::vector<IntVec>& ineqs,
                                  const std::vector<IntVec>& eqs);
    static Cone zero(int ambient);
    static Cone full_space(int ambient);
    static Cone positive_orthant(int ambient);

    int dim() const { return ambient - int(equations.size()); }
    int lineality_dim() const { return int(lineality.size()); }
    bool is_pointed() const { return lineality.empty(); }
    bool is_zero() const { return rays.empty() && lineality.empty(); }
    bool is_full_dim() const { return equations.empty(); }

    bool contains(const IntVec& v) const;
    bool contains_in_relative_interior(const IntVec& v) const;
    bool contains_cone(const Cone& other) const;
    bool operator==(const Cone& o) const;
    bool operator<(const Cone& o) const;  // arbitrary total order for containers

    // Sum of the extreme rays: a relative interior point (0 for a subspace).
    IntVec interior_point() const;

    std::string to_string() const;
};

Cone dual(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone sum(const Cone& a, const Cone& b);  // conical hull of the union

// Whether the relative interiors of a and b have a common point.
bool interiors_overlap(const Cone& a, const Cone& b);

// All faces, from the minimal face (the lineality space) up to the cone
// itself, each listed once.
std::vector<Cone> faces(const Cone& c);
std::vector<Cone> facets_of(const Cone& c);  // codimension-one faces
bool is_face_of(const Cone& f, const Cone& c);

// Reduce v against the echelon rows (projection along their span onto the
// complement of the pivot coordinates), returning a primitive vector.
IntVec reduce_mod_rows(IntVec v, const std::vector<IntVec>& echelon_rows);

// Hermite basis of the saturation of the span of the given vectors.
std::vector<IntVec> subspace_basis(int ambient, const std::vector<IntVec>& vecs);

}  // namespace coxcalc
