#pragma once
#include <array>
#include <string>
#include <vector>

#include "coxcalc/bunch.hpp"
#include "coxcalc/geometry.hpp"
#include "coxcalc/polynomial.hpp"

namespace coxcalc {

// One ray insertion into the ambient fan: the new ray is the positive
// integral combination sum a_i v_i over the chosen variables' rays, made
// primitive. The content of the combination acts as subdivision index.
struct ModificationSpec {
    std::vector<int> center;  // variable positions, strictly increasing, at least two
    std::vector<Int> coeffs;  // one positive coefficient per center entry
};

enum class Admissibility { Yes, No, Unverified };

// What the insertion test saw. leading is the minimal-weight part of the
// relation under the weighting deg T_i = a_i on the center and 0 elsewhere;
// the verdict asks it to be a graded prime in at least two variables while
// the deleted orbit meets the zero set.
struct AdmissibilityReport {
    Admissibility status = Admissibility::No;
    bool orbit_meets = false;
    Polynomial leading;
    std::string reason;  // set for No and Unverified
};

// Decides whether the relation survives the insertion as a prime transform.
// Exact when the leading part is a monomial, has a common variable, or splits
// into two or three monomials on pairwise disjoint variable sets; every other
// shape reports Unverified. Over a grading group with torsion a reducible
// two-term leading part also stays Unverified, since graded primality is
// weaker than irreducibility there.
AdmissibilityReport admissible(const Polynomial& f0, const ModificationSpec& spec,
                               bool grading_torsion_free = true);

// Substitutes T_i -> T*^{a_i} T_i on the center variables, divides by the
// minimal power of T* and replaces the remaining T*^(index k) by T*^k. The
// new variable is appended as the last exponent entry. Throws NotAdmissible
// when some power is not a multiple of the subdivision index.
Polynomial transform_relation(const Polynomial& f0, const ModificationSpec& spec,
                              Int subdivision_index = 1);

// Outcome of one ambient modification. When the combination lies on a ray
// the fan already has, nothing changes and inserted stays empty.
struct ModificationResult {
    GradedPresentation pres;  // new variable appended last
    Fan ambient;              // stellar subdivision at the inserted ray
    IntVec inserted;          // the primitive new ray, empty for a no-op
    AdmissibilityReport check;
};

// Inserts the ray of spec into the canonical ambient fan of a ring with at
// most one relation and regrades by the cokernel of the extended ray matrix.
// A No verdict always throws NotAdmissible; Unverified throws unless
// assert_admissible accepts it on the caller's authority.
ModificationResult modify(const BunchedRing& ring, const ModificationSpec& spec,
                          bool assert_admissible = false);

// One insertion of the resolution pipeline: the primitive ray, the ray
// matrix after the step and the presentation it grades.
struct ResolutionStep {
    IntVec ray;
    IntMat P;
    GradedPresentation pres;
};

struct ResolvedSurface {
    APData data;  // defining data of the resolved surface
    GradedPresentation pres;
    std::vector<ResolutionStep> steps;
    std::vector<int> exceptional;  // final positions of the inserted variables
};

// Whether every two-dimensional cone along the surface is regular and the
// elliptic cones, when present, are too.
bool kstar_smooth(const APData& ap);

// Resolves the rational surface with torus one-cell given by defining data
// with s = 1: first a vertical ray at each singular elliptic cone, then
// continued-fraction insertions along the arms until all cones are regular.
// Blocks must be ordered by slope. With a single relation every step is
// cross-checked against transform_relation.
ResolvedSurface kstar_resolve(const APData& ap);

// The bunched ring of the chamber cut out by an interior point of the moving
// cone; for a surface that chamber is the whole interior and the ring
// presents the surface itself.
BunchedRing moving_chamber_ring(const GradedPresentation& pres);

// Pairwise products D_i . D_j of the listed variables' divisor classes on
// the surface of the ring.
std::vector<std::vector<Rat>> curve_products(const BunchedRing& ring,
                                             const std::vector<int>& vars);
std::vector<Rat> self_intersections(const BunchedRing& ring, const std::vector<int>& vars);

// Dynkin label of a disjoint union of ADE trees on vertices 0..count-1,
// components joined by "+", empty string for no vertices. A component that
// is no ADE tree reports as "unrecognized".
std::string ade_match(int vertices, const std::vector<std::array<int, 2>>& edges);

// Self-intersections of the listed curves, the incidence edges among those
// with self-intersection -2, and the Dynkin label of that subgraph.
struct ExceptionalReport {
    std::vector<Rat> self;
    std::vector<std::array<int, 2>> edges;
    std::string label;
};
ExceptionalReport exceptional_report(const BunchedRing& ring, const std::vector<int>& vars);

// Defining data of the surface with the given contraction graph: one block
// per arm carrying the continued-fraction denominators of the labels as
// exponents, both fixed curves as free variables, and the lower row rebuilt
// from the labels by the regular-chain recursion, sheared so the bottom
// entries sum to -bminus. The labels' global closing relations are not
// checked here; inconsistent labels simply give a surface other than the
// named one.
APData ow_data(const OWGraph& graph);

GradedPresentation ow_to_cox(const OWGraph& graph);

}  // namespace coxcalc
