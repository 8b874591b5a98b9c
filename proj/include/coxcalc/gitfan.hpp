#pragma once
#include <array>
#include <vector>

#include "coxcalc/fan.hpp"
#include "coxcalc/orbit.hpp"

namespace coxcalc {

// Variation-of-quotients quasifan in the rational degree space. Every member
// cone carries the collection of orbit cones whose relative interior contains
// its own; the support is the weight cone.
struct GITFan {
    Cone support;
    Quasifan fan;
    // For each fan.cones[i]: indices into the originating OrbitConeSet of the
    // orbit cones whose relative interior contains the cone's interior.
    std::vector<std::vector<int>> bunches;
    // Positions (into fan.cones) of the cones of maximal dimension.
    std::vector<int> chambers;
    // Pairs of chamber positions meeting in a common facet, lexicographic.
    std::vector<std::array<int, 2>> adjacency;

    int index_of(const Cone& c) const;  // position in fan.cones, -1 if absent
};

// Intersection of all orbit cones containing w. Throws OutsideSupport when w
// is not in the weight cone.
Cone git_cone(const OrbitConeSet& os, const IntVec& w);

GITFan enumerate_gitfan(const OrbitConeSet& os);

// The faces of the orthant whose orbit cone contains lambda, i.e. the
// coordinate nonvanishing patterns on which the quotient construction for
// lambda is carried out. Sorted by subset mask.
std::vector<FaceSubset> semistable_pattern(const OrbitConeSet& os,
                                           const Cone& lambda);

// Intersection over i of the cones spanned by all generator degrees except
// the i-th. Needs at least two generators.
Cone moving_cone(const GradedPresentation& pres);

}  // namespace coxcalc
