#pragma once
#include "coxcalc/cone.hpp"
#include "coxcalc/errors.hpp"
#include "coxcalc/presentation.hpp"

namespace coxcalc {

// A face of the positive orthant, named by the generator indices allowed to be
// nonzero. Always sorted and duplicate-free.
using FaceSubset = std::vector<int>;

enum class RingShape { Free, TrinomialChain };

// Shape analysis of the relations. For the chain shape the relations involve
// pairwise disjoint variable blocks, one per monomial, and the solutions on
// the level of monomial values form a plane whose coordinate functions are
// pairwise independent. That plane is what decides which vanishing patterns
// occur, so we keep a basis of it: (pairs[i][0], pairs[i][1]) are the two
// coordinates of block i.
struct ChainStructure {
    RingShape shape = RingShape::Free;
    std::vector<std::vector<int>> blocks;    // sorted variable indices per monomial
    std::vector<std::array<Int, 2>> pairs;   // kernel coordinates per block
    std::vector<int> free_vars;              // variables in no relation
};

// Classifies the presentation, throwing UnsupportedRing for anything that is
// neither relation-free nor a trinomial chain.
ChainStructure recognize_chain(const GradedPresentation& pres);

// True when the open stratum of the face meets the zero set of the relations.
bool is_fface(const GradedPresentation& pres, const FaceSubset& g0);

// All faces of the orthant passing is_fface, in subset-mask order. Throws
// SizeGuardError when 2^nvars exceeds max_subsets.
std::vector<FaceSubset> enumerate_ffaces(const GradedPresentation& pres,
                                         size_t max_subsets = size_t(1) << 22);

// Projection of a face to the degree space: the cone spanned by the free parts
// of the degrees of its generators.
Cone face_image(const GradedPresentation& pres, const FaceSubset& g0);

struct OrbitCone {
    Cone cone;
    std::vector<FaceSubset> witnesses;  // faces projecting onto this cone
};

struct OrbitConeSet {
    std::vector<OrbitCone> cones;  // distinct, in canonical cone order
    Cone weight_cone;              // projection of the full orthant

    const OrbitCone* find(const Cone& c) const;
};

OrbitConeSet orbit_cones(const GradedPresentation& pres,
                         size_t max_subsets = size_t(1) << 22);

}  // namespace coxcalc
