#pragma once
#include "coxcalc/bunch.hpp"

namespace coxcalc {

// Singularity data of the stratum cut out by a relevant face: the divisor
// class group of its points and the two factoriality flags.
struct StratumInfo {
    FaceSubset face;
    AbelianGroup local_cl;
    bool factorial = false;
    bool q_factorial = false;
};

struct PicardData {
    std::vector<IntVec> generators;  // Hermite basis of the subgroup of K
    Int index = 0;                   // [K : Pic], 0 when infinite
};

// The four divisor cones in the rational class space. The ample cone is open;
// it is the interior of samp exactly when ample_nonempty holds, and empty
// otherwise.
struct DivisorCones {
    Cone eff, mov, samp;
    bool ample_nonempty = false;
};

struct GeometryReport {
    int dim = 0;
    AbelianGroup cl;
    std::vector<StratumInfo> strata;  // one row per relevant face
    PicardData pic;
    DivisorCones cones;
    IntVec canonical;  // class of a canonical divisor, complete intersection trust
    bool q_factorial = false;
    bool factorial = false;
    bool fano = false;
    bool gorenstein = false;
};

// (generators - relations) - rank, trusting that the relations cut the
// spectrum down to a complete intersection.
int dimension(const BunchedRing& ring);

// Class group of the points over the given relevant face: K modulo the
// degrees of the face's variables. Throws when the face is not relevant.
AbelianGroup local_class_group(const BunchedRing& ring, const FaceSubset& g0);

// factorial: the face's degrees generate all of K.
// q_factorial: they span the rational class space.
StratumInfo stratum_singularity(const BunchedRing& ring, const FaceSubset& g0);

// Intersection of the degree spans over the covering faces, with its index.
PicardData picard_group(const BunchedRing& ring);

DivisorCones divisor_cones(const BunchedRing& ring);

// Sum of relation degrees minus sum of generator degrees.
IntVec canonical_class(const GradedPresentation& pres);

// The same class from the complexity-one fixed-divisor formula; throws
// InternalInconsistency when the two formulas disagree.
IntVec canonical_class_complexity_one(const APData& ap, const GradedPresentation& pres);

// Product of dim-many toric divisor classes on the quotient attached to the
// full-dimensional chamber eta. Free class group only.
Rat toric_intersection_number(const BunchedRing& ring, const Cone& eta,
                              const std::vector<IntVec>& classes);

// Product of dim(X)-many divisor classes on the variety itself: the relation
// degrees are appended and the toric product is taken. The result must not
// depend on eta; when a second chamber is available this is checked and a
// failure raises InternalInconsistency.
Rat intersection_number(const BunchedRing& ring, const Cone& eta,
                        const std::vector<IntVec>& classes);

// A full-dimensional chamber of the generator-degree arrangement inside the
// semiample cone of the ring, as accepted by intersection_number.
Cone product_chamber(const BunchedRing& ring);

// Shortcuts for class group Z with positive weights: Picard index as the
// least common multiple of the local class group orders, anticanonical class
// and its top self-intersection by the weight formula.
struct RankOneData {
    Int anticanonical = 0;
    Int picard_index = 1;
    Rat anticanonical_degree;
    bool fano = false;
};
RankOneData picard_data_rank_one(const GradedPresentation& pres);

GeometryReport geometry_report(const BunchedRing& ring);

}  // namespace coxcalc
