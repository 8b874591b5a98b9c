#pragma once
#include "coxcalc/fan.hpp"
#include "coxcalc/orbit.hpp"

namespace coxcalc {

// A selection of orbit cones whose members pairwise overlap in their relative
// interiors and which is closed upward under interior containment. Members are
// stored as positions into the orbit cone list; the face data derived from
// them is kept alongside:
//
//   relevant  faces of the orthant that are F-faces and project into the
//             selection,
//   covering  the inclusion-minimal relevant faces.
struct Bunch {
    GradedPresentation pres;
    OrbitConeSet orbits;
    std::vector<int> members;           // sorted positions into orbits.cones
    std::vector<FaceSubset> relevant;
    std::vector<FaceSubset> covering;
};

// Normalizes the member list, checks it addresses the orbit cone list, and
// fills in the derived face data. Does not check the bunch axioms; that is
// validate_bunched_ring's job.
Bunch make_bunch(GradedPresentation pres, OrbitConeSet orbits, std::vector<int> members);

// All F-faces projecting onto a member of the selection.
std::vector<FaceSubset> relevant_faces(const OrbitConeSet& orbits,
                                       const std::vector<int>& members);

// The inclusion-minimal faces of the given collection.
std::vector<FaceSubset> covering_collection(const std::vector<FaceSubset>& relevant);

// The orbit cones whose relative interior contains the relative interior of
// lambda. Throws when lambda is not a cone of the variation quasifan, i.e.
// not of the form lambda(w) for any weight w.
Bunch bunch_from_chamber(const GradedPresentation& pres, const OrbitConeSet& orbits,
                         const Cone& lambda);

// Every inclusion-maximal bunch containing the images of all orthant facets.
// Those are exactly the maximal cliques of the interior-overlap relation that
// contain the facet images: upward closure comes for free from maximality.
// Throws SizeGuardError when the number of distinct orbit cones exceeds
// max_orbit_cones, and returns an empty list when no such bunch exists.
std::vector<Bunch> enumerate_maximal_true_bunches(const GradedPresentation& pres,
                                                  size_t max_orbit_cones = 64);

// A bunch together with the certificate of the ring-level conditions. The
// prime generator property is not decidable from the combinatorial data, so
// it is carried over from the presentation as a trust flag.
struct BunchedRing {
    Bunch bunch;
    bool almost_free = false;
    bool generators_prime_trusted = false;
};

// Checks that the grading is almost free and that the members form a bunch
// containing all facet images. Throws invalid_argument naming the first
// violated condition.
BunchedRing validate_bunched_ring(const GradedPresentation& pres, const OrbitConeSet& orbits,
                                  const std::vector<int>& members);

// The fan of the toric variety the bunched ring's variety sits in: rays are
// the columns of a Gale dual of the degree map, in variable order, and the
// maximal cones are spanned by the complements of the covering faces.
Fan canonical_toric_ambient(const BunchedRing& ring);

}  // namespace coxcalc
