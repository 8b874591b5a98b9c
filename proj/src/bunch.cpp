#include "coxcalc/bunch.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "coxcalc/gitfan.hpp"

namespace coxcalc {

namespace {

int index_of_cone(const OrbitConeSet& os, const Cone& c) {
    for (int i = 0; i < int(os.cones.size()); ++i)
        if (os.cones[i].cone == c) return i;
    return -1;
}

// lambda's relative interior lies inside omega's: containment plus one
// interior sample, which decides the question for convex cones.
bool interior_contains(const Cone& omega, const Cone& lambda) {
    return omega.contains_cone(lambda) &&
           omega.contains_in_relative_interior(lambda.interior_point());
}

FaceSubset orthant_facet(int nvars, int dropped) {
    FaceSubset g0;
    g0.reserve(nvars - 1);
    for (int j = 0; j < nvars; ++j)
        if (j != dropped) g0.push_back(j);
    return g0;
}

// Maximal cliques over the mask universe, pivoting on the vertex covering the
// most candidates. R is already a clique, P the vertices extending it, X the
// ones already handled.
void max_cliques(uint64_t R, uint64_t P, uint64_t X, const std::vector<uint64_t>& nb,
                 std::vector<uint64_t>& out) {
    if (P == 0 && X == 0) {
        out.push_back(R);
        return;
    }
    uint64_t PX = P | X;
    int pivot = -1, best = -1;
    for (uint64_t m = PX; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        int cnt = std::popcount(P & nb[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    uint64_t cand = P & ~nb[pivot];
    while (cand != 0) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        uint64_t bit = uint64_t(1) << v;
        max_cliques(R | bit, P & nb[v], X & nb[v], nb, out);
        P &= ~bit;
        X |= bit;
    }
}

}  // namespace

std::vector<FaceSubset> relevant_faces(const OrbitConeSet& orbits,
                                       const std::vector<int>& members) {
    std::set<FaceSubset> out;
    for (int m : members)
        for (const FaceSubset& w : orbits.cones[m].witnesses) out.insert(w);
    return {out.begin(), out.end()};
}

std::vector<FaceSubset> covering_collection(const std::vector<FaceSubset>& relevant) {
    std::vector<FaceSubset> out;
    for (const FaceSubset& g : relevant) {
        bool minimal = true;
        for (const FaceSubset& h : relevant)
            if (h != g && std::includes(g.begin(), g.end(), h.begin(), h.end())) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(g);
    }
    return out;
}

Bunch make_bunch(GradedPresentation pres, OrbitConeSet orbits, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int m : members)
        if (m < 0 || m >= int(orbits.cones.size()))
            throw std::invalid_argument("bunch member index outside the orbit cone list");
    Bunch b;
    b.relevant = relevant_faces(orbits, members);
    b.covering = covering_collection(b.relevant);
    b.pres = std::move(pres);
    b.orbits = std::move(orbits);
    b.members = std::move(members);
    return b;
}

Bunch bunch_from_chamber(const GradedPresentation& pres, const OrbitConeSet& orbits,
                         const Cone& lambda) {
    if (git_cone(orbits, lambda.interior_point()) != lambda)
        throw std::invalid_argument("not a GIT cone of this weight system: " + lambda.to_string());
    std::vector<int> members;
    for (int i = 0; i < int(orbits.cones.size()); ++i)
        if (interior_contains(orbits.cones[i].cone, lambda)) members.push_back(i);
    return make_bunch(pres, orbits, members);
}

std::vector<Bunch> enumerate_maximal_true_bunches(const GradedPresentation& pres,
                                                  size_t max_orbit_cones) {
    if (pres.nvars() == 0) throw std::invalid_argument("the zero ring has no bunches");
    OrbitConeSet os = orbit_cones(pres);
    size_t n = os.cones.size();
    if (n > max_orbit_cones || n > 64)
        throw SizeGuardError("orbit cone count " + std::to_string(n) +
                             " exceeds the bunch search bound " +
                             std::to_string(std::min<size_t>(max_orbit_cones, 64)));

    // Every bunch we enumerate must contain the images of all orthant facets.
    uint64_t seed = 0;
    for (int i = 0; i < pres.nvars(); ++i) {
        Cone img = face_image(pres, orthant_facet(pres.nvars(), i));
        int at = index_of_cone(os, img);
        if (at < 0) return {};  // image of a non-F-face: nothing contains it
        seed |= uint64_t(1) << at;
    }

    std::vector<uint64_t> nb(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (interiors_overlap(os.cones[i].cone, os.cones[j].cone)) {
                nb[i] |= uint64_t(1) << j;
                nb[j] |= uint64_t(1) << i;
            }

    // The seed must itself be a clique, and only its common neighbours can
    // ever join; within that pool maximal cliques of the subgraph are maximal
    // in the whole graph.
    uint64_t pool = ~uint64_t(0);
    for (uint64_t m = seed; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((seed & ~nb[v]) != (uint64_t(1) << v)) return {};
        pool &= nb[v];
    }
    pool &= ~seed;
    if (n < 64) pool &= (uint64_t(1) << n) - 1;

    std::vector<uint64_t> cliques;
    max_cliques(seed, pool, 0, nb, cliques);

    std::vector<std::vector<int>> index_sets;
    for (uint64_t c : cliques) {
        std::vector<int> idx;
        for (uint64_t m = c; m != 0; m &= m - 1) idx.push_back(std::countr_zero(m));
        index_sets.push_back(std::move(idx));
    }
    std::sort(index_sets.begin(), index_sets.end());

    std::vector<Bunch> out;
    out.reserve(index_sets.size());
    for (auto& idx : index_sets) out.push_back(make_bunch(pres, os, std::move(idx)));
    return out;
}

BunchedRing validate_bunched_ring(const GradedPresentation& pres, const OrbitConeSet& orbits,
                                  const std::vector<int>& members) {
    Bunch b = make_bunch(pres, orbits, members);
    if (b.members.empty()) throw std::invalid_argument("a bunch needs at least one member");
    if (!is_almost_free(pres))
        throw std::invalid_argument(
            "the grading is not almost free: some generator is needed to span the class group");

    const auto& cones = b.orbits.cones;
    for (size_t a = 0; a < b.members.size(); ++a)
        for (size_t c = a + 1; c < b.members.size(); ++c)
            if (!interiors_overlap(cones[b.members[a]].cone, cones[b.members[c]].cone))
                throw std::invalid_argument("bunch members at positions " +
                                            std::to_string(b.members[a]) + " and " +
                                            std::to_string(b.members[c]) +
                                            " have disjoint relative interiors");

    for (int k = 0; k < int(cones.size()); ++k) {
        if (std::binary_search(b.members.begin(), b.members.end(), k)) continue;
        for (int m : b.members)
            if (interior_contains(cones[k].cone, cones[m].cone))
                throw std::invalid_argument(
                    "bunch is not closed upward: orbit cone at position " + std::to_string(k) +
                    " interior-contains member " + std::to_string(m) + " but is missing");
    }

    for (int i = 0; i < pres.nvars(); ++i) {
        Cone img = face_image(pres, orthant_facet(pres.nvars(), i));
        bool found = false;
        for (int m : b.members) found = found || cones[m].cone == img;
        if (!found)
            throw std::invalid_argument("bunch misses the image of the orthant facet for generator " +
                                        pres.vars[i]);
    }

    for (int m : b.members)
        for (const FaceSubset& w : cones[m].witnesses)
            if (!is_fface(pres, w))
                throw std::logic_error("orbit cone witness fails the F-face test");

    BunchedRing ring;
    ring.bunch = std::move(b);
    ring.almost_free = true;
    ring.generators_prime_trusted = pres.trusted_prime_generators;
    return ring;
}

Fan canonical_toric_ambient(const BunchedRing& ring) {
    const GradedPresentation& pres = ring.bunch.pres;
    int r = pres.nvars();
    IntMat Q(pres.K.dims(), r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < pres.K.dims(); ++i) Q.at(i, j) = pres.degrees[j][i];
    IntMat B = gale_dual(pres.K, Q);

    Fan f;
    f.ambient = B.rows;
    std::vector<int> col_ray(r, -1);
    for (int j = 0; j < r; ++j) {
        IntVec v = B.col(j);
        if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
            throw std::invalid_argument("generator " + pres.vars[j] +
                                        " spans no ray of the ambient fan");
        v = primitive_of(std::move(v));
        int at = -1;
        for (int t = 0; t < int(f.rays.size()); ++t)
            if (f.rays[t] == v) at = t;
        if (at < 0) {
            at = int(f.rays.size());
            f.rays.push_back(v);
        }
        col_ray[j] = at;
    }

    std::set<std::vector<int>> seen;
    for (const FaceSubset& g0 : ring.bunch.covering) {
        std::vector<int> idx;
        for (int j = 0; j < r; ++j)
            if (!std::binary_search(g0.begin(), g0.end(), j)) idx.push_back(col_ray[j]);
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        if (seen.insert(idx).second) f.max_cones.push_back(idx);
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    return f;
}

}  // namespace coxcalc
