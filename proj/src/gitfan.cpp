#include "coxcalc/gitfan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "coxcalc/errors.hpp"

namespace coxcalc {

namespace {

// Primitive representative with the first nonzero entry positive, so u and -u
// name the same hyperplane.
IntVec canonical_normal(IntVec u) {
    make_primitive(u);
    for (const Int& x : u) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : u) y = -y;
        break;
    }
    return u;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Hyperplanes that can carry a wall: facet and span hyperplanes of every orbit
// cone, dropping those vanishing on the whole support.
std::vector<IntVec> wall_candidates(const OrbitConeSet& os) {
    const Cone& sup = os.weight_cone;
    auto trivial_on_support = [&](const IntVec& u) {
        for (const IntVec& r : sup.rays)
            if (dot(u, r) != 0) return false;
        for (const IntVec& l : sup.lineality)
            if (dot(u, l) != 0) return false;
        return true;
    };
    std::set<IntVec> seen;
    std::vector<IntVec> out;
    for (const OrbitCone& oc : os.cones) {
        std::vector<const std::vector<IntVec>*> groups = {&oc.cone.facets,
                                                          &oc.cone.equations};
        for (const auto* g : groups)
            for (const IntVec& u : *g) {
                IntVec c = canonical_normal(u);
                if (trivial_on_support(c)) continue;
                if (seen.insert(c).second) out.push_back(c);
            }
    }
    return out;
}

// Full-dimensional cells of the hyperplane arrangement restricted to the
// support, by successive splitting. A cell is split only when the hyperplane
// separates its generators, which keeps both halves at full dimension.
std::vector<Cone> arrangement_cells(const Cone& support,
                                    const std::vector<IntVec>& walls) {
    std::vector<Cone> cells = {support};
    int n = support.ambient;
    for (const IntVec& u : walls) {
        IntVec neg = u;
        for (Int& x : neg) x = -x;
        Cone plus = Cone::from_inequalities(n, {u}, {});
        Cone minus = Cone::from_inequalities(n, {neg}, {});
        std::vector<Cone> next;
        for (const Cone& c : cells) {
            bool has_pos = false, has_neg = false;
            for (const IntVec& r : c.rays) {
                Int v = dot(u, r);
                if (v > 0) has_pos = true;
                if (v < 0) has_neg = true;
            }
            for (const IntVec& l : c.lineality)
                if (dot(u, l) != 0) has_pos = has_neg = true;
            if (has_pos && has_neg) {
                next.push_back(intersect(c, plus));
                next.push_back(intersect(c, minus));
            } else {
                next.push_back(c);
            }
        }
        cells = std::move(next);
    }
    return cells;
}

}  // namespace

Cone git_cone(const OrbitConeSet& os, const IntVec& w) {
    if (!os.weight_cone.contains(w))
        throw OutsideSupport("weight lies outside the weight cone");
    Cone result = os.weight_cone;
    for (const OrbitCone& oc : os.cones)
        if (oc.cone.contains(w)) result = intersect(result, oc.cone);
    return result;
}

int GITFan::index_of(const Cone& c) const {
    auto it = std::lower_bound(fan.cones.begin(), fan.cones.end(), c);
    if (it == fan.cones.end() || !(*it == c)) return -1;
    return int(it - fan.cones.begin());
}

GITFan enumerate_gitfan(const OrbitConeSet& os) {
    if (os.cones.empty())
        throw std::invalid_argument("no orbit cones to build a fan from");
    const Cone& sup = os.weight_cone;
    int d = sup.dim();

    std::vector<Cone> cells = arrangement_cells(sup, wall_candidates(os));
    std::set<Cone> chambers_set;
    for (const Cone& c : cells) chambers_set.insert(git_cone(os, c.interior_point()));

    QuasifanCheck qc =
        make_quasifan(std::vector<Cone>(chambers_set.begin(), chambers_set.end()));
    if (!qc.ok)
        throw std::logic_error("variation cones violate the quasifan axioms: " +
                               qc.reason);

    GITFan out;
    out.support = sup;
    out.fan = qc.fan;
    out.bunches.resize(out.fan.cones.size());
    for (size_t i = 0; i < out.fan.cones.size(); ++i) {
        const Cone& lam = out.fan.cones[i];
        IntVec p = lam.interior_point();
        for (size_t j = 0; j < os.cones.size(); ++j) {
            const Cone& om = os.cones[j].cone;
            if (om.contains_cone(lam) && om.contains_in_relative_interior(p))
                out.bunches[i].push_back(int(j));
        }
        if (lam.dim() == d) out.chambers.push_back(int(i));
    }
    for (size_t a = 0; a < out.chambers.size(); ++a)
        for (size_t b = a + 1; b < out.chambers.size(); ++b) {
            const Cone& ca = out.fan.cones[out.chambers[a]];
            const Cone& cb = out.fan.cones[out.chambers[b]];
            if (intersect(ca, cb).dim() == d - 1)
                out.adjacency.push_back({out.chambers[a], out.chambers[b]});
        }
    return out;
}

std::vector<FaceSubset> semistable_pattern(const OrbitConeSet& os,
                                           const Cone& lambda) {
    std::vector<FaceSubset> out;
    for (const OrbitCone& oc : os.cones)
        if (oc.cone.contains_cone(lambda))
            out.insert(out.end(), oc.witnesses.begin(), oc.witnesses.end());
    auto mask = [](const FaceSubset& f) {
        unsigned long long m = 0;
        for (int i : f) m |= 1ULL << i;
        return m;
    };
    std::sort(out.begin(), out.end(),
              [&](const FaceSubset& a, const FaceSubset& b) { return mask(a) < mask(b); });
    return out;
}

Cone moving_cone(const GradedPresentation& pres) {
    int n = pres.nvars();
    if (n < 2) throw std::invalid_argument("moving cone needs at least two generators");
    Cone result;
    for (int i = 0; i < n; ++i) {
        std::vector<IntVec> gens;
        for (int j = 0; j < n; ++j)
            if (j != i) gens.push_back(pres.free_degree(j));
        Cone ci = Cone::from_rays(pres.K.rank, gens);
        result = i == 0 ? ci : intersect(result, ci);
    }
    return result;
}

}  // namespace coxcalc
