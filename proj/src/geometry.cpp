#include "coxcalc/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "coxcalc/errors.hpp"
#include "coxcalc/gitfan.hpp"

namespace coxcalc {

namespace {

std::vector<IntVec> face_degrees(const GradedPresentation& pres, const FaceSubset& g0) {
    std::vector<IntVec> out;
    for (int v : g0) {
        if (v < 0 || v >= pres.nvars())
            throw std::invalid_argument("face refers to a variable outside the ring");
        out.push_back(pres.degrees[v]);
    }
    return out;
}

void require_relevant(const BunchedRing& ring, const FaceSubset& g0) {
    const auto& rel = ring.bunch.relevant;
    if (std::find(rel.begin(), rel.end(), g0) == rel.end())
        throw std::invalid_argument("face is not relevant for this bunch");
}

std::vector<IntVec> hermite_generators(int dims, const std::vector<IntVec>& gens) {
    if (gens.empty()) return {};
    IntMat rows(int(gens.size()), dims);
    for (int i = 0; i < rows.rows; ++i)
        for (int j = 0; j < dims; ++j) rows.at(i, j) = gens[i][j];
    IntMat h = hnf_rows(rows);
    std::vector<IntVec> out;
    for (int i = 0; i < h.rows; ++i) {
        IntVec v = h.row(i);
        if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; }))
            out.push_back(std::move(v));
    }
    return out;
}

// Exponent vectors with k entries summing to m, lexicographic.
std::vector<std::vector<int>> monomials(int k, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == k - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int t = left; t >= 0; --t) {
            cur[pos] = t;
            self(self, pos + 1, left - t);
        }
    };
    if (k == 0) {
        if (m == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, m);
    return out;
}

// Coefficients of prod_i (sum_j vecs[i][j] y_j) as a polynomial in y_1..y_k.
std::map<std::vector<int>, Int> tuple_poly(const std::vector<IntVec>& vecs, int k) {
    std::map<std::vector<int>, Int> poly;
    poly[std::vector<int>(k, 0)] = 1;
    for (const IntVec& v : vecs) {
        std::map<std::vector<int>, Int> next;
        for (const auto& [e, c] : poly)
            for (int j = 0; j < k; ++j) {
                if (v[j] == 0) continue;
                std::vector<int> e2 = e;
                ++e2[j];
                next[e2] += c * v[j];
            }
        poly = std::move(next);
    }
    return poly;
}

// The multilinear intersection form of the toric quotient attached to a
// chamber, stored by its values on tuples of unit vectors.
struct SymForm {
    int k = 0;
    std::vector<std::vector<int>> mono;
    std::vector<Rat> coeff;

    Rat eval(const std::vector<IntVec>& tuple) const {
        auto poly = tuple_poly(tuple, k);
        Rat sum = 0;
        for (size_t a = 0; a < mono.size(); ++a) {
            auto it = poly.find(mono[a]);
            if (it != poly.end()) sum += coeff[a] * Rat(it->second);
        }
        return sum;
    }
};

// Solves the linear system pinning the form from the subset values. The
// system is overdetermined; by construction of the toric intersection theory
// it is consistent and of full column rank.
SymForm solve_form(const GradedPresentation& pres, const Cone& eta) {
    int k = pres.K.rank;
    int r = pres.nvars();
    int m = r - k;

    SymForm f;
    f.k = k;
    f.mono = monomials(k, m);
    size_t cols = f.mono.size();

    std::vector<std::vector<Rat>> rows;
    std::vector<int> subset(m);
    for (int i = 0; i < m; ++i) subset[i] = i;
    while (true) {
        std::vector<int> complement;
        for (int i = 0, p = 0; i < r; ++i) {
            if (p < m && subset[p] == i)
                ++p;
            else
                complement.push_back(i);
        }
        std::vector<IntVec> comp_free, comp_full, sub_free;
        for (int i : complement) {
            comp_free.push_back(pres.free_degree(i));
            comp_full.push_back(pres.degrees[i]);
        }
        for (int i : subset) sub_free.push_back(pres.free_degree(i));

        Rat value = 0;
        if (Cone::from_rays(k, comp_free).contains_cone(eta)) {
            Int mu = subgroup_index(pres.K, comp_full);
            if (mu == 0)
                throw InternalInconsistency("complementary weights of a covering tuple do not span");
            value = Rat(1) / Rat(mu);
        }

        auto poly = tuple_poly(sub_free, k);
        std::vector<Rat> row(cols + 1, Rat(0));
        for (size_t a = 0; a < cols; ++a) {
            auto it = poly.find(f.mono[a]);
            if (it != poly.end()) row[a] = Rat(it->second);
        }
        row[cols] = value;
        rows.push_back(std::move(row));

        int pos = m - 1;
        while (pos >= 0 && subset[pos] == r - m + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int i = pos + 1; i < m; ++i) subset[i] = subset[i - 1] + 1;
    }

    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat factor = rows[i][col] / rows[rank][col];
            for (size_t j = col; j <= cols; ++j) rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    if (rank < cols)
        throw InternalInconsistency("chamber equations do not determine the intersection form");
    for (size_t i = rank; i < rows.size(); ++i)
        if (rows[i][cols] != 0)
            throw InternalInconsistency("chamber equations for the intersection form are inconsistent");

    f.coeff.assign(cols, Rat(0));
    for (size_t i = 0; i < rank; ++i) {
        size_t col = 0;
        while (rows[i][col] == 0) ++col;
        f.coeff[col] = rows[i][cols] / rows[i][col];
    }
    return f;
}

// The full-dimensional cones of the variation quasifan of the grading alone,
// with the relations dropped: the candidate chambers for intersection theory.
std::vector<Cone> toric_chambers(const GradedPresentation& pres) {
    GradedPresentation toric;
    toric.vars = pres.vars;
    toric.K = pres.K;
    toric.degrees = pres.degrees;
    GITFan gf = enumerate_gitfan(orbit_cones(toric));
    std::vector<Cone> out;
    for (int ci : gf.chambers) out.push_back(gf.fan.cones[ci]);
    return out;
}

Cone semiample_chamber(const BunchedRing& ring) {
    const auto& orbits = ring.bunch.orbits;
    Cone lambda = orbits.cones[ring.bunch.members[0]].cone;
    for (int m : ring.bunch.members) lambda = intersect(lambda, orbits.cones[m].cone);
    return lambda;
}

void check_classes(const GradedPresentation& pres, const std::vector<IntVec>& classes) {
    for (const IntVec& c : classes)
        if (int(c.size()) != pres.K.dims())
            throw std::invalid_argument("class vector length does not match the class group");
}

Rat product_on_chamber(const BunchedRing& ring, const Cone& eta,
                       std::vector<IntVec> tuple) {
    SymForm f = solve_form(ring.bunch.pres, eta);
    for (IntVec& v : tuple) v.resize(ring.bunch.pres.K.rank);
    return f.eval(tuple);
}

}  // namespace

int dimension(const BunchedRing& ring) {
    const GradedPresentation& pres = ring.bunch.pres;
    return pres.nvars() - int(pres.relations.size()) - pres.K.rank;
}

AbelianGroup local_class_group(const BunchedRing& ring, const FaceSubset& g0) {
    require_relevant(ring, g0);
    return quotient_group(ring.bunch.pres.K, face_degrees(ring.bunch.pres, g0)).group;
}

StratumInfo stratum_singularity(const BunchedRing& ring, const FaceSubset& g0) {
    require_relevant(ring, g0);
    const GradedPresentation& pres = ring.bunch.pres;
    StratumInfo info;
    info.face = g0;
    std::vector<IntVec> degs = face_degrees(pres, g0);
    info.local_cl = quotient_group(pres.K, degs).group;
    info.factorial = generates(pres.K, degs);
    info.q_factorial = face_image(pres, g0).dim() == pres.K.rank;
    return info;
}

PicardData picard_group(const BunchedRing& ring) {
    const GradedPresentation& pres = ring.bunch.pres;
    int dims = pres.K.dims();
    std::vector<IntVec> gens;
    for (int i = 0; i < dims; ++i) {
        IntVec e(dims, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    for (const FaceSubset& g0 : ring.bunch.covering)
        gens = subgroup_intersect(pres.K, gens, face_degrees(pres, g0));
    PicardData pic;
    pic.generators = hermite_generators(dims, gens);
    pic.index = subgroup_index(pres.K, pic.generators);
    return pic;
}

DivisorCones divisor_cones(const BunchedRing& ring) {
    const auto& orbits = ring.bunch.orbits;
    DivisorCones dc;
    dc.eff = orbits.weight_cone;
    dc.mov = moving_cone(ring.bunch.pres);
    dc.samp = semiample_chamber(ring);
    IntVec p = dc.samp.interior_point();
    dc.ample_nonempty = true;
    for (int m : ring.bunch.members)
        dc.ample_nonempty =
            dc.ample_nonempty && orbits.cones[m].cone.contains_in_relative_interior(p);
    return dc;
}

IntVec canonical_class(const GradedPresentation& pres) {
    IntVec c(pres.K.dims(), 0);
    for (const IntVec& u : relation_degrees(pres))
        for (int j = 0; j < pres.K.dims(); ++j) c[j] += u[j];
    for (const IntVec& w : pres.degrees)
        for (int j = 0; j < pres.K.dims(); ++j) c[j] -= w[j];
    return pres.K.normalize(c);
}

IntVec canonical_class_complexity_one(const APData& ap, const GradedPresentation& pres) {
    if (pres.nvars() != ap.n() + ap.m)
        throw std::invalid_argument("presentation does not match the defining data");
    int dims = pres.K.dims();
    IntVec c(dims, 0);

    // max(0,r-1) copies of the first block's exponent-weighted divisors...
    Int factor = std::max(0, ap.r - 1);
    for (int j = 0; j < ap.ns[0]; ++j)
        for (int t = 0; t < dims; ++t) c[t] += factor * ap.ls[0][j] * pres.degrees[j][t];

    // ...minus every invariant divisor once.
    for (int i = 0; i < ap.n() + ap.m; ++i)
        for (int t = 0; t < dims; ++t) c[t] -= pres.degrees[i][t];

    IntVec got = pres.K.normalize(c);
    IntVec want = canonical_class(pres);
    if (got != want)
        throw InternalInconsistency("fixed-divisor canonical class disagrees with the relation-degree formula");
    return got;
}

Rat toric_intersection_number(const BunchedRing& ring, const Cone& eta,
                              const std::vector<IntVec>& classes) {
    const GradedPresentation& pres = ring.bunch.pres;
    if (!pres.K.torsion.empty())
        throw UnsupportedRing("intersection numbers require a torsion-free class group");
    int m = pres.nvars() - pres.K.rank;
    if (int(classes.size()) != m)
        throw std::invalid_argument("toric intersection takes " + std::to_string(m) +
                                    " classes here");
    check_classes(pres, classes);

    Cone lambda = semiample_chamber(ring);
    if (lambda.dim() != pres.K.rank ||
        bunch_from_chamber(pres, ring.bunch.orbits, lambda).members != ring.bunch.members)
        throw std::invalid_argument("the bunch does not come from a full-dimensional chamber");
    if (eta.dim() != pres.K.rank || !lambda.contains_cone(eta))
        throw std::invalid_argument("eta is not a full-dimensional chamber inside the semiample cone");
    std::vector<Cone> chambers = toric_chambers(pres);
    if (std::find(chambers.begin(), chambers.end(), eta) == chambers.end())
        throw std::invalid_argument("eta is not a chamber of the grading's variation quasifan");

    return product_on_chamber(ring, eta, classes);
}

Rat intersection_number(const BunchedRing& ring, const Cone& eta,
                        const std::vector<IntVec>& classes) {
    const GradedPresentation& pres = ring.bunch.pres;
    if (!pres.K.torsion.empty())
        throw UnsupportedRing("intersection numbers require a torsion-free class group");
    int d = int(pres.relations.size());
    int n = pres.nvars() - pres.K.rank - d;
    if (int(classes.size()) != n)
        throw std::invalid_argument("intersection number takes " + std::to_string(n) +
                                    " classes here");
    std::vector<IntVec> tuple = classes;
    for (const IntVec& u : relation_degrees(pres)) tuple.push_back(u);

    Rat value = toric_intersection_number(ring, eta, tuple);

    // The product on the variety must not see the chamber choice; recompute
    // on one other chamber when the semiample cone holds several.
    Cone lambda = semiample_chamber(ring);
    for (const Cone& other : toric_chambers(pres)) {
        if (other == eta || !lambda.contains_cone(other)) continue;
        if (product_on_chamber(ring, other, tuple) != value)
            throw InternalInconsistency("intersection number depends on the chamber choice");
        break;
    }
    return value;
}

Cone product_chamber(const BunchedRing& ring) {
    const GradedPresentation& pres = ring.bunch.pres;
    Cone lambda = semiample_chamber(ring);
    for (const Cone& eta : toric_chambers(pres))
        if (eta.dim() == pres.K.rank && lambda.contains_cone(eta)) return eta;
    throw std::invalid_argument("the semiample cone contains no full-dimensional chamber");
}

RankOneData picard_data_rank_one(const GradedPresentation& pres) {
    if (pres.K.rank != 1 || !pres.K.torsion.empty())
        throw UnsupportedRing("rank-one shortcuts need divisor class group Z");
    for (const IntVec& w : pres.degrees)
        if (w[0] <= 0) throw std::invalid_argument("rank-one shortcuts need positive weights");

    RankOneData data;
    Int wsum = 0, wprod = 1;
    for (const IntVec& w : pres.degrees) {
        wsum += w[0];
        wprod *= w[0];
    }
    Int gsum = 0, gprod = 1;
    for (const IntVec& u : relation_degrees(pres)) {
        gsum += u[0];
        gprod *= u[0];
    }
    data.anticanonical = wsum - gsum;
    data.fano = data.anticanonical > 0;

    int d = pres.nvars() - int(pres.relations.size()) - 1;
    Rat top = Rat(gprod) / Rat(wprod);
    for (int i = 0; i < d; ++i) top *= Rat(data.anticanonical);
    data.anticanonical_degree = top;

    // Local class groups are cyclic of order gcd over the support, and the
    // Picard index is their least common multiple across the strata.
    data.picard_index = 1;
    for (const FaceSubset& g0 : enumerate_ffaces(pres)) {
        if (g0.empty()) continue;
        Int g = 0;
        for (int i : g0) g = gcd(g, pres.degrees[i][0]);
        data.picard_index = lcm(data.picard_index, g);
    }
    return data;
}

GeometryReport geometry_report(const BunchedRing& ring) {
    const GradedPresentation& pres = ring.bunch.pres;
    GeometryReport rep;
    rep.dim = dimension(ring);
    rep.cl = pres.K;
    for (const FaceSubset& g0 : ring.bunch.relevant)
        rep.strata.push_back(stratum_singularity(ring, g0));
    rep.pic = picard_group(ring);
    rep.cones = divisor_cones(ring);
    rep.canonical = canonical_class(pres);

    rep.q_factorial = true;
    rep.factorial = true;
    for (const StratumInfo& s : rep.strata) {
        rep.q_factorial = rep.q_factorial && s.q_factorial;
        rep.factorial = rep.factorial && s.factorial;
    }

    IntVec anti(pres.K.rank);
    for (int j = 0; j < pres.K.rank; ++j) anti[j] = -rep.canonical[j];
    rep.fano = rep.cones.ample_nonempty;
    for (int m : ring.bunch.members)
        rep.fano = rep.fano &&
                   ring.bunch.orbits.cones[m].cone.contains_in_relative_interior(anti);
    rep.gorenstein = subgroup_contains(pres.K, rep.pic.generators, rep.canonical);
    return rep;
}

}  // namespace coxcalc
