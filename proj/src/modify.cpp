#include "coxcalc/modify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "coxcalc/errors.hpp"
#include "coxcalc/gitfan.hpp"
#include "coxcalc/orbit.hpp"

namespace coxcalc {

namespace {

void check_spec(const ModificationSpec& spec, int nvars) {
    if (spec.center.size() < 2)
        throw std::invalid_argument("the center needs at least two variables");
    if (spec.center.size() != spec.coeffs.size())
        throw std::invalid_argument("one coefficient per center variable required");
    for (size_t i = 0; i < spec.center.size(); ++i) {
        if (spec.center[i] < 0 || spec.center[i] >= nvars)
            throw std::invalid_argument("center variable out of range");
        if (i > 0 && spec.center[i] <= spec.center[i - 1])
            throw std::invalid_argument("center variables must be strictly increasing");
        if (spec.coeffs[i] < 1)
            throw std::invalid_argument("insertion coefficients must be positive");
    }
}

Int term_weight(const Term& t, const ModificationSpec& spec) {
    Int k = 0;
    for (size_t i = 0; i < spec.center.size(); ++i) k += spec.coeffs[i] * t.e[spec.center[i]];
    return k;
}

Int min_weight(const Polynomial& f, const ModificationSpec& spec) {
    Int k0 = term_weight(f.terms[0], spec);
    for (const Term& t : f.terms) {
        Int k = term_weight(t, spec);
        if (k < k0) k0 = k;
    }
    return k0;
}

Polynomial leading_part(const Polynomial& f, const ModificationSpec& spec) {
    Int k0 = min_weight(f, spec);
    std::vector<Term> ts;
    for (const Term& t : f.terms)
        if (term_weight(t, spec) == k0) ts.push_back(t);
    return Polynomial::from_terms(ts);
}

std::string fresh_name(const std::vector<std::string>& vars) {
    auto taken = [&](const std::string& s) {
        return std::find(vars.begin(), vars.end(), s) != vars.end();
    };
    if (!taken("Tinf")) return "Tinf";
    for (int k = 2;; ++k) {
        std::ostringstream os;
        os << "Tinf" << k;
        if (!taken(os.str())) return os.str();
    }
}

}  // namespace

AdmissibilityReport admissible(const Polynomial& f0, const ModificationSpec& spec,
                               bool grading_torsion_free) {
    AdmissibilityReport rep;
    if (f0.is_zero()) {
        // no relation to carry along
        rep.status = Admissibility::Yes;
        rep.orbit_meets = true;
        return rep;
    }
    check_spec(spec, f0.nvars());

    // The deleted orbit has the center coordinates zero and all others
    // invertible. On it f0 restricts to the terms free of center variables:
    // no term vanishes identically, a single monomial never vanishes, and two
    // or more distinct monomials can be balanced against each other.
    int outside = 0;
    for (const Term& t : f0.terms) {
        bool touches = false;
        for (int c : spec.center) touches = touches || t.e[c] != 0;
        if (!touches) ++outside;
    }
    rep.orbit_meets = outside != 1;
    rep.leading = leading_part(f0, spec);
    if (!rep.orbit_meets) {
        rep.reason = "the deleted orbit misses the zero set of the relation";
        return rep;
    }

    const std::vector<Term>& ts = rep.leading.terms;
    if (ts.size() == 1) {
        rep.reason = "the leading part is a monomial";
        return rep;
    }
    std::vector<int> sup = rep.leading.support();
    if (sup.size() < 2) {
        rep.reason = "the leading part uses fewer than two variables";
        return rep;
    }
    for (const Term& t : ts)
        if (t.e.empty() || std::all_of(t.e.begin(), t.e.end(), [](const Int& x) { return x == 0; })) {
            rep.status = Admissibility::Unverified;
            rep.reason = "the leading part has a constant term";
            return rep;
        }
    // A variable dividing every term splits off as a homogeneous factor, so
    // the leading part cannot be a graded prime.
    for (int v : sup) {
        bool common = true;
        for (const Term& t : ts) common = common && t.e[v] != 0;
        if (common) {
            rep.reason = "the leading part has a common variable factor";
            return rep;
        }
    }
    bool disjoint = true;
    for (size_t a = 0; a < ts.size() && disjoint; ++a)
        for (size_t b = a + 1; b < ts.size() && disjoint; ++b)
            for (size_t v = 0; v < ts[a].e.size(); ++v)
                if (ts[a].e[v] != 0 && ts[b].e[v] != 0) {
                    disjoint = false;
                    break;
                }
    if (disjoint && ts.size() == 2) {
        IntVec all;
        for (const Term& t : ts)
            for (const Int& x : t.e) all.push_back(x);
        if (vec_gcd(all) == 1) {
            rep.status = Admissibility::Yes;
        } else if (grading_torsion_free) {
            // x^(ga) - c y^(gb) splits into g homogeneous factors once the
            // degree equation g(deg x^a - deg y^b) = 0 forces equal degrees.
            rep.reason = "the leading part is a power of a binomial pattern";
        } else {
            rep.status = Admissibility::Unverified;
            rep.reason = "reducible leading part, graded primality over torsion unsettled";
        }
        return rep;
    }
    if (disjoint && ts.size() == 3) {
        // Three monomials on disjoint nonempty variable sets present one of
        // the two-block trinomial rings, and those are integral.
        rep.status = Admissibility::Yes;
        return rep;
    }
    rep.status = Admissibility::Unverified;
    rep.reason = "leading part shape outside the decidable cases";
    return rep;
}

Polynomial transform_relation(const Polynomial& f0, const ModificationSpec& spec,
                              Int subdivision_index) {
    if (subdivision_index < 1) throw std::invalid_argument("subdivision index must be positive");
    if (f0.is_zero()) return f0;
    check_spec(spec, f0.nvars());
    Int k0 = min_weight(f0, spec);
    std::vector<Term> out;
    for (const Term& t : f0.terms) {
        Int k = term_weight(t, spec) - k0;
        if (k % subdivision_index != 0)
            throw NotAdmissible("a transformed exponent is not a multiple of the subdivision index");
        Term nt = t;
        nt.e.push_back(k / subdivision_index);
        out.push_back(nt);
    }
    return Polynomial::from_terms(out);
}

ModificationResult modify(const BunchedRing& ring, const ModificationSpec& spec,
                          bool assert_admissible) {
    const GradedPresentation& pres = ring.bunch.pres;
    if (pres.relations.size() > 1)
        throw UnsupportedRing("ambient modification supports at most one relation");
    check_spec(spec, pres.nvars());
    Fan fan = canonical_toric_ambient(ring);

    IntVec vinf(fan.ambient, 0);
    for (size_t i = 0; i < spec.center.size(); ++i)
        for (int k = 0; k < fan.ambient; ++k)
            vinf[k] += spec.coeffs[i] * fan.rays[spec.center[i]][k];
    Int idx = vec_gcd(vinf);
    if (idx == 0) throw std::invalid_argument("the inserted combination is zero");
    IntVec vprim = primitive_of(vinf);

    ModificationResult res;
    if (fan.ray_index(vprim) >= 0) {
        res.pres = pres;
        res.ambient = fan;
        res.check.status = Admissibility::Yes;
        res.check.orbit_meets = true;
        return res;
    }

    std::vector<IntVec> crays;
    for (int c : spec.center) crays.push_back(fan.rays[c]);
    Cone sigma = Cone::from_rays(fan.ambient, crays);
    bool in_fan = false;
    for (const Cone& tau : fan.all_max_cones()) {
        if (!tau.contains_cone(sigma)) continue;
        for (const Cone& f : faces(tau))
            if (f == sigma) {
                in_fan = true;
                break;
            }
        if (in_fan) break;
    }
    if (!in_fan) throw std::invalid_argument("the center does not span a cone of the ambient fan");

    IntMat P1(fan.ambient, pres.nvars() + 1);
    for (int j = 0; j < pres.nvars(); ++j)
        for (int i = 0; i < fan.ambient; ++i) P1.at(i, j) = fan.rays[j][i];
    for (int i = 0; i < fan.ambient; ++i) P1.at(i, pres.nvars()) = vprim[i];
    CokernelResult ck = cokernel(P1.transpose());

    Polynomial f0 = pres.relations.empty() ? Polynomial::zero() : pres.relations[0];
    res.check = admissible(f0, spec, ck.group.torsion.empty());
    if (res.check.status == Admissibility::No) throw NotAdmissible(res.check.reason);
    if (res.check.status == Admissibility::Unverified && !assert_admissible)
        throw NotAdmissible(res.check.reason);
    if (!f0.is_zero()) {
        // the orbit criterion must agree with the face test when available
        FaceSubset keep;
        for (int v = 0; v < pres.nvars(); ++v)
            if (std::find(spec.center.begin(), spec.center.end(), v) == spec.center.end())
                keep.push_back(v);
        try {
            if (is_fface(pres, keep) != res.check.orbit_meets)
                throw InternalInconsistency("orbit test disagrees with the face criterion");
        } catch (const UnsupportedRing&) {
        }
    }

    GradedPresentation np;
    np.vars = pres.vars;
    np.vars.push_back(fresh_name(pres.vars));
    np.K = ck.group;
    for (int j = 0; j < P1.cols; ++j) np.degrees.push_back(ck.proj.matrix.col(j));
    if (!f0.is_zero()) np.relations.push_back(transform_relation(f0, spec, idx));
    np.trusted_prime_generators =
        pres.trusted_prime_generators && res.check.status == Admissibility::Yes;
    np.validate();

    res.pres = np;
    res.ambient = stellar_subdivision(fan, vprim);
    res.inserted = vprim;
    return res;
}

namespace {

// Working state of the resolution: per arm the (l, d) columns sorted by
// slope, plus the two possible vertical columns.
struct ArmEntry {
    Int l, d;
    bool fresh = false;
};

struct SurfaceState {
    int r = 0;
    std::vector<std::array<Int, 2>> A;
    std::vector<std::vector<ArmEntry>> arms;
    bool top = false, bottom = false;
    bool top_fresh = false, bottom_fresh = false;
};

Int det2(const Int& l1, const Int& d1, const Int& l2, const Int& d2) {
    return l1 * d2 - d1 * l2;
}

SurfaceState read_state(const APData& ap) {
    SurfaceState st;
    st.r = ap.r;
    st.A = ap.A;
    int pos = 0;
    for (int i = 0; i <= ap.r; ++i) {
        std::vector<ArmEntry> arm;
        for (int j = 0; j < ap.ns[i]; ++j) {
            ArmEntry e;
            e.l = ap.ls[i][j];
            e.d = ap.d.at(0, pos + j);
            arm.push_back(e);
        }
        for (size_t j = 0; j + 1 < arm.size(); ++j)
            if (det2(arm[j].l, arm[j].d, arm[j + 1].l, arm[j + 1].d) <= 0)
                throw std::invalid_argument("block columns must be ordered by ascending slope");
        st.arms.push_back(arm);
        pos += ap.ns[i];
    }
    for (int k = 0; k < ap.m; ++k) {
        if (ap.dprime.at(0, k) > 0)
            st.top = true;
        else
            st.bottom = true;
    }
    return st;
}

APData assemble(const SurfaceState& st) {
    APData ap;
    ap.r = st.r;
    ap.s = 1;
    ap.A = st.A;
    IntVec drow;
    for (const auto& arm : st.arms) {
        ap.ns.push_back(int(arm.size()));
        IntVec l;
        for (const ArmEntry& e : arm) {
            l.push_back(e.l);
            drow.push_back(e.d);
        }
        ap.ls.push_back(l);
    }
    ap.d = IntMat(1, int(drow.size()));
    for (size_t j = 0; j < drow.size(); ++j) ap.d.at(0, int(j)) = drow[j];
    ap.m = int(st.top) + int(st.bottom);
    ap.dprime = IntMat(1, ap.m);
    int k = 0;
    if (st.top) ap.dprime.at(0, k++) = 1;
    if (st.bottom) ap.dprime.at(0, k++) = -1;
    return ap;
}

// Identity of a column across insertions: (arm, l, d) for arm columns,
// (r+1, sign, 0) for verticals.
using ColKey = std::tuple<int, Int, Int>;

std::map<ColKey, int> column_positions_from(const APData& ap);

std::map<ColKey, int> column_positions(const SurfaceState& st) {
    std::map<ColKey, int> pos;
    int p = 0;
    for (size_t i = 0; i < st.arms.size(); ++i)
        for (const ArmEntry& e : st.arms[i]) pos[{int(i), e.l, e.d}] = p++;
    if (st.top) pos[{st.r + 1, 1, 0}] = p++;
    if (st.bottom) pos[{st.r + 1, -1, 0}] = p++;
    return pos;
}

IntVec embed_column(int r, const ColKey& key) {
    IntVec v(r + 1, 0);
    int arm = std::get<0>(key);
    const Int& l = std::get<1>(key);
    const Int& d = std::get<2>(key);
    if (arm > r) {
        v[r] = l;  // l carries the sign of the vertical
        return v;
    }
    if (arm == 0)
        for (int i = 0; i < r; ++i) v[i] = -l;
    else
        v[arm - 1] = l;
    v[r] = d;
    return v;
}

struct Insertion {
    std::vector<std::pair<int, Int>> comb;  // previous position, coefficient
    Int index = 1;
    ColKey fresh_key;
};

// One resolution step: the state has already been advanced; verify against
// the substitution transform when there is a single relation, then record.
void record_step(ResolvedSurface& out, APData& prev_data, GradedPresentation& prev_pres,
                 const SurfaceState& st, const Insertion& ins) {
    APData cur = assemble(st);
    GradedPresentation cur_pres = build_rap(cur);
    std::map<ColKey, int> now = column_positions(st);
    if (st.r == 2 && prev_pres.relations.size() == 1) {
        ModificationSpec ms;
        std::vector<std::pair<int, Int>> comb = ins.comb;
        std::sort(comb.begin(), comb.end());
        for (const auto& pc : comb) {
            ms.center.push_back(pc.first);
            ms.coeffs.push_back(pc.second);
        }
        Polynomial via = transform_relation(prev_pres.relations[0], ms, ins.index);
        std::map<ColKey, int> old = column_positions_from(prev_data);
        std::vector<int> old_to_new(prev_pres.nvars());
        for (const auto& kv : old) old_to_new[kv.second] = now.at(kv.first);
        int new_pos = now.at(ins.fresh_key);
        std::vector<Term> ts;
        for (const Term& t : via.terms) {
            Term nt;
            nt.c = t.c;
            nt.e.assign(cur_pres.nvars(), 0);
            for (int k = 0; k < prev_pres.nvars(); ++k) nt.e[old_to_new[k]] = t.e[k];
            nt.e[new_pos] = t.e[prev_pres.nvars()];
            ts.push_back(nt);
        }
        if (Polynomial::from_terms(ts) != cur_pres.relations[0])
            throw InternalInconsistency("inserted relation disagrees with the substitution transform");
    }
    ResolutionStep step;
    step.ray = embed_column(st.r, ins.fresh_key);
    step.P = cur.P();
    step.pres = cur_pres;
    out.steps.push_back(step);
    prev_data = cur;
    prev_pres = cur_pres;
}

// Determinant of the square matrix whose columns are the end rays of every
// arm, top or bottom side.
Int elliptic_det(const SurfaceState& st, bool top_side) {
    IntMat M(st.r + 1, st.r + 1);
    for (int i = 0; i <= st.r; ++i) {
        const ArmEntry& e = top_side ? st.arms[i].back() : st.arms[i].front();
        IntVec v = embed_column(st.r, {i, e.l, e.d});
        for (int k = 0; k <= st.r; ++k) M.at(k, i) = v[k];
    }
    return determinant(M);
}

// Minimal positive integral combination of the end rays reaching the
// vertical direction: coefficients per arm and the vertical's multiple.
void elliptic_combination(const SurfaceState& st, bool top_side, IntVec& coeffs, Int& t) {
    int n = st.r + 1;
    IntMat M(n, n);
    for (int i = 0; i < n; ++i) {
        const ArmEntry& e = top_side ? st.arms[i].back() : st.arms[i].front();
        IntVec v = embed_column(st.r, {i, e.l, e.d});
        for (int k = 0; k < n; ++k) M.at(k, i) = v[k];
    }
    Int D = determinant(M);
    if (D == 0) throw std::invalid_argument("degenerate cone at a source or sink point");
    Int s = D > 0 ? 1 : -1;
    IntVec target(n, 0);
    target[n - 1] = top_side ? 1 : -1;
    coeffs.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        IntMat Mi = M;
        for (int k = 0; k < n; ++k) Mi.at(k, i) = target[k];
        coeffs[i] = s * determinant(Mi);
        if (coeffs[i] <= 0)
            throw std::invalid_argument("vertical direction outside a source or sink cone");
    }
    t = s * D;
    IntVec all = coeffs;
    all.push_back(t);
    Int g = vec_gcd(all);
    for (Int& c : coeffs) c /= g;
    t /= g;
}

}  // namespace

bool kstar_smooth(const APData& ap) {
    ap.validate();
    if (ap.s != 1) throw std::invalid_argument("smoothness scan needs surface data with one lower row");
    SurfaceState st = read_state(ap);
    if (!st.top && abs(elliptic_det(st, true)) != 1) return false;
    if (!st.bottom && abs(elliptic_det(st, false)) != 1) return false;
    for (const auto& arm : st.arms) {
        std::vector<std::array<Int, 2>> chain;
        if (st.bottom) chain.push_back({0, -1});
        for (const ArmEntry& e : arm) chain.push_back({e.l, e.d});
        if (st.top) chain.push_back({0, 1});
        for (size_t j = 0; j + 1 < chain.size(); ++j)
            if (det2(chain[j][0], chain[j][1], chain[j + 1][0], chain[j + 1][1]) != 1) return false;
    }
    return true;
}

namespace {

std::map<ColKey, int> column_positions_from(const APData& ap) {
    return column_positions(read_state(ap));
}

}  // namespace

ResolvedSurface kstar_resolve(const APData& ap) {
    ap.validate();
    if (ap.s != 1) throw std::invalid_argument("resolution needs surface data with one lower row");
    SurfaceState st = read_state(ap);
    ResolvedSurface out;
    APData prev_data = assemble(st);
    GradedPresentation prev_pres = build_rap(prev_data);

    // vertical insertions at the singular source and sink points
    for (bool top_side : {true, false}) {
        bool& present = top_side ? st.top : st.bottom;
        if (present) continue;
        if (abs(elliptic_det(st, top_side)) == 1) continue;
        Insertion ins;
        IntVec coeffs;
        elliptic_combination(st, top_side, coeffs, ins.index);
        std::map<ColKey, int> old = column_positions(st);
        for (int i = 0; i <= st.r; ++i) {
            const ArmEntry& e = top_side ? st.arms[i].back() : st.arms[i].front();
            ins.comb.push_back({old.at({i, e.l, e.d}), coeffs[i]});
        }
        ins.fresh_key = {st.r + 1, top_side ? 1 : -1, 0};
        present = true;
        (top_side ? st.top_fresh : st.bottom_fresh) = true;
        record_step(out, prev_data, prev_pres, st, ins);
    }

    // continued-fraction insertions along each arm, lower slopes first
    for (int i = 0; i <= st.r; ++i) {
        // chain of (l, d) pairs with the verticals as endpoints when present
        auto chain_at = [&](size_t j) -> std::array<Int, 2> {
            size_t off = st.bottom ? 1 : 0;
            if (st.bottom && j == 0) return {0, -1};
            if (j == off + st.arms[i].size()) return {0, 1};
            const ArmEntry& e = st.arms[i][j - off];
            return {e.l, e.d};
        };
        size_t total = st.arms[i].size() + (st.bottom ? 1 : 0) + (st.top ? 1 : 0);
        size_t j = 0;
        while (j + 1 < total) {
            std::array<Int, 2> u = chain_at(j), w = chain_at(j + 1);
            Int D = det2(u[0], u[1], w[0], w[1]);
            if (D <= 0) throw InternalInconsistency("arm chain lost its slope order");
            if (D == 1) {
                ++j;
                continue;
            }
            Int a = -1;
            for (Int c = 1; c < D; ++c)
                if ((c * u[0] + w[0]) % D == 0 && (c * u[1] + w[1]) % D == 0) {
                    a = c;
                    break;
                }
            if (a < 0) throw InternalInconsistency("no primitive subdivision of a surface cone");
            ArmEntry v;
            v.l = (a * u[0] + w[0]) / D;
            v.d = (a * u[1] + w[1]) / D;
            v.fresh = true;
            std::map<ColKey, int> old = column_positions(st);
            Insertion ins;
            ins.index = D;
            ins.fresh_key = {i, v.l, v.d};
            auto key_of = [&](const std::array<Int, 2>& p) -> ColKey {
                if (p[0] == 0) return {st.r + 1, p[1], 0};
                return {i, p[0], p[1]};
            };
            ins.comb.push_back({old.at(key_of(u)), a});
            ins.comb.push_back({old.at(key_of(w)), 1});
            size_t slot = j + 1 - (st.bottom ? 1 : 0);
            st.arms[i].insert(st.arms[i].begin() + long(slot), v);
            total += 1;
            record_step(out, prev_data, prev_pres, st, ins);
        }
    }

    out.data = prev_data;
    out.pres = prev_pres;
    std::map<ColKey, int> fin = column_positions(st);
    for (size_t i = 0; i < st.arms.size(); ++i)
        for (const ArmEntry& e : st.arms[i])
            if (e.fresh) out.exceptional.push_back(fin.at({int(i), e.l, e.d}));
    if (st.top_fresh) out.exceptional.push_back(fin.at({st.r + 1, 1, 0}));
    if (st.bottom_fresh) out.exceptional.push_back(fin.at({st.r + 1, -1, 0}));
    std::sort(out.exceptional.begin(), out.exceptional.end());
    return out;
}

BunchedRing moving_chamber_ring(const GradedPresentation& pres) {
    OrbitConeSet os = orbit_cones(pres);
    Cone mov = moving_cone(pres);
    if (mov.dim() != pres.K.rank)
        throw std::invalid_argument("the moving cone is not of full dimension");
    Cone lambda = git_cone(os, mov.interior_point());
    Bunch b = bunch_from_chamber(pres, os, lambda);
    return validate_bunched_ring(pres, os, b.members);
}

std::vector<std::vector<Rat>> curve_products(const BunchedRing& ring,
                                             const std::vector<int>& vars) {
    const GradedPresentation& pres = ring.bunch.pres;
    int dim = pres.nvars() - pres.K.rank - int(pres.relations.size());
    if (dim != 2) throw std::invalid_argument("curve products need a surface");
    for (int v : vars)
        if (v < 0 || v >= pres.nvars()) throw std::invalid_argument("variable position out of range");
    Cone eta = product_chamber(ring);
    size_t k = vars.size();
    std::vector<std::vector<Rat>> out(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            Rat p = intersection_number(ring, eta, {pres.degrees[vars[i]], pres.degrees[vars[j]]});
            out[i][j] = p;
            out[j][i] = p;
        }
    return out;
}

std::vector<Rat> self_intersections(const BunchedRing& ring, const std::vector<int>& vars) {
    const GradedPresentation& pres = ring.bunch.pres;
    int dim = pres.nvars() - pres.K.rank - int(pres.relations.size());
    if (dim != 2) throw std::invalid_argument("curve products need a surface");
    for (int v : vars)
        if (v < 0 || v >= pres.nvars()) throw std::invalid_argument("variable position out of range");
    Cone eta = product_chamber(ring);
    std::vector<Rat> out;
    for (int v : vars)
        out.push_back(intersection_number(ring, eta, {pres.degrees[v], pres.degrees[v]}));
    return out;
}

std::string ade_match(int vertices, const std::vector<std::array<int, 2>>& edges) {
    if (vertices == 0) return "";
    for (const auto& e : edges)
        if (e[0] < 0 || e[0] >= vertices || e[1] < 0 || e[1] >= vertices)
            throw std::invalid_argument("edge endpoint out of range");
    std::vector<std::vector<int>> adj(vertices);
    int simple_edges = 0;
    std::vector<bool> loop(vertices, false);
    {
        std::set<std::pair<int, int>> seen;
        for (const auto& e : edges) {
            int a = std::min(e[0], e[1]), b = std::max(e[0], e[1]);
            if (a == b) {
                loop[a] = true;
                continue;
            }
            if (!seen.insert({a, b}).second) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++simple_edges;
        }
    }
    std::vector<int> comp(vertices, -1);
    int ncomp = 0;
    for (int s = 0; s < vertices; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    // (letter rank, size) per component, letter rank 3 for unrecognized
    std::vector<std::pair<int, int>> labels;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> vs;
        for (int v = 0; v < vertices; ++v)
            if (comp[v] == c) vs.push_back(v);
        int ec = 0;
        bool has_loop = false;
        for (int v : vs) {
            ec += int(adj[v].size());
            has_loop = has_loop || loop[v];
        }
        ec /= 2;
        int nc = int(vs.size());
        if (has_loop || ec != nc - 1) {
            labels.push_back({3, nc});
            continue;
        }
        std::vector<int> deg3;
        bool big = false;
        for (int v : vs) {
            if (adj[v].size() > 3) big = true;
            if (adj[v].size() == 3) deg3.push_back(v);
        }
        if (big || deg3.size() > 1) {
            labels.push_back({3, nc});
            continue;
        }
        if (deg3.empty()) {
            labels.push_back({0, nc});  // path
            continue;
        }
        // arm sizes of the single branch vertex
        int center = deg3[0];
        std::vector<int> arm_sizes;
        std::vector<bool> used(vertices, false);
        used[center] = true;
        for (int w0 : adj[center]) {
            int size = 0;
            std::vector<int> stack{w0};
            used[w0] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++size;
                for (int w : adj[v])
                    if (!used[w]) {
                        used[w] = true;
                        stack.push_back(w);
                    }
            }
            arm_sizes.push_back(size);
        }
        std::sort(arm_sizes.begin(), arm_sizes.end());
        if (arm_sizes[0] == 1 && arm_sizes[1] == 1)
            labels.push_back({1, nc});
        else if (arm_sizes[0] == 1 && arm_sizes[1] == 2 && arm_sizes[2] >= 2 && arm_sizes[2] <= 4)
            labels.push_back({2, nc});
        else
            labels.push_back({3, nc});
    }
    std::sort(labels.begin(), labels.end());
    std::ostringstream os;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) os << "+";
        switch (labels[i].first) {
            case 0: os << "A" << labels[i].second; break;
            case 1: os << "D" << labels[i].second; break;
            case 2: os << "E" << labels[i].second; break;
            default: os << "unrecognized"; break;
        }
    }
    return os.str();
}

ExceptionalReport exceptional_report(const BunchedRing& ring, const std::vector<int>& vars) {
    ExceptionalReport rep;
    std::vector<std::vector<Rat>> prods = curve_products(ring, vars);
    size_t k = vars.size();
    for (size_t i = 0; i < k; ++i) rep.self.push_back(prods[i][i]);
    std::vector<int> nodes;
    std::vector<int> local(k, -1);
    for (size_t i = 0; i < k; ++i)
        if (rep.self[i] == Rat(-2)) {
            local[i] = int(nodes.size());
            nodes.push_back(int(i));
        }
    std::vector<std::array<int, 2>> packed;
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b)
            if (local[a] >= 0 && local[b] >= 0 && prods[a][b] != 0) {
                rep.edges.push_back({int(a), int(b)});
                packed.push_back({local[a], local[b]});
            }
    rep.label = ade_match(int(nodes.size()), packed);
    return rep;
}

APData ow_data(const OWGraph& graph) {
    if (!graph.has_fplus || !graph.has_fminus)
        throw std::invalid_argument("both fixed curves are required");
    if (graph.arms.size() < 2) throw std::invalid_argument("at least two arms are required");
    APData ap;
    ap.r = int(graph.arms.size()) - 1;
    ap.s = 1;
    ap.m = 2;
    IntVec drow;
    for (size_t i = 0; i < graph.arms.size(); ++i) {
        const std::vector<Int>& B = graph.arms[i];
        if (B.empty()) throw std::invalid_argument("every arm needs at least one curve");
        std::vector<Int> orders = ow_isotropy_orders(B);
        int n = int(B.size());
        // chain from the sink-side vertical: q[t+1] = b[t] q[t] - q[t-1]
        std::vector<Int> l(n), d(n);
        l[0] = 1;
        d[0] = i == 0 ? -graph.b_minus : Int(0);
        Int pl = 0, pd = -1;
        for (int t = 1; t < n; ++t) {
            Int nl = B[t - 1] * l[t - 1] - pl;
            Int nd = B[t - 1] * d[t - 1] - pd;
            pl = l[t - 1];
            pd = d[t - 1];
            l[t] = nl;
            d[t] = nd;
        }
        for (int t = 0; t < n; ++t) {
            if (l[t] < 1) throw std::invalid_argument("labels do not give a valid chain");
            if (l[t] != orders[t])
                throw InternalInconsistency("chain recursion disagrees with the isotropy orders");
        }
        ap.ns.push_back(n);
        ap.ls.push_back(l);
        for (int t = 0; t < n; ++t) drow.push_back(d[t]);
    }
    for (size_t i = 0; i < graph.arms.size(); ++i) {
        if (i == 0)
            ap.A.push_back({0, 1});
        else if (i == 1)
            ap.A.push_back({1, 0});
        else
            ap.A.push_back({1, Int(i) - 1});
    }
    ap.d = IntMat(1, int(drow.size()));
    for (size_t j = 0; j < drow.size(); ++j) ap.d.at(0, int(j)) = drow[j];
    ap.dprime = IntMat(1, 2);
    ap.dprime.at(0, 0) = 1;
    ap.dprime.at(0, 1) = -1;
    ap.validate();
    return ap;
}

GradedPresentation ow_to_cox(const OWGraph& graph) { return build_rap(ow_data(graph)); }

}  // namespace coxcalc
