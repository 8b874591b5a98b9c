#include "coxcalc/orbit.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace coxcalc {

namespace {

void check_face_subset(const FaceSubset& g0, int nvars) {
    for (size_t k = 0; k < g0.size(); ++k) {
        if (g0[k] < 0 || g0[k] >= nvars) throw std::invalid_argument("face index out of range");
        if (k > 0 && g0[k] <= g0[k - 1]) throw std::invalid_argument("face indices not sorted");
    }
}

}  // namespace

ChainStructure recognize_chain(const GradedPresentation& pres) {
    ChainStructure cs;
    const int n = pres.nvars();
    if (pres.relations.empty()) {
        for (int i = 0; i < n; ++i) cs.free_vars.push_back(i);
        return cs;
    }
    cs.shape = RingShape::TrinomialChain;

    // Collect the distinct monomials, in order of first appearance, and the
    // block of variables each one uses.
    std::vector<std::vector<Int>> monomials;
    std::map<std::vector<Int>, int> index_of;
    for (const auto& rel : pres.relations) {
        if (int(rel.terms.size()) != 3)
            throw UnsupportedRing("relation is not a trinomial");
        for (const auto& t : rel.terms) {
            if (index_of.emplace(t.e, int(monomials.size())).second) monomials.push_back(t.e);
        }
    }
    const int q = int(monomials.size());
    std::vector<int> owner(n, -1);
    for (int i = 0; i < q; ++i) {
        std::vector<int> block;
        for (int v = 0; v < n; ++v) {
            if (monomials[i][v] == 0) continue;
            if (monomials[i][v] < 0) throw UnsupportedRing("negative exponent");
            if (owner[v] != -1) throw UnsupportedRing("monomial supports overlap");
            owner[v] = i;
            block.push_back(v);
        }
        if (block.empty()) throw UnsupportedRing("constant term in a relation");
        cs.blocks.push_back(std::move(block));
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) cs.free_vars.push_back(v);

    // Integer coefficient matrix, rows cleared of denominators.
    IntMat C(int(pres.relations.size()), q);
    for (size_t r = 0; r < pres.relations.size(); ++r) {
        Int den = 1;
        for (const auto& t : pres.relations[r].terms) {
            Int d = t.c.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = den / g * d;
        }
        for (const auto& t : pres.relations[r].terms) {
            Rat scaled = t.c * Rat(den);
            C.at(int(r), index_of.at(t.e)) = scaled.get_num();
        }
    }
    if (rank_of(C) != C.rows) throw UnsupportedRing("relations are linearly dependent");
    if (q != C.rows + 2) throw UnsupportedRing("monomial count does not fit a chain");

    IntMat ker = right_kernel(C);
    for (int i = 0; i < q; ++i) {
        cs.pairs.push_back({ker.at(0, i), ker.at(1, i)});
        if (ker.at(0, i) == 0 && ker.at(1, i) == 0)
            throw UnsupportedRing("a monomial is forced to vanish");
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            if (cs.pairs[i][0] * cs.pairs[j][1] - cs.pairs[i][1] * cs.pairs[j][0] == 0)
                throw UnsupportedRing("two monomials vanish simultaneously");

    // order the blocks by their leading variable
    std::vector<int> perm(q);
    for (int i = 0; i < q; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return cs.blocks[a][0] < cs.blocks[b][0]; });
    ChainStructure sorted;
    sorted.shape = cs.shape;
    sorted.free_vars = cs.free_vars;
    for (int i : perm) {
        sorted.blocks.push_back(cs.blocks[i]);
        sorted.pairs.push_back(cs.pairs[i]);
    }
    return sorted;
}

bool is_fface(const GradedPresentation& pres, const FaceSubset& g0) {
    check_face_subset(g0, pres.nvars());
    ChainStructure cs = recognize_chain(pres);
    if (cs.shape == RingShape::Free) return true;
    std::vector<bool> in(pres.nvars(), false);
    for (int v : g0) in[v] = true;
    int full = 0;
    for (const auto& block : cs.blocks) {
        bool all = true;
        for (int v : block) all = all && in[v];
        if (all) ++full;
    }
    return full == 0 || int(cs.blocks.size()) - full <= 1;
}

std::vector<FaceSubset> enumerate_ffaces(const GradedPresentation& pres, size_t max_subsets) {
    const int n = pres.nvars();
    if (n >= 63 || (size_t(1) << n) > max_subsets)
        throw SizeGuardError("too many orthant faces to enumerate");
    ChainStructure cs = recognize_chain(pres);
    std::vector<FaceSubset> out;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        bool ok = true;
        if (cs.shape == RingShape::TrinomialChain) {
            int full = 0;
            for (const auto& block : cs.blocks) {
                bool all = true;
                for (int v : block) all = all && ((mask >> v) & 1);
                if (all) ++full;
            }
            ok = full == 0 || int(cs.blocks.size()) - full <= 1;
        }
        if (!ok) continue;
        FaceSubset g0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) g0.push_back(v);
        out.push_back(std::move(g0));
    }
    return out;
}

Cone face_image(const GradedPresentation& pres, const FaceSubset& g0) {
    check_face_subset(g0, pres.nvars());
    std::vector<IntVec> gens;
    for (int v : g0) gens.push_back(pres.free_degree(v));
    return Cone::from_rays(pres.K.rank, gens);
}

const OrbitCone* OrbitConeSet::find(const Cone& c) const {
    for (const auto& oc : cones)
        if (oc.cone == c) return &oc;
    return nullptr;
}

OrbitConeSet orbit_cones(const GradedPresentation& pres, size_t max_subsets) {
    OrbitConeSet result;
    std::map<Cone, std::vector<FaceSubset>> by_cone;
    for (auto& g0 : enumerate_ffaces(pres, max_subsets))
        by_cone[face_image(pres, g0)].push_back(std::move(g0));
    for (auto& [cone, faces] : by_cone) result.cones.push_back({cone, std::move(faces)});
    FaceSubset all;
    for (int v = 0; v < pres.nvars(); ++v) all.push_back(v);
    result.weight_cone = face_image(pres, all);
    return result;
}

}  // namespace coxcalc
