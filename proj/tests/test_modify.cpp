#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coxcalc/abelian.hpp"
#include "coxcalc/errors.hpp"
#include "coxcalc/modify.hpp"

using namespace coxcalc;

namespace {

GradedPresentation free_pres(int rank, std::vector<IntVec> degs) {
    GradedPresentation pres;
    for (size_t i = 0; i < degs.size(); ++i)
        pres.vars.push_back("T" + std::to_string(i + 1));
    pres.K = AbelianGroup{rank, {}};
    pres.degrees = std::move(degs);
    pres.validate();
    return pres;
}

// One trinomial with unit coefficients, by exponent rows.
Polynomial trinomial(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
    auto iv = [](const std::vector<int>& e) {
        IntVec v;
        for (int x : e) v.push_back(x);
        return v;
    };
    return Polynomial::from_terms({{Rat(1), iv(a)}, {Rat(1), iv(b)}, {Rat(1), iv(c)}});
}

GradedPresentation rank1(std::vector<Int> ws, std::vector<Polynomial> rels) {
    GradedPresentation pres;
    for (size_t i = 0; i < ws.size(); ++i) {
        pres.vars.push_back("T" + std::to_string(i + 1));
        pres.degrees.push_back({ws[i]});
    }
    pres.K = AbelianGroup{1, {}};
    pres.relations = std::move(rels);
    pres.validate();
    return pres;
}

// T1 + T2^2 + T3*T4 with weights 2,1,1,1: the linear term contracts away and
// leaves the projective plane.
GradedPresentation p2111_ring() {
    return rank1({2, 1, 1, 1},
                 {trinomial({1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 1})});
}

// The five-variable quadric with degree matrix
//   [ 1 -1  0 -1  1 ]
//   [ 1  1  1  0  2 ]
GradedPresentation del_pezzo() {
    GradedPresentation pres;
    pres.vars = {"T1", "T2", "T3", "T4", "T5"};
    pres.K = AbelianGroup{2, {}};
    pres.degrees = {{1, 1}, {-1, 1}, {0, 1}, {-1, 0}, {1, 2}};
    pres.relations = {Polynomial::from_terms({{Rat(1), {1, 1, 0, 0, 0}},
                                              {Rat(1), {0, 0, 2, 0, 0}},
                                              {Rat(1), {0, 0, 0, 1, 1}}})};
    pres.validate();
    return pres;
}

// Block data of the quadric surface with one singular sink point.
APData a2_quadric_data() {
    APData ap;
    ap.r = 2;
    ap.ns = {2, 1, 2};
    ap.ls = {{1, 1}, {2}, {1, 1}};
    ap.m = 0;
    ap.s = 1;
    ap.A = {{-1, 0}, {1, -1}, {0, 1}};
    ap.d = IntMat::from_rows({{-1, 0, 1, -1, 0}});
    return ap;
}

APData a2_resolution_data() {
    APData ap;
    ap.r = 2;
    ap.ns = {2, 2, 2};
    ap.ls = {{1, 1}, {1, 2}, {1, 1}};
    ap.m = 1;
    ap.s = 1;
    ap.A = {{-1, 0}, {1, -1}, {0, 1}};
    ap.d = IntMat::from_rows({{-1, 0, 0, 1, -1, 0}});
    ap.dprime = IntMat::from_rows({{-1}});
    return ap;
}

// Two-block chain data contracting to the degenerate cubic.
APData e6_contracted_data() {
    APData ap;
    ap.r = 2;
    ap.ns = {2, 1, 1};
    ap.ls = {{1, 3}, {3}, {2}};
    ap.m = 0;
    ap.s = 1;
    ap.A = {{-1, 0}, {1, -1}, {0, 1}};
    ap.d = IntMat::from_rows({{-1, -2, 1, 1}});
    return ap;
}

APData e6_resolution_data() {
    APData ap;
    ap.r = 2;
    ap.ns = {4, 3, 2};
    ap.ls = {{1, 3, 2, 1}, {3, 2, 1}, {2, 1}};
    ap.m = 1;
    ap.s = 1;
    ap.A = {{-1, 0}, {1, -1}, {0, 1}};
    ap.d = IntMat::from_rows({{-1, -2, -1, 0, 1, 1, 1, 1, 1}});
    ap.dprime = IntMat::from_rows({{1}});
    return ap;
}

// The unique maximal true bunch, validated.
BunchedRing bunched(const GradedPresentation& pres) {
    std::vector<Bunch> bs = enumerate_maximal_true_bunches(pres);
    REQUIRE(bs.size() == 1);
    return validate_bunched_ring(pres, bs[0].orbits, bs[0].members);
}

IntMat degree_matrix(const GradedPresentation& pres) {
    IntMat M(pres.K.dims(), pres.nvars());
    for (int j = 0; j < pres.nvars(); ++j)
        for (int i = 0; i < pres.K.dims(); ++i) M.at(i, j) = pres.degrees[j][i];
    return M;
}

bool has_column(const IntMat& M, const IntVec& v) {
    for (int j = 0; j < M.cols; ++j)
        if (M.col(j) == v) return true;
    return false;
}

// Every column of A appears among the columns of B.
bool columns_contained(const IntMat& A, const IntMat& B) {
    for (int j = 0; j < A.cols; ++j)
        if (!has_column(B, A.col(j))) return false;
    return true;
}

IntVec anticanonical(const GradedPresentation& pres) {
    IntVec k = canonical_class(pres);
    for (Int& x : k) x = -x;
    return k;
}

Polynomial drop_last_variable(const Polynomial& f) {
    std::vector<Term> ts;
    for (const Term& t : f.terms) {
        Term nt = t;
        nt.e.pop_back();
        ts.push_back(nt);
    }
    return Polynomial::from_terms(ts);
}

}  // namespace

TEST_CASE("insertions reject malformed requests") {
    BunchedRing ring = bunched(p2111_ring());
    CHECK_THROWS_AS(modify(ring, {{0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(modify(ring, {{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(modify(ring, {{1, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(modify(ring, {{0, 9}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(modify(ring, {{0, 1}, {0, 1}}), std::invalid_argument);
    // the full variable set spans no cone of this fan
    CHECK_THROWS_AS(modify(ring, {{0, 1, 2, 3}, {1, 1, 1, 1}}), std::invalid_argument);
    // a center that kills all terms but one of the relation
    CHECK_THROWS_AS(modify(ring, {{0, 1}, {1, 1}}), NotAdmissible);
}

TEST_CASE("admissibility separates the leading shapes") {
    Polynomial f = trinomial({1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 1});

    AdmissibilityReport rep = admissible(f, {{0, 1, 2}, {3, 1, 2}});
    CHECK(rep.status == Admissibility::Yes);
    CHECK(rep.orbit_meets);
    CHECK(rep.leading ==
          Polynomial::from_terms({{Rat(1), {0, 2, 0, 0}}, {Rat(1), {0, 0, 1, 1}}}));

    // restriction to the deleted orbit keeps exactly one term
    AdmissibilityReport one = admissible(f, {{0, 2}, {1, 1}});
    CHECK(one.status == Admissibility::No);
    CHECK(!one.orbit_meets);

    // monomial leading part
    Polynomial two = Polynomial::from_terms({{Rat(1), {1, 1, 0}}, {Rat(1), {1, 0, 1}}});
    AdmissibilityReport mono = admissible(two, {{0, 1}, {1, 1}});
    CHECK(mono.status == Admissibility::No);
    CHECK(mono.orbit_meets);

    // common variable factor in the leading part
    AdmissibilityReport common = admissible(two, {{1, 2}, {1, 1}});
    CHECK(common.status == Admissibility::No);

    // a proper power pattern splits over a free grading but is open over torsion
    Polynomial sq = trinomial({2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 1});
    CHECK(admissible(sq, {{2, 3}, {1, 1}}).status == Admissibility::No);
    CHECK(admissible(sq, {{2, 3}, {1, 1}}, false).status == Admissibility::Unverified);

    // three disjoint blocks stay integral
    Polynomial cub = trinomial({1, 3, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 2});
    CHECK(admissible(cub, {{1, 2, 3}, {2, 2, 3}}).status == Admissibility::Yes);

    // four terms of equal weight are beyond the decidable shapes
    Polynomial four = Polynomial::from_terms({{Rat(1), {2, 0, 0, 0}},
                                              {Rat(1), {0, 2, 0, 0}},
                                              {Rat(1), {0, 0, 2, 0}},
                                              {Rat(1), {0, 0, 0, 2}}});
    CHECK(admissible(four, {{0, 1, 2, 3}, {1, 1, 1, 1}}).status == Admissibility::Unverified);

    CHECK(admissible(Polynomial::zero(), {{0, 1}, {1, 1}}).status == Admissibility::Yes);
}

TEST_CASE("the relation transform divides by the insertion index") {
    Polynomial f = trinomial({1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 1});
    CHECK(transform_relation(f, {{0, 1, 2}, {3, 1, 2}}) ==
          trinomial({1, 0, 0, 0, 1}, {0, 2, 0, 0, 0}, {0, 0, 1, 1, 0}));

    // a relation free of the center picks up nothing
    Polynomial h = Polynomial::from_terms({{Rat(1), {1, 0, 0, 0}}, {Rat(1), {0, 2, 0, 0}}});
    CHECK(transform_relation(h, {{2, 3}, {1, 1}}) ==
          Polynomial::from_terms({{Rat(1), {1, 0, 0, 0, 0}}, {Rat(1), {0, 2, 0, 0, 0}}}));

    // exponents must be multiples of the subdivision index
    Polynomial p = Polynomial::from_terms({{Rat(1), {2, 0}}, {Rat(1), {0, 2}}});
    CHECK_THROWS_AS(transform_relation(p, {{0, 1}, {1, 2}}, 4), NotAdmissible);

    CHECK(transform_relation(Polynomial::zero(), {{0, 1}, {1, 1}}, 2).is_zero());
    CHECK_THROWS_AS(transform_relation(f, {{0, 1}, {1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("a linear term blows up to the quadric surface") {
    BunchedRing ring = bunched(p2111_ring());
    ModificationSpec spec{{0, 1, 2}, {3, 1, 2}};
    ModificationResult res = modify(ring, spec);

    CHECK(res.check.status == Admissibility::Yes);
    REQUIRE(res.inserted.size() == 3);
    CHECK(res.pres.nvars() == 5);
    CHECK(res.pres.K == AbelianGroup{2, {}});
    CHECK(res.pres.relations[0] ==
          trinomial({1, 0, 0, 0, 1}, {0, 2, 0, 0, 0}, {0, 0, 1, 1, 0}));
    CHECK(same_row_lattice(degree_matrix(res.pres),
                           IntMat::from_rows({{-1, 0, -1, 1, 1}, {1, 1, 0, 2, 1}})));

    // the new fan keeps all rays and refines the subdivided cone
    Fan before = canonical_toric_ambient(ring);
    REQUIRE(res.ambient.rays.size() == before.rays.size() + 1);
    CHECK(res.ambient.rays.back() == res.inserted);
    for (const Cone& c : res.ambient.all_max_cones()) {
        bool inside = false;
        for (const Cone& o : before.all_max_cones()) inside = inside || o.contains_cone(c);
        CHECK(inside);
    }

    // substituting 1 for the new variable recovers the relation
    CHECK(drop_last_variable(res.pres.relations[0]) == ring.bunch.pres.relations[0]);

    // the result is the quadric surface of the contraction picture
    BunchedRing ring2 = bunched(res.pres);
    CHECK(ring2.bunch.covering ==
          std::vector<FaceSubset>{{0, 3}, {1, 2, 3}, {0, 1, 4}, {2, 4}});
    CHECK(picard_group(ring2).index == 3);
    IntVec mk = anticanonical(res.pres);
    CHECK(intersection_number(ring2, product_chamber(ring2), {mk, mk}) == Rat(6));
}

TEST_CASE("a combination on an existing ray inserts nothing") {
    GradedPresentation pres = free_pres(2, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    BunchedRing ring = bunched(pres);
    ModificationResult res = modify(ring, {{0, 1}, {2, 1}});
    CHECK(res.inserted.empty());
    CHECK(res.pres.nvars() == 4);
    CHECK(res.ambient.rays.size() == 4);
    CHECK(res.check.status == Admissibility::Yes);
    // the combination of opposite rays can also vanish
    CHECK_THROWS_AS(modify(ring, {{0, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("two insertions rebuild the resolved quadric grading") {
    BunchedRing dp = bunched(del_pezzo());

    // vertical insertion at the singular sink point
    ModificationResult r1 = modify(dp, {{0, 2, 3}, {2, 1, 2}});
    CHECK(r1.check.status == Admissibility::Yes);
    REQUIRE(!r1.inserted.empty());
    CHECK(r1.pres.nvars() == 6);
    CHECK(r1.pres.K == AbelianGroup{3, {}});
    // all terms carry the same center weight, so the relation stands still
    CHECK(r1.pres.relations[0] ==
          trinomial({1, 1, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0}, {0, 0, 0, 1, 1, 0}));

    // subdividing the remaining singular cone needs the new vertical ray
    BunchedRing mid = moving_chamber_ring(r1.pres);
    ModificationResult r2 = modify(mid, {{2, 5}, {1, 1}});
    CHECK(r2.pres.nvars() == 7);
    CHECK(r2.pres.K == AbelianGroup{4, {}});
    CHECK(r2.pres.relations[0] == trinomial({1, 1, 0, 0, 0, 0, 0}, {0, 0, 2, 0, 0, 0, 1},
                                            {0, 0, 0, 1, 1, 0, 0}));
    CHECK(drop_last_variable(r2.pres.relations[0]) == r1.pres.relations[0]);
    CHECK(same_row_lattice(degree_matrix(r2.pres),
                           IntMat::from_rows({{0, 1, 1, 1, 0, 0, -1},
                                              {1, 0, 1, 0, 1, 0, -1},
                                              {0, -1, 0, 0, -1, 0, -1},
                                              {0, 0, 0, -1, 1, 1, 0}})));
}

TEST_CASE("the quadric surface resolves with two insertions") {
    APData input = a2_quadric_data();
    CHECK(!kstar_smooth(input));

    ResolvedSurface res = kstar_resolve(input);
    REQUIRE(res.steps.size() == 2);
    CHECK(res.steps[0].ray == IntVec{0, 0, -1});
    CHECK(res.steps[1].ray == IntVec{1, 0, 0});

    APData want = a2_resolution_data();
    CHECK(res.data.ns == want.ns);
    CHECK(res.data.ls == want.ls);
    CHECK(res.data.m == 1);
    CHECK(res.data.d == want.d);
    CHECK(res.data.dprime == want.dprime);
    CHECK(res.data.A == want.A);
    CHECK(res.exceptional == std::vector<int>{2, 6});

    CHECK(kstar_smooth(res.data));
    CHECK(kstar_resolve(res.data).steps.empty());

    // each step only refines: previous ray columns survive
    CHECK(columns_contained(input.P(), res.steps[0].P));
    CHECK(columns_contained(res.steps[0].P, res.steps[1].P));

    CHECK(res.pres.relations[0] == trinomial({1, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 2, 0, 0, 0},
                                             {0, 0, 0, 0, 1, 1, 0}));
    CHECK(same_row_lattice(degree_matrix(res.pres),
                           IntMat::from_rows({{0, 1, -1, 1, 1, 0, 0},
                                              {1, 0, -1, 1, 0, 1, 0},
                                              {0, -1, -1, 0, 0, -1, 0},
                                              {0, 0, 0, 0, -1, 1, 1}})));

    // the two fresh curves form the expected chain
    BunchedRing ring = moving_chamber_ring(res.pres);
    ExceptionalReport rep = exceptional_report(ring, res.exceptional);
    CHECK(rep.self == std::vector<Rat>{-2, -2});
    CHECK(rep.edges == std::vector<std::array<int, 2>>{{0, 1}});
    CHECK(rep.label == "A2");

    // the resolution is crepant, so the anticanonical square persists
    IntVec mk = anticanonical(res.pres);
    CHECK(intersection_number(ring, product_chamber(ring), {mk, mk}) == Rat(6));
    CHECK(picard_group(ring).index == 1);
}

TEST_CASE("the degenerate cubic resolves to the chain of six") {
    APData input = e6_contracted_data();
    CHECK(!kstar_smooth(input));

    ResolvedSurface res = kstar_resolve(input);
    REQUIRE(res.steps.size() == 6);
    CHECK(res.steps[0].ray == IntVec{0, 0, 1});
    CHECK(res.steps[1].ray == IntVec{-2, -2, -1});
    CHECK(res.steps[2].ray == IntVec{-1, -1, 0});
    CHECK(res.steps[3].ray == IntVec{2, 0, 1});
    CHECK(res.steps[4].ray == IntVec{1, 0, 1});
    CHECK(res.steps[5].ray == IntVec{0, 1, 1});

    APData want = e6_resolution_data();
    CHECK(res.data.ns == want.ns);
    CHECK(res.data.ls == want.ls);
    CHECK(res.data.m == 1);
    CHECK(res.data.d == want.d);
    CHECK(res.data.dprime == want.dprime);
    CHECK(res.exceptional == std::vector<int>{2, 3, 5, 6, 8, 9});

    CHECK(kstar_smooth(res.data));
    CHECK(res.pres.relations[0] ==
          trinomial({1, 3, 2, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 3, 2, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 0, 0, 2, 1, 0}));
    CHECK(same_row_lattice(
        degree_matrix(res.pres),
        IntMat::from_rows({{-1, 1, -1, 0, 0, 0, 0, 0, 0, 0},
                           {1, 0, -1, 1, 0, 0, 0, 0, 0, 0},
                           {0, 1, 0, -1, 0, 1, 0, 1, 0, 0},
                           {0, 0, -1, 0, -1, 0, 1, -1, 0, 0},
                           {1, 0, 0, 0, 0, 1, -1, 0, 1, 0},
                           {-1, 0, 0, 0, -1, 1, 0, 0, -1, 0},
                           {1, 0, 0, -1, 0, 0, 0, 0, 0, 1}})));

    // six curves with square -2 in the star pattern of the cubic
    BunchedRing ring = moving_chamber_ring(res.pres);
    ExceptionalReport rep = exceptional_report(ring, res.exceptional);
    CHECK(rep.self == std::vector<Rat>(6, Rat(-2)));
    CHECK(rep.edges == std::vector<std::array<int, 2>>{{0, 1}, {1, 5}, {2, 3}, {3, 5}, {4, 5}});
    CHECK(rep.label == "E6");

    IntVec mk = anticanonical(res.pres);
    CHECK(intersection_number(ring, product_chamber(ring), {mk, mk}) == Rat(3));
    CHECK(picard_group(ring).index == 1);

    // contracting the six fresh curves maps the grading onto the weights
    std::vector<IntVec> exc;
    for (int v : res.exceptional) exc.push_back(res.pres.degrees[v]);
    QuotientResult q = quotient_group(res.pres.K, exc);
    CHECK(q.group == AbelianGroup{1, {}});
    IntVec unit = q.proj.apply(res.pres.degrees[1]);
    REQUIRE(unit.size() == 1);
    Int s = unit[0];
    CHECK((s == 1 || s == -1));
    CHECK(q.proj.apply(res.pres.degrees[0]) == IntVec{Int(3 * s)});
    CHECK(q.proj.apply(res.pres.degrees[4]) == IntVec{Int(2 * s)});
    CHECK(q.proj.apply(res.pres.degrees[7]) == IntVec{Int(3 * s)});
}

TEST_CASE("graph assembly matches the block construction") {
    OWGraph g;
    g.arms = {{1, 1}, {1, 1}, {1, 1}};
    g.b_plus = 3;
    g.b_minus = 0;
    g.has_fplus = g.has_fminus = true;

    APData ap = ow_data(g);
    CHECK(ap.r == 2);
    CHECK(ap.ns == std::vector<int>{2, 2, 2});
    CHECK(ap.ls == std::vector<std::vector<Int>>{{1, 1}, {1, 1}, {1, 1}});
    CHECK(ap.m == 2);
    CHECK(ap.d == IntMat::from_rows({{0, 1, 0, 1, 0, 1}}));
    CHECK(ap.dprime == IntMat::from_rows({{1, -1}}));
    CHECK(ap.A == std::vector<std::array<Int, 2>>{{0, 1}, {1, 0}, {1, 1}});

    GradedPresentation pres = ow_to_cox(g);
    REQUIRE(pres.relations.size() == 1);
    CHECK(pres.relations[0] ==
          Polynomial::from_terms({{Rat(1), {1, 1, 0, 0, 0, 0, 0, 0}},
                                  {Rat(1), {0, 0, 1, 1, 0, 0, 0, 0}},
                                  {Rat(-1), {0, 0, 0, 0, 1, 1, 0, 0}}}));
    CHECK(pres.K == AbelianGroup{5, {}});

    CHECK(kstar_smooth(ap));
    CHECK(kstar_resolve(ap).steps.empty());

    // curve numbers read off the graph: six (-1)-curves along the arms, the
    // fixed curves keep minus their graph labels
    BunchedRing ring = moving_chamber_ring(pres);
    CHECK(self_intersections(ring, {0, 1, 2, 3, 4, 5, 6, 7}) ==
          std::vector<Rat>{-1, -1, -1, -1, -1, -1, -3, 0});
    IntVec mk = anticanonical(pres);
    CHECK(intersection_number(ring, product_chamber(ring), {mk, mk}) == Rat(5));
    CHECK(picard_group(ring).index == 1);
    // the curve of square -3 meets the anticanonical class negatively
    CHECK(!geometry_report(ring).fano);
}

TEST_CASE("degenerate contraction graphs") {
    // two arms give a relation-free ring: both rulings of the product
    OWGraph h;
    h.arms = {{1}, {1}};
    h.has_fplus = h.has_fminus = true;
    GradedPresentation pres = ow_to_cox(h);
    CHECK(pres.relations.empty());
    CHECK(pres.nvars() == 4);
    CHECK(pres.K == AbelianGroup{2, {}});
    BunchedRing ring = moving_chamber_ring(pres);
    CHECK(self_intersections(ring, {0, 1, 2, 3}) == std::vector<Rat>{0, 0, 0, 0});

    // arms of a single curve forget their label
    OWGraph t;
    t.arms = {{2}, {2}, {2}};
    t.b_plus = 1;
    t.b_minus = 1;
    t.has_fplus = t.has_fminus = true;
    APData tp = ow_data(t);
    CHECK(tp.ls == std::vector<std::vector<Int>>{{1}, {1}, {1}});
    CHECK(tp.d == IntMat::from_rows({{-1, 0, 0}}));
    GradedPresentation tpres = ow_to_cox(t);
    REQUIRE(tpres.relations.size() == 1);
    CHECK(tpres.relations[0] ==
          Polynomial::from_terms({{Rat(1), {1, 0, 0, 0, 0}},
                                  {Rat(1), {0, 1, 0, 0, 0}},
                                  {Rat(-1), {0, 0, 1, 0, 0}}}));

    // rejected graphs
    OWGraph bad;
    bad.arms = {{1, 1}, {1, 1}};
    bad.has_fminus = true;
    CHECK_THROWS_AS(ow_data(bad), std::invalid_argument);
    OWGraph single;
    single.arms = {{2, 2}};
    single.has_fplus = single.has_fminus = true;
    CHECK_THROWS_AS(ow_data(single), std::invalid_argument);
    OWGraph empty_arm;
    empty_arm.arms = {{1, 1}, {}};
    empty_arm.has_fplus = empty_arm.has_fminus = true;
    CHECK_THROWS_AS(ow_data(empty_arm), std::invalid_argument);
    OWGraph collapse;
    collapse.arms = {{1, 1, 1}, {1}};
    collapse.has_fplus = collapse.has_fminus = true;
    CHECK_THROWS_AS(ow_data(collapse), std::invalid_argument);
    OWGraph zero_label;
    zero_label.arms = {{0}, {1}};
    zero_label.has_fplus = zero_label.has_fminus = true;
    CHECK_THROWS_AS(ow_data(zero_label), std::invalid_argument);
}

TEST_CASE("multi-relation rings refuse ambient insertions") {
    OWGraph g;
    g.arms = {{1}, {1}, {1}, {1}};
    g.has_fplus = g.has_fminus = true;
    GradedPresentation pres = ow_to_cox(g);
    REQUIRE(pres.relations.size() == 2);
    BunchedRing ring = moving_chamber_ring(pres);
    CHECK_THROWS_AS(modify(ring, {{0, 1}, {1, 1}}), UnsupportedRing);
}

TEST_CASE("dynkin patterns are recognized") {
    CHECK(ade_match(0, {}) == "");
    CHECK(ade_match(1, {}) == "A1");
    CHECK(ade_match(2, {}) == "A1+A1");
    CHECK(ade_match(3, {{0, 1}, {1, 2}}) == "A3");
    CHECK(ade_match(4, {{0, 1}, {0, 2}, {0, 3}}) == "D4");
    CHECK(ade_match(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}) == "D5");
    CHECK(ade_match(6, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}}) == "E6");
    CHECK(ade_match(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}) == "E7");
    CHECK(ade_match(8, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}}) == "E8");
    // mixed components sort by letter and size
    CHECK(ade_match(5, {{3, 4}, {0, 1}, {1, 2}}) == "A2+A3");
    // arms (1,3,3) match no exceptional star
    CHECK(ade_match(8, {{0, 1}, {0, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}}) ==
          "unrecognized");
    CHECK(ade_match(3, {{0, 1}, {1, 2}, {0, 2}}) == "unrecognized");
    CHECK(ade_match(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}) == "unrecognized");
    CHECK(ade_match(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}}) == "unrecognized");
    CHECK(ade_match(4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}}) == "unrecognized");
    CHECK_THROWS_AS(ade_match(2, {{0, 5}}), std::invalid_argument);
}
