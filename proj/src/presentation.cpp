#include "coxcalc/presentation.hpp"

#include <numeric>

#include "coxcalc/cone.hpp"
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxcalc {

IntVec GradedPresentation::free_degree(int i) const {
    IntVec w(K.rank);
    for (int j = 0; j < K.rank; ++j) w[j] = degrees[i][j];
    return w;
}

void GradedPresentation::validate() const {
    if (int(degrees.size()) != nvars()) throw std::invalid_argument("one degree per variable required");
    for (const auto& w : degrees)
        if (int(w.size()) != K.dims()) throw std::invalid_argument("degree length mismatch");
    for (const auto& rel : relations) {
        if (!rel.is_zero() && rel.nvars() != nvars())
            throw std::invalid_argument("relation variable count mismatch");
        if (!is_homogeneous(rel, *this)) throw std::invalid_argument("relation not homogeneous");
    }
}

namespace {

IntVec term_degree(const Term& t, const GradedPresentation& pres) {
    IntVec d(pres.K.dims());
    for (size_t i = 0; i < t.e.size(); ++i)
        for (int j = 0; j < pres.K.dims(); ++j) d[j] += t.e[i] * pres.degrees[i][j];
    return pres.K.normalize(d);
}

}  // namespace

IntVec degree_of(const Polynomial& p, const GradedPresentation& pres) {
    if (p.is_zero()) return IntVec(pres.K.dims());
    IntVec d = term_degree(p.terms[0], pres);
    for (size_t t = 1; t < p.terms.size(); ++t)
        if (term_degree(p.terms[t], pres) != d)
            throw std::invalid_argument("polynomial not homogeneous");
    return d;
}

bool is_homogeneous(const Polynomial& p, const GradedPresentation& pres) {
    if (p.is_zero()) return true;
    IntVec d = term_degree(p.terms[0], pres);
    for (size_t t = 1; t < p.terms.size(); ++t)
        if (term_degree(p.terms[t], pres) != d) return false;
    return true;
}

std::vector<IntVec> relation_degrees(const GradedPresentation& pres) {
    std::vector<IntVec> out;
    for (const auto& rel : pres.relations) out.push_back(degree_of(rel, pres));
    return out;
}

int APData::n() const {
    int t = 0;
    for (int ni : ns) t += ni;
    return t;
}

IntMat APData::P() const {
    const int N = n();
    IntMat M(r + s, N + m);
    std::vector<int> start(ns.size());
    for (size_t i = 1; i < ns.size(); ++i) start[i] = start[i - 1] + ns[i - 1];
    for (int i = 1; i <= r; ++i) {
        for (int j = 0; j < ns[0]; ++j) M.at(i - 1, start[0] + j) = -ls[0][j];
        for (int j = 0; j < ns[i]; ++j) M.at(i - 1, start[i] + j) = ls[i][j];
    }
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < N; ++j) M.at(r + i, j) = d.at(i, j);
        for (int j = 0; j < m; ++j) M.at(r + i, N + j) = dprime.at(i, j);
    }
    return M;
}

void APData::validate() const {
    if (r < 1) throw std::invalid_argument("at least two blocks required");
    if (int(ns.size()) != r + 1 || int(ls.size()) != r + 1)
        throw std::invalid_argument("block count mismatch");
    for (int i = 0; i <= r; ++i) {
        if (ns[i] < 1) throw std::invalid_argument("empty block");
        if (int(ls[i].size()) != ns[i]) throw std::invalid_argument("exponent count mismatch");
        for (const auto& l : ls[i])
            if (l < 1) throw std::invalid_argument("exponents must be positive");
    }
    if (m < 0) throw std::invalid_argument("negative free variable count");
    const int N = n();
    if (s < 1 || s >= N + m - r) throw std::invalid_argument("row count s out of range");
    if (int(A.size()) != r + 1) throw std::invalid_argument("one point per block required");
    for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (A[i][0] * A[j][1] - A[i][1] * A[j][0] == 0)
                throw std::invalid_argument("points not pairwise independent");
    if (d.rows != s || d.cols != N) throw std::invalid_argument("d shape mismatch");
    if (m > 0 && (dprime.rows != s || dprime.cols != m))
        throw std::invalid_argument("dprime shape mismatch");
    IntMat M = P();
    std::set<IntVec> cols;
    for (int j = 0; j < M.cols; ++j) {
        IntVec c = M.col(j);
        if (vec_gcd(c) != 1) throw std::invalid_argument("ray matrix column not primitive");
        if (!cols.insert(c).second) throw std::invalid_argument("ray matrix columns not distinct");
    }
    Cone hull = Cone::from_rays(r + s, {cols.begin(), cols.end()});
    if (hull.lineality_dim() != r + s)
        throw std::invalid_argument("ray matrix columns do not span the space as a cone");
}

std::vector<std::string> APData::var_names() const {
    std::vector<std::string> names;
    for (int i = 0; i <= r; ++i)
        for (int j = 1; j <= ns[i]; ++j) {
            std::ostringstream os;
            os << "T" << i << j;
            names.push_back(os.str());
        }
    for (int k = 1; k <= m; ++k) {
        std::ostringstream os;
        os << "S" << k;
        names.push_back(os.str());
    }
    return names;
}

std::vector<Polynomial> chain_relations(const std::vector<std::array<Int, 2>>& A,
                                        const std::vector<std::vector<Int>>& ls, int m) {
    const int r = int(A.size()) - 1;
    for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            if (A[i][0] * A[j][1] - A[i][1] * A[j][0] == 0)
                throw std::invalid_argument("points not pairwise independent");
    int nvars = 0;
    std::vector<int> start(r + 1);
    for (int i = 0; i <= r; ++i) {
        start[i] = nvars;
        nvars += int(ls[i].size());
    }
    const int total = nvars + m;
    auto block_monomial = [&](int i) {
        std::vector<Int> e(total);
        for (size_t j = 0; j < ls[i].size(); ++j) e[start[i] + int(j)] = ls[i][j];
        return e;
    };
    auto det = [&](int u, int v) -> Int { return A[u][0] * A[v][1] - A[u][1] * A[v][0]; };
    std::vector<Polynomial> rels;
    for (int t = 0; t + 2 <= r; ++t) {
        int i = t, j = t + 1, k = t + 2;
        std::vector<Term> ts = {{Rat(det(j, k)), block_monomial(i)},
                                {Rat(det(k, i)), block_monomial(j)},
                                {Rat(det(i, j)), block_monomial(k)}};
        rels.push_back(Polynomial::from_terms(std::move(ts)));
    }
    return rels;
}

GradedPresentation build_rap(const APData& ap) {
    ap.validate();
    GradedPresentation pres;
    pres.vars = ap.var_names();
    CokernelResult ck = cokernel(ap.P().transpose());
    pres.K = ck.group;
    for (int j = 0; j < ap.n() + ap.m; ++j) pres.degrees.push_back(ck.proj.matrix.col(j));
    pres.relations = chain_relations(ap.A, ap.ls, ap.m);
    pres.validate();
    auto rds = relation_degrees(pres);
    for (size_t i = 1; i < rds.size(); ++i)
        if (rds[i] != rds[0]) throw std::logic_error("chain relations of unequal degree");
    return pres;
}

GradedPresentation cox_ring_complexity_one(const std::vector<std::array<Int, 2>>& A,
                                           const std::vector<std::vector<Int>>& ls, int m) {
    if (A.size() != ls.size()) throw std::invalid_argument("one exponent tuple per point required");
    GradedPresentation pres;
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = 1; j <= ls[i].size(); ++j) {
            std::ostringstream os;
            os << "T" << i << j;
            pres.vars.push_back(os.str());
        }
    for (int k = 1; k <= m; ++k) {
        std::ostringstream os;
        os << "S" << k;
        pres.vars.push_back(os.str());
    }
    pres.K = AbelianGroup{};
    pres.degrees.assign(pres.vars.size(), IntVec{});
    pres.relations = chain_relations(A, ls, m);
    pres.validate();
    return pres;
}

bool is_sincere(const APData& ap) {
    if (ap.r < 2) return false;
    for (int i = 0; i <= ap.r; ++i)
        if (ap.ns[i] == 1 && ap.ls[i][0] == 1) return false;
    return true;
}

bool is_ufd(const APData& ap) {
    std::vector<Int> g(ap.r + 1);
    for (int i = 0; i <= ap.r; ++i) g[i] = vec_gcd(ap.ls[i]);
    for (int i = 0; i <= ap.r; ++i)
        for (int j = i + 1; j <= ap.r; ++j) {
            Int gg;
            mpz_gcd(gg.get_mpz_t(), g[i].get_mpz_t(), g[j].get_mpz_t());
            if (gg != 1) return false;
        }
    return true;
}

bool is_almost_free(const GradedPresentation& pres) {
    for (int drop = 0; drop < pres.nvars(); ++drop) {
        std::vector<IntVec> rest;
        for (int i = 0; i < pres.nvars(); ++i)
            if (i != drop) rest.push_back(pres.degrees[i]);
        if (!generates(pres.K, rest)) return false;
    }
    return true;
}

std::vector<Int> ow_isotropy_orders(const std::vector<Int>& labels) {
    for (const auto& b : labels)
        if (b < 1) throw std::invalid_argument("labels must be positive");
    std::vector<Int> p(labels.size() + 1);
    p[0] = 1;
    for (size_t j = 1; j < p.size(); ++j)
        p[j] = j == 1 ? labels[0] : labels[j - 1] * p[j - 1] - p[j - 2];
    return p;
}

}  // namespace coxcalc
