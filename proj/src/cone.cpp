#include "coxcalc/cone.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace coxcalc {

namespace {

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMat rows_matrix(int cols, const std::vector<IntVec>& rows) {
    IntMat M(int(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) M.at(int(i), j) = rows[i][j];
    return M;
}

std::vector<IntVec> matrix_rows(const IntMat& M) {
    std::vector<IntVec> out;
    for (int i = 0; i < M.rows; ++i) out.push_back(M.row(i));
    return out;
}

// Incremental double description: V-representation of {x : a.x >= 0 for all a}.
struct VDesc {
    std::vector<IntVec> rays, lines;
};

VDesc dd_vrep(int ambient, const std::vector<IntVec>& cons_in) {
    std::vector<IntVec> cons;
    for (const auto& a : cons_in) {
        bool zero = true;
        for (const auto& x : a) zero = zero && x == 0;
        if (!zero) cons.push_back(a);
    }
    const int m = int(cons.size());
    const int words = std::max(1, (m + 63) / 64);
    struct Ray {
        IntVec v;
        std::vector<uint64_t> Z;  // bit set = constraint tight at v
    };
    auto set_bit = [](std::vector<uint64_t>& Z, int k) { Z[k / 64] |= uint64_t(1) << (k % 64); };
    auto subset = [words](const std::vector<uint64_t>& A, const std::vector<uint64_t>& B,
                          const std::vector<uint64_t>& C) {
        // (A & B) subset of C
        for (int w = 0; w < words; ++w)
            if ((A[w] & B[w]) & ~C[w]) return false;
        return true;
    };

    std::vector<Ray> rays;
    std::vector<IntVec> lines;
    for (int i = 0; i < ambient; ++i) {
        IntVec e(ambient);
        e[i] = 1;
        lines.push_back(e);
    }

    for (int k = 0; k < m; ++k) {
        const IntVec& a = cons[k];
        int li = -1;
        Int c;
        for (size_t i = 0; i < lines.size(); ++i) {
            Int d = dot(a, lines[i]);
            if (d != 0) {
                li = int(i);
                c = d;
                break;
            }
        }
        if (li >= 0) {
            // a line leaves the halfspace: split it into a boundary ray
            IntVec L0 = lines[li];
            if (c < 0) {
                for (auto& x : L0) x = -x;
                c = -c;
            }
            std::vector<IntVec> nl;
            for (size_t j = 0; j < lines.size(); ++j) {
                if (int(j) == li) continue;
                Int d = dot(a, lines[j]);
                IntVec w(ambient);
                for (int t = 0; t < ambient; ++t) w[t] = c * lines[j][t] - d * L0[t];
                make_primitive(w);
                nl.push_back(w);
            }
            for (auto& r : rays) {
                Int d = dot(a, r.v);
                if (d != 0) {
                    for (int t = 0; t < ambient; ++t) r.v[t] = c * r.v[t] - d * L0[t];
                    make_primitive(r.v);
                }
                set_bit(r.Z, k);
            }
            Ray nr;
            nr.v = primitive_of(L0);
            nr.Z.assign(words, 0);
            for (int j = 0; j < k; ++j) set_bit(nr.Z, j);
            rays.push_back(std::move(nr));
            lines.swap(nl);
            continue;
        }

        std::vector<Int> s(rays.size());
        bool has_neg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            s[i] = dot(a, rays[i].v);
            has_neg = has_neg || s[i] < 0;
        }
        if (!has_neg) {
            for (size_t i = 0; i < rays.size(); ++i)
                if (s[i] == 0) set_bit(rays[i].Z, k);
            continue;
        }
        std::vector<Ray> next;
        std::set<IntVec> seen;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (s[i] < 0) continue;
            Ray r = rays[i];
            if (s[i] == 0) set_bit(r.Z, k);
            if (seen.insert(r.v).second) next.push_back(std::move(r));
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (s[p] <= 0) continue;
            for (size_t n = 0; n < rays.size(); ++n) {
                if (s[n] >= 0) continue;
                bool adjacent = true;
                for (size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != n && subset(rays[p].Z, rays[n].Z, rays[o].Z)) adjacent = false;
                if (!adjacent) continue;
                Ray w;
                w.v.assign(ambient, 0);
                for (int t = 0; t < ambient; ++t) w.v[t] = s[p] * rays[n].v[t] - s[n] * rays[p].v[t];
                make_primitive(w.v);
                w.Z.assign(words, 0);
                for (int t = 0; t < words; ++t) w.Z[t] = rays[p].Z[t] & rays[n].Z[t];
                set_bit(w.Z, k);
                if (seen.insert(w.v).second) next.push_back(std::move(w));
            }
        }
        rays.swap(next);
    }

    VDesc out;
    for (auto& r : rays) out.rays.push_back(std::move(r.v));
    out.lines = std::move(lines);
    return out;
}

std::vector<IntVec> with_negatives(const std::vector<IntVec>& vs) {
    std::vector<IntVec> out;
    for (const auto& v : vs) {
        out.push_back(v);
        IntVec n = v;
        for (auto& x : n) x = -x;
        out.push_back(std::move(n));
    }
    return out;
}

std::vector<IntVec> concat(std::vector<IntVec> a, const std::vector<IntVec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Canonical (reduced against the span rows, primitive, sorted) list of
// generators from a raw double-description output.
std::vector<IntVec> canon_generators(const std::vector<IntVec>& raw,
                                     const std::vector<IntVec>& span_rows) {
    std::set<IntVec> acc;
    for (const auto& r : raw) {
        IntVec v = reduce_mod_rows(r, span_rows);
        bool zero = true;
        for (const auto& x : v) zero = zero && x == 0;
        if (!zero) acc.insert(v);
    }
    return {acc.begin(), acc.end()};
}

}  // namespace

IntVec reduce_mod_rows(IntVec v, const std::vector<IntVec>& echelon_rows) {
    for (const auto& h : echelon_rows) {
        int c = -1;
        for (size_t j = 0; j < h.size(); ++j)
            if (h[j] != 0) {
                c = int(j);
                break;
            }
        if (c < 0 || v[c] == 0) continue;
        Int piv = h[c], val = v[c];
        for (size_t j = 0; j < v.size(); ++j) v[j] = piv * v[j] - val * h[j];
    }
    make_primitive(v);
    return v;
}

std::vector<IntVec> subspace_basis(int ambient, const std::vector<IntVec>& vecs) {
    if (vecs.empty()) return {};
    IntMat M = rows_matrix(ambient, vecs);
    IntMat ann = right_kernel(M);
    if (ann.rows == 0) return matrix_rows(hnf_rows(IntMat::identity(ambient)));
    return matrix_rows(hnf_rows(right_kernel(ann)));
}

Cone Cone::from_rays_and_lines(int ambient, const std::vector<IntVec>& gens,
                               const std::vector<IntVec>& lines) {
    for (const auto& v : gens)
        if (int(v.size()) != ambient) throw std::invalid_argument("ray length");
    for (const auto& v : lines)
        if (int(v.size()) != ambient) throw std::invalid_argument("line length");
    Cone c;
    c.ambient = ambient;
    VDesc dualside = dd_vrep(ambient, concat(with_negatives(lines), gens));
    c.equations = subspace_basis(ambient, dualside.lines);
    c.facets = canon_generators(dualside.rays, c.equations);
    VDesc primal = dd_vrep(ambient, concat(with_negatives(c.equations), c.facets));
    c.lineality = subspace_basis(ambient, primal.lines);
    c.rays = canon_generators(primal.rays, c.lineality);
    return c;
}

Cone Cone::from_rays(int ambient, const std::vector<IntVec>& gens) {
    return from_rays_and_lines(ambient, gens, {});
}

Cone Cone::from_inequalities(int ambient, const std::vector<IntVec>& ineqs,
                             const std::vector<IntVec>& eqs) {
    for (const auto& v : ineqs)
        if (int(v.size()) != ambient) throw std::invalid_argument("inequality length");
    Cone c;
    c.ambient = ambient;
    VDesc primal = dd_vrep(ambient, concat(with_negatives(eqs), ineqs));
    c.lineality = subspace_basis(ambient, primal.lines);
    c.rays = canon_generators(primal.rays, c.lineality);
    VDesc dualside = dd_vrep(ambient, concat(with_negatives(c.lineality), c.rays));
    c.equations = subspace_basis(ambient, dualside.lines);
    c.facets = canon_generators(dualside.rays, c.equations);
    return c;
}

Cone Cone::zero(int ambient) { return from_rays(ambient, {}); }

Cone Cone::full_space(int ambient) { return from_inequalities(ambient, {}, {}); }

Cone Cone::positive_orthant(int ambient) {
    std::vector<IntVec> gens;
    for (int i = 0; i < ambient; ++i) {
        IntVec e(ambient);
        e[i] = 1;
        gens.push_back(e);
    }
    return from_rays(ambient, gens);
}

bool Cone::contains(const IntVec& v) const {
    for (const auto& e : equations)
        if (dot(e, v) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, v) < 0) return false;
    return true;
}

bool Cone::contains_in_relative_interior(const IntVec& v) const {
    for (const auto& e : equations)
        if (dot(e, v) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, v) <= 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    for (const auto& r : other.rays)
        if (!contains(r)) return false;
    for (const auto& l : other.lineality) {
        if (!contains(l)) return false;
        IntVec n = l;
        for (auto& x : n) x = -x;
        if (!contains(n)) return false;
    }
    return true;
}

bool Cone::operator==(const Cone& o) const {
    return ambient == o.ambient && equations == o.equations && facets == o.facets;
}

bool Cone::operator<(const Cone& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (equations != o.equations) return equations < o.equations;
    return facets < o.facets;
}

IntVec Cone::interior_point() const {
    IntVec p(ambient);
    for (const auto& r : rays)
        for (int i = 0; i < ambient; ++i) p[i] += r[i];
    return p;
}

std::string Cone::to_string() const {
    std::ostringstream os;
    os << "cone(";
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i) os << ", ";
        os << "(";
        for (size_t j = 0; j < rays[i].size(); ++j) os << (j ? "," : "") << rays[i][j].get_str();
        os << ")";
    }
    os << ")";
    if (!lineality.empty()) os << "+lines[" << lineality.size() << "]";
    return os.str();
}

Cone dual(const Cone& c) {
    Cone d;
    d.ambient = c.ambient;
    d.rays = c.facets;
    d.lineality = c.equations;
    d.facets = c.rays;
    d.equations = c.lineality;
    return d;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
    return Cone::from_inequalities(a.ambient, concat(a.facets, b.facets),
                                   concat(a.equations, b.equations));
}

Cone sum(const Cone& a, const Cone& b) {
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
    return Cone::from_rays_and_lines(a.ambient, concat(a.rays, b.rays),
                                     concat(a.lineality, b.lineality));
}

std::vector<Cone> faces(const Cone& c) {
    // every face is cut out by turning a subset of facet inequalities into
    // equations; breadth-first over subsets with dedup by canonical form
    std::set<Cone> out;
    std::set<std::vector<int>> visited;
    std::queue<std::vector<int>> work;
    work.push({});
    visited.insert({});
    while (!work.empty()) {
        std::vector<int> S = work.front();
        work.pop();
        std::vector<IntVec> eqs = c.equations;
        for (int i : S) eqs.push_back(c.facets[i]);
        Cone f = Cone::from_inequalities(c.ambient, c.facets, eqs);
        out.insert(f);
        for (int i = 0; i < int(c.facets.size()); ++i) {
            if (std::find(S.begin(), S.end(), i) != S.end()) continue;
            std::vector<int> T = S;
            T.push_back(i);
            std::sort(T.begin(), T.end());
            if (visited.insert(T).second) work.push(T);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<Cone> facets_of(const Cone& c) {
    std::set<Cone> out;
    for (const auto& u : c.facets) {
        std::vector<IntVec> eqs = c.equations;
        eqs.push_back(u);
        out.insert(Cone::from_inequalities(c.ambient, c.facets, eqs));
    }
    return {out.begin(), out.end()};
}

bool interiors_overlap(const Cone& a, const Cone& b) {
    // If the relative interiors meet at all, they meet at every relative
    // interior point of the intersection, so testing one sample suffices.
    if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
    IntVec p = intersect(a, b).interior_point();
    return a.contains_in_relative_interior(p) && b.contains_in_relative_interior(p);
}

bool is_face_of(const Cone& f, const Cone& c) {
    if (f.ambient != c.ambient) return false;
    if (!c.contains_cone(f)) return false;
    std::vector<IntVec> eqs = c.equations;
    for (const auto& u : c.facets) {
        bool tight = true;
        for (const auto& r : f.rays) tight = tight && dot(u, r) == 0;
        for (const auto& l : f.lineality) tight = tight && dot(u, l) == 0;
        if (tight) eqs.push_back(u);
    }
    return Cone::from_inequalities(c.ambient, c.facets, eqs) == f;
}

}  // namespace coxcalc
