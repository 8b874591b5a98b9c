#include "coxcalc/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxcalc {

bool Quasifan::contains(const Cone& c) const {
    return std::binary_search(cones.begin(), cones.end(), c);
}

std::vector<Cone> Quasifan::maximal() const {
    std::vector<Cone> out;
    for (const auto& c : cones) {
        bool top = true;
        for (const auto& d : cones)
            if (!(d == c) && d.contains_cone(c)) {
                top = false;
                break;
            }
        if (top) out.push_back(c);
    }
    return out;
}

QuasifanCheck validate_quasifan(const std::vector<Cone>& cones) {
    QuasifanCheck res;
    if (cones.empty()) {
        res.reason = "empty_collection";
        return res;
    }
    std::set<Cone> members(cones.begin(), cones.end());
    for (size_t i = 0; i < cones.size(); ++i)
        for (const auto& f : faces(cones[i]))
            if (!members.count(f)) {
                res.reason = "face_closure";
                res.first = int(i);
                return res;
            }
    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = i + 1; j < cones.size(); ++j) {
            Cone c = intersect(cones[i], cones[j]);
            if (!is_face_of(c, cones[i]) || !is_face_of(c, cones[j])) {
                res.reason = "pair_condition";
                res.first = int(i);
                res.second = int(j);
                return res;
            }
        }
    res.ok = true;
    res.fan.cones.assign(members.begin(), members.end());
    return res;
}

QuasifanCheck make_quasifan(const std::vector<Cone>& cones) {
    std::set<Cone> closed;
    for (const auto& c : cones)
        for (const auto& f : faces(c)) closed.insert(f);
    return validate_quasifan({closed.begin(), closed.end()});
}

Fan Fan::from_cones(int ambient, const std::vector<Cone>& maximal) {
    Fan f;
    f.ambient = ambient;
    for (const auto& c : maximal) {
        if (!c.is_pointed()) throw std::invalid_argument("fan cone not pointed");
        std::vector<int> idx;
        for (const auto& r : c.rays) {
            int i = f.ray_index(r);
            if (i < 0) {
                i = int(f.rays.size());
                f.rays.push_back(r);
            }
            idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        f.max_cones.push_back(idx);
    }
    return f;
}

Cone Fan::cone_at(int i) const {
    std::vector<IntVec> gens;
    for (int r : max_cones[i]) gens.push_back(rays[r]);
    return Cone::from_rays(ambient, gens);
}

std::vector<Cone> Fan::all_max_cones() const {
    std::vector<Cone> out;
    for (size_t i = 0; i < max_cones.size(); ++i) out.push_back(cone_at(int(i)));
    return out;
}

bool Fan::supports(const IntVec& v) const {
    for (size_t i = 0; i < max_cones.size(); ++i)
        if (cone_at(int(i)).contains(v)) return true;
    return false;
}

int Fan::ray_index(const IntVec& v) const {
    IntVec p = primitive_of(v);
    for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == p) return int(i);
    return -1;
}

bool validate_fan(const Fan& f, std::string* why) {
    auto cones = f.all_max_cones();
    for (size_t i = 0; i < cones.size(); ++i) {
        if (!cones[i].is_pointed()) {
            if (why) *why = "cone " + std::to_string(i) + " not pointed";
            return false;
        }
        for (size_t j = i + 1; j < cones.size(); ++j) {
            Cone c = intersect(cones[i], cones[j]);
            if (!is_face_of(c, cones[i]) || !is_face_of(c, cones[j])) {
                if (why)
                    *why = "cones " + std::to_string(i) + "," + std::to_string(j) +
                           " do not meet in a common face";
                return false;
            }
        }
    }
    return true;
}

bool fans_equal(const Fan& a, const Fan& b) {
    if (a.ambient != b.ambient) return false;
    auto ca = a.all_max_cones(), cb = b.all_max_cones();
    std::set<Cone> sa(ca.begin(), ca.end()), sb(cb.begin(), cb.end());
    return sa == sb;
}

Fan stellar_subdivision(const Fan& f, const IntVec& v) {
    IntVec p = primitive_of(v);
    bool zero = true;
    for (const auto& x : p) zero = zero && x == 0;
    if (zero) throw std::invalid_argument("subdivision vector is zero");
    if (!f.supports(p)) throw std::invalid_argument("subdivision ray outside the support");
    std::vector<Cone> out;
    std::set<Cone> seen;
    auto push = [&](const Cone& c) {
        if (seen.insert(c).second) out.push_back(c);
    };
    for (size_t i = 0; i < f.max_cones.size(); ++i) {
        Cone sigma = f.cone_at(int(i));
        if (!sigma.contains(p)) {
            push(sigma);
            continue;
        }
        for (const auto& fc : facets_of(sigma)) {
            if (fc.contains(p)) continue;
            std::vector<IntVec> gens = fc.rays;
            gens.push_back(p);
            push(Cone::from_rays(f.ambient, gens));
        }
    }
    // keep the original ray order, appending the new ray if genuinely new
    Fan g;
    g.ambient = f.ambient;
    g.rays = f.rays;
    if (g.ray_index(p) < 0) g.rays.push_back(p);
    for (const auto& c : out) {
        std::vector<int> idx;
        for (const auto& r : c.rays) {
            int ri = g.ray_index(r);
            if (ri < 0) {
                ri = int(g.rays.size());
                g.rays.push_back(r);
            }
            idx.push_back(ri);
        }
        std::sort(idx.begin(), idx.end());
        g.max_cones.push_back(idx);
    }
    // drop rays no longer used by any cone
    std::vector<bool> used(g.rays.size(), false);
    for (const auto& mc : g.max_cones)
        for (int r : mc) used[r] = true;
    std::vector<int> remap(g.rays.size(), -1);
    std::vector<IntVec> kept;
    for (size_t i = 0; i < g.rays.size(); ++i)
        if (used[i]) {
            remap[i] = int(kept.size());
            kept.push_back(g.rays[i]);
        }
    g.rays = kept;
    for (auto& mc : g.max_cones) {
        for (int& r : mc) r = remap[r];
        std::sort(mc.begin(), mc.end());
    }
    return g;
}

}  // namespace coxcalc
