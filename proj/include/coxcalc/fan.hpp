#pragma once
#include "coxcalc/cone.hpp"

namespace coxcalc {

// Collection of cones closed under taking faces, any two members meeting in a
// common face. Members need not be pointed.
struct Quasifan {
    std::vector<Cone> cones;  // sorted, deduplicated

    bool contains(const Cone& c) const;
    std::vector<Cone> maximal() const;
};

struct QuasifanCheck {
    bool ok = false;
    std::string reason;  // empty when ok; else "empty_collection", "face_closure", "pair_condition"
    int first = -1, second = -1;  // offending indices for pair_condition
    Quasifan fan;
};

// Checks the two quasifan conditions on the given cones as-is.
QuasifanCheck validate_quasifan(const std::vector<Cone>& cones);

// Closes the collection under faces, then validates.
QuasifanCheck make_quasifan(const std::vector<Cone>& cones);

// Fan stored by shared ray list plus maximal cones as ray index sets.
struct Fan {
    int ambient = 0;
    std::vector<IntVec> rays;                 // primitive
    std::vector<std::vector<int>> max_cones;  // sorted index lists

    static Fan from_cones(int ambient, const std::vector<Cone>& maximal);

    Cone cone_at(int i) const;
    std::vector<Cone> all_max_cones() const;
    bool supports(const IntVec& v) const;  // v in the union of the cones
    int ray_index(const IntVec& v) const;  // -1 if absent
};

// All maximal cones pointed and any two meeting in a common face.
bool validate_fan(const Fan& f, std::string* why = nullptr);

bool fans_equal(const Fan& a, const Fan& b);

// Refine the fan at the ray through v: every cone containing v is replaced by
// the joins of v with its facets not containing v. v must lie in the support.
Fan stellar_subdivision(const Fan& f, const IntVec& v);

}  // namespace coxcalc
