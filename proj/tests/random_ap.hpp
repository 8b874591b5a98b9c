#pragma once
#include <algorithm>
#include <random>

#include "coxcalc/presentation.hpp"

// Random valid complexity-one input data, small enough for exhaustive face
// checks: r in {2,3}, n+m <= 7. Rejection sampling against APData::validate,
// since primitivity and the spanning condition depend on the sampled rows.
inline coxcalc::APData random_ap(std::mt19937& rng) {
    using namespace coxcalc;
    std::uniform_int_distribution<int> coin(0, 1);
    const std::vector<std::array<Int, 2>> pool = {
        {1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {-1, 2}, {3, 1}};
    for (int attempt = 0;; ++attempt) {
        if (attempt > 2000) throw std::runtime_error("random_ap: rejection sampling stalled");
        APData ap;
        ap.r = 2 + coin(rng);
        int budget = 7;
        ap.ns.assign(ap.r + 1, 1);
        ap.m = 0;
        int spare = budget - (ap.r + 1);
        while (spare > 0 && coin(rng)) {
            int i = std::uniform_int_distribution<int>(0, ap.r + 1)(rng);
            if (i <= ap.r)
                ++ap.ns[i];
            else
                ++ap.m;
            --spare;
        }
        int n = 0;
        ap.ls.clear();
        for (int i = 0; i <= ap.r; ++i) {
            std::vector<Int> l(ap.ns[i]);
            for (auto& x : l) x = 1 + std::uniform_int_distribution<int>(0, 2)(rng);
            ap.ls.push_back(l);
            n += ap.ns[i];
        }
        int smax = n + ap.m - ap.r - 1;
        if (smax < 1) continue;
        ap.s = 1 + std::uniform_int_distribution<int>(0, smax - 1)(rng);
        std::vector<int> pick(pool.size());
        for (size_t i = 0; i < pick.size(); ++i) pick[i] = int(i);
        std::shuffle(pick.begin(), pick.end(), rng);
        ap.A.clear();
        for (int i = 0; i <= ap.r; ++i) ap.A.push_back(pool[pick[i]]);
        std::uniform_int_distribution<int> entry(-3, 3);
        ap.d = IntMat(ap.s, n);
        for (int i = 0; i < ap.s; ++i)
            for (int j = 0; j < n; ++j) ap.d.at(i, j) = entry(rng);
        ap.dprime = IntMat(ap.s, ap.m);
        for (int i = 0; i < ap.s; ++i)
            for (int j = 0; j < ap.m; ++j) ap.dprime.at(i, j) = entry(rng);
        try {
            ap.validate();
        } catch (const std::invalid_argument&) {
            continue;
        }
        return ap;
    }
}
