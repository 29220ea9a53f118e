#pragma once

#include "homcat/module.hpp"

namespace homcat::testing {

// R/(x^s) over R = F_p[x]/(x^n), basis 1, x, ..., x^{s-1}; written out by hand.
inline Module cyclic(const AlgebraPtr &r, std::size_t s) {
    const std::size_t n = r->dim();
    std::vector<Mat> acts;
    for (std::size_t i = 0; i < n; ++i) {
        Mat a(s, s, r->p());
        for (std::size_t j = 0; j + i < s; ++j) a.at(j + i, j) = 1;
        acts.push_back(a);
    }
    return Module(r, acts);
}

// Residue field of a local preset whose basis starts with 1 and continues with radical elements.
inline Module residue(const AlgebraPtr &r) {
    std::vector<Mat> acts(r->dim(), Mat(1, 1, r->p()));
    acts[0].at(0, 0) = 1;
    return Module(r, acts);
}

inline Module strip_projectives(const Module &m) {
    std::vector<Module> keep;
    for (auto &x : m.decomposition().summands)
        if (!is_projective(x)) keep.push_back(x);
    return direct_sum(keep, m.algebra());
}

} // namespace homcat::testing
