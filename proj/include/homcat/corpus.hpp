#pragma once

#include "homcat/morph.hpp"

#include <cstdint>
#include <vector>

namespace homcat {

struct CorpusOptions {
    std::size_t max_dim_r = 12;      // R-modules
    std::size_t max_dim_lambda = 24; // objects, dim A + dim B
    std::uint64_t seed = 0;
    std::size_t random_maps = 2; // seeded random maps per pair of modules
    std::size_t max_indecomposables = 64;
    std::size_t target_monos = 48;   // direct sums of monos are added until this many monos exist
    std::size_t target_objects = 72; // then sums of arbitrary indecomposables
    std::size_t rounds = 3;
};

// Indecomposable R-modules up to isomorphism: R, its residue field, cyclic quotients and the
// radical, closed under syzygy, transpose, translates and duals where these are defined.
std::vector<Module> module_corpus(const AlgebraPtr &r, const CorpusOptions &o = {});

struct ObjectCorpus {
    std::vector<MorphObject> indecomposables;
    std::vector<MorphObject> objects; // indecomposables first, then direct sums
    std::size_t mono_count() const;
};
ObjectCorpus object_corpus(const AlgebraPtr &r, const CorpusOptions &o = {});

// Appends x unless an isomorphic module is already present.
bool add_unique(std::vector<Module> &set, const Module &x);
bool add_unique(std::vector<MorphObject> &set, const MorphObject &x);

} // namespace homcat
