#pragma once

#include "homcat/algebra.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homcat {

struct CoverData;
struct Decomposition;
struct DualData;
struct TransposeData;

// Finite-dimensional right module over an algebra. Elements are column vectors and
// v . b_i = act(i) v, so act(j) act(i) = act(b_i b_j). A left module over A is represented
// as a right module over opposite(A).
class Module {
  public:
    Module() = default;
    Module(AlgebraPtr a, std::vector<Mat> action);

    static Module zero(const AlgebraPtr &a);
    static Module regular(const AlgebraPtr &a);

    const AlgebraPtr &algebra() const { return d_->algebra; }
    std::size_t dim() const { return d_->dim; }
    std::uint32_t p() const { return d_->algebra->p(); }
    const Mat &act(std::size_t i) const { return d_->action[i]; }
    const std::vector<Mat> &actions() const { return d_->action; }
    Mat act_of(const Vec &a) const;
    // [v.b_0 | v.b_1 | ...]
    Mat orbit(const Vec &v) const;

    bool valid() const { return d_ != nullptr; }
    bool same_object(const Module &o) const { return d_ == o.d_; }

    const CoverData &cover() const;
    const Decomposition &decomposition() const;
    const DualData &dual_data() const;
    const TransposeData &transpose_data() const;
    // dims of M e_t, rank of each action, dim of top
    const std::vector<std::size_t> &signature() const;

  private:
    struct Data {
        AlgebraPtr algebra;
        std::size_t dim = 0;
        std::vector<Mat> action;
        mutable std::once_flag cover_once, dec_once, dual_once, tr_once, sig_once;
        mutable std::shared_ptr<const CoverData> cover;
        mutable std::shared_ptr<const Decomposition> dec;
        mutable std::shared_ptr<const DualData> dual;
        mutable std::shared_ptr<const TransposeData> tr;
        mutable std::vector<std::size_t> sig;
    };
    std::shared_ptr<const Data> d_;
};

struct ModuleMap {
    Module source, target;
    Mat matrix; // target.dim x source.dim
};

struct ModuleReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};
ModuleReport validate_module(const Module &m);
bool is_homomorphism(const Module &src, const Module &tgt, const Mat &f);

// Direct sum of indecomposable projectives e_{t_j} A.
struct FreeModule {
    Module module;
    std::vector<std::size_t> types;
    std::vector<std::size_t> offsets;
    std::size_t summand_dim(std::size_t j) const;
    Vec generator(std::size_t j) const;
};
FreeModule free_module(const AlgebraPtr &a, std::vector<std::size_t> types);
// The homomorphism sending the j-th generator to images[j] (which must lie in tgt e_{t_j}).
Mat free_hom(const FreeModule &src, const Module &tgt, const std::vector<Vec> &images);
// Component k of v as an element of e_{t_k} A, and back.
Vec component_element(const FreeModule &f, const Vec &v, std::size_t k);
Vec element_coords(const FreeModule &f, std::size_t k, const Vec &a);
// Given a map between free modules over A, the induced map tgt* -> src* between the
// dual free modules over A^op (given as free modules over opposite(A) with the same types).
Mat dual_free_map(const FreeModule &src, const FreeModule &tgt, const Mat &f, const FreeModule &src_dual, const FreeModule &tgt_dual);

struct CoverData {
    FreeModule free;
    std::vector<Vec> generators;
    Mat pi;      // M.dim x P.dim, surjective
    Mat kernel;  // P.dim x k, basis of the syzygy
    Mat section; // P.dim x M.dim, pi * section = 1
    Module syzygy;
};

struct Decomposition {
    std::vector<Module> summands;
    // Columns are the bases of the summands in M's coordinates; split_inv is its inverse.
    Mat split, split_inv;
    std::vector<std::size_t> offsets;
};

// Hom_A(M, A_A) as a right module over opposite(A).
struct DualData {
    Module module;
    std::vector<Mat> basis; // maps M -> A, in module coordinates
    Mat coords;             // left inverse of the flattened basis
};

// Minimal presentation P1 -d-> P0 -> M -> 0 and Tr M = Cok(d*) over opposite(A).
struct TransposeData {
    FreeModule p0_dual, p1_dual;
    Mat d;      // P1 -> P0
    Mat d_dual; // P0* -> P1*
    Module tr;
    Mat proj;    // P1* -> Tr M
    Mat section; // Tr M -> P1*
};

// Basic constructions.
Module direct_sum(const Module &a, const Module &b);
Module direct_sum(const std::vector<Module> &ms, const AlgebraPtr &a);
Mat left_inverse(const Mat &b);
// Submodule spanned by the columns of b (assumed independent and closed).
Module submodule(const Module &m, const Mat &b);
struct Quotient {
    Module module;
    Mat proj, section;
};
Quotient quotient(const Module &m, const Mat &w);
ModuleMap kernel(const ModuleMap &f);
ModuleMap cokernel(const ModuleMap &f);
ModuleMap image(const ModuleMap &f);
Module conjugate(const Module &m, const Mat &t);
Module random_base_change(const Module &m, std::uint64_t seed, Mat *t_out = nullptr);
Mat random_invertible(std::size_t n, std::uint32_t p, std::uint64_t seed);

// Hom and End.
std::vector<Mat> hom_basis(const Module &m, const Module &n);
std::size_t hom_dim(const Module &m, const Module &n);
AlgebraPtr end_algebra(const Module &m);
bool end_is_local(const Module &m);

// Krull-Schmidt.
bool is_indecomposable(const Module &m);
std::optional<Mat> iso_indecomposable(const Module &x, const Module &y);
bool is_isomorphic(const Module &m, const Module &n);
// Isomorphism classes of summands with multiplicities.
std::vector<std::pair<Module, std::size_t>> summand_classes(const Module &m);

// Projectives and covers.
bool is_projective(const Module &m);
bool is_stable(const Module &m);
ModuleMap projective_cover(const Module &m);
Module syzygy(const Module &m, std::size_t i = 1);

// Dualities.
Module dual(const Module &m);
Module field_dual(const Module &m);
// psi : X -> Y gives Y' -> X'.
Mat dual_map(const Module &x, const Module &y, const Mat &psi);
Mat field_dual_map(const Mat &psi);
// Injective envelope M -> D(P(DM)) over a commutative ring.
ModuleMap injective_envelope(const Module &m);

Module transpose(const Module &m);
Module lambda(const Module &m);
std::size_t ext_dim(const Module &m, const Module &n, std::size_t i);

// Lifts of a map f : M -> N.
Mat lift_to_covers(const Module &m, const Module &n, const Mat &f);
Mat syzygy_map(const Module &m, const Module &n, const Mat &f, std::size_t i = 1);
// Tr f : Tr N -> Tr M
Mat transpose_map(const Module &m, const Module &n, const Mat &f);

// Over a Gorenstein local commutative ring.
Module tau(const Module &m);
Module tau_inverse(const Module &m);
Mat tau_map(const Module &m, const Module &n, const Mat &f);
Mat tau_inverse_map(const Module &m, const Module &n, const Mat &f);

struct LinkageReport {
    bool stable = false;
    bool ext_vanishes = false;
    bool linked = false;
    bool lambda_square_iso = false;
};
LinkageReport linkage(const Module &m);

} // namespace homcat
