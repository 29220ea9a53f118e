#pragma once

#include "homcat/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homcat {

enum class Side { M, M_op };

// T_2(R), one shared instance per base ring.
AlgebraPtr lambda_algebra(const AlgebraPtr &r);

// An R-homomorphism f : A -> B together with its module over T_2(R) (side M) or its
// opposite (side M_op). On side M the source sits at e1 and (a, b).alpha = (0, f(a)); on side
// M_op the source sits at e2.
class MorphObject {
  public:
    MorphObject() = default;
    MorphObject(Module a, Module b, Mat f, Side side = Side::M);

    const Module &A() const { return a_; }
    const Module &B() const { return b_; }
    const Mat &f() const { return f_; }
    Side side() const { return side_; }
    const AlgebraPtr &ring() const { return a_.algebra(); }
    const Module &module() const { return lam_; }
    std::size_t dim() const { return a_.dim() + b_.dim(); }
    MorphObject on_side(Side s) const { return MorphObject(a_, b_, f_, s); }

  private:
    Module a_, b_;
    Mat f_;
    Side side_ = Side::M;
    Module lam_;
};

struct MorphMap {
    MorphObject source, target;
    Mat a, b; // source.A -> target.A, source.B -> target.B
    bool commutes() const;
    Mat module_matrix() const;
};

// Reading a module over T_2(R) or its opposite as an object. `basis` has the e_src part first.
struct Reading {
    MorphObject object;
    Mat basis;
};
Reading read_object(const Module &x);
MorphObject to_object(const Module &x);
// A module map between object modules, split into its two blocks.
MorphMap split_map(const MorphObject &s, const MorphObject &t, const Mat &h);

MorphObject zero_object(const AlgebraPtr &r);
MorphObject identity_object(const Module &m);     // m -1-> m
MorphObject zero_to(const Module &m);             // 0 -> m
MorphObject to_zero(const Module &m);             // m -> 0
MorphObject direct_sum(const MorphObject &x, const MorphObject &y);
MorphObject direct_sum(const std::vector<MorphObject> &xs, const AlgebraPtr &r);

std::vector<Mat> hom_basis(const MorphObject &x, const MorphObject &y);
bool is_isomorphic(const MorphObject &x, const MorphObject &y);
std::vector<MorphObject> decompose(const MorphObject &x);
bool is_indecomposable(const MorphObject &x);
bool is_projective(const MorphObject &x);
bool is_mono(const MorphObject &x);
bool is_epi(const MorphObject &x);

struct Classification {
    bool in_S = false, in_E = false, in_H = true;
    std::optional<bool> in_G; // empty: unsupported over a non-Gorenstein base
    bool projective = false;
    std::optional<bool> injective_in_H;
    bool locally_projective = true;
};
Classification classify(const MorphObject &x);

// (Ker f -> A) and (B -> Cok f).
MorphObject ker_object(const MorphObject &x);
MorphObject cok_object(const MorphObject &x);
// The induced map on cokernel objects: (phi_B, induced) : Cok(s) -> Cok(t).
MorphMap cok_map(const MorphMap &m);
// The induced map on kernel objects: (restriction, phi_A) : Ker(s) -> Ker(t).
MorphMap ker_map(const MorphMap &m);

MorphMap projective_cover(const MorphObject &x);
MorphObject syzygy(const MorphObject &x, std::size_t i = 1);

struct ShapeCheck {
    bool source = false, target = false, mono = false;
    std::size_t q = 0; // rank of the free summand found in the target
    bool ok() const { return source && target && mono; }
};
// Omega^i f = (Omega^i A -> Omega^i B + R^q) with an injective map.
ShapeCheck syzygy_shape(const MorphObject &x, const MorphObject &omega, std::size_t i);

struct TransposeM {
    MorphObject tr; // side M_op
    bool source_iso = false; // tr.A = Tr Cok f
    bool target_iso = false; // tr.B = Tr B + R^q
    std::size_t q = 0;
    bool exact = false;            // Tr C -> Tr B + Q -> Tr A -> 0, with kernel Cok(f')
    std::optional<bool> mono;      // set when Ext^1(Cok f, R) = 0
    bool ok() const { return source_iso && target_iso && exact && mono.value_or(true); }
};
TransposeM transpose(const MorphObject &x);
MorphObject lambda(const MorphObject &x, int power = 1);

struct LinkedM {
    bool direct = false;
    bool ext_criterion = false;
    bool stable = false;
    std::optional<bool> component; // empty when A or B is not stable
};
LinkedM linked(const MorphObject &x);

struct Approximation {
    MorphObject object;
    MorphMap map;
    bool minimal = false;
};
// f -> [f p] : A + P -> B.
Approximation e_envelope(const MorphObject &x);
// [f e] : A -> B + P' -> f.
Approximation g_cover(const MorphObject &x);

enum class RedContext { M_or_G, E };
MorphObject red(const MorphObject &x, RedContext ctx = RedContext::M_or_G);

// (A -> B)' = (B' -> A').
MorphObject dual_object(const MorphObject &x);
MorphMap dual_map(const MorphMap &m); // m' : target' -> source'

enum class StableVariant { proj, inj };
std::size_t stable_hom_dim(const MorphObject &x, const MorphObject &y, StableVariant v);
// Rank of the map induced by m : s -> t from the stable Hom(x, s) to the stable Hom(x, t).
std::size_t stable_hom_image_dim(const MorphObject &x, const MorphMap &m, StableVariant v);

// Every element of the span of `ideal` is nilpotent and the span is closed under products.
bool nilpotent_ideal(const std::vector<Mat> &ideal);

} // namespace homcat
