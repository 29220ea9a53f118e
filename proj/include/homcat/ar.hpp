#pragma once

#include "homcat/morph.hpp"

#include <string>
#include <vector>

namespace homcat {

enum class Category { R, H, G, E };
enum class Direction { forward, inverse };

std::string category_name(Category c);
Category parse_category(const std::string &s);

struct ARReport {
    bool non_split = false;
    bool left_end_local = false;
    bool right_end_local = false;
    bool right_almost_split = false;
    std::size_t corpus_size = 0; // corpus members in the category that were tested
    std::string witness;         // first failure, if any
    bool ok() const { return non_split && left_end_local && right_end_local && right_almost_split; }
};

// 0 -> left -incl-> middle -proj-> right -> 0. For cat R the modules are over R; otherwise they
// are modules of objects on side M, in the object coordinates (A part first).
struct ARSequence {
    Category cat = Category::R;
    Module left, middle, right;
    Mat incl, proj;
    ARReport report;
    MorphObject left_object() const { return to_object(left); }
    MorphObject middle_object() const { return to_object(middle); }
    MorphObject right_object() const { return to_object(right); }
};

ARSequence make_sequence(Category cat, const MorphObject &l, const MorphObject &m, const MorphObject &r, const MorphMap &incl,
                         const MorphMap &proj);
// Throws InputError unless the sequence is short exact.
void check_exact(const ARSequence &s);

bool in_category(const MorphObject &x, Category cat);
bool is_projective_in(const MorphObject &x, Category cat);
bool is_injective_in(const MorphObject &x, Category cat);

// (tau A -> tau B) and (tau^-1 A -> tau^-1 B).
MorphObject tau_R(const MorphObject &f);
MorphObject tau_inverse_R(const MorphObject &f);

MorphObject tau_morphism(const MorphObject &f, Category cat, Direction dir = Direction::forward);

// The three descriptions of tau_H on objects of G.
struct TauHForms {
    MorphObject transpose_dual;  // (Tr f)'
    MorphObject via_cover;       // Cok(red(G-cov tau_R f))
    MorphObject via_envelope;    // red(E-env tau_R Cok f)
    bool agree() const;
};
TauHForms tau_H_forms(const MorphObject &f);

bool classical_cross_check(const MorphObject &f);

ARSequence almost_split_sequence(const Module &end);
ARSequence almost_split_sequence(const MorphObject &end, Category cat);

// corpus: R-modules for cat R, otherwise objects (their modules are compared on side M).
ARReport verify_almost_split(const ARSequence &s, const std::vector<Module> &corpus);
ARReport verify_almost_split(const ARSequence &s, const std::vector<MorphObject> &corpus);

// which in {'i', 'ii', 'iii', 'iv'}; seq must be an almost split sequence of R-modules.
ARSequence explicit_family(const ARSequence &seq, const std::string &which);

struct ClosingExample {
    MorphObject f;          // A -> P, the projective envelope
    bool tau_shape = false; // tau_H f = (Q -> tau L)
    bool rows_split = false;
    bool middle_matches = false; // middle = (Q + A -> tau L + P, [pi 0; alpha f])
    ARSequence sequence;
    bool ok() const { return tau_shape && rows_split && middle_matches; }
};
ClosingExample closing_example(const Module &a);

} // namespace homcat
