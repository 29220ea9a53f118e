#pragma once

#include "homcat/mat.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace homcat {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct AlgebraFlags {
    bool commutative = false;
    bool local = false;
    bool gorenstein_local = false;
};

// Data of T_2(R): basis e1*b, e2*b, a*b for b a basis of R, in that order.
struct TriangularData {
    AlgebraPtr base;
    bool opposite = false;
    std::size_t n() const;
    std::size_t e1(std::size_t i) const { return i; }
    std::size_t e2(std::size_t i) const { return n() + i; }
    std::size_t arrow(std::size_t i) const { return 2 * n() + i; }
};

// Finite-dimensional associative unital algebra over F_p given by structure constants:
// b_i b_j = sum_l mul[i][j][l] b_l.
class Algebra {
  public:
    using Table = std::vector<std::vector<Vec>>;

    Algebra(std::uint32_t p, std::vector<std::string> basis, Vec unit, Table mul, std::string name = "");

    std::uint32_t p() const { return p_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    const Vec &unit() const { return unit_; }
    const Vec &mul(std::size_t i, std::size_t j) const { return mul_[i][j]; }
    const Table &table() const { return mul_; }
    const std::string &name() const { return name_; }

    Vec product(const Vec &a, const Vec &b) const;
    Vec basis_vector(std::size_t i) const;
    // left(i) v = b_i v and right(i) v = v b_i, on coefficient vectors.
    const Mat &left(std::size_t i) const { return left_[i]; }
    const Mat &right(std::size_t i) const { return right_[i]; }
    Mat left_of(const Vec &a) const;
    Mat right_of(const Vec &a) const;

    bool is_commutative() const;
    const std::vector<Vec> &radical() const;
    const std::vector<Vec> &socle() const;
    // Complete set of primitive orthogonal idempotents.
    const std::vector<Vec> &primitive_idempotents() const;
    AlgebraFlags flags() const;

    // Columns: basis of the right ideal e_t A for the t-th primitive idempotent, as algebra elements.
    const Mat &right_ideal(std::size_t t) const;
    // Action of each basis element on e_t A in the basis right_ideal(t), and e_t in that basis.
    const std::vector<Mat> &right_ideal_action(std::size_t t) const;
    const Vec &right_ideal_generator(std::size_t t) const;

    std::optional<AlgebraFlags> declared;
    std::optional<TriangularData> triangular;
    std::optional<std::vector<Vec>> designated_idempotents;

    bool same_table(const Algebra &o) const;
    std::size_t fingerprint() const { return hash_; }

  private:
    friend AlgebraPtr opposite(const AlgebraPtr &a);

    void compute_structure() const;

    std::uint32_t p_;
    std::vector<std::string> labels_;
    Vec unit_;
    Table mul_;
    std::string name_;
    std::vector<Mat> left_, right_;
    std::size_t hash_ = 0;

    mutable std::once_flag once_;
    mutable std::vector<Vec> radical_, socle_, idempotents_;
    mutable std::vector<Mat> ideals_;
    mutable std::vector<std::vector<Mat>> ideal_actions_;
    mutable std::vector<Vec> ideal_generators_;

    mutable std::once_flag op_once_;
    mutable AlgebraPtr op_;
    mutable std::weak_ptr<const Algebra> op_of_;
};

// Structural checks only (sizes, modulus, entry range); throws InputError.
AlgebraPtr make_algebra(std::uint32_t p, std::vector<std::string> basis, Vec unit, Algebra::Table mul, std::string name = "");

bool same_algebra(const AlgebraPtr &a, const AlgebraPtr &b);

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};
// Unit, associativity, and any declared flags.
ValidationReport validate_algebra(const Algebra &a);

AlgebraFlags classify_algebra(const Algebra &a);

AlgebraPtr opposite(const AlgebraPtr &a);
AlgebraPtr triangular_extension(const AlgebraPtr &r);

AlgebraPtr truncated_poly(std::uint32_t p, std::size_t n);
AlgebraPtr square_zero_plane(std::uint32_t p);
AlgebraPtr exterior_two_vars(std::uint32_t p);
// Parses "truncated_poly(2,3)" style or "preset:truncated_poly,p=2,n=3" style names.
AlgebraPtr preset_by_name(const std::string &spec);

} // namespace homcat
