#pragma once

#include "homcat/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace homcat {

// Utilities for a unital algebra of square matrices over F_p, given by a spanning basis
// whose span contains the identity.

// Coefficient vectors (relative to `basis`) spanning the Jacobson radical.
// Trace-power criterion for prime fields: I_{-1} = A and
// I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}, g_i(x) = (Tr(x~^{p^i}) / p^i) mod p,
// stopping at i = floor(log_p n).
std::vector<Vec> radical_coefficients(const std::vector<Mat> &basis);
std::vector<Mat> radical_basis(const std::vector<Mat> &basis);

Mat combine(const std::vector<Mat> &basis, const Vec &coeffs);

// True when the algebra modulo `radical` is a field.
bool is_local(const std::vector<Mat> &basis, const std::vector<Mat> &radical);

// A matrix in the span whose minimal polynomial has two coprime nonconstant factors.
// Deterministic scan of the basis, pairwise sums and products, then seeded random combinations.
struct Splitting {
    Mat element;
    Poly g, h; // minpoly = g h, gcd 1
};
std::optional<Splitting> find_splitting(const std::vector<Mat> &basis, std::uint64_t seed, int random_tries = 400);

} // namespace homcat
