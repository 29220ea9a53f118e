#pragma once

#include "homcat/mat.hpp"

#include <optional>
#include <utility>

namespace homcat {

// Univariate polynomial over F_p, coefficients from degree 0 upward, no trailing zeros.
struct Poly {
    Vec c;
    std::uint32_t p = 2;

    Poly() = default;
    Poly(Vec coeffs, std::uint32_t p);
    static Poly constant(std::uint32_t a, std::uint32_t p) { return Poly({a}, p); }
    static Poly x(std::uint32_t p) { return Poly({0, 1}, p); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    std::uint32_t lead() const { return c.empty() ? 0 : c.back(); }
    Poly monic() const;

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    bool operator==(const Poly &o) const { return c == o.c && p == o.p; }
};

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
Poly gcd(const Poly &a, const Poly &b);
// Returns (g, s, t) with s a + t b = g, g monic.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly &a, const Poly &b);
Poly derivative(const Poly &a);
Poly powmod(const Poly &base, std::uint64_t e, const Poly &m);

// Product of the distinct monic irreducible factors.
Poly squarefree_part(const Poly &a);
// Some nontrivial monic factor of a squarefree polynomial, or nullopt if it is irreducible.
std::optional<Poly> split_squarefree(const Poly &f);
// A factorisation f = g h with gcd(g, h) = 1 and both nonconstant, if one exists.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly &f);

Mat eval(const Poly &f, const Mat &x);
// Minimal polynomial of a square matrix (monic).
Poly minimal_polynomial(const Mat &x);

} // namespace homcat
