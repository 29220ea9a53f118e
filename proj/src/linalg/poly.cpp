#include "homcat/poly.hpp"

#include <algorithm>

namespace homcat {

namespace {

void trim(Vec &c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// p-th root of a polynomial whose derivative vanishes (coefficients live in F_p, so a^p = a).
Poly pth_root(const Poly &a) {
    Vec r;
    for (std::size_t i = 0; i < a.c.size(); i += a.p) r.push_back(a.c[i]);
    return Poly(r, a.p);
}

} // namespace

Poly::Poly(Vec coeffs, std::uint32_t p_) : c(std::move(coeffs)), p(p_) {
    for (auto &x : c) x %= p;
    trim(c);
}

Poly Poly::monic() const {
    if (c.empty()) return *this;
    std::uint32_t inv = inv_mod(lead(), p);
    Vec r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = static_cast<std::uint32_t>(std::uint64_t(c[i]) * inv % p);
    return Poly(r, p);
}

Poly Poly::operator+(const Poly &o) const {
    Vec r(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] = (r[i] + o.c[i]) % p;
    return Poly(r, p);
}

Poly Poly::operator-(const Poly &o) const {
    Vec r(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r[i] = (r[i] + p - o.c[i]) % p;
    return Poly(r, p);
}

Poly Poly::operator*(const Poly &o) const {
    if (c.empty() || o.c.empty()) return Poly({}, p);
    std::vector<std::uint64_t> r(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t(c[i]) * o.c[j]) % p;
    return Poly(Vec(r.begin(), r.end()), p);
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::uint32_t p = a.p;
    Vec r = a.c;
    int db = b.degree();
    if (a.degree() < db) return {Poly({}, p), a};
    Vec q(a.degree() - db + 1, 0);
    std::uint32_t inv = inv_mod(b.lead(), p);
    for (int i = a.degree(); i >= db; --i) {
        std::uint32_t coef = static_cast<std::uint32_t>(std::uint64_t(r[i]) * inv % p);
        q[i - db] = coef;
        if (!coef) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + std::uint64_t(p - coef) * b.c[j]) % p;
    }
    return {Poly(q, p), Poly(r, p)};
}

Poly gcd(const Poly &a, const Poly &b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly &a, const Poly &b) {
    const std::uint32_t p = a.p;
    Poly r0 = a, r1 = b, s0 = Poly::constant(1, p), s1({}, p), t0({}, p), t1 = Poly::constant(1, p);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Poly inv = Poly::constant(inv_mod(r0.lead(), p), p);
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly derivative(const Poly &a) {
    if (a.c.size() <= 1) return Poly({}, a.p);
    Vec r(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = static_cast<std::uint32_t>(std::uint64_t(a.c[i]) * (i % a.p) % a.p);
    return Poly(r, a.p);
}

Poly powmod(const Poly &base, std::uint64_t e, const Poly &m) {
    Poly r = divmod(Poly::constant(1, base.p), m).second;
    Poly b = divmod(base, m).second;
    while (e) {
        if (e & 1) r = divmod(r * b, m).second;
        b = divmod(b * b, m).second;
        e >>= 1;
    }
    return r;
}

Poly squarefree_part(const Poly &a) {
    if (a.degree() <= 0) return Poly::constant(1, a.p);
    Poly f = a.monic();
    Poly d = derivative(f);
    if (d.is_zero()) return squarefree_part(pth_root(f));
    Poly g = gcd(f, d);
    // f / g is squarefree and carries every factor whose multiplicity is prime to p;
    // the remaining factors all divide g.
    Poly w = divmod(f, g).first;
    Poly rest = squarefree_part(g);
    Poly l = w * divmod(rest, gcd(w, rest)).first;
    return l.monic();
}

std::optional<Poly> split_squarefree(const Poly &f) {
    const std::uint32_t p = f.p;
    int n = f.degree();
    if (n <= 1) return std::nullopt;
    // Berlekamp: rows are x^{ip} mod f.
    Mat q(n, n, p);
    Poly xp = powmod(Poly::x(p), p, f);
    Poly cur = Poly::constant(1, p);
    for (int i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < cur.c.size(); ++j) q.at(j, i) = cur.c[j];
        cur = divmod(cur * xp, f).second;
    }
    Mat qi = q - Mat::identity(n, p);
    Mat ker = kernel_basis(qi);
    if (ker.cols() <= 1) return std::nullopt;
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Poly v(ker.col(k), p);
        if (v.degree() <= 0) continue;
        for (std::uint32_t s = 0; s < p; ++s) {
            Poly g = gcd(f, v - Poly::constant(s, p));
            if (g.degree() > 0 && g.degree() < n) return g;
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly &f) {
    auto a = split_squarefree(squarefree_part(f));
    if (!a) return std::nullopt;
    Poly h = f.monic(), g = Poly::constant(1, f.p);
    for (Poly d = gcd(h, *a); d.degree() > 0; d = gcd(h, *a)) {
        g = g * d;
        h = divmod(h, d).first;
    }
    if (g.degree() <= 0 || h.degree() <= 0) return std::nullopt;
    return std::make_pair(g, h);
}

Mat eval(const Poly &f, const Mat &x) {
    const std::uint32_t p = x.modulus();
    Mat r(x.rows(), x.cols(), p);
    for (int i = f.degree(); i >= 0; --i) {
        r = r * x;
        for (std::size_t d = 0; d < x.rows(); ++d) r.at(d, d) = (r(d, d) + f.c[i]) % p;
    }
    return r;
}

Poly minimal_polynomial(const Mat &x) {
    const std::uint32_t p = x.modulus();
    const std::size_t n = x.rows();
    std::size_t len = n * n;
    // Echelon rows of flattened powers, each tagged with its combination of powers.
    std::vector<Vec> rows, combos;
    std::vector<std::size_t> piv;
    Mat pw = Mat::identity(n, p);
    for (std::size_t k = 0; k <= n; ++k) {
        Vec v = pw.flatten();
        Vec comb(n + 1, 0);
        comb[k] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::uint32_t f = v[piv[r]];
            if (!f) continue;
            std::uint64_t nf = p - f;
            for (std::size_t i = 0; i < len; ++i) v[i] = (v[i] + nf * rows[r][i]) % p;
            for (std::size_t i = 0; i <= n; ++i) comb[i] = (comb[i] + nf * combos[r][i]) % p;
        }
        std::size_t c = 0;
        while (c < len && v[c] == 0) ++c;
        if (c == len) return Poly(comb, p).monic();
        std::uint32_t inv = inv_mod(v[c], p);
        for (auto &e : v) e = static_cast<std::uint32_t>(std::uint64_t(e) * inv % p);
        for (auto &e : comb) e = static_cast<std::uint32_t>(std::uint64_t(e) * inv % p);
        rows.push_back(v);
        combos.push_back(comb);
        piv.push_back(c);
        pw = pw * x;
    }
    throw std::logic_error("minimal polynomial exceeded matrix size");
}

} // namespace homcat
