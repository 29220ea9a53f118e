#include "homcat/matalg.hpp"

#include <random>

namespace homcat {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

using IMat = std::vector<std::uint64_t>;

IMat imul(const IMat &a, const IMat &b, std::size_t n, std::uint64_t m) {
    IMat r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t x = a[i * n + k];
            if (!x) continue;
            for (std::size_t j = 0; j < n; ++j) r[i * n + j] = (r[i * n + j] + x * b[k * n + j]) % m;
        }
    return r;
}

std::uint32_t trace_power_coefficient(const Mat &x, unsigned i) {
    const std::uint32_t p = x.modulus();
    const std::size_t n = x.rows();
    const std::uint64_t pi = ipow(p, i), m = pi * p;
    IMat y(x.data().begin(), x.data().end());
    for (unsigned step = 0; step < i; ++step) {
        IMat acc(n * n, 0), base = y;
        for (std::size_t d = 0; d < n; ++d) acc[d * n + d] = 1;
        for (std::uint64_t e = p; e; e >>= 1) {
            if (e & 1) acc = imul(acc, base, n, m);
            if (e > 1) base = imul(base, base, n, m);
        }
        y = acc;
    }
    std::uint64_t t = 0;
    for (std::size_t d = 0; d < n; ++d) t = (t + y[d * n + d]) % m;
    if (t % pi != 0) throw std::logic_error("trace power not divisible; element outside previous ideal");
    return static_cast<std::uint32_t>(t / pi % p);
}

} // namespace

Mat combine(const std::vector<Mat> &basis, const Vec &coeffs) {
    Mat r(basis[0].rows(), basis[0].cols(), basis[0].modulus());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs[k]) r.add_scaled(basis[k], coeffs[k]);
    return r;
}

std::vector<Vec> radical_coefficients(const std::vector<Mat> &basis) {
    const std::size_t d = basis.size();
    if (d == 0) return {};
    const std::uint32_t p = basis[0].modulus();
    const std::size_t n = basis[0].rows();
    unsigned l = 0;
    for (std::uint64_t q = p; q <= n; q *= p) ++l;
    std::vector<Vec> cur;
    for (std::size_t k = 0; k < d; ++k) {
        Vec e(d, 0);
        e[k] = 1;
        cur.push_back(e);
    }
    for (unsigned i = 0; i <= l && !cur.empty(); ++i) {
        std::vector<Mat> elems;
        for (auto &c : cur) elems.push_back(combine(basis, c));
        Mat g(d, cur.size(), p);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < cur.size(); ++k) g.at(j, k) = trace_power_coefficient(elems[k] * basis[j], i);
        Mat ker = kernel_basis(g);
        std::vector<Vec> next;
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            Vec v(d, 0);
            for (std::size_t k = 0; k < cur.size(); ++k)
                if (ker(k, c))
                    for (std::size_t t = 0; t < d; ++t) v[t] = static_cast<std::uint32_t>((v[t] + std::uint64_t(ker(k, c)) * cur[k][t]) % p);
            next.push_back(v);
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Mat> radical_basis(const std::vector<Mat> &basis) {
    std::vector<Mat> r;
    for (auto &c : radical_coefficients(basis)) r.push_back(combine(basis, c));
    return r;
}

bool is_local(const std::vector<Mat> &basis, const std::vector<Mat> &radical) {
    if (basis.empty()) return false;
    const std::uint32_t p = basis[0].modulus();
    const std::size_t len = basis[0].rows() * basis[0].cols();
    SpanBuilder span(len, p);
    for (auto &r : radical) span.add(r.flatten());
    std::vector<Mat> reps;
    for (auto &b : basis)
        if (span.add(b.flatten())) reps.push_back(b);
    const std::size_t q = reps.size();
    if (q == 0) return false;
    if (q == 1) return true;
    std::vector<Vec> cols;
    for (auto &r : radical) cols.push_back(r.flatten());
    for (auto &r : reps) cols.push_back(r.flatten());
    Mat frame = Mat::from_columns(cols, len, p);
    SpanBuilder jspan(len, p);
    for (auto &r : radical) jspan.add(r.flatten());
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b)
            if (!jspan.contains((reps[a] * reps[b] - reps[b] * reps[a]).flatten())) return false;
    Mat frob(q, q, p);
    for (std::size_t k = 0; k < q; ++k) {
        Mat pw = Mat::identity(reps[k].rows(), p);
        for (std::uint32_t e = 0; e < p; ++e) pw = pw * reps[k];
        auto c = solve(frame, Mat::column(pw.flatten(), p));
        if (!c) throw std::logic_error("span is not closed under multiplication");
        for (std::size_t t = 0; t < q; ++t) frob.at(t, k) = (*c)(radical.size() + t, 0);
    }
    return kernel_basis(frob - Mat::identity(q, p)).cols() == 1;
}

std::optional<Splitting> find_splitting(const std::vector<Mat> &basis, std::uint64_t seed, int random_tries) {
    auto attempt = [](const Mat &x) -> std::optional<Splitting> {
        auto s = coprime_split(minimal_polynomial(x));
        if (!s) return std::nullopt;
        return Splitting{x, s->first, s->second};
    };
    for (auto &b : basis)
        if (auto s = attempt(b)) return s;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (auto s = attempt(basis[i] + basis[j])) return s;
            if (auto s = attempt(basis[i] * basis[j])) return s;
            if (auto s = attempt(basis[j] * basis[i])) return s;
        }
    if (basis.empty()) return std::nullopt;
    const std::uint32_t p = basis[0].modulus();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < random_tries; ++t) {
        Vec c(basis.size());
        for (auto &x : c) x = static_cast<std::uint32_t>(rng() % p);
        if (auto s = attempt(combine(basis, c))) return s;
    }
    return std::nullopt;
}

} // namespace homcat
