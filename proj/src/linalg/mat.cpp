#include "homcat/mat.hpp"

#include <sstream>

namespace homcat {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_modulus(std::uint32_t p) {
    if (!is_prime(p) || p >= (1u << 15))
        throw InputError("modulus " + std::to_string(p) + " is not a supported prime");
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return reduce(t, p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

Mat::Mat(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Mat Mat::identity(std::size_t n, std::uint32_t p) {
    Mat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Mat Mat::from_rows(std::uint32_t p, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    std::vector<std::vector<std::int64_t>> v;
    for (auto &r : rows) v.emplace_back(r);
    return from_rows(p, v);
}

Mat Mat::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>> &rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    Mat m(rows.size(), nc, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Mat Mat::column(const Vec &v, std::uint32_t p) {
    Mat m(v.size(), 1, p);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i] % p;
    return m;
}

Mat Mat::from_columns(const std::vector<Vec> &cols, std::size_t n, std::uint32_t p) {
    Mat m(n, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vec Mat::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

Vec Mat::row(std::size_t r) const { return Vec(row_ptr(r), row_ptr(r) + cols_); }

void Mat::set_col(std::size_t c, const Vec &v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v[i] % p_;
}

Mat Mat::operator*(const Mat &o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
    Mat r(rows_, o.cols_, p_);
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const std::uint32_t *a = row_ptr(i);
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t aik = a[k];
            if (!aik) continue;
            const std::uint32_t *b = o.row_ptr(k);
            for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += aik * b[j];
        }
        std::uint32_t *out = r.row_ptr(i);
        for (std::size_t j = 0; j < o.cols_; ++j) out[j] = static_cast<std::uint32_t>(acc[j] % p_);
    }
    return r;
}

Vec Mat::operator*(const Vec &v) const {
    if (cols_ != v.size()) throw std::invalid_argument("dimension mismatch in product");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t s = 0;
        const std::uint32_t *a = row_ptr(i);
        for (std::size_t k = 0; k < cols_; ++k) s += std::uint64_t(a[k]) * v[k];
        r[i] = static_cast<std::uint32_t>(s % p_);
    }
    return r;
}

Mat Mat::operator+(const Mat &o) const {
    Mat r = *this;
    r += o;
    return r;
}

Mat Mat::operator-(const Mat &o) const {
    Mat r = *this;
    r.add_scaled(o, p_ - 1);
    return r;
}

Mat Mat::scaled(std::uint32_t s) const {
    Mat r = *this;
    for (auto &x : r.data_) x = static_cast<std::uint32_t>(std::uint64_t(x) * s % p_);
    return r;
}

Mat &Mat::operator+=(const Mat &o) {
    add_scaled(o, 1);
    return *this;
}

void Mat::add_scaled(const Mat &o, std::uint32_t s) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in sum");
    s %= p_;
    if (!s) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] = static_cast<std::uint32_t>((data_[i] + std::uint64_t(o.data_[i]) * s) % p_);
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
    return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat r(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat &b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::select_cols(const std::vector<std::size_t> &idx) const {
    Mat r(rows_, idx.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = (*this)(i, idx[j]);
    return r;
}

Mat Mat::select_rows(const std::vector<std::size_t> &idx) const {
    Mat r(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = (*this)(idx[i], j);
    return r;
}

bool Mat::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool Mat::operator==(const Mat &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
}

Mat Mat::unflatten(const Vec &v, std::size_t rows, std::size_t cols, std::uint32_t p) {
    Mat m(rows, cols, p);
    m.data_ = v;
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

Mat hstack(const Mat &a, const Mat &b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Mat r(a.rows(), a.cols() + b.cols(), a.modulus());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Mat vstack(const Mat &a, const Mat &b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Mat r(a.rows() + b.rows(), a.cols(), a.modulus());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

Mat direct_sum(const Mat &a, const Mat &b) {
    Mat r(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

Rref rref(const Mat &m) {
    Rref out{m, {}};
    Mat &a = out.reduced;
    const std::uint32_t p = a.modulus();
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = c; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        std::uint32_t inv = inv_mod(a(row, c), p);
        std::uint32_t *pr = a.row_ptr(row);
        for (std::size_t j = c; j < a.cols(); ++j) pr[j] = static_cast<std::uint32_t>(std::uint64_t(pr[j]) * inv % p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            std::uint32_t f = a(i, c);
            if (!f) continue;
            std::uint32_t *ri = a.row_ptr(i);
            std::uint64_t nf = p - f;
            for (std::size_t j = c; j < a.cols(); ++j)
                if (pr[j]) ri[j] = static_cast<std::uint32_t>((ri[j] + nf * pr[j]) % p);
        }
        out.pivots.push_back(c);
        ++row;
    }
    return out;
}

std::size_t rank(const Mat &m) { return rref(m).rank(); }

Mat kernel_basis(const Mat &m) {
    Rref r = rref(m);
    const std::uint32_t p = m.modulus();
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : r.pivots) is_piv[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free.push_back(c);
    Mat k(m.cols(), free.size(), p);
    for (std::size_t f = 0; f < free.size(); ++f) {
        k.at(free[f], f) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) k.set(r.pivots[i], f, -std::int64_t(r.reduced(i, free[f])));
    }
    return k;
}

std::optional<Mat> solve(const Mat &a, const Mat &b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    Rref r = rref(hstack(a, b));
    const std::uint32_t p = a.modulus();
    Mat x(a.cols(), b.cols(), p);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        std::size_t c = r.pivots[i];
        if (c >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(c, j) = r.reduced(i, a.cols() + j);
    }
    return x;
}

std::optional<Mat> inverse(const Mat &m) {
    if (m.rows() != m.cols()) return std::nullopt;
    Rref r = rref(hstack(m, Mat::identity(m.rows(), m.modulus())));
    if (r.rank() < m.rows() || (m.rows() && r.pivots[m.rows() - 1] >= m.cols())) return std::nullopt;
    return r.reduced.block(0, m.cols(), m.rows(), m.rows());
}

std::vector<std::size_t> pivot_columns(const Mat &m) { return rref(m).pivots; }

Mat column_basis(const Mat &m) { return m.select_cols(pivot_columns(m)); }

bool SpanBuilder::add(const Vec &v) {
    Vec r = residue(v);
    std::size_t c = 0;
    while (c < n_ && r[c] == 0) ++c;
    if (c == n_) return false;
    std::uint32_t inv = inv_mod(r[c], p_);
    for (auto &x : r) x = static_cast<std::uint32_t>(std::uint64_t(x) * inv % p_);
    rows_.push_back(std::move(r));
    piv_.push_back(c);
    return true;
}

Vec SpanBuilder::residue(const Vec &v) const {
    Vec r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = v[i] % p_;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        std::uint32_t f = r[piv_[k]];
        if (!f) continue;
        std::uint64_t nf = p_ - f;
        const Vec &b = rows_[k];
        for (std::size_t i = 0; i < n_; ++i)
            if (b[i]) r[i] = static_cast<std::uint32_t>((r[i] + nf * b[i]) % p_);
    }
    return r;
}

bool SpanBuilder::contains(const Vec &v) const {
    Vec r = residue(v);
    for (auto x : r)
        if (x) return false;
    return true;
}

} // namespace homcat
