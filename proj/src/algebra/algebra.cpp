#include "homcat/algebra.hpp"
#include "homcat/matalg.hpp"

#include <functional>
#include <sstream>

namespace homcat {

std::size_t TriangularData::n() const { return base->dim(); }

Algebra::Algebra(std::uint32_t p, std::vector<std::string> basis, Vec unit, Table mul, std::string name)
    : p_(p), labels_(std::move(basis)), unit_(std::move(unit)), mul_(std::move(mul)), name_(std::move(name)) {
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i) {
        Mat l(n, n, p), r(n, n, p);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t t = 0; t < n; ++t) {
                l.at(t, k) = mul_[i][k][t];
                r.at(t, k) = mul_[k][i][t];
            }
        left_.push_back(std::move(l));
        right_.push_back(std::move(r));
    }
    std::size_t h = std::hash<std::uint32_t>()(p) ^ (n * 0x9e3779b97f4a7c15ull);
    for (auto &row : mul_)
        for (auto &v : row)
            for (auto x : v) h = h * 1000003u ^ x;
    for (auto x : unit_) h = h * 31u ^ x;
    hash_ = h;
}

Vec Algebra::product(const Vec &a, const Vec &b) const {
    const std::size_t n = dim();
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!b[j]) continue;
            std::uint64_t c = std::uint64_t(a[i]) * b[j] % p_;
            const Vec &m = mul_[i][j];
            for (std::size_t t = 0; t < n; ++t)
                if (m[t]) acc[t] = (acc[t] + c * m[t]) % p_;
        }
    }
    return Vec(acc.begin(), acc.end());
}

Vec Algebra::basis_vector(std::size_t i) const {
    Vec v(dim(), 0);
    v[i] = 1;
    return v;
}

Mat Algebra::left_of(const Vec &a) const {
    Mat m(dim(), dim(), p_);
    for (std::size_t i = 0; i < dim(); ++i)
        if (a[i]) m.add_scaled(left_[i], a[i]);
    return m;
}

Mat Algebra::right_of(const Vec &a) const {
    Mat m(dim(), dim(), p_);
    for (std::size_t i = 0; i < dim(); ++i)
        if (a[i]) m.add_scaled(right_[i], a[i]);
    return m;
}

bool Algebra::is_commutative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (mul_[i][j] != mul_[j][i]) return false;
    return true;
}

bool Algebra::same_table(const Algebra &o) const {
    return hash_ == o.hash_ && p_ == o.p_ && unit_ == o.unit_ && mul_ == o.mul_;
}

namespace {

// Splits the identity of eAe into primitive orthogonal idempotents.
void split_idempotent(const Algebra &a, const Vec &e, std::vector<Vec> &out, std::uint64_t seed) {
    const std::uint32_t p = a.p();
    const std::size_t n = a.dim();
    Mat le = a.left_of(e), re = a.right_of(e);
    Mat corner_span(n, n, p);
    for (std::size_t i = 0; i < n; ++i) corner_span.set_col(i, le * (re * a.basis_vector(i)));
    Mat bc = column_basis(corner_span);
    const std::size_t c = bc.cols();
    std::vector<Mat> reg;
    for (std::size_t k = 0; k < c; ++k) {
        auto m = solve(bc, a.left_of(bc.col(k)) * bc);
        if (!m) throw std::logic_error("corner algebra not closed");
        reg.push_back(*m);
    }
    auto unit_c = solve(bc, Mat::column(e, p));
    if (!unit_c) throw std::logic_error("idempotent outside its corner");
    auto rad = radical_basis(reg);
    if (is_local(reg, rad)) {
        out.push_back(e);
        return;
    }
    auto s = find_splitting(reg, seed);
    if (!s) throw std::runtime_error("no splitting element found in a non-local corner algebra");
    ExtGcd eg = ext_gcd(s->g, s->h);
    Mat e1c = eval(eg.s * s->g, s->element) * *unit_c;
    Vec e1 = (bc * e1c).col(0);
    Vec e2(n);
    for (std::size_t i = 0; i < n; ++i) e2[i] = (e[i] + p - e1[i]) % p;
    split_idempotent(a, e1, out, seed + 1);
    split_idempotent(a, e2, out, seed + 2);
}

} // namespace

void Algebra::compute_structure() const {
    std::call_once(once_, [this] {
        const std::size_t n = dim();
        radical_ = radical_coefficients(left_);
        Mat stack(0, n, p_);
        for (auto &r : radical_) stack = vstack(stack, right_of(r));
        Mat soc = kernel_basis(stack.rows() ? stack : Mat(1, n, p_));
        for (std::size_t k = 0; k < soc.cols(); ++k) socle_.push_back(soc.col(k));
        if (designated_idempotents) {
            idempotents_ = *designated_idempotents;
        } else if (n > 0) {
            split_idempotent(*this, unit_, idempotents_, 0);
        }
        for (auto &e : idempotents_) {
            Mat span(n, n, p_);
            Mat le = left_of(e);
            for (std::size_t i = 0; i < n; ++i) span.set_col(i, le.col(i));
            Mat basis = column_basis(span);
            std::vector<Mat> acts;
            for (std::size_t i = 0; i < n; ++i) acts.push_back(*solve(basis, right_[i] * basis));
            ideal_actions_.push_back(std::move(acts));
            ideal_generators_.push_back(solve(basis, Mat::column(e, p_))->col(0));
            ideals_.push_back(std::move(basis));
        }
    });
}

const std::vector<Vec> &Algebra::radical() const {
    compute_structure();
    return radical_;
}

const std::vector<Vec> &Algebra::socle() const {
    compute_structure();
    return socle_;
}

const std::vector<Vec> &Algebra::primitive_idempotents() const {
    compute_structure();
    return idempotents_;
}

const Mat &Algebra::right_ideal(std::size_t t) const {
    compute_structure();
    return ideals_.at(t);
}

const std::vector<Mat> &Algebra::right_ideal_action(std::size_t t) const {
    compute_structure();
    return ideal_actions_.at(t);
}

const Vec &Algebra::right_ideal_generator(std::size_t t) const {
    compute_structure();
    return ideal_generators_.at(t);
}

AlgebraFlags Algebra::flags() const { return classify_algebra(*this); }

AlgebraFlags classify_algebra(const Algebra &a) {
    AlgebraFlags f;
    f.commutative = a.is_commutative();
    f.local = a.primitive_idempotents().size() == 1;
    f.gorenstein_local = f.commutative && f.local && a.socle().size() == a.dim() - a.radical().size();
    return f;
}

AlgebraPtr make_algebra(std::uint32_t p, std::vector<std::string> basis, Vec unit, Algebra::Table mul, std::string name) {
    check_modulus(p);
    const std::size_t n = basis.size();
    if (unit.size() != n) throw InputError("unit has length " + std::to_string(unit.size()) + ", expected " + std::to_string(n));
    if (mul.size() != n) throw InputError("mul has " + std::to_string(mul.size()) + " rows, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (mul[i].size() != n) throw InputError("mul[" + std::to_string(i) + "] has wrong length");
        for (std::size_t j = 0; j < n; ++j) {
            if (mul[i][j].size() != n)
                throw InputError("mul[" + std::to_string(i) + "][" + std::to_string(j) + "] has wrong length");
            for (auto x : mul[i][j])
                if (x >= p) throw InputError("structure constant out of range for F_" + std::to_string(p));
        }
    }
    for (auto x : unit)
        if (x >= p) throw InputError("unit entry out of range");
    return std::make_shared<Algebra>(p, std::move(basis), std::move(unit), std::move(mul), std::move(name));
}

bool same_algebra(const AlgebraPtr &a, const AlgebraPtr &b) { return a == b || (a && b && a->same_table(*b)); }

ValidationReport validate_algebra(const Algebra &a) {
    ValidationReport rep;
    const std::size_t n = a.dim();
    const auto &lab = a.labels();
    for (std::size_t i = 0; i < n; ++i) {
        Vec b = a.basis_vector(i);
        if (a.product(a.unit(), b) != b) rep.issues.push_back("unit fails on the left for " + lab[i]);
        if (a.product(b, a.unit()) != b) rep.issues.push_back("unit fails on the right for " + lab[i]);
    }
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ij = a.mul(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = a.right(k) * ij;
                Vec rhs = a.left(i) * a.mul(j, k);
                if (lhs != rhs) {
                    if (++bad <= 10)
                        rep.issues.push_back("associativity fails: (" + lab[i] + "*" + lab[j] + ")*" + lab[k] + " != " + lab[i] + "*(" +
                                             lab[j] + "*" + lab[k] + ")");
                }
            }
        }
    if (bad > 10) rep.issues.push_back(std::to_string(bad - 10) + " further associativity failures");
    if (rep.ok() && a.declared) {
        AlgebraFlags f = classify_algebra(a);
        auto cmp = [&](const char *name, bool d, bool c) {
            if (d != c)
                rep.issues.push_back(std::string("declared ") + name + "=" + (d ? "true" : "false") + " but computed " + (c ? "true" : "false"));
        };
        cmp("commutative", a.declared->commutative, f.commutative);
        cmp("local", a.declared->local, f.local);
        cmp("gorenstein_local", a.declared->gorenstein_local, f.gorenstein_local);
    }
    return rep;
}

AlgebraPtr opposite(const AlgebraPtr &a) {
    if (a->is_commutative()) return a;
    if (auto back = a->op_of_.lock()) return back;
    std::call_once(a->op_once_, [&] {
        const std::size_t n = a->dim();
        Algebra::Table t(n, std::vector<Vec>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[i][j] = a->mul(j, i);
        auto op = std::make_shared<Algebra>(a->p(), a->labels(), a->unit(), std::move(t), a->name().empty() ? "" : a->name() + "^op");
        if (a->triangular) {
            op->triangular = a->triangular;
            op->triangular->opposite = !a->triangular->opposite;
        }
        op->designated_idempotents = a->primitive_idempotents();
        op->op_of_ = a;
        a->op_ = op;
    });
    return a->op_;
}

} // namespace homcat
