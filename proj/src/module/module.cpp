#include "homcat/module.hpp"
#include "homcat/matalg.hpp"

#include <random>

namespace homcat {

Module::Module(AlgebraPtr a, std::vector<Mat> action) {
    if (!a) throw InputError("module without algebra");
    if (action.size() != a->dim())
        throw InputError("module has " + std::to_string(action.size()) + " action matrices, algebra has dimension " + std::to_string(a->dim()));
    std::size_t n = action.empty() ? 0 : action[0].rows();
    for (auto &m : action) {
        if (m.rows() != n || m.cols() != n) throw InputError("action matrices must be square of equal size");
        if (m.modulus() != a->p()) throw InputError("action matrix over the wrong field");
    }
    auto d = std::make_shared<Data>();
    d->algebra = std::move(a);
    d->dim = n;
    d->action = std::move(action);
    d_ = std::move(d);
}

Module Module::zero(const AlgebraPtr &a) { return Module(a, std::vector<Mat>(a->dim(), Mat(0, 0, a->p()))); }

Module Module::regular(const AlgebraPtr &a) {
    std::vector<Mat> acts;
    for (std::size_t i = 0; i < a->dim(); ++i) acts.push_back(a->right(i));
    return Module(a, acts);
}

Mat Module::act_of(const Vec &a) const {
    Mat m(dim(), dim(), p());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) m.add_scaled(act(i), a[i]);
    return m;
}

Mat Module::orbit(const Vec &v) const {
    const std::size_t n = algebra()->dim();
    Mat o(dim(), n, p());
    for (std::size_t i = 0; i < n; ++i) o.set_col(i, act(i) * v);
    return o;
}

const std::vector<std::size_t> &Module::signature() const {
    std::call_once(d_->sig_once, [this] {
        auto &s = d_->sig;
        s.push_back(dim());
        for (auto &e : algebra()->primitive_idempotents()) s.push_back(rank(act_of(e)));
        for (std::size_t i = 0; i < algebra()->dim(); ++i) s.push_back(rank(act(i)));
        s.push_back(cover().generators.size());
    });
    return d_->sig;
}

ModuleReport validate_module(const Module &m) {
    ModuleReport rep;
    const auto &a = *m.algebra();
    const std::size_t n = a.dim();
    if (!m.act_of(a.unit()).is_identity() && m.dim() > 0) rep.issues.push_back("unit does not act as the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat lhs = m.act(j) * m.act(i);
            Mat rhs = m.act_of(a.mul(i, j));
            if (lhs != rhs) rep.issues.push_back("action law fails for (" + a.labels()[i] + ", " + a.labels()[j] + ")");
        }
    return rep;
}

bool is_homomorphism(const Module &src, const Module &tgt, const Mat &f) {
    if (f.rows() != tgt.dim() || f.cols() != src.dim()) return false;
    for (std::size_t i = 0; i < src.algebra()->dim(); ++i)
        if (f * src.act(i) != tgt.act(i) * f) return false;
    return true;
}

std::size_t FreeModule::summand_dim(std::size_t j) const {
    return (j + 1 < offsets.size() ? offsets[j + 1] : module.dim()) - offsets[j];
}

Vec FreeModule::generator(std::size_t j) const {
    Vec v(module.dim(), 0);
    const Vec &g = module.algebra()->right_ideal_generator(types[j]);
    for (std::size_t i = 0; i < g.size(); ++i) v[offsets[j] + i] = g[i];
    return v;
}

FreeModule free_module(const AlgebraPtr &a, std::vector<std::size_t> types) {
    FreeModule f;
    std::size_t total = 0;
    for (auto t : types) {
        f.offsets.push_back(total);
        total += a->right_ideal(t).cols();
    }
    std::vector<Mat> acts(a->dim(), Mat(total, total, a->p()));
    for (std::size_t j = 0; j < types.size(); ++j) {
        const auto &ia = a->right_ideal_action(types[j]);
        for (std::size_t i = 0; i < a->dim(); ++i) acts[i].set_block(f.offsets[j], f.offsets[j], ia[i]);
    }
    f.module = Module(a, std::move(acts));
    f.types = std::move(types);
    return f;
}

Mat free_hom(const FreeModule &src, const Module &tgt, const std::vector<Vec> &images) {
    const auto &a = *src.module.algebra();
    Mat h(tgt.dim(), src.module.dim(), a.p());
    for (std::size_t j = 0; j < src.types.size(); ++j) h.set_block(0, src.offsets[j], tgt.orbit(images[j]) * a.right_ideal(src.types[j]));
    return h;
}

Vec component_element(const FreeModule &f, const Vec &v, std::size_t k) {
    const Mat &e = f.module.algebra()->right_ideal(f.types[k]);
    Vec slice(v.begin() + f.offsets[k], v.begin() + f.offsets[k] + e.cols());
    return e * slice;
}

Vec element_coords(const FreeModule &f, std::size_t k, const Vec &a) {
    const Mat &e = f.module.algebra()->right_ideal(f.types[k]);
    auto x = solve(e, Mat::column(a, e.modulus()));
    if (!x) throw std::logic_error("element outside the right ideal");
    return x->col(0);
}

Mat dual_free_map(const FreeModule &src, const FreeModule &tgt, const Mat &f, const FreeModule &src_dual, const FreeModule &tgt_dual) {
    std::vector<Vec> images;
    std::vector<Vec> gen_images;
    for (std::size_t j = 0; j < src.types.size(); ++j) gen_images.push_back(f * src.generator(j));
    for (std::size_t k = 0; k < tgt.types.size(); ++k) {
        Vec img(src_dual.module.dim(), 0);
        for (std::size_t j = 0; j < src.types.size(); ++j) {
            Vec a = component_element(tgt, gen_images[j], k);
            Vec c = element_coords(src_dual, j, a);
            for (std::size_t i = 0; i < c.size(); ++i) img[src_dual.offsets[j] + i] = c[i];
        }
        images.push_back(img);
    }
    return free_hom(tgt_dual, src_dual.module, images);
}

Module direct_sum(const Module &a, const Module &b) {
    std::vector<Mat> acts;
    for (std::size_t i = 0; i < a.algebra()->dim(); ++i) acts.push_back(homcat::direct_sum(a.act(i), b.act(i)));
    return Module(a.algebra(), acts);
}

Module direct_sum(const std::vector<Module> &ms, const AlgebraPtr &a) {
    Module r = Module::zero(a);
    for (auto &m : ms) r = direct_sum(r, m);
    return r;
}

Mat left_inverse(const Mat &b) {
    // choose independent rows of b
    auto rows = pivot_columns(b.transpose());
    Mat sq = b.select_rows(rows);
    auto inv = inverse(sq);
    if (!inv) throw std::logic_error("left_inverse of a rank-deficient matrix");
    Mat sel(rows.size(), b.rows(), b.modulus());
    for (std::size_t i = 0; i < rows.size(); ++i) sel.at(i, rows[i]) = 1;
    return *inv * sel;
}

Module submodule(const Module &m, const Mat &b) {
    if (b.cols() == 0) return Module::zero(m.algebra());
    Mat li = left_inverse(b);
    std::vector<Mat> acts;
    for (auto &a : m.actions()) acts.push_back(li * (a * b));
    return Module(m.algebra(), acts);
}

Quotient quotient(const Module &m, const Mat &w) {
    const std::size_t n = m.dim();
    const std::uint32_t p = m.p();
    SpanBuilder span(n, p);
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < w.cols(); ++j)
        if (span.add(w.col(j))) cols.push_back(w.col(j));
    std::size_t r = cols.size();
    std::vector<std::size_t> extra;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        if (span.add(e)) {
            cols.push_back(e);
            extra.push_back(i);
        }
    }
    Mat t = Mat::from_columns(cols, n, p);
    Mat ti = *inverse(t);
    Quotient q;
    q.proj = ti.block(r, 0, n - r, n);
    q.section = Mat(n, n - r, p);
    for (std::size_t k = 0; k < extra.size(); ++k) q.section.at(extra[k], k) = 1;
    std::vector<Mat> acts;
    for (auto &a : m.actions()) acts.push_back(q.proj * (a * q.section));
    q.module = Module(m.algebra(), acts);
    return q;
}

ModuleMap kernel(const ModuleMap &f) {
    Mat k = kernel_basis(f.matrix);
    return {submodule(f.source, k), f.source, k};
}

ModuleMap cokernel(const ModuleMap &f) {
    Quotient q = quotient(f.target, f.matrix);
    return {f.target, q.module, q.proj};
}

ModuleMap image(const ModuleMap &f) {
    Mat b = column_basis(f.matrix);
    return {submodule(f.target, b), f.target, b};
}

Module conjugate(const Module &m, const Mat &t) {
    Mat ti = *inverse(t);
    std::vector<Mat> acts;
    for (auto &a : m.actions()) acts.push_back(ti * (a * t));
    return Module(m.algebra(), acts);
}

Mat random_invertible(std::size_t n, std::uint32_t p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        Mat t(n, n, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t.at(i, j) = static_cast<std::uint32_t>(rng() % p);
        if (inverse(t)) return t;
    }
}

Module random_base_change(const Module &m, std::uint64_t seed, Mat *t_out) {
    Mat t = random_invertible(m.dim(), m.p(), seed);
    if (t_out) *t_out = t;
    return conjugate(m, t);
}

const CoverData &Module::cover() const {
    std::call_once(d_->cover_once, [this] {
        auto c = std::make_shared<CoverData>();
        const auto &a = *algebra();
        const std::uint32_t pp = p();
        SpanBuilder span(dim(), pp);
        for (auto &r : a.radical()) {
            Mat ar = act_of(r);
            for (std::size_t j = 0; j < dim(); ++j) span.add(ar.col(j));
        }
        std::vector<std::size_t> types;
        const auto &idem = a.primitive_idempotents();
        for (std::size_t t = 0; t < idem.size(); ++t) {
            Mat ae = act_of(idem[t]);
            for (std::size_t j = 0; j < dim() && span.dim() < dim(); ++j) {
                Vec v = ae.col(j);
                if (span.add(v)) {
                    c->generators.push_back(v);
                    types.push_back(t);
                }
            }
        }
        c->free = free_module(algebra(), types);
        c->pi = free_hom(c->free, *this, c->generators);
        c->kernel = kernel_basis(c->pi);
        auto s = solve(c->pi, Mat::identity(dim(), pp));
        if (!s) throw std::logic_error("projective cover is not surjective");
        c->section = *s;
        c->syzygy = submodule(c->free.module, c->kernel);
        d_->cover = c;
    });
    return *d_->cover;
}

std::vector<Mat> hom_basis(const Module &m, const Module &n) {
    if (!same_algebra(m.algebra(), n.algebra())) throw InputError("hom between modules over different algebras");
    if (m.dim() == 0 || n.dim() == 0) return {};
    const auto &a = *m.algebra();
    const std::uint32_t p = m.p();
    const CoverData &c = m.cover();
    const std::size_t kc = c.kernel.cols();
    struct Unknown {
        Mat phi_k, phi_s;
    };
    std::vector<Unknown> unk;
    for (std::size_t j = 0; j < c.free.types.size(); ++j) {
        std::size_t t = c.free.types[j];
        Mat v = column_basis(n.act_of(a.primitive_idempotents()[t]));
        const Mat &e = a.right_ideal(t);
        std::size_t off = c.free.offsets[j], dj = e.cols();
        Mat krows = c.kernel.block(off, 0, dj, kc);
        Mat srows = c.section.block(off, 0, dj, m.dim());
        for (std::size_t k = 0; k < v.cols(); ++k) {
            Mat block = n.orbit(v.col(k)) * e; // n.dim x dj
            unk.push_back({block * krows, block * srows});
        }
    }
    const std::size_t u = unk.size();
    std::vector<Vec> solutions;
    if (kc == 0) {
        for (std::size_t i = 0; i < u; ++i) {
            Vec s(u, 0);
            s[i] = 1;
            solutions.push_back(s);
        }
    } else {
        Mat cons(n.dim() * kc, u, p);
        for (std::size_t i = 0; i < u; ++i) cons.set_col(i, unk[i].phi_k.flatten());
        Mat ker = kernel_basis(cons);
        for (std::size_t s = 0; s < ker.cols(); ++s) solutions.push_back(ker.col(s));
    }
    std::vector<Mat> out;
    for (auto &s : solutions) {
        Mat f(n.dim(), m.dim(), p);
        for (std::size_t i = 0; i < u; ++i)
            if (s[i]) f.add_scaled(unk[i].phi_s, s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t hom_dim(const Module &m, const Module &n) { return hom_basis(m, n).size(); }

AlgebraPtr end_algebra(const Module &m) {
    auto basis = hom_basis(m, m);
    const std::size_t r = basis.size();
    const std::uint32_t p = m.p();
    Mat flat(m.dim() * m.dim(), r, p);
    for (std::size_t k = 0; k < r; ++k) flat.set_col(k, basis[k].flatten());
    Mat li = r ? left_inverse(flat) : Mat(0, 0, p);
    auto coords = [&](const Mat &x) { return li * x.flatten(); };
    Algebra::Table t(r, std::vector<Vec>(r));
    // composition f * g means "first g then f"; as an algebra acting on M on the left
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) t[i][j] = coords(basis[i] * basis[j]);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < r; ++k) labels.push_back("f" + std::to_string(k));
    Vec unit = r ? coords(Mat::identity(m.dim(), p)) : Vec{};
    return make_algebra(p, labels, unit, t, "End");
}

namespace {

bool local_basis(const std::vector<Mat> &basis) {
    if (basis.size() == 1) return true;
    return is_local(basis, radical_basis(basis));
}

void split_rec(const Module &x, const Mat &basis, std::vector<Module> &out, std::vector<Mat> &bases, std::uint64_t seed) {
    if (x.dim() == 0) return;
    auto e = hom_basis(x, x);
    if (local_basis(e)) {
        out.push_back(x);
        bases.push_back(basis);
        return;
    }
    auto s = find_splitting(e, seed);
    if (!s) throw std::runtime_error("module with non-local endomorphism ring but no splitting endomorphism found");
    Mat k1 = kernel_basis(eval(s->g, s->element));
    Mat k2 = kernel_basis(eval(s->h, s->element));
    split_rec(submodule(x, k1), basis * k1, out, bases, seed * 31 + 1);
    split_rec(submodule(x, k2), basis * k2, out, bases, seed * 31 + 2);
}

} // namespace

const Decomposition &Module::decomposition() const {
    std::call_once(d_->dec_once, [this] {
        auto d = std::make_shared<Decomposition>();
        std::vector<Mat> bases;
        split_rec(*this, Mat::identity(dim(), p()), d->summands, bases, 0);
        Mat split(dim(), 0, p());
        for (auto &b : bases) {
            d->offsets.push_back(split.cols());
            split = hstack(split, b);
        }
        d->split = split;
        d->split_inv = dim() ? *inverse(split) : split;
        d_->dec = d;
    });
    return *d_->dec;
}

bool end_is_local(const Module &m) { return m.dim() > 0 && local_basis(hom_basis(m, m)); }

bool is_indecomposable(const Module &m) { return m.dim() > 0 && m.decomposition().summands.size() == 1; }

std::optional<Mat> iso_indecomposable(const Module &x, const Module &y) {
    if (x.dim() != y.dim() || !same_algebra(x.algebra(), y.algebra())) return std::nullopt;
    if (x.signature() != y.signature()) return std::nullopt;
    auto fs = hom_basis(x, y);
    if (fs.empty()) return std::nullopt;
    auto gs = hom_basis(y, x);
    for (auto &f : fs)
        if (inverse(f)) return f;
    for (auto &f : fs)
        for (auto &g : gs)
            if (inverse(g * f)) return f;
    return std::nullopt;
}

bool is_isomorphic(const Module &m, const Module &n) {
    if (!same_algebra(m.algebra(), n.algebra()) || m.dim() != n.dim()) return false;
    if (m.dim() == 0) return true;
    if (m.signature() != n.signature()) return false;
    const auto &a = m.decomposition().summands;
    const auto &b = n.decomposition().summands;
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (auto &x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && iso_indecomposable(x, b[j])) {
                used[j] = true;
                found = true;
            }
        if (!found) return false;
    }
    return true;
}

std::vector<std::pair<Module, std::size_t>> summand_classes(const Module &m) {
    std::vector<std::pair<Module, std::size_t>> out;
    for (auto &x : m.decomposition().summands) {
        bool found = false;
        for (auto &c : out)
            if (iso_indecomposable(c.first, x)) {
                ++c.second;
                found = true;
                break;
            }
        if (!found) out.push_back({x, 1});
    }
    return out;
}

} // namespace homcat
