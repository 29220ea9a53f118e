#include "homcat/morph.hpp"
#include "homcat/matalg.hpp"

#include <mutex>

namespace homcat {

AlgebraPtr lambda_algebra(const AlgebraPtr &r) {
    static std::mutex mu;
    static std::vector<std::pair<AlgebraPtr, AlgebraPtr>> cache;
    std::lock_guard<std::mutex> lock(mu);
    for (auto &[base, lam] : cache)
        if (same_algebra(base, r)) return lam;
    auto lam = triangular_extension(r);
    cache.push_back({r, lam});
    return lam;
}

namespace {

Vec idempotent_vec(const Algebra &l, std::size_t (TriangularData::*index)(std::size_t) const) {
    const auto &t = *l.triangular;
    Vec e(l.dim(), 0);
    const auto &u = t.base->unit();
    for (std::size_t i = 0; i < u.size(); ++i) e[(t.*index)(i)] = u[i];
    return e;
}

Mat identity_like(std::size_t n, std::uint32_t p) { return Mat::identity(n, p); }

Module restrict_to(const Module &x, const Mat &basis, const AlgebraPtr &r, const std::vector<std::size_t> &index) {
    if (basis.cols() == 0) return Module::zero(r);
    Mat li = left_inverse(basis);
    std::vector<Mat> acts;
    for (auto i : index) acts.push_back(li * (x.act(i) * basis));
    return Module(r, acts);
}

Module free_r(const AlgebraPtr &r, std::size_t q) {
    std::vector<Module> ms(q, Module::regular(r));
    return direct_sum(ms, r);
}

// Module of x on side M, rebuilding when needed.
Module side_m(const MorphObject &x) { return x.side() == Side::M ? x.module() : x.on_side(Side::M).module(); }

std::pair<Module, Module> common_side(const MorphObject &x, const MorphObject &y) {
    if (x.side() == y.side()) return {x.module(), y.module()};
    return {side_m(x), side_m(y)};
}

void require_mono(const MorphObject &x, const char *what) {
    if (!is_mono(x)) throw PreconditionError(std::string(what) + " needs a monomorphism (object in S)");
}

void require_gorenstein(const AlgebraPtr &r, const char *what) {
    if (!r->flags().gorenstein_local) throw PreconditionError(std::string(what) + " needs a Gorenstein local base ring");
}

// {k in End(y) : condition(k) = 0} for a linear condition given on the hom basis.
template <class F> std::vector<Mat> kernel_ideal(const std::vector<Mat> &end, F condition) {
    if (end.empty()) return {};
    Mat first = condition(end[0]);
    const std::uint32_t p = end[0].modulus();
    Mat sys(first.rows() * first.cols(), end.size(), p);
    for (std::size_t k = 0; k < end.size(); ++k) sys.set_col(k, condition(end[k]).flatten());
    Mat ker = kernel_basis(sys);
    std::vector<Mat> out;
    for (std::size_t j = 0; j < ker.cols(); ++j) out.push_back(combine(end, ker.col(j)));
    return out;
}

} // namespace

MorphObject::MorphObject(Module a, Module b, Mat f, Side side) : a_(std::move(a)), b_(std::move(b)), f_(std::move(f)), side_(side) {
    if (!same_algebra(a_.algebra(), b_.algebra())) throw InputError("object components over different rings");
    if (f_.rows() != b_.dim() || f_.cols() != a_.dim()) throw InputError("object map has the wrong shape");
    if (!is_homomorphism(a_, b_, f_)) throw InputError("object map is not a homomorphism");
    const auto &r = a_.algebra();
    auto lam = lambda_algebra(r);
    if (side_ == Side::M_op) lam = opposite(lam);
    const auto &t = *lam->triangular;
    const std::size_t n = r->dim(), da = a_.dim(), db = b_.dim(), d = da + db;
    std::vector<Mat> acts(lam->dim(), Mat(d, d, r->p()));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t src = side_ == Side::M ? t.e1(i) : t.e2(i);
        std::size_t tgt = side_ == Side::M ? t.e2(i) : t.e1(i);
        acts[src].set_block(0, 0, a_.act(i));
        acts[tgt].set_block(da, da, b_.act(i));
        acts[t.arrow(i)].set_block(da, 0, b_.act(i) * f_);
    }
    lam_ = Module(lam, std::move(acts));
}

bool MorphMap::commutes() const { return target.f() * a == b * source.f(); }

Mat MorphMap::module_matrix() const { return homcat::direct_sum(a, b); }

Reading read_object(const Module &x) {
    const auto &l = *x.algebra();
    if (!l.triangular) throw InputError("module is not over a triangular algebra");
    const auto &t = *l.triangular;
    const auto &r = t.base;
    const std::size_t n = r->dim();
    bool op = t.opposite;
    auto src = op ? &TriangularData::e2 : &TriangularData::e1;
    auto tgt = op ? &TriangularData::e1 : &TriangularData::e2;
    Mat ea = column_basis(x.act_of(idempotent_vec(l, src)));
    Mat eb = column_basis(x.act_of(idempotent_vec(l, tgt)));
    std::vector<std::size_t> ia, ib;
    for (std::size_t i = 0; i < n; ++i) {
        ia.push_back((t.*src)(i));
        ib.push_back((t.*tgt)(i));
    }
    Module a = restrict_to(x, ea, r, ia), b = restrict_to(x, eb, r, ib);
    Mat f(eb.cols(), ea.cols(), r->p());
    if (eb.cols() && ea.cols()) f = left_inverse(eb) * (x.act_of(idempotent_vec(l, &TriangularData::arrow)) * ea);
    return {MorphObject(a, b, f, op ? Side::M_op : Side::M), hstack(ea, eb)};
}

MorphObject to_object(const Module &x) { return read_object(x).object; }

MorphMap split_map(const MorphObject &s, const MorphObject &t, const Mat &h) {
    const std::size_t sa = s.A().dim(), sb = s.B().dim(), ta = t.A().dim(), tb = t.B().dim();
    return {s, t, h.block(0, 0, ta, sa), h.block(ta, sa, tb, sb)};
}

MorphObject zero_object(const AlgebraPtr &r) { return MorphObject(Module::zero(r), Module::zero(r), Mat(0, 0, r->p())); }

MorphObject identity_object(const Module &m) { return MorphObject(m, m, identity_like(m.dim(), m.p())); }

MorphObject zero_to(const Module &m) { return MorphObject(Module::zero(m.algebra()), m, Mat(m.dim(), 0, m.p())); }

MorphObject to_zero(const Module &m) { return MorphObject(m, Module::zero(m.algebra()), Mat(0, m.dim(), m.p())); }

MorphObject direct_sum(const MorphObject &x, const MorphObject &y) {
    return MorphObject(direct_sum(x.A(), y.A()), direct_sum(x.B(), y.B()), homcat::direct_sum(x.f(), y.f()), x.side());
}

MorphObject direct_sum(const std::vector<MorphObject> &xs, const AlgebraPtr &r) {
    MorphObject s = zero_object(r);
    if (!xs.empty()) s = s.on_side(xs[0].side());
    for (auto &x : xs) s = direct_sum(s, x);
    return s;
}

std::vector<Mat> hom_basis(const MorphObject &x, const MorphObject &y) {
    auto [mx, my] = common_side(x, y);
    return hom_basis(mx, my);
}

bool is_isomorphic(const MorphObject &x, const MorphObject &y) {
    auto [mx, my] = common_side(x, y);
    return is_isomorphic(mx, my);
}

std::vector<MorphObject> decompose(const MorphObject &x) {
    std::vector<MorphObject> out;
    for (auto &s : x.module().decomposition().summands) out.push_back(to_object(s));
    return out;
}

bool is_indecomposable(const MorphObject &x) { return is_indecomposable(x.module()); }

bool is_projective(const MorphObject &x) { return is_projective(x.module()); }

bool is_mono(const MorphObject &x) { return rank(x.f()) == x.A().dim(); }

bool is_epi(const MorphObject &x) { return rank(x.f()) == x.B().dim(); }

Classification classify(const MorphObject &x) {
    Classification c;
    const auto &r = x.ring();
    bool gor = r->flags().gorenstein_local;
    c.in_S = is_mono(x);
    c.in_E = is_epi(x);
    if (gor) c.in_G = c.in_S;
    c.projective = is_projective(x);
    if (gor) {
        Module reg = Module::regular(r);
        MorphObject i1 = identity_object(reg).on_side(x.side()), i2 = to_zero(reg).on_side(x.side());
        bool inj = true;
        for (auto &s : decompose(x))
            if (!is_isomorphic(s, i1) && !is_isomorphic(s, i2)) inj = false;
        c.injective_in_H = inj;
    }
    return c;
}

MorphObject ker_object(const MorphObject &x) {
    auto k = kernel(ModuleMap{x.A(), x.B(), x.f()});
    return MorphObject(k.source, x.A(), k.matrix, x.side());
}

MorphObject cok_object(const MorphObject &x) {
    Quotient q = quotient(x.B(), x.f());
    return MorphObject(x.B(), q.module, q.proj, x.side());
}

MorphMap cok_map(const MorphMap &m) {
    Quotient qs = quotient(m.source.B(), m.source.f());
    Quotient qt = quotient(m.target.B(), m.target.f());
    MorphObject s(m.source.B(), qs.module, qs.proj, m.source.side());
    MorphObject t(m.target.B(), qt.module, qt.proj, m.target.side());
    return {s, t, m.b, qt.proj * (m.b * qs.section)};
}

MorphMap ker_map(const MorphMap &m) {
    MorphObject s = ker_object(m.source), t = ker_object(m.target);
    auto k = solve(t.f(), m.a * s.f());
    if (!k) throw std::logic_error("kernel map does not restrict");
    return {s, t, *k, m.a};
}

MorphMap projective_cover(const MorphObject &x) {
    require_mono(x, "projective cover in M");
    auto cov = projective_cover(x.module());
    Reading rp = read_object(cov.source);
    return split_map(rp.object, x, cov.matrix * rp.basis);
}

MorphObject syzygy(const MorphObject &x, std::size_t i) {
    require_mono(x, "syzygy in M");
    return to_object(syzygy(x.module(), i));
}

ShapeCheck syzygy_shape(const MorphObject &x, const MorphObject &omega, std::size_t i) {
    ShapeCheck s;
    const auto &r = x.ring();
    s.source = is_isomorphic(omega.A(), syzygy(x.A(), i));
    Module ob = syzygy(x.B(), i);
    if (omega.B().dim() >= ob.dim() && (omega.B().dim() - ob.dim()) % r->dim() == 0) {
        s.q = (omega.B().dim() - ob.dim()) / r->dim();
        s.target = is_isomorphic(omega.B(), direct_sum(ob, free_r(r, s.q)));
    }
    s.mono = is_mono(omega);
    return s;
}

TransposeM transpose(const MorphObject &x) {
    require_mono(x, "transpose in M");
    TransposeM t;
    const auto &r = x.ring();
    t.tr = to_object(transpose(x.module()));
    Quotient cq = quotient(x.B(), x.f());
    const Module &c = cq.module;
    t.source_iso = is_isomorphic(t.tr.A(), transpose(c));
    Module trb = transpose(x.B());
    const std::size_t tb = t.tr.B().dim();
    if (tb >= trb.dim() && (tb - trb.dim()) % r->dim() == 0) {
        t.q = (tb - trb.dim()) / r->dim();
        t.target_iso = is_isomorphic(t.tr.B(), direct_sum(trb, free_r(r, t.q)));
    }
    Mat fd = homcat::dual_map(x.A(), x.B(), x.f());
    std::size_t ker_h = t.tr.A().dim() - rank(t.tr.f());
    std::size_t cok_fd = dual(x.A()).dim() - rank(fd);
    Quotient h = quotient(t.tr.B(), t.tr.f());
    t.exact = ker_h == cok_fd && is_isomorphic(h.module, transpose(x.A()));
    if (ext_dim(c, Module::regular(r), 1) == 0) t.mono = is_mono(t.tr);
    return t;
}

MorphObject lambda(const MorphObject &x, int power) {
    require_mono(x, "lambda");
    Module m = x.module();
    for (int k = 0; k < power; ++k) m = homcat::lambda(m);
    return to_object(m);
}

LinkedM linked(const MorphObject &x) {
    require_mono(x, "linkage in M");
    LinkedM l;
    auto rep = linkage(x.module());
    l.direct = rep.lambda_square_iso;
    l.stable = rep.stable;
    l.ext_criterion = rep.linked;
    if (is_stable(x.A()) && is_stable(x.B())) l.component = linkage(x.A()).linked && linkage(x.B()).linked;
    return l;
}

bool nilpotent_ideal(const std::vector<Mat> &ideal) {
    if (ideal.empty()) return true;
    const std::size_t n = ideal[0].rows();
    const std::uint32_t p = ideal[0].modulus();
    std::vector<Mat> w = ideal;
    for (std::size_t k = 0; k <= n; ++k) {
        SpanBuilder span(n * n, p);
        std::vector<Mat> next;
        for (auto &a : w)
            for (auto &b : ideal) {
                Mat c = a * b;
                if (span.add(c.flatten())) next.push_back(std::move(c));
            }
        if (next.empty()) return true;
        w = std::move(next);
    }
    return false;
}

Approximation e_envelope(const MorphObject &x) {
    const auto &a = x.A();
    const auto &b = x.B();
    Quotient q = quotient(b, x.f());
    const CoverData &cc = q.module.cover();
    const auto &idem = x.ring()->primitive_idempotents();
    std::vector<Vec> images;
    for (std::size_t j = 0; j < cc.generators.size(); ++j)
        images.push_back(b.act_of(idem[cc.free.types[j]]) * (q.section * cc.generators[j]));
    Mat p = free_hom(cc.free, b, images);
    const Module &pm = cc.free.module;
    MorphObject env(direct_sum(a, pm), b, hstack(x.f(), p), x.side());
    Mat ia = vstack(Mat::identity(a.dim(), a.p()), Mat(pm.dim(), a.dim(), a.p()));
    MorphMap m{x, env, ia, Mat::identity(b.dim(), b.p())};
    Mat mm = m.module_matrix();
    auto v = kernel_ideal(hom_basis(env.module(), env.module()), [&](const Mat &k) { return k * mm; });
    return {env, m, nilpotent_ideal(v)};
}

Approximation g_cover(const MorphObject &x) {
    require_gorenstein(x.ring(), "G-cover");
    const auto &a = x.A();
    const auto &b = x.B();
    auto k = kernel(ModuleMap{a, b, x.f()});
    auto env = injective_envelope(k.source);
    const Module &inj = env.target;
    Mat e(inj.dim(), a.dim(), a.p());
    if (inj.dim()) {
        auto hs = hom_basis(a, inj);
        Mat sys(inj.dim() * k.source.dim(), hs.size(), a.p());
        for (std::size_t j = 0; j < hs.size(); ++j) sys.set_col(j, (hs[j] * k.matrix).flatten());
        auto c = solve(sys, Mat::column(env.matrix.flatten(), a.p()));
        if (!c) throw std::logic_error("kernel envelope does not extend");
        e = combine(hs, c->col(0));
    }
    MorphObject cov(a, direct_sum(b, inj), vstack(x.f(), e), x.side());
    Mat pb = hstack(Mat::identity(b.dim(), b.p()), Mat(b.dim(), inj.dim(), b.p()));
    MorphMap m{cov, x, Mat::identity(a.dim(), a.p()), pb};
    Mat mm = m.module_matrix();
    auto v = kernel_ideal(hom_basis(cov.module(), cov.module()), [&](const Mat &h) { return mm * h; });
    return {cov, m, nilpotent_ideal(v)};
}

MorphObject red(const MorphObject &x, RedContext ctx) {
    Module reg = Module::regular(x.ring());
    MorphObject i1 = identity_object(reg).on_side(x.side()), i2 = to_zero(reg).on_side(x.side());
    std::vector<MorphObject> keep;
    for (auto &s : x.module().decomposition().summands) {
        bool drop = ctx == RedContext::M_or_G ? is_projective(s) : false;
        MorphObject o = to_object(s);
        if (ctx == RedContext::E) drop = is_isomorphic(o, i1) || is_isomorphic(o, i2);
        if (!drop) keep.push_back(o);
    }
    return direct_sum(keep, x.ring()).on_side(x.side());
}

MorphObject dual_object(const MorphObject &x) {
    require_gorenstein(x.ring(), "the dual (-)'");
    return MorphObject(dual(x.B()), dual(x.A()), homcat::dual_map(x.A(), x.B(), x.f()), x.side());
}

MorphMap dual_map(const MorphMap &m) {
    MorphObject s = dual_object(m.target), t = dual_object(m.source);
    return {s, t, homcat::dual_map(m.source.B(), m.target.B(), m.b), homcat::dual_map(m.source.A(), m.target.A(), m.a)};
}

namespace {

SpanBuilder trivial_span(const Module &mx, const Module &my, const AlgebraPtr &r, StableVariant v) {
    Module reg = Module::regular(r);
    std::vector<MorphObject> tests = {identity_object(reg), v == StableVariant::proj ? zero_to(reg) : to_zero(reg)};
    SpanBuilder span(mx.dim() * my.dim(), r->p());
    for (auto &t : tests) {
        auto us = hom_basis(mx, t.module());
        auto vs = hom_basis(t.module(), my);
        for (auto &u : us)
            for (auto &w : vs) span.add((w * u).flatten());
    }
    return span;
}

} // namespace

std::size_t stable_hom_dim(const MorphObject &x, const MorphObject &y, StableVariant v) {
    Module mx = side_m(x), my = side_m(y);
    auto hs = hom_basis(mx, my);
    if (hs.empty()) return 0;
    return hs.size() - trivial_span(mx, my, x.ring(), v).dim();
}

std::size_t stable_hom_image_dim(const MorphObject &x, const MorphMap &m, StableVariant v) {
    Module mx = side_m(x), ms = side_m(m.source), mt = side_m(m.target);
    Mat mm = m.module_matrix();
    SpanBuilder span = trivial_span(mx, mt, x.ring(), v);
    const std::size_t base = span.dim();
    for (auto &h : hom_basis(mx, ms)) span.add((mm * h).flatten());
    return span.dim() - base;
}

} // namespace homcat
