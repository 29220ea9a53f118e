#include "homcat/module.hpp"

namespace homcat {

bool is_projective(const Module &m) { return m.cover().kernel.cols() == 0; }

bool is_stable(const Module &m) {
    for (auto &x : m.decomposition().summands)
        if (is_projective(x)) return false;
    return true;
}

ModuleMap projective_cover(const Module &m) {
    const CoverData &c = m.cover();
    return {c.free.module, m, c.pi};
}

Module syzygy(const Module &m, std::size_t i) {
    Module x = m;
    for (std::size_t k = 0; k < i; ++k) x = x.cover().syzygy;
    return x;
}

const DualData &Module::dual_data() const {
    std::call_once(d_->dual_once, [this] {
        auto d = std::make_shared<DualData>();
        const auto &a = algebra();
        auto op = opposite(a);
        const std::uint32_t pp = p();
        d->basis = hom_basis(*this, Module::regular(a));
        const std::size_t r = d->basis.size(), len = a->dim() * dim();
        Mat flat(len, r, pp);
        for (std::size_t k = 0; k < r; ++k) flat.set_col(k, d->basis[k].flatten());
        d->coords = r ? left_inverse(flat) : Mat(0, len, pp);
        std::vector<Mat> acts;
        for (std::size_t i = 0; i < a->dim(); ++i) {
            Mat act(r, r, pp);
            for (std::size_t k = 0; k < r; ++k) act.set_col(k, d->coords * (a->left(i) * d->basis[k]).flatten());
            acts.push_back(act);
        }
        d->module = Module(op, acts);
        d_->dual = d;
    });
    return *d_->dual;
}

Module dual(const Module &m) { return m.dual_data().module; }

Mat dual_map(const Module &x, const Module &y, const Mat &psi) {
    const DualData &dx = x.dual_data(), &dy = y.dual_data();
    Mat r(dx.basis.size(), dy.basis.size(), x.p());
    for (std::size_t k = 0; k < dy.basis.size(); ++k) r.set_col(k, dx.coords * (dy.basis[k] * psi).flatten());
    return r;
}

Module field_dual(const Module &m) {
    std::vector<Mat> acts;
    for (auto &a : m.actions()) acts.push_back(a.transpose());
    return Module(opposite(m.algebra()), acts);
}

Mat field_dual_map(const Mat &psi) { return psi.transpose(); }

ModuleMap injective_envelope(const Module &m) {
    if (!m.algebra()->is_commutative()) throw PreconditionError("injective envelope is implemented over commutative rings");
    Module dm = field_dual(m);
    const CoverData &c = dm.cover();
    Module env = field_dual(c.free.module);
    return {m, env, field_dual_map(c.pi)};
}

const TransposeData &Module::transpose_data() const {
    std::call_once(d_->tr_once, [this] {
        auto t = std::make_shared<TransposeData>();
        auto op = opposite(algebra());
        const CoverData &c0 = cover();
        const CoverData &c1 = c0.syzygy.cover();
        t->d = c0.kernel * c1.pi;
        t->p0_dual = free_module(op, c0.free.types);
        t->p1_dual = free_module(op, c1.free.types);
        t->d_dual = dual_free_map(c1.free, c0.free, t->d, t->p1_dual, t->p0_dual);
        Quotient q = quotient(t->p1_dual.module, t->d_dual);
        t->tr = q.module;
        t->proj = q.proj;
        t->section = q.section;
        d_->tr = t;
    });
    return *d_->tr;
}

Module transpose(const Module &m) { return m.transpose_data().tr; }

Module lambda(const Module &m) { return syzygy(transpose(m)); }

std::size_t ext_dim(const Module &m, const Module &n, std::size_t i) {
    if (i == 0) return hom_dim(m, n);
    const Module x = syzygy(m, i - 1);
    const CoverData &c = x.cover();
    const Module &om = c.syzygy;
    auto h = hom_basis(om, n);
    if (h.empty()) return 0;
    const std::uint32_t p = m.p();
    const auto &a = *m.algebra();
    SpanBuilder span(n.dim() * om.dim(), p);
    for (std::size_t j = 0; j < c.free.types.size(); ++j) {
        Mat v = column_basis(n.act_of(a.primitive_idempotents()[c.free.types[j]]));
        for (std::size_t k = 0; k < v.cols(); ++k) {
            std::vector<Vec> images(c.free.types.size(), Vec(n.dim(), 0));
            images[j] = v.col(k);
            span.add((free_hom(c.free, n, images) * c.kernel).flatten());
        }
    }
    return h.size() - span.dim();
}

Mat lift_to_covers(const Module &m, const Module &n, const Mat &f) {
    const CoverData &cm = m.cover(), &cn = n.cover();
    const auto &a = *m.algebra();
    std::vector<Vec> images;
    for (std::size_t j = 0; j < cm.generators.size(); ++j) {
        Vec target = f * cm.generators[j];
        Vec y = cn.section * target;
        Vec e = a.primitive_idempotents()[cm.free.types[j]];
        images.push_back(cn.free.module.act_of(e) * y);
    }
    return free_hom(cm.free, cn.free.module, images);
}

Mat syzygy_map(const Module &m, const Module &n, const Mat &f, std::size_t i) {
    Module x = m, y = n;
    Mat g = f;
    for (std::size_t k = 0; k < i; ++k) {
        Mat p0 = lift_to_covers(x, y, g);
        const CoverData &cx = x.cover(), &cy = y.cover();
        if (cx.kernel.cols() == 0 || cy.kernel.cols() == 0) {
            g = Mat(cy.kernel.cols(), cx.kernel.cols(), m.p());
        } else {
            g = left_inverse(cy.kernel) * (p0 * cx.kernel);
        }
        x = cx.syzygy;
        y = cy.syzygy;
    }
    return g;
}

Mat transpose_map(const Module &m, const Module &n, const Mat &f) {
    const TransposeData &tm = m.transpose_data(), &tn = n.transpose_data();
    const CoverData &c0m = m.cover(), &c0n = n.cover();
    Mat phi0 = lift_to_covers(m, n, f);
    // phi0 restricted to the syzygies, then lifted to their covers
    Mat om = c0m.kernel.cols() && c0n.kernel.cols() ? Mat(left_inverse(c0n.kernel) * (phi0 * c0m.kernel))
                                                     : Mat(c0n.kernel.cols(), c0m.kernel.cols(), m.p());
    Mat phi1 = lift_to_covers(c0m.syzygy, c0n.syzygy, om);
    Mat phi1_dual = dual_free_map(c0m.syzygy.cover().free, c0n.syzygy.cover().free, phi1, tm.p1_dual, tn.p1_dual);
    return tm.proj * (phi1_dual * tn.section);
}

namespace {

void require_gorenstein(const Module &m) {
    if (!m.algebra()->flags().gorenstein_local) throw PreconditionError("tau needs a Gorenstein local commutative ring");
}

} // namespace

Module tau(const Module &m) {
    require_gorenstein(m);
    return dual(transpose(m));
}

Module tau_inverse(const Module &m) {
    require_gorenstein(m);
    return dual(tau(dual(m)));
}

Mat tau_map(const Module &m, const Module &n, const Mat &f) {
    require_gorenstein(m);
    Mat trf = transpose_map(m, n, f);
    return dual_map(transpose(n), transpose(m), trf);
}

Mat tau_inverse_map(const Module &m, const Module &n, const Mat &f) {
    Mat fd = dual_map(m, n, f); // N' -> M'
    Mat t = tau_map(dual(n), dual(m), fd); // tau N' -> tau M'
    return dual_map(tau(dual(n)), tau(dual(m)), t);
}

LinkageReport linkage(const Module &m) {
    LinkageReport r;
    r.stable = is_stable(m);
    Module tr = transpose(m);
    r.ext_vanishes = ext_dim(tr, Module::regular(tr.algebra()), 1) == 0;
    r.linked = r.stable && r.ext_vanishes;
    r.lambda_square_iso = is_isomorphic(m, lambda(lambda(m)));
    return r;
}

} // namespace homcat
