#include "homcat/ar.hpp"
#include "homcat/matalg.hpp"

namespace homcat {

std::string category_name(Category c) {
    switch (c) {
    case Category::R: return "R";
    case Category::H: return "H";
    case Category::G: return "G";
    case Category::E: return "E";
    }
    return "?";
}

Category parse_category(const std::string &s) {
    if (s == "R") return Category::R;
    if (s == "H") return Category::H;
    if (s == "G") return Category::G;
    if (s == "E") return Category::E;
    throw InputError("unknown category '" + s + "' (expected R, H, G or E)");
}

namespace {

MorphObject on_m(const MorphObject &x) { return x.side() == Side::M ? x : x.on_side(Side::M); }

void require_gorenstein(const AlgebraPtr &r) {
    if (!r->flags().gorenstein_local) throw PreconditionError("Auslander-Reiten translates need a Gorenstein local base ring");
}

bool all_summands_like(const MorphObject &x, const std::vector<MorphObject> &kinds) {
    for (auto &s : decompose(x)) {
        bool hit = false;
        for (auto &k : kinds) hit = hit || is_isomorphic(s, k);
        if (!hit) return false;
    }
    return true;
}

Mat zero_mat(std::size_t r, std::size_t c, std::uint32_t p) { return Mat(r, c, p); }

// Coefficients c with sum_j c_j maps_j = target, or nothing.
std::optional<Mat> combination(const std::vector<Mat> &maps, const Mat &target) {
    const std::uint32_t p = target.modulus();
    if (maps.empty()) return target.is_zero() ? std::optional<Mat>(Mat(0, 1, p)) : std::nullopt;
    Mat sys(target.rows() * target.cols(), maps.size(), p);
    for (std::size_t j = 0; j < maps.size(); ++j) sys.set_col(j, maps[j].flatten());
    return solve(sys, Mat::column(target.flatten(), p));
}

struct Extension {
    Module middle;
    Mat incl, proj;
};

// Pushout of 0 -> Omega C -> P -> C -> 0 along a cocycle that is killed by the radicals of
// End(C) and End(L) and is not a coboundary.
Extension socle_extension(const Module &c, const Module &l) {
    const std::uint32_t p = c.p();
    const CoverData &cov = c.cover();
    const Module &om = cov.syzygy;
    auto z = hom_basis(om, l);
    SpanBuilder bound(l.dim() * om.dim(), p);
    for (auto &psi : hom_basis(cov.free.module, l)) bound.add((psi * cov.kernel).flatten());
    if (bound.dim() == z.size()) throw std::logic_error("Ext^1 vanishes for an almost split end; the left term is wrong");
    std::vector<Mat> right_ops;
    for (auto &r : radical_basis(hom_basis(c, c))) {
        Mat r0 = lift_to_covers(c, c, r);
        right_ops.push_back(left_inverse(cov.kernel) * (r0 * cov.kernel));
    }
    auto left_ops = radical_basis(hom_basis(l, l));
    const std::size_t len = l.dim() * om.dim();
    const std::size_t rows = len * (right_ops.size() + left_ops.size());
    Mat ker = Mat::identity(z.size(), p);
    if (rows) {
        Mat sys(rows, z.size(), p);
        for (std::size_t j = 0; j < z.size(); ++j) {
            Vec col;
            col.reserve(rows);
            for (auto &r1 : right_ops) {
                Vec v = bound.residue((z[j] * r1).flatten());
                col.insert(col.end(), v.begin(), v.end());
            }
            for (auto &s : left_ops) {
                Vec v = bound.residue((s * z[j]).flatten());
                col.insert(col.end(), v.begin(), v.end());
            }
            sys.set_col(j, col);
        }
        ker = kernel_basis(sys);
    }
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Mat phi = combine(z, ker.col(k));
        if (bound.contains(phi.flatten())) continue;
        const Module &pm = cov.free.module;
        Mat w = vstack(phi, cov.kernel.scaled(p - 1));
        Quotient q = quotient(direct_sum(l, pm), w);
        Mat il = vstack(Mat::identity(l.dim(), p), zero_mat(pm.dim(), l.dim(), p));
        Mat pr = hstack(zero_mat(c.dim(), l.dim(), p), cov.pi);
        return {q.module, q.proj * il, pr * q.section};
    }
    throw std::logic_error("no almost split class in Ext^1");
}

ARReport base_report(const ARSequence &s) {
    ARReport rep;
    std::vector<Mat> comp;
    for (auto &h : hom_basis(s.right, s.middle)) comp.push_back(s.proj * h);
    rep.non_split = !combination(comp, Mat::identity(s.right.dim(), s.right.p()));
    rep.left_end_local = end_is_local(s.left);
    rep.right_end_local = end_is_local(s.right);
    return rep;
}

} // namespace

ARSequence make_sequence(Category cat, const MorphObject &l, const MorphObject &m, const MorphObject &r, const MorphMap &incl,
                         const MorphMap &proj) {
    ARSequence s;
    s.cat = cat;
    s.left = on_m(l).module();
    s.middle = on_m(m).module();
    s.right = on_m(r).module();
    s.incl = incl.module_matrix();
    s.proj = proj.module_matrix();
    return s;
}

void check_exact(const ARSequence &s) {
    if (s.incl.rows() != s.middle.dim() || s.incl.cols() != s.left.dim() || s.proj.rows() != s.right.dim() ||
        s.proj.cols() != s.middle.dim())
        throw InputError("sequence maps have the wrong shapes");
    if (s.middle.dim() != s.left.dim() + s.right.dim())
        throw InputError("sequence is not exact: dim middle != dim left + dim right");
    if (!is_homomorphism(s.left, s.middle, s.incl) || !is_homomorphism(s.middle, s.right, s.proj))
        throw InputError("sequence maps are not homomorphisms");
    if (!(s.proj * s.incl).is_zero()) throw InputError("sequence is not a complex");
    if (rank(s.incl) != s.left.dim() || rank(s.proj) != s.right.dim()) throw InputError("sequence is not exact at an end");
}

bool in_category(const MorphObject &x, Category cat) {
    switch (cat) {
    case Category::R: return false;
    case Category::H: return true;
    case Category::G: return is_mono(x);
    case Category::E: return is_epi(x);
    }
    return false;
}

bool is_projective_in(const MorphObject &x, Category cat) {
    if (cat == Category::E) {
        Module reg = Module::regular(x.ring());
        return all_summands_like(x, {identity_object(reg), to_zero(reg)});
    }
    return is_projective(x);
}

bool is_injective_in(const MorphObject &x, Category cat) {
    if (cat == Category::H) {
        Module reg = Module::regular(x.ring());
        return all_summands_like(x, {identity_object(reg), to_zero(reg)});
    }
    return is_projective_in(x, cat);
}

MorphObject tau_R(const MorphObject &f) { return MorphObject(tau(f.A()), tau(f.B()), tau_map(f.A(), f.B(), f.f())); }

MorphObject tau_inverse_R(const MorphObject &f) {
    return MorphObject(tau_inverse(f.A()), tau_inverse(f.B()), tau_inverse_map(f.A(), f.B(), f.f()));
}

namespace {

// Krull dimension of the base; always 0 for the artinian rings handled here.
constexpr std::size_t krull_dim = 0;

MorphObject tau_h(const MorphObject &f) {
    return on_m(dual_object(to_object(syzygy(transpose(on_m(f).module()), krull_dim))));
}

MorphObject tau_g(const MorphObject &f) { return on_m(red(g_cover(tau_R(cok_object(f))).object)); }

MorphObject tau_e(const MorphObject &g) { return on_m(cok_object(red(g_cover(tau_R(g)).object))); }

MorphObject tau_inv_g(const MorphObject &f) {
    return on_m(ker_object(red(e_envelope(tau_inverse_R(f)).object, RedContext::E)));
}

MorphObject tau_inv_e(const MorphObject &g) {
    return on_m(red(e_envelope(tau_inverse_R(ker_object(g))).object, RedContext::E));
}

MorphObject tau_inv_h(const MorphObject &g) {
    if (is_epi(g)) return on_m(ker_object(red(e_envelope(tau_inverse_R(g)).object, RedContext::E)));
    return on_m(dual_object(tau_h(dual_object(g))));
}

} // namespace

MorphObject tau_morphism(const MorphObject &f0, Category cat, Direction dir) {
    MorphObject f = on_m(f0);
    require_gorenstein(f.ring());
    if (cat == Category::R) throw InputError("use the module translate for category R");
    if (!in_category(f, cat)) throw PreconditionError("object is not in " + category_name(cat));
    if (!is_indecomposable(f)) throw PreconditionError("translate needs an indecomposable object");
    if (dir == Direction::forward) {
        if (is_projective_in(f, cat)) throw PreconditionError("object is projective in " + category_name(cat));
        switch (cat) {
        case Category::H: return tau_h(f);
        case Category::G: return tau_g(f);
        default: return tau_e(f);
        }
    }
    if (is_injective_in(f, cat)) throw PreconditionError("object is injective in " + category_name(cat));
    switch (cat) {
    case Category::H: return tau_inv_h(f);
    case Category::G: return tau_inv_g(f);
    default: return tau_inv_e(f);
    }
}

bool TauHForms::agree() const { return is_isomorphic(transpose_dual, via_cover) && is_isomorphic(transpose_dual, via_envelope); }

TauHForms tau_H_forms(const MorphObject &f0) {
    MorphObject f = on_m(f0);
    require_gorenstein(f.ring());
    TauHForms t;
    t.transpose_dual = tau_h(f);
    t.via_cover = on_m(cok_object(red(g_cover(tau_R(f)).object)));
    t.via_envelope = on_m(red(e_envelope(tau_R(cok_object(f))).object, RedContext::E));
    return t;
}

bool classical_cross_check(const MorphObject &f0) {
    MorphObject f = on_m(f0);
    MorphObject classical = to_object(field_dual(transpose(f.module())));
    return is_isomorphic(tau_h(f), classical);
}

ARSequence almost_split_sequence(const Module &end) {
    require_gorenstein(end.algebra());
    if (!is_indecomposable(end)) throw PreconditionError("almost split sequences end at indecomposable modules");
    if (is_projective(end)) throw PreconditionError("no almost split sequence ends at a projective module");
    Module l = tau(end);
    Extension e = socle_extension(end, l);
    ARSequence s;
    s.cat = Category::R;
    s.left = l;
    s.middle = e.middle;
    s.right = end;
    s.incl = e.incl;
    s.proj = e.proj;
    s.report = base_report(s);
    return s;
}

ARSequence almost_split_sequence(const MorphObject &end0, Category cat) {
    if (cat == Category::R) throw InputError("category R takes a module");
    MorphObject end = on_m(end0);
    MorphObject l = tau_morphism(end, cat);
    Extension e = socle_extension(end.module(), l.module());
    Reading rd = read_object(e.middle);
    ARSequence s;
    s.cat = cat;
    s.left = l.module();
    s.middle = rd.object.module();
    s.right = end.module();
    s.incl = left_inverse(rd.basis) * e.incl;
    s.proj = e.proj * rd.basis;
    s.report = base_report(s);
    return s;
}

namespace {

ARReport verify_modules(const ARSequence &s, const std::vector<Module> &corpus) {
    check_exact(s);
    ARReport rep = base_report(s);
    rep.right_almost_split = true;
    auto rad = radical_basis(hom_basis(s.right, s.right));
    for (auto &x : corpus) {
        if (!is_indecomposable(x)) continue;
        ++rep.corpus_size;
        auto hx = hom_basis(x, s.right);
        if (hx.empty()) continue;
        SpanBuilder span(s.right.dim() * x.dim(), x.p());
        for (auto &h : hom_basis(x, s.middle)) span.add((s.proj * h).flatten());
        std::vector<Mat> targets;
        if (auto u = iso_indecomposable(x, s.right)) {
            for (auto &r : rad) targets.push_back(r * *u);
        } else {
            targets = hx;
        }
        for (auto &t : targets) {
            if (span.contains(t.flatten())) continue;
            rep.right_almost_split = false;
            if (rep.witness.empty())
                rep.witness = "a map from a corpus member of dimension " + std::to_string(x.dim()) +
                              " does not factor through the middle term";
        }
    }
    if (!rep.non_split && rep.witness.empty()) rep.witness = "the sequence splits";
    return rep;
}

} // namespace

ARReport verify_almost_split(const ARSequence &s, const std::vector<Module> &corpus) { return verify_modules(s, corpus); }

ARReport verify_almost_split(const ARSequence &s, const std::vector<MorphObject> &corpus) {
    std::vector<Module> ms;
    for (auto &x : corpus)
        if (in_category(x, s.cat)) ms.push_back(on_m(x).module());
    return verify_modules(s, ms);
}

ARSequence explicit_family(const ARSequence &seq, const std::string &which) {
    if (seq.cat != Category::R) throw PreconditionError("explicit families start from an almost split sequence of R-modules");
    if (!seq.report.ok()) throw PreconditionError("the input sequence has not been verified as almost split");
    const Module &a = seq.left, &b = seq.middle, &c = seq.right;
    const Mat &f = seq.incl, &g = seq.proj;
    const std::uint32_t p = a.p();
    if (which == "i") {
        MorphObject l = identity_object(a), m(a, b, f), rr = zero_to(c);
        return make_sequence(Category::G, l, m, rr, {l, m, Mat::identity(a.dim(), p), f}, {m, rr, zero_mat(0, a.dim(), p), g});
    }
    if (which == "iii") {
        MorphObject l = to_zero(a), m(b, c, g), rr = identity_object(c);
        return make_sequence(Category::E, l, m, rr, {l, m, f, zero_mat(c.dim(), 0, p)}, {m, rr, g, Mat::identity(c.dim(), p)});
    }
    if (which != "ii" && which != "iv") throw InputError("unknown family '" + which + "' (expected i, ii, iii or iv)");
    auto env = injective_envelope(a);
    const Module &pm = env.target;
    const Mat &e = env.matrix;
    auto hs = hom_basis(b, pm);
    std::vector<Mat> comp;
    for (auto &h : hs) comp.push_back(h * f);
    auto sol = combination(comp, e);
    if (!sol) throw std::logic_error("the projective envelope does not extend over the middle term");
    Mat u = hs.empty() ? zero_mat(pm.dim(), b.dim(), p) : combine(hs, sol->col(0));
    MorphObject l(a, pm, e), m(b, direct_sum(pm, c), vstack(u, g)), rr = identity_object(c);
    MorphMap incl{l, m, f, vstack(Mat::identity(pm.dim(), p), zero_mat(c.dim(), pm.dim(), p))};
    MorphMap proj{m, rr, g, hstack(zero_mat(c.dim(), pm.dim(), p), Mat::identity(c.dim(), p))};
    if (which == "ii") return make_sequence(Category::G, l, m, rr, incl, proj);
    MorphMap ci = cok_map(incl), cp = cok_map(proj);
    return make_sequence(Category::E, ci.source, ci.target, cp.target, ci, cp);
}

ClosingExample closing_example(const Module &a) {
    require_gorenstein(a.algebra());
    if (is_projective(a)) throw PreconditionError("the closing example needs a non-projective module");
    const std::uint32_t p = a.p();
    ClosingExample ex;
    auto env = injective_envelope(a);
    ex.f = MorphObject(a, env.target, env.matrix);
    if (!end_is_local(ex.f.module())) throw PreconditionError("the envelope object does not have a local endomorphism ring");
    Quotient lq = quotient(env.target, env.matrix);
    const Module &l = lq.module;
    Module tl = tau(l);
    auto qc = projective_cover(tl);
    ex.tau_shape = is_isomorphic(tau_morphism(ex.f, Category::H), MorphObject(qc.source, tl, qc.matrix));

    ex.sequence = almost_split_sequence(ex.f, Category::H);
    MorphObject mid = ex.sequence.middle_object();
    ex.rows_split = is_isomorphic(mid.A(), direct_sum(qc.source, a)) && is_isomorphic(mid.B(), direct_sum(tl, env.target));

    ARSequence base = almost_split_sequence(l);
    const Module &x = base.middle;
    auto hs = hom_basis(env.target, x);
    std::vector<Mat> comp;
    for (auto &h : hs) comp.push_back(base.proj * h);
    auto sol = combination(comp, lq.proj);
    if (!sol) throw std::logic_error("the projective does not lift over the almost split sequence");
    Mat beta = combine(hs, sol->col(0));
    Mat alpha = left_inverse(base.incl) * (beta * env.matrix);
    // (q, a) |-> (pi q + alpha a, f a)
    Mat top = hstack(qc.matrix, alpha);
    Mat bottom = hstack(zero_mat(env.target.dim(), qc.source.dim(), p), env.matrix);
    MorphObject g(direct_sum(qc.source, a), direct_sum(tl, env.target), vstack(top, bottom));
    ex.middle_matches = is_isomorphic(mid, g);
    return ex;
}

} // namespace homcat
