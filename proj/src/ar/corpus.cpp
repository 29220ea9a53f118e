#include "homcat/corpus.hpp"
#include "homcat/matalg.hpp"

#include <functional>
#include <random>

namespace homcat {

bool add_unique(std::vector<Module> &set, const Module &x) {
    for (auto &y : set)
        if (y.dim() == x.dim() && is_isomorphic(y, x)) return false;
    set.push_back(x);
    return true;
}

bool add_unique(std::vector<MorphObject> &set, const MorphObject &x) {
    for (auto &y : set)
        if (y.A().dim() == x.A().dim() && y.B().dim() == x.B().dim() && is_isomorphic(y, x)) return false;
    set.push_back(x);
    return true;
}

namespace {

Module right_ideal_quotient(const AlgebraPtr &r, const std::vector<Vec> &gens) {
    Module reg = Module::regular(r);
    SpanBuilder span(r->dim(), r->p());
    std::vector<Vec> cols;
    for (auto &g : gens)
        for (std::size_t j = 0; j < r->dim(); ++j) {
            Vec v = r->product(g, r->basis_vector(j));
            if (span.add(v)) cols.push_back(v);
        }
    if (cols.empty()) return reg;
    return quotient(reg, Mat::from_columns(cols, r->dim(), r->p())).module;
}

Module radical_module(const AlgebraPtr &r) {
    const auto &rad = r->radical();
    if (rad.empty()) return Module::zero(r);
    return submodule(Module::regular(r), Mat::from_columns(rad, r->dim(), r->p()));
}

void add_summands(std::vector<Module> &set, const Module &m, std::size_t cap) {
    if (m.dim() == 0) return;
    for (auto &s : m.decomposition().summands)
        if (s.dim() <= cap) add_unique(set, s);
}

} // namespace

std::vector<Module> module_corpus(const AlgebraPtr &r, const CorpusOptions &o) {
    std::vector<Module> set;
    const bool same_op = same_algebra(opposite(r), r);
    const bool gor = r->flags().gorenstein_local;
    add_summands(set, Module::regular(r), o.max_dim_r);
    add_summands(set, right_ideal_quotient(r, r->radical()), o.max_dim_r);
    for (auto &a : r->radical()) add_summands(set, right_ideal_quotient(r, {a}), o.max_dim_r);
    add_summands(set, radical_module(r), o.max_dim_r);
    std::size_t done = 0;
    for (std::size_t round = 0; round < o.rounds; ++round) {
        const std::size_t end = set.size();
        if (done == end) break;
        for (std::size_t i = done; i < end; ++i) {
            Module m = set[i];
            std::vector<std::function<Module()>> ops = {[&] { return syzygy(m); }};
            if (same_op) {
                ops.push_back([&] { return transpose(m); });
                ops.push_back([&] { return dual(m); });
                if (r->is_commutative()) ops.push_back([&] { return field_dual(m); });
            }
            if (gor) {
                ops.push_back([&] { return tau(m); });
                ops.push_back([&] { return tau_inverse(m); });
            }
            for (auto &op : ops) {
                Module x = op();
                if (x.dim() <= 2 * o.max_dim_r && same_algebra(x.algebra(), r)) add_summands(set, Module(r, x.actions()), o.max_dim_r);
            }
        }
        done = end;
    }
    return set;
}

std::size_t ObjectCorpus::mono_count() const {
    std::size_t n = 0;
    for (auto &x : objects) n += is_mono(x);
    return n;
}

ObjectCorpus object_corpus(const AlgebraPtr &r, const CorpusOptions &o) {
    ObjectCorpus c;
    const std::uint32_t p = r->p();
    const bool gor = r->flags().gorenstein_local;
    auto mods = module_corpus(r, o);
    std::mt19937_64 rng(o.seed);
    std::vector<MorphObject> raw;
    auto fits = [&](const MorphObject &x) { return x.dim() > 0 && x.dim() <= o.max_dim_lambda; };
    const std::size_t raw_cap = 4 * o.max_indecomposables;
    auto push = [&](const MorphObject &x) {
        if (fits(x) && raw.size() < raw_cap) raw.push_back(x);
    };
    for (auto &m : mods) {
        push(zero_to(m));
        push(to_zero(m));
        push(identity_object(m));
    }
    for (auto &a : mods)
        for (auto &b : mods) {
            if (a.dim() + b.dim() > o.max_dim_lambda || raw.size() >= raw_cap) continue;
            auto hs = hom_basis(a, b);
            for (auto &h : hs) push(MorphObject(a, b, h));
            for (std::size_t k = 0; k < o.random_maps && hs.size() > 1; ++k) {
                Vec coeffs(hs.size());
                for (auto &x : coeffs) x = static_cast<std::uint32_t>(rng() % p);
                push(MorphObject(a, b, combine(hs, coeffs)));
            }
        }
    std::vector<MorphObject> indec;
    auto absorb = [&](const MorphObject &x) {
        if (!fits(x) || indec.size() >= o.max_indecomposables) return;
        for (auto &s : decompose(x))
            if (fits(s) && indec.size() < o.max_indecomposables) add_unique(indec, s.side() == Side::M ? s : s.on_side(Side::M));
    };
    for (auto &x : raw) absorb(x);
    const std::size_t base = indec.size();
    for (std::size_t i = 0; i < base; ++i) {
        MorphObject x = indec[i];
        absorb(ker_object(x));
        absorb(cok_object(x));
        if (gor) {
            absorb(dual_object(x));
            absorb(g_cover(x).object);
        }
        absorb(e_envelope(x).object);
    }
    c.indecomposables = indec;
    c.objects = indec;
    std::vector<MorphObject> monos;
    for (auto &x : indec)
        if (is_mono(x)) monos.push_back(x);
    auto count_monos = [&] { return c.mono_count(); };
    // sums of two, then three, monos
    for (std::size_t i = 0; i < monos.size() && count_monos() < o.target_monos; ++i)
        for (std::size_t j = i; j < monos.size() && count_monos() < o.target_monos; ++j) {
            MorphObject s = direct_sum(monos[i], monos[j]);
            if (fits(s)) c.objects.push_back(s);
        }
    for (std::size_t i = 0; i < monos.size() && count_monos() < o.target_monos; ++i)
        for (std::size_t j = i; j < monos.size() && count_monos() < o.target_monos; ++j)
            for (std::size_t k = j; k < monos.size() && count_monos() < o.target_monos; ++k) {
                MorphObject s = direct_sum(direct_sum(monos[i], monos[j]), monos[k]);
                if (fits(s)) c.objects.push_back(s);
            }
    for (std::size_t i = 0; i < indec.size() && c.objects.size() < o.target_objects; ++i)
        for (std::size_t j = i; j < indec.size() && c.objects.size() < o.target_objects; ++j) {
            if (is_mono(indec[i]) && is_mono(indec[j])) continue;
            MorphObject s = direct_sum(indec[i], indec[j]);
            if (fits(s)) c.objects.push_back(s);
        }
    return c;
}

} // namespace homcat
