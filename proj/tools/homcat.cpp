#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "homcat/check.hpp"
#include "homcat/io.hpp"

using namespace homcat;
namespace fs = std::filesystem;

namespace {

struct Flags {
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t max_dim = 0;
    std::string corpus, cat, ctx = "M", method, end;
    std::size_t i = 1;
};

struct Output {
    std::ostringstream text;
    Json doc;
    bool failed = false;
    Json log = Json::array();

    void assert_that(const std::string &what, bool ok) {
        log.push_back(what + ": " + (ok ? "pass" : "FAIL"));
        text << "  " << what << ": " << (ok ? "pass" : "FAIL") << "\n";
        failed = failed || !ok;
    }
};

[[noreturn]] void usage(const std::string &msg) { throw InputError(msg); }

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string summary(const Module &m) {
    std::ostringstream s;
    s << "dimension " << m.dim();
    if (m.dim() == 0) return s.str();
    s << ", summands:";
    for (auto &[x, k] : summand_classes(m)) {
        s << " ";
        if (k > 1) s << k << "x";
        s << "[dim " << x.dim() << (is_projective(x) ? ", projective" : "") << "]";
    }
    return s.str();
}

std::string summary(const MorphObject &x) {
    std::ostringstream s;
    s << "(" << x.A().dim() << " -> " << x.B().dim() << ")";
    auto parts = decompose(x);
    if (parts.size() > 1) {
        s << " =";
        for (std::size_t k = 0; k < parts.size(); ++k) s << (k ? " +" : "") << " (" << parts[k].A().dim() << " -> " << parts[k].B().dim() << ")";
    }
    if (x.dim()) s << (is_mono(x) ? ", mono" : "") << (is_epi(x) ? ", epi" : "");
    return s.str();
}

const std::string &single_input(const std::vector<std::string> &in, const std::string &what) {
    if (in.size() != 1) usage(what + " takes exactly one input file");
    return in[0];
}

CorpusOptions corpus_options(const Flags &f) {
    CorpusOptions o;
    o.seed = f.seed;
    if (f.max_dim) {
        o.max_dim_r = f.max_dim;
        o.max_dim_lambda = 2 * f.max_dim;
    }
    return o;
}

void put_module(Output &out, const std::string &label, const Module &m) {
    out.text << label << ": " << summary(m) << "\n";
    out.doc = module_to_json(m);
}

void put_morph(Output &out, const std::string &label, const MorphObject &x) {
    out.text << label << ": " << summary(x) << "\n";
    out.doc = morph_to_json(x);
}

// ring

void cmd_ring(const std::string &action, const std::vector<std::string> &in, const Flags &, Output &out, bool &raw_json) {
    AlgebraPtr r = load_ring(single_input(in, "ring " + action));
    if (action == "validate") {
        auto rep = validate_algebra(*r);
        out.doc["valid"] = rep.ok();
        out.doc["issues"] = rep.issues;
        if (rep.ok()) out.text << "valid: all axioms hold\n";
        for (auto &s : rep.issues) out.text << "axiom violated: " << s << "\n";
        out.failed = !rep.ok();
        return;
    }
    auto rep = validate_algebra(*r);
    if (!rep.ok()) throw InputError("ring fails its axioms: " + rep.issues.front());
    if (action == "classify") {
        auto f = classify_algebra(*r);
        out.doc["dim"] = r->dim();
        out.doc["commutative"] = f.commutative;
        out.doc["local"] = f.local;
        out.doc["gorenstein_local"] = f.gorenstein_local;
        out.doc["radical_dim"] = r->radical().size();
        out.doc["socle_dim"] = r->socle().size();
        out.text << "commutative: " << yes(f.commutative) << ", local: " << yes(f.local) << ", gorenstein: " << yes(f.gorenstein_local) << "\n";
        out.text << "dimension " << r->dim() << ", radical " << r->radical().size() << ", socle " << r->socle().size() << "\n";
    } else if (action == "triangular") {
        out.doc = ring_to_json(*triangular_extension(r));
        raw_json = true;
    } else if (action == "opposite") {
        out.doc = ring_to_json(*opposite(r));
        raw_json = true;
    } else {
        usage("unknown ring action '" + action + "' (validate, classify, triangular, opposite)");
    }
}

// module

void cmd_module(const std::string &action, const std::vector<std::string> &in, const Flags &f, Output &out) {
    Module m = load_module(single_input(in, "module " + action));
    if (action == "decompose") {
        Json parts = Json::array();
        out.text << "module " << summary(m) << "\n";
        for (auto &s : m.decomposition().summands) parts.push_back(module_to_json(s));
        out.doc["dim"] = m.dim();
        out.doc["summands"] = parts;
        Json proj = Json::array();
        for (auto &s : m.decomposition().summands) proj.push_back(is_projective(s));
        out.doc["projective"] = proj;
    } else if (action == "syzygy") {
        Module s = syzygy(m, f.i);
        put_module(out, "syzygy " + std::to_string(f.i), s);
        bool clean = true;
        for (auto &x : s.decomposition().summands) clean = clean && !is_projective(x);
        out.assert_that("no projective summand", clean);
    } else if (action == "transpose") {
        put_module(out, "transpose", transpose(m));
    } else if (action == "dual") {
        put_module(out, "dual", dual(m));
    } else if (action == "tau") {
        bool inv = f.method == "inverse";
        if (!f.method.empty() && !inv && f.method != "forward") usage("--method for tau is forward or inverse");
        put_module(out, inv ? "inverse translate" : "translate", inv ? tau_inverse(m) : tau(m));
    } else if (action == "linked") {
        auto l = linkage(m);
        out.doc["stable"] = l.stable;
        out.doc["ext_vanishes"] = l.ext_vanishes;
        out.doc["linked"] = l.linked;
        out.doc["lambda_square_iso"] = l.lambda_square_iso;
        out.text << "linked: " << (l.linked ? "true" : "false") << (l.stable ? "" : " (not stable)") << "\n";
        out.text << "stable: " << yes(l.stable) << ", Ext^1(Tr M, R) = 0: " << yes(l.ext_vanishes)
                 << ", lambda^2 M = M: " << yes(l.lambda_square_iso) << "\n";
        out.assert_that("criterion agrees with lambda^2 oracle", l.linked == l.lambda_square_iso);
    } else {
        usage("unknown module action '" + action + "' (decompose, syzygy, transpose, dual, tau, linked)");
    }
}

// morph

RedContext parse_ctx(const std::string &s) {
    if (s == "M" || s == "G") return RedContext::M_or_G;
    if (s == "E") return RedContext::E;
    usage("--ctx must be M, G or E");
}

void cmd_morph(const std::string &action, const std::vector<std::string> &in, const Flags &f, Output &out) {
    MorphObject x = load_morph(single_input(in, "morph " + action));
    if (action == "classify") {
        auto c = classify(x);
        out.doc["in_S"] = c.in_S;
        out.doc["in_E"] = c.in_E;
        out.doc["in_H"] = c.in_H;
        out.doc["in_G"] = c.in_G ? Json(*c.in_G) : Json(nullptr);
        out.doc["projective"] = c.projective;
        out.doc["injective_in_H"] = c.injective_in_H ? Json(*c.injective_in_H) : Json(nullptr);
        out.doc["indecomposable"] = is_indecomposable(x);
        out.text << "object " << summary(x) << "\n";
        out.text << "S: " << yes(c.in_S) << ", E: " << yes(c.in_E) << ", G: " << (c.in_G ? yes(*c.in_G) : "unsupported (non-Gorenstein)")
                 << ", projective: " << yes(c.projective) << "\n";
        return;
    }
    if (action == "cover" || action == "envelope") {
        bool cov = action == "cover";
        auto a = cov ? g_cover(x) : e_envelope(x);
        put_morph(out, cov ? "G-cover" : "E-envelope", a.object);
        out.assert_that(cov ? "cover lies in G" : "envelope lies in E", cov ? is_mono(a.object) : is_epi(a.object));
        out.assert_that("square commutes", a.map.commutes());
        out.assert_that("minimal", a.minimal);
    } else if (action == "transpose") {
        auto t = transpose(x);
        put_morph(out, "transpose", t.tr);
        out.doc["q"] = t.q;
        out.assert_that("Prop lem16: source is Tr(Cok f)", t.source_iso);
        out.assert_that("Prop lem16: target is Tr B + R^" + std::to_string(t.q), t.target_iso);
        out.assert_that("Prop lem16: four-term sequence exact", t.exact);
        if (t.mono) out.assert_that("Prop lem16(2): transpose is mono", *t.mono);
    } else if (action == "lambda") {
        put_morph(out, "lambda^" + std::to_string(f.i), lambda(x, static_cast<int>(f.i)));
    } else if (action == "linked") {
        auto l = linked(x);
        std::string m = f.method.empty() ? "all" : f.method;
        if (m != "all" && m != "direct" && m != "ext" && m != "component") usage("--method must be all, direct, ext or component");
        out.doc["stable"] = l.stable;
        if (m == "all" || m == "direct") out.doc["direct"] = l.direct;
        if (m == "all" || m == "ext") out.doc["ext_criterion"] = l.ext_criterion;
        if (m == "all" || m == "component") out.doc["component"] = l.component ? Json(*l.component) : Json(nullptr);
        out.text << "object " << summary(x) << "\n";
        if (m == "all" || m == "direct") out.text << "direct (lambda^2 f = f): " << (l.direct ? "true" : "false") << "\n";
        if (m == "all" || m == "ext") out.text << "Ext criterion: " << (l.ext_criterion ? "true" : "false") << "\n";
        if (m == "all" || m == "component")
            out.text << "component criterion: " << (l.component ? (*l.component ? "true" : "false") : "n/a (a component is not stable)") << "\n";
        if (m == "all") {
            bool agree = l.direct == l.ext_criterion && (!l.component || *l.component == l.direct);
            out.assert_that("verdicts agree", agree);
        }
    } else if (action == "red") {
        put_morph(out, "red", red(x, parse_ctx(f.ctx)));
    } else if (action == "dual") {
        put_morph(out, "dual", dual_object(x));
    } else {
        usage("unknown morph action '" + action + "' (classify, cover, envelope, transpose, lambda, linked, red, dual)");
    }
    out.doc["ops_log"] = out.log;
}

// ar

Category required_cat(const Flags &f) {
    if (f.cat.empty()) usage("--cat is required (R, H, G or E)");
    return parse_category(f.cat);
}

struct VerifyCorpus {
    std::vector<Module> modules;
    std::vector<MorphObject> objects;
};

VerifyCorpus verify_corpus(const AlgebraPtr &r, const Flags &f, Category cat) {
    VerifyCorpus c;
    if (!f.corpus.empty()) {
        auto l = load_corpus(f.corpus);
        c.modules = l.modules;
        c.objects = l.objects;
        for (auto &m : c.modules)
            if (!same_algebra(m.algebra(), r)) throw InputError("corpus module over a different ring");
        for (auto &x : c.objects)
            if (!same_algebra(x.ring(), r)) throw InputError("corpus object over a different ring");
        return c;
    }
    if (cat == Category::R)
        c.modules = module_corpus(r, corpus_options(f));
    else
        c.objects = object_corpus(r, corpus_options(f)).indecomposables;
    return c;
}

ARReport verify(const ARSequence &s, const VerifyCorpus &c) {
    return s.cat == Category::R ? verify_almost_split(s, c.modules) : verify_almost_split(s, c.objects);
}

void report_text(Output &out, const ARReport &r) {
    out.text << std::boolalpha << "non_split: " << r.non_split << ", left_end_local: " << r.left_end_local << ", right_end_local: " << r.right_end_local
             << ", right_almost_split: " << r.right_almost_split << " (corpus " << r.corpus_size << ")\n";
    if (!r.witness.empty()) out.text << "witness: " << r.witness << "\n";
    out.failed = out.failed || !r.ok();
}

AlgebraPtr ring_of(const ARSequence &s) {
    return s.cat == Category::R ? s.right.algebra() : s.right.algebra()->triangular->base;
}

void cmd_ar(const std::string &action, const std::vector<std::string> &in, const Flags &f, Output &out) {
    if (action == "tau") {
        Category cat = required_cat(f);
        bool inv = f.method == "inverse";
        if (!f.method.empty() && !inv && f.method != "forward") usage("--method for tau is forward or inverse");
        const std::string &file = single_input(in, "ar tau");
        if (cat == Category::R) {
            Module m = load_module(file);
            put_module(out, inv ? "inverse translate" : "translate", inv ? tau_inverse(m) : tau(m));
        } else {
            MorphObject x = load_morph(file);
            put_morph(out, std::string(inv ? "inverse translate in " : "translate in ") + category_name(cat),
                      tau_morphism(x, cat, inv ? Direction::inverse : Direction::forward));
        }
        return;
    }
    if (action == "sequence") {
        Category cat = required_cat(f);
        std::string file = !f.end.empty() ? f.end : single_input(in, "ar sequence");
        if (!f.end.empty() && !in.empty()) usage("give the end term either with --end or as the input file");
        ARSequence s;
        AlgebraPtr r;
        if (cat == Category::R) {
            Module m = load_module(file);
            r = m.algebra();
            s = almost_split_sequence(m);
        } else {
            MorphObject x = load_morph(file);
            r = x.ring();
            s = almost_split_sequence(x, cat);
        }
        s.report = verify(s, verify_corpus(r, f, cat));
        out.text << "almost split sequence in " << category_name(cat) << "\n";
        if (cat == Category::R) {
            out.text << "left: " << summary(s.left) << "\nmiddle: " << summary(s.middle) << "\nright: " << summary(s.right) << "\n";
        } else {
            out.text << "left: " << summary(s.left_object()) << "\nmiddle: " << summary(s.middle_object()) << "\nright: "
                     << summary(s.right_object()) << "\n";
        }
        report_text(out, s.report);
        out.doc = arseq_to_json(s);
        return;
    }
    if (action == "verify") {
        const std::string &file = single_input(in, "ar verify");
        fs::path p(file);
        ARSequence s = arseq_from_json(read_json_file(p), p.parent_path());
        s.report = verify(s, verify_corpus(ring_of(s), f, s.cat));
        out.text << "sequence in " << category_name(s.cat) << "\n";
        report_text(out, s.report);
        out.doc = report_to_json(s.report);
        return;
    }
    if (action == "family") {
        const std::string &file = single_input(in, "ar family");
        fs::path p(file);
        Json j = read_json_file(p);
        ARSequence base;
        if (j.contains("category")) {
            base = arseq_from_json(j, p.parent_path());
            if (base.cat != Category::R) usage("families start from a sequence of R-modules");
        } else {
            base = almost_split_sequence(module_from_json(j, p.parent_path()));
        }
        AlgebraPtr r = base.right.algebra();
        base.report = verify(base, verify_corpus(r, f, Category::R));
        out.text << "sequence in mod R\n";
        report_text(out, base.report);
        if (!base.report.ok()) {
            out.doc["base"] = arseq_to_json(base);
            return;
        }
        std::vector<std::string> which = {"i", "ii", "iii", "iv"};
        if (!f.method.empty()) which = {f.method};
        VerifyCorpus objs = verify_corpus(r, f, Category::H);
        Json fams = Json::object();
        for (auto &w : which) {
            ARSequence s = explicit_family(base, w);
            s.report = verify(s, objs);
            out.text << "family " << w << " in " << category_name(s.cat) << ": left " << summary(s.left_object()) << ", middle "
                     << summary(s.middle_object()) << ", right " << summary(s.right_object()) << "\n";
            report_text(out, s.report);
            fams[w] = arseq_to_json(s);
        }
        out.doc["base"] = arseq_to_json(base);
        out.doc["families"] = fams;
        return;
    }
    usage("unknown ar action '" + action + "' (tau, sequence, verify, family)");
}

// paper

void cmd_paper(const std::string &action, const std::vector<std::string> &in, const Flags &f, Output &out) {
    if (action != "check") usage("unknown paper action '" + action + "' (check)");
    AlgebraPtr r = load_ring(single_input(in, "paper check"));
    CheckOptions o;
    o.seed = f.seed;
    o.max_dim = f.max_dim;
    CheckReport rep = paper_check(r, o);
    out.text << "ring " << rep.ring << " (" << (rep.gorenstein ? "Gorenstein local" : "not Gorenstein local") << ")\n";
    out.text << "corpus: " << rep.modules << " modules, " << rep.indecomposable_objects << " indecomposable objects, " << rep.objects
             << " objects of which " << rep.monos << " monos\n";
    std::optional<SuiteGroup> last;
    std::size_t conflicts = 0;
    Json suites = Json::array();
    for (auto &s : rep.suites) {
        if (!last || *last != s.group) out.text << "[" << group_name(s.group) << "]\n";
        last = s.group;
        out.text << "  " << s.name << ": " << s.status() << "\n";
        for (auto &w : s.failures) out.text << "      " << w << "\n";
        if (s.conflict && !s.skipped && s.passed != s.total) ++conflicts;
        Json js;
        js["name"] = s.name;
        js["group"] = group_name(s.group);
        js["status"] = s.status();
        js["passed"] = s.passed;
        js["total"] = s.total;
        js["skipped"] = s.skipped ? Json(*s.skipped) : Json(nullptr);
        js["conflict"] = s.conflict;
        js["failures"] = s.failures;
        suites.push_back(js);
    }
    out.text << (rep.ok() ? "all suites pass" : "SOME SUITES FAIL");
    if (conflicts) out.text << " (" << conflicts << " suite with a documented counterexample, see README)";
    out.text << "\nruntime " << std::fixed << std::setprecision(2) << rep.seconds << " s\n";
    out.doc["ring"] = rep.ring;
    out.doc["gorenstein_local"] = rep.gorenstein;
    out.doc["seed"] = f.seed;
    out.doc["corpus"] = {{"modules", rep.modules}, {"indecomposable_objects", rep.indecomposable_objects}, {"objects", rep.objects}, {"monos", rep.monos}};
    out.doc["suites"] = suites;
    out.doc["ok"] = rep.ok();
    out.failed = !rep.ok();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Morphism categories over local rings: modules, objects and Auslander-Reiten translates"};
    std::string verb, action;
    std::vector<std::string> inputs;
    Flags f;
    app.add_option("verb", verb, "ring, module, morph, ar or paper")->required()->check(CLI::IsMember({"ring", "module", "morph", "ar", "paper"}));
    app.add_option("action", action, "operation, e.g. classify or transpose")->required();
    app.add_option("inputs", inputs, "input files or ring presets");
    app.add_flag("--json", f.json, "machine-readable output");
    app.add_option("--seed", f.seed, "seed for randomised choices")->envname("HOMCAT_SEED");
    app.add_option("--max-dim", f.max_dim, "dimension bound for generated corpora");
    app.add_option("--corpus", f.corpus, "directory of module or object files used for verification");
    app.add_option("--cat", f.cat, "category: R, H, G or E");
    app.add_option("--ctx", f.ctx, "red context: M, G or E");
    app.add_option("--method", f.method, "variant: linkage method, translate direction or family");
    app.add_option("-i", f.i, "syzygy degree or lambda power");
    app.add_option("--end", f.end, "end term of an almost split sequence");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    bool raw_json = false;
    try {
        if (verb == "ring")
            cmd_ring(action, inputs, f, out, raw_json);
        else if (verb == "module")
            cmd_module(action, inputs, f, out);
        else if (verb == "morph")
            cmd_morph(action, inputs, f, out);
        else if (verb == "ar")
            cmd_ar(action, inputs, f, out);
        else
            cmd_paper(action, inputs, f, out);
    } catch (const InputError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError &e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (f.json || raw_json)
        std::cout << out.doc.dump(2) << "\n";
    else
        std::cout << out.text.str();
    return out.failed ? 1 : 0;
}
