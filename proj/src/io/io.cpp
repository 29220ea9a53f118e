#include "homcat/io.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include "homcat/matalg.hpp"

namespace homcat {

namespace fs = std::filesystem;

namespace {

// One pointer per multiplication table, so repeated loads share cached structure.
AlgebraPtr intern(const AlgebraPtr &a) {
    static std::mutex mu;
    static std::vector<AlgebraPtr> known;
    std::lock_guard<std::mutex> lock(mu);
    for (auto &k : known)
        if (k->fingerprint() == a->fingerprint() && k->same_table(*a)) return k;
    known.push_back(a);
    return a;
}

const Json &field(const Json &j, const char *key, const std::string &what) {
    if (!j.is_object()) throw InputError(what + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(what + " lacks field \"" + key + "\"");
    return *it;
}

std::int64_t as_int(const Json &j, const std::string &what) {
    if (!j.is_number_integer()) throw InputError(what + " must be an integer");
    return j.get<std::int64_t>();
}

std::size_t as_size(const Json &j, const std::string &what) {
    auto v = as_int(j, what);
    if (v < 0) throw InputError(what + " must be non-negative");
    return static_cast<std::size_t>(v);
}

Vec vec_from_json(const Json &j, std::size_t n, std::uint32_t p, const std::string &what) {
    if (!j.is_array() || j.size() != n) throw InputError(what + " must be a list of " + std::to_string(n) + " integers");
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = reduce(as_int(j[i], what), p);
    return v;
}

fs::path resolve(const fs::path &base, const std::string &s) {
    fs::path p(s);
    return p.is_absolute() || base.empty() ? p : base / p;
}

bool looks_like_preset(const std::string &s) { return s.rfind("preset:", 0) == 0 || s.find('(') != std::string::npos; }

AlgebraPtr ring_field(const Json &j, const fs::path &base) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (looks_like_preset(s)) return intern(preset_by_name(s));
        fs::path p = resolve(base, s);
        return ring_from_json(read_json_file(p), p.parent_path());
    }
    return ring_from_json(j, base);
}

} // namespace

Json read_json_file(const fs::path &path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

AlgebraPtr load_ring(const std::string &arg) {
    if (looks_like_preset(arg)) return intern(preset_by_name(arg));
    fs::path p(arg);
    return ring_from_json(read_json_file(p), p.parent_path());
}

AlgebraPtr ring_from_json(const Json &j, const fs::path &base) {
    if (j.is_string()) return ring_field(j, base);
    if (!j.is_object()) throw InputError("ring must be a JSON object");
    if (j.contains("preset")) {
        const Json &name = j["preset"];
        if (!name.is_string()) throw InputError("ring preset must be a string");
        std::string spec = "preset:" + name.get<std::string>();
        for (auto &[k, v] : j.items()) {
            if (k == "preset") continue;
            spec += "," + k + "=" + std::to_string(as_int(v, "preset parameter " + k));
        }
        return intern(preset_by_name(spec));
    }
    const std::int64_t p0 = as_int(field(j, "p", "ring"), "ring p");
    if (p0 < 2 || p0 >= (1 << 15)) throw InputError("ring p must be a prime below 2^15");
    const std::uint32_t p = static_cast<std::uint32_t>(p0);
    check_modulus(p);
    const std::size_t n = as_size(field(j, "dim", "ring"), "ring dim");
    const Json &basis = field(j, "basis", "ring");
    if (!basis.is_array() || basis.size() != n) throw InputError("ring basis must list " + std::to_string(n) + " names");
    std::vector<std::string> labels;
    for (auto &b : basis) {
        if (!b.is_string()) throw InputError("ring basis names must be strings");
        labels.push_back(b.get<std::string>());
    }
    Vec unit = vec_from_json(field(j, "unit", "ring"), n, p, "ring unit");
    const Json &mul = field(j, "mul", "ring");
    if (!mul.is_array() || mul.size() != n) throw InputError("ring mul must be a dim x dim x dim array");
    Algebra::Table table(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!mul[i].is_array() || mul[i].size() != n) throw InputError("ring mul must be a dim x dim x dim array");
        for (std::size_t k = 0; k < n; ++k) table[i].push_back(vec_from_json(mul[i][k], n, p, "ring mul entry"));
    }
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    auto a = make_algebra(p, labels, unit, table, name);
    if (j.contains("flags")) {
        const Json &f = j["flags"];
        AlgebraFlags fl;
        auto flag = [&](const char *k) {
            if (!f.contains(k)) return false;
            if (!f[k].is_boolean()) throw InputError(std::string("ring flag ") + k + " must be a boolean");
            return f[k].get<bool>();
        };
        fl.commutative = flag("commutative");
        fl.local = flag("local");
        fl.gorenstein_local = flag("gorenstein_local");
        auto declared = std::make_shared<Algebra>(p, labels, unit, table, name);
        declared->declared = fl;
        return declared;
    }
    return intern(a);
}

Json ring_to_json(const Algebra &a) {
    Json j;
    if (!a.name().empty()) j["name"] = a.name();
    j["p"] = a.p();
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    j["unit"] = a.unit();
    Json mul = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(a.mul(i, k));
        mul.push_back(row);
    }
    j["mul"] = mul;
    return j;
}

Mat matrix_from_json(const Json &j, std::size_t rows, std::size_t cols, std::uint32_t p, const std::string &what) {
    const std::string shape = std::to_string(rows) + " x " + std::to_string(cols);
    if (!j.is_array()) throw InputError(what + " must be a " + shape + " matrix");
    Mat m(rows, cols, p);
    if (rows == 0) {
        if (!j.empty()) throw InputError(what + " must be an empty matrix");
        return m;
    }
    if (j.size() != rows) throw InputError(what + " must be a " + shape + " matrix");
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw InputError(what + " must be a " + shape + " matrix");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, as_int(j[r][c], what + " entry"));
    }
    return m;
}

Json matrix_to_json(const Mat &m) {
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(m.row(r));
    return j;
}

Module module_from_json(const Json &j, const fs::path &base, AlgebraPtr ring) {
    if (j.is_string()) {
        fs::path p = resolve(base, j.get<std::string>());
        return module_from_json(read_json_file(p), p.parent_path(), ring);
    }
    if (j.contains("ring")) ring = ring_field(j["ring"], base);
    if (!ring) throw InputError("module lacks field \"ring\"");
    const std::size_t n = as_size(field(j, "dim", "module"), "module dim");
    std::string side = "right";
    if (j.contains("side")) {
        if (!j["side"].is_string()) throw InputError("module side must be \"right\" or \"left\"");
        side = j["side"].get<std::string>();
    }
    if (side == "left")
        ring = opposite(ring);
    else if (side != "right")
        throw InputError("module side must be \"right\" or \"left\"");
    const Json &act = field(j, "action", "module");
    if (!act.is_array() || act.size() != ring->dim())
        throw InputError("module action must list one matrix per ring basis element (" + std::to_string(ring->dim()) + ")");
    std::vector<Mat> mats;
    for (std::size_t i = 0; i < act.size(); ++i) mats.push_back(matrix_from_json(act[i], n, n, ring->p(), "module action " + std::to_string(i)));
    Module m(ring, mats);
    auto rep = validate_module(m);
    if (!rep.ok()) {
        std::string msg = "not a module:";
        for (auto &s : rep.issues) msg += " " + s + ";";
        throw InputError(msg);
    }
    return m;
}

Json module_to_json(const Module &m) {
    Json j;
    j["ring"] = ring_to_json(*m.algebra());
    j["dim"] = m.dim();
    j["side"] = "right";
    Json act = Json::array();
    for (auto &a : m.actions()) act.push_back(matrix_to_json(a));
    j["action"] = act;
    return j;
}

Module load_module(const fs::path &path) { return module_from_json(read_json_file(path), path.parent_path()); }

ModuleMap map_from_json(const Json &j, const fs::path &base) {
    Module s = module_from_json(field(j, "source", "map"), base);
    Module t = module_from_json(field(j, "target", "map"), base);
    if (!same_algebra(s.algebra(), t.algebra())) throw InputError("map source and target are over different rings");
    Mat f = matrix_from_json(field(j, "matrix", "map"), t.dim(), s.dim(), s.p(), "map matrix");
    if (!is_homomorphism(s, t, f)) throw InputError("map matrix is not a homomorphism");
    return {s, t, f};
}

Json map_to_json(const ModuleMap &m) {
    Json j;
    j["source"] = module_to_json(m.source);
    j["target"] = module_to_json(m.target);
    j["matrix"] = matrix_to_json(m.matrix);
    return j;
}

bool is_morph_json(const Json &j) { return j.is_object() && j.contains("A") && j.contains("B"); }

MorphObject morph_from_json(const Json &j, const fs::path &base) {
    if (j.is_string()) {
        fs::path p = resolve(base, j.get<std::string>());
        return morph_from_json(read_json_file(p), p.parent_path());
    }
    AlgebraPtr ring = j.contains("ring") ? ring_field(j["ring"], base) : nullptr;
    Module a = module_from_json(field(j, "A", "object"), base, ring);
    Module b = module_from_json(field(j, "B", "object"), base, ring);
    if (!same_algebra(a.algebra(), b.algebra())) throw InputError("object components over different rings");
    Side side = Side::M;
    if (j.contains("side")) {
        if (j["side"] == "M_op")
            side = Side::M_op;
        else if (j["side"] != "M")
            throw InputError("object side must be \"M\" or \"M_op\"");
    }
    return MorphObject(a, b, matrix_from_json(field(j, "f", "object"), b.dim(), a.dim(), a.p(), "object map f"), side);
}

Json morph_to_json(const MorphObject &x) {
    Json j;
    j["ring"] = ring_to_json(*x.ring());
    Json a = module_to_json(x.A()), b = module_to_json(x.B());
    a.erase("ring");
    b.erase("ring");
    j["A"] = a;
    j["B"] = b;
    j["f"] = matrix_to_json(x.f());
    j["side"] = x.side() == Side::M ? "M" : "M_op";
    return j;
}

MorphObject load_morph(const fs::path &path) { return morph_from_json(read_json_file(path), path.parent_path()); }

Json report_to_json(const ARReport &r) {
    Json j;
    j["non_split"] = r.non_split;
    j["left_end_local"] = r.left_end_local;
    j["right_end_local"] = r.right_end_local;
    j["right_almost_split"] = r.right_almost_split;
    j["corpus_size"] = r.corpus_size;
    j["witness"] = r.witness;
    j["ok"] = r.ok();
    return j;
}

Json arseq_to_json(const ARSequence &s) {
    Json j;
    j["category"] = category_name(s.cat);
    if (s.cat == Category::R) {
        j["left"] = module_to_json(s.left);
        j["middle"] = module_to_json(s.middle);
        j["right"] = module_to_json(s.right);
        j["incl"] = matrix_to_json(s.incl);
        j["proj"] = matrix_to_json(s.proj);
    } else {
        Reading l = read_object(s.left), m = read_object(s.middle), r = read_object(s.right);
        j["left"] = morph_to_json(l.object);
        j["middle"] = morph_to_json(m.object);
        j["right"] = morph_to_json(r.object);
        j["incl"] = matrix_to_json(left_inverse(m.basis) * s.incl * l.basis);
        j["proj"] = matrix_to_json(left_inverse(r.basis) * s.proj * m.basis);
    }
    j["report"] = report_to_json(s.report);
    return j;
}

ARSequence arseq_from_json(const Json &j, const fs::path &base) {
    ARSequence s;
    const Json &cat = field(j, "category", "sequence");
    if (!cat.is_string()) throw InputError("sequence category must be a string");
    s.cat = parse_category(cat.get<std::string>());
    if (s.cat == Category::R) {
        s.left = module_from_json(field(j, "left", "sequence"), base);
        s.middle = module_from_json(field(j, "middle", "sequence"), base);
        s.right = module_from_json(field(j, "right", "sequence"), base);
    } else {
        auto side_m = [](const MorphObject &x) { return x.side() == Side::M ? x : x.on_side(Side::M); };
        s.left = side_m(morph_from_json(field(j, "left", "sequence"), base)).module();
        s.middle = side_m(morph_from_json(field(j, "middle", "sequence"), base)).module();
        s.right = side_m(morph_from_json(field(j, "right", "sequence"), base)).module();
    }
    if (!same_algebra(s.left.algebra(), s.middle.algebra()) || !same_algebra(s.middle.algebra(), s.right.algebra()))
        throw InputError("sequence terms are over different rings");
    const std::uint32_t p = s.middle.p();
    s.incl = matrix_from_json(field(j, "incl", "sequence"), s.middle.dim(), s.left.dim(), p, "sequence incl");
    s.proj = matrix_from_json(field(j, "proj", "sequence"), s.right.dim(), s.middle.dim(), p, "sequence proj");
    return s;
}

LoadedCorpus load_corpus(const fs::path &dir) {
    if (!fs::is_directory(dir)) throw InputError("corpus " + dir.string() + " is not a directory");
    std::vector<fs::path> files;
    for (auto &e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    LoadedCorpus c;
    for (auto &f : files) {
        Json j = read_json_file(f);
        if (is_morph_json(j))
            c.objects.push_back(morph_from_json(j, dir));
        else
            c.modules.push_back(module_from_json(j, dir));
    }
    return c;
}

} // namespace homcat
