#include "homcat/algebra.hpp"

#include <map>
#include <regex>

namespace homcat {

namespace {

Algebra::Table zero_table(std::size_t n) { return Algebra::Table(n, std::vector<Vec>(n, Vec(n, 0))); }

Vec unit_vector(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

AlgebraPtr finish(AlgebraPtr a, bool gorenstein) {
    auto m = std::const_pointer_cast<Algebra>(a);
    m->declared = AlgebraFlags{true, true, gorenstein};
    return m;
}

} // namespace

AlgebraPtr truncated_poly(std::uint32_t p, std::size_t n) {
    if (n < 1) throw InputError("truncated_poly needs n >= 1");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    auto t = zero_table(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) t[i][j][i + j] = 1;
    auto a = make_algebra(p, labels, unit_vector(n, 0), t, "truncated_poly(" + std::to_string(p) + "," + std::to_string(n) + ")");
    return finish(a, true);
}

AlgebraPtr square_zero_plane(std::uint32_t p) {
    auto t = zero_table(3);
    for (std::size_t i = 0; i < 3; ++i) {
        t[0][i][i] = 1;
        t[i][0][i] = 1;
    }
    auto a = make_algebra(p, {"1", "x", "y"}, unit_vector(3, 0), t, "square_zero_plane(" + std::to_string(p) + ")");
    return finish(a, false);
}

AlgebraPtr exterior_two_vars(std::uint32_t p) {
    auto t = zero_table(4);
    for (std::size_t i = 0; i < 4; ++i) {
        t[0][i][i] = 1;
        t[i][0][i] = 1;
    }
    t[1][2][3] = 1;
    t[2][1][3] = 1;
    auto a = make_algebra(p, {"1", "x", "y", "xy"}, unit_vector(4, 0), t, "exterior_two_vars(" + std::to_string(p) + ")");
    return finish(a, true);
}

AlgebraPtr triangular_extension(const AlgebraPtr &r) {
    if (!r->is_commutative()) throw PreconditionError("triangular extension needs a commutative base ring");
    const std::size_t n = r->dim(), d = 3 * n;
    const std::uint32_t p = r->p();
    std::vector<std::string> labels;
    for (const char *u : {"e1", "e2", "a"})
        for (auto &l : r->labels()) labels.push_back(std::string(u) + "*" + l);
    // 0 = e1, 1 = e2, 2 = a; -1 means the product vanishes
    const int uv[3][3] = {{0, -1, 2}, {-1, 1, -1}, {-1, 2, -1}};
    auto t = zero_table(d);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            if (uv[u][v] < 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t l = 0; l < n; ++l) t[u * n + i][v * n + j][uv[u][v] * n + l] = r->mul(i, j)[l];
        }
    Vec unit(d, 0), e1(d, 0), e2(d, 0);
    for (std::size_t i = 0; i < n; ++i) {
        e1[i] = r->unit()[i];
        e2[n + i] = r->unit()[i];
        unit[i] = unit[n + i] = r->unit()[i];
    }
    auto a = std::const_pointer_cast<Algebra>(make_algebra(p, labels, unit, t, "T2(" + r->name() + ")"));
    a->triangular = TriangularData{r, false};
    a->designated_idempotents = std::vector<Vec>{e1, e2};
    return a;
}

AlgebraPtr preset_by_name(const std::string &spec) {
    std::smatch m;
    std::string name;
    std::map<std::string, long> args;
    static const std::regex call(R"(^\s*(\w+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$)");
    static const std::regex keyed(R"(^\s*preset:(\w+)((?:,\w+=\d+)*)\s*$)");
    if (std::regex_match(spec, m, call)) {
        name = m[1];
        args["p"] = std::stol(m[2]);
        if (m[3].matched) args["n"] = std::stol(m[3]);
    } else if (std::regex_match(spec, m, keyed)) {
        name = m[1];
        std::string rest = m[2];
        static const std::regex kv(R"(,(\w+)=(\d+))");
        for (auto it = std::sregex_iterator(rest.begin(), rest.end(), kv); it != std::sregex_iterator(); ++it)
            args[(*it)[1]] = std::stol((*it)[2]);
    } else {
        throw InputError("unrecognised ring preset '" + spec + "'");
    }
    auto need = [&](const char *k) -> long {
        auto it = args.find(k);
        if (it == args.end()) throw InputError(std::string("preset ") + name + " needs parameter " + k);
        if (it->second < 1) throw InputError(std::string("parameter ") + k + " must be positive");
        return it->second;
    };
    if (name == "truncated_poly" || name == "tp") return truncated_poly(static_cast<std::uint32_t>(need("p")), need("n"));
    if (name == "square_zero_plane") return square_zero_plane(static_cast<std::uint32_t>(need("p")));
    if (name == "exterior_two_vars") return exterior_two_vars(static_cast<std::uint32_t>(need("p")));
    throw InputError("unknown preset '" + name + "'");
}

} // namespace homcat
