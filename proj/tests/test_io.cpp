#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcat/corpus.hpp"
#include "homcat/io.hpp"
#include "support.hpp"

using namespace homcat;
using namespace homcat::testing;

namespace {

const std::filesystem::path data = HOMCAT_DATA_DIR;

} // namespace

TEST_CASE("ring presets and files") {
    auto a = load_ring("preset:truncated_poly,p=2,n=3");
    auto b = load_ring("truncated_poly(2,3)");
    CHECK(same_algebra(a, b));
    CHECK(a->dim() == 3);
    auto r2 = load_ring((data / "r2.json").string());
    CHECK(same_algebra(r2, truncated_poly(2, 2)));
    CHECK(same_algebra(ring_from_json(ring_to_json(*square_zero_plane(3))), square_zero_plane(3)));
    CHECK_THROWS_AS(load_ring("preset:nonsense,p=2"), InputError);
    CHECK_THROWS_AS(load_ring((data / "missing.json").string()), InputError);
}

TEST_CASE("ring schema errors") {
    CHECK_THROWS_AS(ring_from_json(Json::array()), InputError);
    CHECK_THROWS_AS(ring_from_json(Json::parse(R"j({"p": 2, "dim": 1, "basis": ["1"]})j")), InputError);
    CHECK_THROWS_AS(ring_from_json(Json::parse(R"j({"p": 4, "dim": 1, "basis": ["1"], "mul": [[[1]]], "unit": [1]})j")),
                    std::exception);
    CHECK_NOTHROW(ring_from_json(Json::parse(R"j({"p": 3, "dim": 1, "basis": ["1"], "mul": [[[1]]], "unit": [1]})j")));
}

TEST_CASE("matrix round trip") {
    Mat m(2, 3, 5);
    m.at(0, 1) = 4;
    m.at(1, 2) = 3;
    CHECK(matrix_from_json(matrix_to_json(m), 2, 3, 5, "m") == m);
    Mat empty(0, 2, 5);
    CHECK(matrix_to_json(empty) == Json::array());
    CHECK(matrix_from_json(Json::array(), 0, 2, 5, "m") == empty);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2]]"), 2, 2, 5, "m"), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"j([["x"]])j"), 1, 1, 5, "m"), InputError);
}

TEST_CASE("module files") {
    Module k = load_module(data / "k_over_r2.json");
    auto r = truncated_poly(2, 2);
    CHECK(is_isomorphic(k, residue(r)));
    Module k3 = load_module(data / "k_over_r3.json");
    CHECK(k3.dim() == 1);
    Module x = cyclic(truncated_poly(2, 3), 2);
    Module back = module_from_json(module_to_json(x));
    CHECK(is_isomorphic(back, x));
    CHECK(module_to_json(back) == module_to_json(x));
}

TEST_CASE("module schema errors") {
    auto bad = Json::parse(R"j({"ring": "truncated_poly(2,2)", "dim": 1, "action": [[[1]]]})j");
    CHECK_THROWS_AS(module_from_json(bad), InputError);
    // x acting by 1 is not an R-action
    auto not_module = Json::parse(R"j({"ring": "truncated_poly(2,2)", "dim": 1, "action": [[[1]], [[1]]]})j");
    CHECK_THROWS_AS(module_from_json(not_module), InputError);
    auto side = Json::parse(R"j({"ring": "truncated_poly(2,2)", "dim": 1, "side": "up", "action": [[[1]], [[0]]]})j");
    CHECK_THROWS_AS(module_from_json(side), InputError);
}

TEST_CASE("object files and round trip") {
    MorphObject z = load_morph(data / "zero_to_k.json");
    CHECK(z.A().dim() == 0);
    CHECK(z.B().dim() == 1);
    MorphObject s = load_morph(data / "socle_incl.json");
    CHECK(is_mono(s));
    auto j = morph_to_json(s);
    CHECK(is_morph_json(j));
    j["ring"] = ring_to_json(*s.ring());
    MorphObject back = morph_from_json(j);
    CHECK(is_isomorphic(back, s));
    CHECK_FALSE(is_morph_json(module_to_json(s.A())));
}

TEST_CASE("map must be a homomorphism") {
    auto r = truncated_poly(2, 2);
    Module reg = cyclic(r, 2), k = residue(r);
    Json j;
    j["source"] = module_to_json(k);
    j["target"] = module_to_json(reg);
    j["matrix"] = Json::parse("[[1], [0]]");
    CHECK_THROWS_AS(map_from_json(j), InputError);
    j["matrix"] = Json::parse("[[0], [1]]");
    CHECK(map_from_json(j).matrix.cols() == 1);
}

TEST_CASE("sequences survive a round trip") {
    auto r = truncated_poly(2, 3);
    CorpusOptions o;
    o.target_objects = 0;
    o.target_monos = 0;
    auto mods = module_corpus(r, o);
    auto seq = arseq_from_json(arseq_to_json(almost_split_sequence(cyclic(r, 1))));
    CHECK(verify_almost_split(seq, mods).ok());

    auto objs = object_corpus(r, o).indecomposables;
    MorphObject end(Module::zero(r), cyclic(r, 1), Mat(1, 0, 2));
    auto h = arseq_from_json(arseq_to_json(almost_split_sequence(end, Category::H)));
    CHECK(h.cat == Category::H);
    CHECK(verify_almost_split(h, objs).ok());
}

TEST_CASE("corpus directory") {
    auto c = load_corpus(data / "presets" / "r2");
    CHECK(c.modules.size() == 2);
    CHECK(c.objects.empty());
    CHECK_THROWS_AS(load_corpus(data / "r2.json"), InputError);
}
