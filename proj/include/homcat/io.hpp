#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "homcat/ar.hpp"

namespace homcat {

using Json = nlohmann::ordered_json;

// Parse errors and schema violations raise InputError.
Json read_json_file(const std::filesystem::path &path);

// A ring argument is a preset ("preset:truncated_poly,p=2,n=3" or "truncated_poly(2,3)") or a path.
AlgebraPtr load_ring(const std::string &arg);
AlgebraPtr ring_from_json(const Json &j, const std::filesystem::path &base = {});
Json ring_to_json(const Algebra &a);

Mat matrix_from_json(const Json &j, std::size_t rows, std::size_t cols, std::uint32_t p, const std::string &what);
Json matrix_to_json(const Mat &m);

Module module_from_json(const Json &j, const std::filesystem::path &base = {}, AlgebraPtr ring = nullptr);
Json module_to_json(const Module &m);
Module load_module(const std::filesystem::path &path);

ModuleMap map_from_json(const Json &j, const std::filesystem::path &base = {});
Json map_to_json(const ModuleMap &m);

MorphObject morph_from_json(const Json &j, const std::filesystem::path &base = {});
Json morph_to_json(const MorphObject &x);
MorphObject load_morph(const std::filesystem::path &path);
bool is_morph_json(const Json &j);

ARSequence arseq_from_json(const Json &j, const std::filesystem::path &base = {});
Json arseq_to_json(const ARSequence &s);
Json report_to_json(const ARReport &r);

// Every *.json file of a directory, in name order, split into modules and objects.
struct LoadedCorpus {
    std::vector<Module> modules;
    std::vector<MorphObject> objects;
};
LoadedCorpus load_corpus(const std::filesystem::path &dir);

} // namespace homcat
