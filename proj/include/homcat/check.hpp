#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homcat/ar.hpp"
#include "homcat/corpus.hpp"

namespace homcat {

enum class SuiteGroup { engine, objects, translates };

std::string group_name(SuiteGroup g);

struct SuiteResult {
    std::string name;
    SuiteGroup group = SuiteGroup::engine;
    std::size_t passed = 0, total = 0;
    std::optional<std::string> skipped;
    // The suite tests a claim with a known counterexample; failures are reported but do not fail the run.
    bool conflict = false;
    std::vector<std::string> failures; // first few failing items
    double seconds = 0;
    bool ok() const { return skipped || conflict || passed == total; }
    std::string status() const;
};

struct CheckOptions {
    std::size_t max_dim = 0; // 0 keeps the corpus defaults; otherwise bounds R-modules, objects get twice this
    std::uint64_t seed = 0;
    std::size_t base_changes = 50;
    std::function<void(const SuiteResult &)> progress; // called after each suite
};

struct CheckReport {
    std::string ring;
    bool gorenstein = false;
    std::size_t modules = 0, indecomposable_objects = 0, objects = 0, monos = 0;
    double seconds = 0;
    std::vector<SuiteResult> suites;
    bool ok() const;
    const SuiteResult *find(const std::string &name) const;
};

CheckReport paper_check(const AlgebraPtr &r, const CheckOptions &o = {});

} // namespace homcat
