#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace augur::verify {

struct Options {
    std::uint64_t seed = 1;
    int jobs = 1;
    int trials = 0;         // 0: suite default
    int max_terminals = 6;  // separation cross-check size
};

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double time_limit = 0;
    nlohmann::json data = nlohmann::json::object();
};

CheckResult five_layer(const Options& o = {});
CheckResult path_family(const Options& o = {});
CheckResult witness_bound(const Options& o = {});
CheckResult leaf_adjacent(const Options& o = {});
CheckResult reductions(const Options& o = {});
CheckResult restricted(const Options& o = {});
CheckResult lp(const Options& o = {});
CheckResult rounding(const Options& o = {});
CheckResult structural(const Options& o = {});

/// Suite names: five-layer, path-family, witness, leaf-adjacent,
/// reductions, restricted, lp, rounding, structural, bounds (1-4), all.
/// Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, const Options& o = {});
std::vector<std::string> suite_names();

nlohmann::json to_json(const CheckResult& r);
/// "criterion N: PASS|FAIL name (detail) [t s]"
std::string summary_line(const CheckResult& r);

}  // namespace augur::verify
