#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "liedim/equation.hpp"

namespace liedim {

struct ParamSpec {
    std::string name;
    long long lo = 1;
    long long hi = 8;
};

using ParamPoint = std::map<std::string, long long>;

/* A registered balance identity, parameterized where the construction
 * is.  expected_balanced = false marks deliberate negative controls. */
struct CatalogEntry {
    std::string id;
    std::string description;
    std::string reference; // original construction in the literature
    std::vector<ParamSpec> params;
    std::function<bool(const ParamPoint&)> admissible; // may be empty
    std::function<IntegralDescriptor(const ParamPoint&)> build;
    bool expected_balanced = true;
};

const std::vector<CatalogEntry>& catalog_entries();

struct CatalogRun {
    std::string id;
    ParamPoint params;
    BalanceReport report;
    bool expected_balanced = true;
    bool as_expected = true;
};

struct RangeOverride {
    long long lo = 1;
    long long hi = 8;
};

/* Evaluates every admissible parameter point of every matching entry
 * (substring match on the id; empty pattern matches all).  Throws
 * domain_error when the pattern matches nothing. */
std::vector<CatalogRun> run_catalog(const std::string& id_pattern = "",
                                    std::optional<RangeOverride> range = std::nullopt);

// (id, description, reference) in registration order.
std::vector<std::tuple<std::string, std::string, std::string>> list_entries();

} // namespace liedim
