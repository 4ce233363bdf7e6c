#pragma once

#include <optional>
#include <string>

#include "liedim/catalog.hpp"
#include "liedim/equation.hpp"
#include "liedim/functional.hpp"
#include "liedim/orbit.hpp"
#include "liedim/search.hpp"

namespace liedim {

/* Compact JSON with fixed key order; all values exact integers.  These
 * renderings are the stable scripting surface. */

// {"dim":D,"gk":G,"odd_parts":A}
std::string to_json(const Orbit& orbit);

// {"weights":[...],"dim_n1":N,"dim_n2":N,"histogram":{"w":count,...}}
std::string to_json(const FiltrationProfile& profile);

// {"kind":"...","args":{...},"value":N}
std::string to_json(const FunctionalDim& f);

// {"name":"...","lhs":N,"rhs":M,"deficit":D,"balanced":B}
std::string to_json(const BalanceReport& report);

// {"group":"...","target_gk":N,"solutions":["6^2 2^2",...],"total_candidates":M}
std::string search_result_json(const GroupDescriptor& group, const SearchResult& result);

// Array of {"id":...,"params":{...},"lhs":N,"rhs":M,"balanced":B,"expected":E}
std::string catalog_runs_json(const std::vector<CatalogRun>& runs);

/* Input schema for user-supplied balance checks:
 * {
 *   "name": "...",
 *   "mode": "classical" | "extended" | "lifting",
 *   "lift_gk": N,                      // lifting mode only
 *   "lhs_groups": ["PGSp(4)", ...],
 *   "lhs_unipotent_dims": [N, ...],
 *   "rhs_functionals": [{"kind": "...", "args": {...}}, ...],
 *   "expected_balanced": true          // optional
 * }
 * Functional kinds and args:
 *   gk_of_orbit        {"group": G, "partition": P}
 *   matrix_coefficient {"group": G}
 *   explicit_period    {"reductive_dim": N, "unipotent_dim": N}
 *   fourier_jacobi     {"group": G, "partition": P}
 *   eisenstein         {"inducing_dim": N, "radical_dim": N}
 *   character          {}
 */
struct CheckSpec {
    IntegralDescriptor descriptor;
    std::optional<bool> expected_balanced;
};

CheckSpec parse_check_spec(const std::string& json_text);

} // namespace liedim
