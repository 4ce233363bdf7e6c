#pragma once

#include <optional>
#include <vector>

#include "liedim/group.hpp"
#include "liedim/partition.hpp"

namespace liedim {

struct SearchFilters {
    bool all_multiplicities_even = false;
    bool all_parts_even = false;
    bool minimal_distinct_parts = false;
};

// Source-orbit parameters ((2k-1)^{2m}(2r-1)^{2m}); the search group must
// be Sp of size 4m(k+r-1).
struct Dim6Params {
    long long m = 1;
    long long k = 1;
    long long r = 1;
};

GroupDescriptor dim6_group(const Dim6Params& params);
long long dim6_target_gk(const Dim6Params& params);

struct SearchQuery {
    GroupDescriptor group;
    std::optional<long long> target_gk; // exactly one of target_gk / dim6
    std::optional<Dim6Params> dim6;
    SearchFilters filters;
};

struct SearchResult {
    long long target_gk = 0;
    std::vector<Partition> solutions;  // decreasing lexicographic
    long long total_candidates = 0;    // family-valid partitions examined
};

/* Brute-force scan of all family-valid partitions of the group size for
 * those whose orbit GK dimension hits the target.  Filters apply after
 * the scan; minimal_distinct_parts keeps the solutions minimizing the
 * number of distinct part values (ties all kept). */
SearchResult search(const SearchQuery& query);

bool verify_solution(const GroupDescriptor& group, const Partition& p, long long target_gk);

} // namespace liedim
