#include "liedim/search.hpp"

#include <algorithm>

#include "liedim/errors.hpp"
#include "liedim/orbit.hpp"

namespace liedim {

GroupDescriptor dim6_group(const Dim6Params& params) {
    if (params.m < 1 || params.k < 1 || params.r < 1)
        throw domain_error("source-orbit parameters require m, k, r >= 1");
    return make_group(GroupFamily::Symplectic, 4 * params.m * (params.k + params.r - 1));
}

long long dim6_target_gk(const Dim6Params& params) {
    const GroupDescriptor h = dim6_group(params);
    std::vector<long long> parts;
    parts.insert(parts.end(), static_cast<std::size_t>(2 * params.m), 2 * params.k - 1);
    parts.insert(parts.end(), static_cast<std::size_t>(2 * params.m), 2 * params.r - 1);
    const long long source_gk = gk_dimension(h, Partition(std::move(parts)));
    return group_dimension(make_group(GroupFamily::Symplectic, 2 * params.m)) + source_gk;
}

SearchResult search(const SearchQuery& query) {
    if (query.target_gk.has_value() == query.dim6.has_value())
        throw domain_error("search requires exactly one of a GK target or source-orbit parameters");

    long long target = 0;
    if (query.dim6) {
        const GroupDescriptor expected = dim6_group(*query.dim6);
        if (!(query.group == expected))
            throw domain_error("search group " + query.group.to_string() +
                               " does not match the source-orbit group " + expected.to_string());
        target = dim6_target_gk(*query.dim6);
    } else {
        if (*query.target_gk < 0)
            throw domain_error("GK target must be nonnegative");
        target = *query.target_gk;
    }
    if (query.group.modifiers.any())
        throw domain_error("search requires an unmodified classical group, got " +
                           query.group.to_string());

    SearchResult result;
    result.target_gk = target;
    for (const Partition& p : enumerate_partitions(query.group.size, query.group.family)) {
        ++result.total_candidates;
        if (gk_dimension(query.group, p) != target)
            continue;
        if (query.filters.all_multiplicities_even && !p.all_multiplicities_even())
            continue;
        if (query.filters.all_parts_even && !p.all_parts_even())
            continue;
        result.solutions.push_back(p);
    }

    if (query.filters.minimal_distinct_parts && !result.solutions.empty()) {
        std::size_t best = result.solutions.front().distinct_part_count();
        for (const Partition& p : result.solutions)
            best = std::min(best, p.distinct_part_count());
        std::erase_if(result.solutions,
                      [best](const Partition& p) { return p.distinct_part_count() != best; });
    }
    return result;
}

bool verify_solution(const GroupDescriptor& group, const Partition& p, long long target_gk) {
    return gk_dimension(group, p) == target_gk;
}

} // namespace liedim
