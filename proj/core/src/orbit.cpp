#include "liedim/orbit.hpp"

#include <algorithm>
#include <functional>

#include "liedim/errors.hpp"
#include "liedim/root_system.hpp"

namespace liedim {

namespace {

void validate_orbit(const GroupDescriptor& group, const Partition& p) {
    if (group.modifiers.any())
        throw domain_error("orbit computations require an unmodified classical group, got " +
                           group.to_string());
    make_group(group.family, group.size);
    if (p.sum() != group.size)
        throw domain_error("partition " + p.to_string() + " sums to " + std::to_string(p.sum()) +
                           ", expected " + std::to_string(group.size) + " for " + group.to_string());
    if (!family_admits(group.family, p))
        throw domain_error("partition " + p.to_string() + " is not a valid " +
                           std::string(family_name(group.family)) + " partition");
}

long long transpose_square_sum(const Partition& p) {
    const Partition transposed = p.transpose();
    long long s = 0;
    for (long long t : transposed.parts())
        s += t * t;
    return s;
}

} // namespace

long long orbit_dimension(const GroupDescriptor& group, const Partition& p) {
    validate_orbit(group, p);
    const long long size = group.size;
    long long dim = 0;
    switch (group.family) {
        case GroupFamily::Symplectic: {
            long long weighted = 0;
            long long i = 1;
            for (long long part : p.parts())
                weighted += (2 * i++ - 1) * part;
            dim = size * (size + 1) / 2 - (weighted + p.odd_part_count()) / 2;
            break;
        }
        case GroupFamily::GeneralLinear:
            dim = size * size - transpose_square_sum(p);
            break;
        case GroupFamily::OddOrthogonal:
        case GroupFamily::EvenOrthogonal:
            dim = (size * size - transpose_square_sum(p)) / 2 -
                  (size - p.odd_part_count()) / 2;
            break;
    }
    if (dim < 0 || dim % 2 != 0)
        throw domain_error("orbit dimension of " + p.to_string() + " on " + group.to_string() +
                           " is not a nonnegative even integer");
    return dim;
}

long long gk_dimension(const GroupDescriptor& group, const Partition& p) {
    return orbit_dimension(group, p) / 2;
}

Orbit make_orbit(const GroupDescriptor& group, const Partition& p) {
    long long dim = orbit_dimension(group, p);
    return Orbit{group, p, dim, dim / 2, p.odd_part_count()};
}

std::vector<long long> weight_multiset(const Partition& p) {
    std::vector<long long> exponents;
    exponents.reserve(static_cast<std::size_t>(p.sum()));
    for (long long part : p.parts())
        for (long long e = part - 1; e >= 1 - part; e -= 2)
            exponents.push_back(e);
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    return exponents;
}

std::vector<long long> torus_exponents(const GroupDescriptor& group, const Partition& p) {
    validate_orbit(group, p);
    auto full = weight_multiset(p);
    if (group.family == GroupFamily::GeneralLinear)
        return full;
    full.resize(static_cast<std::size_t>(group.rank()));
    return full;
}

long long FiltrationProfile::dim_n(long long i) const {
    long long count = 0;
    for (const auto& [weight, mult] : weight_histogram)
        if (weight >= i)
            count += mult;
    return count;
}

FiltrationProfile filtration_profile(const GroupDescriptor& group, const Partition& p) {
    FiltrationProfile profile;
    profile.weight_vector = torus_exponents(group, p);

    auto system = positive_roots(group.family, group.size);
    for (const Root& root : system->positive)
        ++profile.weight_histogram[root.weight(profile.weight_vector)];

    profile.dim_n1 = profile.dim_n(1);
    profile.dim_n2 = profile.dim_n(2);
    profile.weight_one_count = profile.dim_n1 - profile.dim_n2;
    return profile;
}

long long fourier_jacobi_dim(const GroupDescriptor& group, const Partition& p) {
    return filtration_profile(group, p).dim_n1;
}

} // namespace liedim
