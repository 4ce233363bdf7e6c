#pragma once

#include <map>
#include <vector>

#include "liedim/group.hpp"
#include "liedim/partition.hpp"

namespace liedim {

/* A unipotent orbit of a plain classical group, indexed by a partition
 * of the group size subject to the family's parity rule.  dim is the
 * closed-form orbit dimension and gk = dim/2. */
struct Orbit {
    GroupDescriptor group;
    Partition partition;
    long long dim = 0;
    long long gk = 0;
    long long odd_part_count = 0;
};

/* Closed forms per family:
 *   Sp_2n: 2n^2 + n - (1/2) sum (2i-1) p_i - a/2, a = number of odd parts
 *   GL_n:  n^2 - sum (transposeparts)^2
 *   SO_m:  (m^2 - sum (transpose parts)^2)/2 - (m - a)/2
 * Throws domain_error when the descriptor carries modifiers, the
 * partition does not sum to the group size, or the family rejects it. */
long long orbit_dimension(const GroupDescriptor& group, const Partition& p);
long long gk_dimension(const GroupDescriptor& group, const Partition& p);
Orbit make_orbit(const GroupDescriptor& group, const Partition& p);

// One-parameter-torus exponents {p-1, p-3, ..., 1-p} per part, the whole
// multiset sorted non-increasing.
std::vector<long long> weight_multiset(const Partition& p);

/* The exponents of the grading torus inside the group: the full sorted
 * multiset for GL_n, its first rank entries for Sp/SO (the multiset is
 * symmetric under negation; the middle zero of an odd orthogonal group
 * is dropped). */
std::vector<long long> torus_exponents(const GroupDescriptor& group, const Partition& p);

/* Grading of the positive roots by the orbit torus.  dim_n1/dim_n2 count
 * roots of weight >= 1, >= 2; the histogram records every weight. */
struct FiltrationProfile {
    std::vector<long long> weight_vector; // torus exponents, non-increasing
    long long dim_n1 = 0;
    long long dim_n2 = 0;
    long long weight_one_count = 0; // dim_n1 - dim_n2
    std::map<long long, long long> weight_histogram;

    // Number of positive roots of weight >= i.
    long long dim_n(long long i) const;
};

FiltrationProfile filtration_profile(const GroupDescriptor& group, const Partition& p);

// dim N_1 of the orbit filtration (the group carrying the theta-coupled
// coefficient when weight-one roots are present).
long long fourier_jacobi_dim(const GroupDescriptor& group, const Partition& p);

} // namespace liedim
