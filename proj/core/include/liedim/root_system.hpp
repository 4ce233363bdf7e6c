#pragma once

#include <memory>
#include <span>
#include <vector>

#include "liedim/partition.hpp"

namespace liedim {

enum class RootType { A, B, C, D };

/* A positive root of a classical system.  At most two coordinates are
 * nonzero, so roots are stored as (index, coefficient) pairs; j == -1
 * marks the single-coordinate roots e_i and 2e_i. */
struct Root {
    int i = 0;
    int j = -1;
    int ci = 0;
    int cj = 0;

    long long weight(std::span<const long long> torus_exponents) const {
        long long w = ci * torus_exponents[static_cast<std::size_t>(i)];
        if (j >= 0)
            w += cj * torus_exponents[static_cast<std::size_t>(j)];
        return w;
    }

    // Dense coordinate vector in the standard e_i basis.
    std::vector<long long> coordinates(std::size_t rank) const;
};

struct RootSystem {
    RootType type = RootType::A;
    long long rank = 0;
    std::vector<Root> positive;
};

/* The full standard positive system for the family acting in the given
 * size (n for GL_n, 2n for Sp_2n, m for SO_m).  GL_n is reported with
 * rank n (torus of the full group).  Memoized per (family, size); the
 * cache is safe for concurrent use.  Throws domain_error when the size
 * parity does not match the family. */
std::shared_ptr<const RootSystem> positive_roots(GroupFamily family, long long size);

} // namespace liedim
