#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liedim/partition.hpp"

namespace liedim {

/* Dimension modifiers for the groups appearing in integral descriptions.
 * Applied in a fixed order: base dimension, x2 for restriction of
 * scalars, +1 for a similitude factor, -1 per center quotient. */
struct GroupModifiers {
    bool restrict_scalars_degree2 = false;
    bool similitude = false;
    bool projective_center = false;
    bool quotient_by_gl1 = false;

    bool any() const {
        return restrict_scalars_degree2 || similitude || projective_center || quotient_by_gl1;
    }
    bool operator==(const GroupModifiers&) const = default;
};

struct GroupDescriptor {
    GroupFamily family = GroupFamily::GeneralLinear;
    long long size = 1; // n for GL_n, 2n for Sp_2n, m for SO_m
    GroupModifiers modifiers;

    /* Grammar: GL(n), SL(n), PGL(n), Sp(2n), GSp(2n), PGSp(2n), SO(m),
     * optional prefix "Res2:" and optional suffix "/GL1".  SL(n) parses
     * to GL(n) with the projective-center modifier (dimension n^2-1). */
    static GroupDescriptor parse(std::string_view text);
    std::string to_string() const;

    // Torus rank of the base group: n for GL_n and Sp_2n, floor(m/2) for SO_m.
    long long rank() const { return family == GroupFamily::GeneralLinear ? size : size / 2; }

    bool operator==(const GroupDescriptor&) const = default;
};

// Validates family/size parity.  Throws domain_error.
GroupDescriptor make_group(GroupFamily family, long long size);

// Base dimensions n^2, 2n^2+n, m(m-1)/2 with modifier arithmetic applied.
long long group_dimension(const GroupDescriptor& g);

/* A standard-parabolic Levi shape: GL blocks on the isotropic flag plus
 * an optional residual classical factor of the remaining size.  For
 * GL_n the remaining size is implicitly a final GL block and the flag
 * is ignored. */
struct LeviComposition {
    std::vector<long long> gl_blocks;
    bool keeps_classical_factor = false;
};

/* Dimension of the unipotent radical of the parabolic with this Levi:
 * (dim G - dim Levi)/2, doubled under restriction of scalars.  Throws
 * domain_error on an overfull composition, or when a Sp/SO composition
 * leaves a nontrivial residual factor unclaimed. */
long long unipotent_radical_dim(const GroupDescriptor& g, const LeviComposition& levi);

} // namespace liedim
