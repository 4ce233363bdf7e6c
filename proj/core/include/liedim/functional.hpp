#pragma once

#include <optional>

#include "liedim/group.hpp"
#include "liedim/orbit.hpp"

namespace liedim {

enum class FunctionalKind {
    GkOfOrbit,         // value = gk of the orbit
    MatrixCoefficient, // value = full group dimension
    ExplicitPeriod,    // value = reductive_dim + unipotent_dim
    FourierJacobi,     // value = dim N_1 of the orbit filtration
    Eisenstein,        // value = inducing_dim + radical_dim
    Character,         // value = 0
};

/* Dimension of a unique functional on the unfolded side of an integral.
 * Descriptors must carry the minimal realizing data: when a functional
 * is realized by integration over a smaller group, the smaller group's
 * dimensions are the ones to record here.  Minimality is the caller's
 * obligation; it cannot be verified combinatorially. */
class FunctionalDim {
public:
    static FunctionalDim gk_of_orbit(Orbit orbit);
    static FunctionalDim matrix_coefficient(GroupDescriptor group);
    static FunctionalDim explicit_period(long long reductive_dim, long long unipotent_dim);
    static FunctionalDim fourier_jacobi(Orbit orbit);
    static FunctionalDim eisenstein(long long inducing_dim, long long radical_dim);
    static FunctionalDim character();

    FunctionalKind kind() const { return kind_; }
    long long value() const { return value_; }

    const std::optional<Orbit>& orbit() const { return orbit_; }
    const std::optional<GroupDescriptor>& group() const { return group_; }
    long long first_arg() const { return first_; }   // reductive_dim / inducing_dim
    long long second_arg() const { return second_; } // unipotent_dim / radical_dim

private:
    FunctionalDim(FunctionalKind kind, long long value) : kind_(kind), value_(value) {}

    FunctionalKind kind_;
    long long value_ = 0;
    std::optional<Orbit> orbit_;
    std::optional<GroupDescriptor> group_;
    long long first_ = 0;
    long long second_ = 0;
};

// value = inducing_gk + dim of the unipotent radical of the parabolic.
FunctionalDim eisenstein_dim(long long inducing_gk, const GroupDescriptor& group,
                             const LeviComposition& levi);

long long functional_value(const FunctionalDim& f);

} // namespace liedim
