#include "liedim/functional.hpp"

#include "liedim/errors.hpp"

namespace liedim {

FunctionalDim FunctionalDim::gk_of_orbit(Orbit orbit) {
    FunctionalDim f(FunctionalKind::GkOfOrbit, orbit.gk);
    f.orbit_ = std::move(orbit);
    return f;
}

FunctionalDim FunctionalDim::matrix_coefficient(GroupDescriptor group) {
    FunctionalDim f(FunctionalKind::MatrixCoefficient, group_dimension(group));
    f.group_ = std::move(group);
    return f;
}

FunctionalDim FunctionalDim::explicit_period(long long reductive_dim, long long unipotent_dim) {
    if (reductive_dim < 0 || unipotent_dim < 0)
        throw domain_error("explicit period dimensions must be nonnegative");
    FunctionalDim f(FunctionalKind::ExplicitPeriod, reductive_dim + unipotent_dim);
    f.first_ = reductive_dim;
    f.second_ = unipotent_dim;
    return f;
}

FunctionalDim FunctionalDim::fourier_jacobi(Orbit orbit) {
    FunctionalDim f(FunctionalKind::FourierJacobi,
                    fourier_jacobi_dim(orbit.group, orbit.partition));
    f.orbit_ = std::move(orbit);
    return f;
}

FunctionalDim FunctionalDim::eisenstein(long long inducing_dim, long long radical_dim) {
    if (inducing_dim < 0 || radical_dim < 0)
        throw domain_error("Eisenstein dimensions must be nonnegative");
    FunctionalDim f(FunctionalKind::Eisenstein, inducing_dim + radical_dim);
    f.first_ = inducing_dim;
    f.second_ = radical_dim;
    return f;
}

FunctionalDim FunctionalDim::character() {
    return FunctionalDim(FunctionalKind::Character, 0);
}

FunctionalDim eisenstein_dim(long long inducing_gk, const GroupDescriptor& group,
                             const LeviComposition& levi) {
    return FunctionalDim::eisenstein(inducing_gk, unipotent_radical_dim(group, levi));
}

long long functional_value(const FunctionalDim& f) {
    return f.value();
}

} // namespace liedim
