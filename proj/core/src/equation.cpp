#include "liedim/equation.hpp"

#include <algorithm>

#include "liedim/errors.hpp"
#include "liedim/orbit.hpp"

namespace liedim {

namespace {

BalanceReport make_report(std::string name, long long lhs, long long rhs) {
    BalanceReport report;
    report.name = std::move(name);
    report.lhs_total = lhs;
    report.rhs_total = rhs;
    report.deficit = rhs - lhs;
    report.balanced = report.deficit == 0;
    return report;
}

bool classical_kind(FunctionalKind kind) {
    return kind == FunctionalKind::GkOfOrbit || kind == FunctionalKind::Eisenstein ||
           kind == FunctionalKind::Character;
}

Partition two_block_partition(long long value_a, long long mult_a,
                              long long value_b, long long mult_b) {
    std::vector<long long> parts;
    parts.insert(parts.end(), static_cast<std::size_t>(mult_a), value_a);
    if (value_b > 0)
        parts.insert(parts.end(), static_cast<std::size_t>(mult_b), value_b);
    return Partition(std::move(parts));
}

} // namespace

BalanceReport check_equation(const IntegralDescriptor& d) {
    if (d.mode == EquationMode::Classical)
        for (const FunctionalDim& f : d.rhs_functionals)
            if (!classical_kind(f.kind()))
                throw domain_error("descriptor '" + d.name +
                                   "' uses a non-classical functional in classical mode");
    if (d.mode != EquationMode::Lifting && d.lift_gk != 0)
        throw domain_error("descriptor '" + d.name + "' sets lift_gk outside lifting mode");
    if (d.lift_gk < 0)
        throw domain_error("descriptor '" + d.name + "' has a negative lift dimension");

    long long lhs = d.mode == EquationMode::Lifting ? d.lift_gk : 0;
    for (const GroupDescriptor& g : d.lhs_groups)
        lhs += group_dimension(g);
    for (long long u : d.lhs_unipotent_dims) {
        if (u < 0)
            throw domain_error("descriptor '" + d.name + "' has a negative unipotent dimension");
        lhs += u;
    }

    long long rhs = 0;
    for (const FunctionalDim& f : d.rhs_functionals)
        rhs += f.value();

    return make_report(d.name, lhs, rhs);
}

BalanceReport doubling_condition(const GroupDescriptor& group, long long unipotent_dim,
                                 const FunctionalDim& eisenstein) {
    if (eisenstein.kind() != FunctionalKind::Eisenstein)
        throw domain_error("doubling condition requires an Eisenstein functional");
    if (unipotent_dim < 0)
        throw domain_error("unipotent dimension must be nonnegative");
    return make_report("doubling(" + group.to_string() + ")",
                       group_dimension(group) + unipotent_dim, eisenstein.value());
}

BalanceReport cfgk_check(long long n, long long k) {
    if (n < 1 || k < 1)
        throw domain_error("cfgk_check requires n, k >= 1");

    const GroupDescriptor g = make_group(GroupFamily::Symplectic, 2 * n);
    const GroupDescriptor h = make_group(GroupFamily::Symplectic, 4 * k * n);
    const Partition coefficient_orbit = two_block_partition(2 * k - 1, 2 * n, 1, 2 * n);

    const long long dim_u = gk_dimension(h, coefficient_orbit);
    const auto profile = filtration_profile(h, coefficient_orbit);
    if (profile.weight_one_count != 0)
        throw domain_error("coefficient orbit " + coefficient_orbit.to_string() + " on " +
                           h.to_string() + " has weight-one roots; dim U != gk");

    const long long inducing = 2 * n * n * k * (k - 1);
    const long long radical = unipotent_radical_dim(h, LeviComposition{{2 * k * n}, false});
    const long long dim_e = inducing + radical;

    return make_report("cfgk(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
                       2 * group_dimension(g) + dim_u, group_dimension(g) + dim_e);
}

ThetaLiftPrediction theta_lift_predict(long long n, long long k) {
    if (n < 1 || k < 1)
        throw domain_error("theta_lift_predict requires n, k >= 1");
    ThetaLiftPrediction out;
    out.n = n;
    out.k = k;
    out.sigma_gk = 2 * n * k - n - n * n;
    out.vanishing_predicted = out.sigma_gk < 0;
    out.generic_compatible = out.sigma_gk == k * k - k;
    return out;
}

BalanceReport lemma71_check(long long m, long long k, long long r) {
    if (m < 1 || k < 1 || r < 1)
        throw domain_error("lemma71_check requires m, k >= 1 and r >= 1");

    // Partition notation lists parts in descending order, so the raised
    // block is the larger of the two part values.
    const long long hi = std::max(k, r);
    const long long lo = std::min(k, r);

    const GroupDescriptor h = make_group(GroupFamily::Symplectic, 4 * m * (k + r - 1));
    const Partition source = two_block_partition(2 * k - 1, 2 * m, 2 * r - 1, 2 * m);
    const Partition target = two_block_partition(2 * hi, 2 * m, 2 * lo - 2, 2 * m);

    const long long lhs = group_dimension(make_group(GroupFamily::Symplectic, 2 * m)) +
                          gk_dimension(h, source);
    const long long rhs = gk_dimension(h, target);
    return make_report("lemma71(m=" + std::to_string(m) + ",k=" + std::to_string(k) +
                           ",r=" + std::to_string(r) + ")",
                       lhs, rhs);
}

} // namespace liedim
