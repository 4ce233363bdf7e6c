#pragma once

#include <string>
#include <vector>

#include "liedim/functional.hpp"
#include "liedim/group.hpp"

namespace liedim {

/* Classical: functional side restricted to GK / Eisenstein / character
 * dimensions.  Extended: any functional.  Lifting: the lift's GK
 * dimension joins the group side. */
enum class EquationMode { Classical, Extended, Lifting };

struct IntegralDescriptor {
    std::string name;
    EquationMode mode = EquationMode::Classical;
    long long lift_gk = 0; // Lifting mode only
    std::vector<GroupDescriptor> lhs_groups;
    std::vector<long long> lhs_unipotent_dims;
    std::vector<FunctionalDim> rhs_functionals;
};

/* Imbalance is data, not an error: a balanced verdict is a screening
 * signal, never a claim that the integral is nonzero or Eulerian. */
struct BalanceReport {
    std::string name;
    long long lhs_total = 0;
    long long rhs_total = 0;
    long long deficit = 0; // rhs_total - lhs_total
    bool balanced = false;
};

// Throws domain_error when Classical mode carries a functional outside
// its allowed kinds.
BalanceReport check_equation(const IntegralDescriptor& d);

// Balanced iff dim(G) + unipotent_dim equals the Eisenstein value.
// The functional must be an Eisenstein dimension.
BalanceReport doubling_condition(const GroupDescriptor& group, long long unipotent_dim,
                                 const FunctionalDim& eisenstein);

/* Generalized doubling balance for Sp(2n) x GL(k):
 *   2 dim Sp_2n + dim U = dim Sp_2n + dim E_tau
 * with dim U the GK dimension of ((2k-1)^{2n} 1^{2n}) on Sp_{4kn} (that
 * orbit's filtration has no weight-one roots, which is verified) and
 * dim E_tau = 2n^2k(k-1) + dim U(P) for the GL_{2kn} parabolic. */
BalanceReport cfgk_check(long long n, long long k);

/* Predicted lift through the classical theta kernel on Sp_{4nk}, from a
 * generic representation of Sp_2n towards SO_2k. */
struct ThetaLiftPrediction {
    long long n = 0;
    long long k = 0;
    long long sigma_gk = 0; // 2nk - n - n^2, may be negative
    bool vanishing_predicted = false;  // sigma_gk < 0
    bool generic_compatible = false;   // sigma_gk == k^2 - k
};

ThetaLiftPrediction theta_lift_predict(long long n, long long k);

/* dim Sp_2m + gk((2k-1)^{2m}(2r-1)^{2m}) = gk((2K)^{2m}(2L-2)^{2m}) on
 * Sp_{4m(k+r-1)}, where K = max(k,r), L = min(k,r); for L = 1 the second
 * block is empty and the target is ((2K)^{2m}).  Accepts r >= 1. */
BalanceReport lemma71_check(long long m, long long k, long long r);

} // namespace liedim
