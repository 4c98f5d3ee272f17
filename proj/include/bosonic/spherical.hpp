#pragma once

#include "bosonic/verify.hpp"

namespace bosonic {

// A value of the form q^{h/2} * poly, where poly is a Laurent polynomial in
// z and q (the variable t plays the role of q). Half-integer powers of q
// never enter the polynomial ring; they live in the integer h.
struct HalfPowerValue {
    long long half_q_exponent = 0;
    LaurentPoly poly;

    // Equality of the represented values, allowing different (h, poly)
    // decompositions of the same quantity.
    bool value_equals(const HalfPowerValue& other) const;
    HalfPowerValue& operator+=(const HalfPowerValue& other);
};

// Iwahori-spherical matrix coefficient sigma_w^z(pi^lambda), evaluated via
// the Demazure-Lusztig route: q^{-<rho,lambda_+>} tau^{y(lambda)}_{w,y} with
// y the minimal-length sorter of lambda and lambda_+ its dominant sort.
// (For dominant lambda the prefactor is the familiar q^{-<rho,lambda>}; the
// sorted form is what K-bi-invariance forces in general.)
HalfPowerValue sigma_via_tau(const WeightVec& lambda, const Permutation& w);

// The same value from the colored lattice model: q^{-<rho,lambda_+>} q^{|Phi+|}
// Z(S_{-y(lambda)}) with z -> z^{-1}, t -> q^{-1}. Canonicalized to the same
// (h, poly) decomposition as sigma_via_tau, so the two routes must agree
// byte for byte.
HalfPowerValue sigma_via_lattice(const WeightVec& lambda, const Permutation& w);

// Macdonald's formula: q^{|Phi+|} q^{-<lambda,rho>} R_lambda(z; q^{-1}),
// dominant lambda only.
HalfPowerValue macdonald_spherical(const WeightVec& lambda);

// The spherical function sum_w sigma_w at lambda and w0(lambda) agree.
VerificationReport check_k_biinvariance(const WeightVec& lambda);

// sigma_via_tau == sigma_via_lattice over all w and all |lambda_i| <= max_abs,
// plus the Macdonald and recursion identities on the dominant sub-sweep.
VerificationReport check_sigma_consistency(int r, int max_abs, int jobs = 1);

}  // namespace bosonic
