#pragma once

#include "bosonic/laurent.hpp"

namespace bosonic {

// Divided difference operators. All divisions are performed by exact_div,
// so a non-vanishing numerator remainder raises NotDivisibleError instead
// of silently producing garbage.

LaurentPoly partial_op(int i, const LaurentPoly& f);       // (f - z^{-a_i} s_i f)/(1 - z^{-a_i})
LaurentPoly partial_circ_op(int i, const LaurentPoly& f);  // (f - s_i f)/(z^{a_i} - 1)

LaurentPoly partial_word(const Permutation& w, const LaurentPoly& f);
LaurentPoly partial_circ_word(const Permutation& w, const LaurentPoly& f);

// Demazure-Lusztig operators with q identified with the variable t.
LaurentPoly dl_apply(int i, const LaurentPoly& f);
LaurentPoly dl_inv_apply(int i, const LaurentPoly& f);
LaurentPoly dl_word_apply(const Permutation& w, const LaurentPoly& f);      // L_w
LaurentPoly dl_word_inv_apply(const Permutation& w, const LaurentPoly& f);  // L_w^{-1}

// The symmetrizer: partial_word along the longest element.
LaurentPoly omega(const LaurentPoly& f);
// Independent route: the alternating sum over W with the integral Weyl
// vector (r-1,...,1,0), divided by the Vandermonde product.
LaurentPoly omega_alternating(const LaurentPoly& f);

// prod_{i<j} (z_i - z_j)
LaurentPoly vandermonde(int rank);
// prod_{i<j} (1 - t z_j / z_i)
LaurentPoly hl_root_product(int rank);

// Hall-Littlewood polynomials of a dominant weight.
LaurentPoly r_polynomial(const WeightVec& lambda);
// Oracle route: the symmetrized rational form with denominators cleared.
LaurentPoly r_polynomial_symmetrized(const WeightVec& lambda);

LaurentPoly v_m_poly(int m, int rank);  // prod_{i=1..m} (1-t^i)/(1-t)
LaurentPoly v_lambda(const WeightVec& lambda);
LaurentPoly p_polynomial(const WeightVec& lambda);  // R_lambda / v_lambda

// tau^lambda_{w,y} = q^{l(y)} L_w L_y^{-1} z^lambda, q = t.
LaurentPoly tau(const WeightVec& lambda, const Permutation& w, const Permutation& y);

// Theta = sum over the Weyl group of L_w.
LaurentPoly theta_sum(const LaurentPoly& f);

}  // namespace bosonic
