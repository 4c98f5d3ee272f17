#pragma once

#include <functional>

#include "bosonic/lattice.hpp"

namespace bosonic {

struct FailureCase {
    std::string config;  // enough to replay the case
    LaurentPoly lhs, rhs;
};

struct VerificationReport {
    std::string check_name;
    std::string parameter_summary;
    long long cases_checked = 0;
    std::vector<FailureCase> failures;

    bool pass() const { return failures.empty(); }
    void merge(VerificationReport&& other);
};

// Weight-function hooks. The defaults are the honest tables; tests inject
// faults here to prove the checks are sensitive.
struct UncoloredHooks {
    std::function<LaurentPoly(Family, HSpin, VSpinU, HSpin, VSpinU, int, int)> vertex =
        uncolored_weight;
    std::function<LaurentPoly(HSpin, HSpin, HSpin, HSpin, int, int, int)> rmatrix =
        rmatrix_uncolored;
};

struct ColoredHooks {
    std::function<LaurentPoly(Family, HSpin, const VSpinC&, HSpin, const VSpinC&, int, int)>
        vertex = fused_weight;
    std::function<LaurentPoly(HSpin, HSpin, HSpin, HSpin, int, int, int)> rmatrix =
        rmatrix_colored;
};

struct AuxHooks {
    std::function<LaurentPoly(Family, int, HSpin, VSpinU, HSpin, VSpinU, int, int)> vertex =
        monochrome_weight;
    std::function<LaurentPoly(int, HSpin, HSpin, HSpin, HSpin, int, int, int)> rmatrix =
        rmatrix_aux;
};

// Yang-Baxter equations: both 3-vertex partition functions of the crossing
// figure agree for every boundary assignment within the stated bounds.
VerificationReport check_ybe_uncolored(Family family, int n_max,
                                       const UncoloredHooks& hooks = {});
VerificationReport check_ybe_colored(Family family, int r, int m_max, int jobs = 1,
                                     const ColoredHooks& hooks = {});
VerificationReport check_ybe_aux(Family family, int r, int k, int n_max,
                                 const AuxHooks& hooks = {});

// Color-blindness of the R-weights: the uncolored weight equals the sum of
// colored weights over all liftings of the outgoing edges.
VerificationReport check_local_lifting(int r, int n_max);

// Z_R(uncolored) = sum over right flags of Z_R(colored), for any top flag.
VerificationReport check_global_lifting(const WeightVec& lambda,
                                        const std::vector<int>& flag, Family family);

// Systems with equal flags have a unique state of weight t^{l(w)} z^lambda.
VerificationReport check_monostatic(const WeightVec& lambda, const std::vector<int>& flag);

// Z(S_{lambda, y c0, w c0}) = tau^lambda_{w,y} over all pairs (w, y).
VerificationReport check_demeval(const WeightVec& lambda);

// Swapping entries i, i+1 of the right flag acts by L_{i,t}^{+-1}.
VerificationReport check_demtrain(const WeightVec& lambda, int i, const Permutation& w);

// Z_P = P_lambda and Z_R = R_lambda (enumeration, transfer matrices, and
// the symmetrized oracle all agree), plus Z_R = v_lambda Z_P.
VerificationReport check_uncolored_pf(const WeightVec& lambda);

// Randomized ring-axiom and involution properties of the laurent module.
VerificationReport check_laurent_properties(int rank, int trials, unsigned seed);

}  // namespace bosonic
