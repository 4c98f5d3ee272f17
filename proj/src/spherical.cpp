#include "bosonic/spherical.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "bosonic/demazure.hpp"

namespace bosonic {

bool HalfPowerValue::value_equals(const HalfPowerValue& other) const {
    long long d = half_q_exponent - other.half_q_exponent;
    if (d % 2 != 0) return poly.is_zero() && other.poly.is_zero();
    if (d >= 0) return poly * LaurentPoly::t(poly.rank(), static_cast<int>(d / 2)) == other.poly;
    return poly == other.poly * LaurentPoly::t(poly.rank(), static_cast<int>(-d / 2));
}

HalfPowerValue& HalfPowerValue::operator+=(const HalfPowerValue& other) {
    long long d = half_q_exponent - other.half_q_exponent;
    if (d % 2 != 0)
        throw std::invalid_argument("HalfPowerValue: prefactor parity mismatch in sum");
    if (d >= 0) {
        poly = poly * LaurentPoly::t(poly.rank(), static_cast<int>(d / 2)) + other.poly;
        half_q_exponent = other.half_q_exponent;
    } else {
        poly += other.poly * LaurentPoly::t(poly.rank(), static_cast<int>(-d / 2));
    }
    return *this;
}

namespace {

// The prefactor exponent carries the dominant sort of lambda: the constant
// in the closed formula is pinned by K-bi-invariance against the Macdonald
// evaluation at the dominant representative.
long long prefactor_exponent(const WeightVec& lambda) {
    WeightVec sorted = lambda;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return -pairing_2rho(sorted);
}

}  // namespace

HalfPowerValue sigma_via_tau(const WeightVec& lambda, const Permutation& w) {
    Permutation y = minimal_sorter(lambda);
    WeightVec mu = act_on_weight(y, lambda);  // antidominant
    return {prefactor_exponent(lambda), tau(mu, w, y)};
}

HalfPowerValue sigma_via_lattice(const WeightVec& lambda, const Permutation& w) {
    int r = static_cast<int>(lambda.size());
    Permutation y = minimal_sorter(lambda);
    Permutation w0 = Permutation::longest(r);
    WeightVec mu = act_on_weight(y, lambda);
    WeightVec nu(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) nu[i] = -mu[i];  // dominant
    // By the Demazure evaluation, Z(S_{nu, (y w0) c0, (w w0) c0}) equals
    // tau^{nu}_{w w0, y w0}; the involution identity then turns the
    // substituted value below into tau^{mu}_{w, y}.
    SystemSpec spec =
        SystemSpec::colored(Family::R, nu, flag_of(y * w0), flag_of(w * w0));
    LaurentPoly z = partition_function(spec);
    LaurentPoly poly =
        invert_t(invert_z(z)) * LaurentPoly::t(r, num_positive_roots(r));
    return {prefactor_exponent(lambda), poly};
}

HalfPowerValue macdonald_spherical(const WeightVec& lambda) {
    if (!is_dominant(lambda))
        throw NonDominantError("macdonald_spherical: lambda must be dominant");
    int r = static_cast<int>(lambda.size());
    return {-pairing_2rho(lambda) + 2 * num_positive_roots(r),
            invert_t(r_polynomial(lambda))};
}

namespace {

HalfPowerValue spherical_sum(const WeightVec& lambda) {
    int r = static_cast<int>(lambda.size());
    HalfPowerValue total{prefactor_exponent(lambda), LaurentPoly::zero(r)};
    for (const auto& w : all_permutations(r)) total += sigma_via_tau(lambda, w);
    return total;
}

std::string weight_str(const WeightVec& lambda) {
    std::string s = "[";
    for (size_t i = 0; i < lambda.size(); ++i)
        s += (i ? "," : "") + std::to_string(lambda[i]);
    return s + "]";
}

}  // namespace

VerificationReport check_k_biinvariance(const WeightVec& lambda) {
    if (!is_dominant(lambda))
        throw NonDominantError("check_k_biinvariance: lambda must be dominant");
    VerificationReport report;
    report.check_name = "k-biinvariance";
    report.parameter_summary = "lambda=" + weight_str(lambda);
    int r = static_cast<int>(lambda.size());
    HalfPowerValue at_lambda = spherical_sum(lambda);
    HalfPowerValue at_w0lambda =
        spherical_sum(act_on_weight(Permutation::longest(r), lambda));
    HalfPowerValue mac = macdonald_spherical(lambda);
    report.cases_checked += 2;
    if (!at_lambda.value_equals(at_w0lambda))
        report.failures.push_back(
            {"sum_w sigma at lambda vs w0*lambda", at_lambda.poly, at_w0lambda.poly});
    if (!at_lambda.value_equals(mac))
        report.failures.push_back(
            {"sum_w sigma vs macdonald formula", at_lambda.poly, mac.poly});
    return report;
}

VerificationReport check_sigma_consistency(int r, int max_abs, int jobs) {
    VerificationReport report;
    report.check_name = "sigma-consistency";
    report.parameter_summary =
        "rank=" + std::to_string(r) + " max_abs=" + std::to_string(max_abs);

    std::vector<WeightVec> weights;
    WeightVec cur(r, -max_abs);
    for (;;) {
        weights.push_back(cur);
        int i = 0;
        while (i < r && cur[i] == max_abs) cur[i++] = -max_abs;
        if (i == r) break;
        cur[i] += 1;
    }
    auto perms = all_permutations(r);

    jobs = std::max(1, jobs);
    std::vector<VerificationReport> partial(jobs);
    auto work = [&](int tid, VerificationReport& rep) {
        for (size_t li = tid; li < weights.size(); li += jobs) {
            const WeightVec& lambda = weights[li];
            for (const auto& w : perms) {
                rep.cases_checked++;
                HalfPowerValue a = sigma_via_tau(lambda, w);
                HalfPowerValue b = sigma_via_lattice(lambda, w);
                if (!(a.half_q_exponent == b.half_q_exponent && a.poly == b.poly))
                    rep.failures.push_back(
                        {"lattice-vs-tau lambda=" + weight_str(lambda) + " w=" + w.str(),
                         a.poly, b.poly});
                // recursion in w: ascents act by L_i
                for (int i = 1; i < r; ++i) {
                    Permutation siw = Permutation::simple(r, i) * w;
                    if (length(siw) > length(w)) {
                        rep.cases_checked++;
                        HalfPowerValue c = sigma_via_tau(lambda, siw);
                        if (!(c.half_q_exponent == a.half_q_exponent &&
                              c.poly == dl_apply(i, a.poly)))
                            rep.failures.push_back({"sigma-recursion lambda=" +
                                                        weight_str(lambda) + " w=" + w.str() +
                                                        " i=" + std::to_string(i),
                                                    c.poly, dl_apply(i, a.poly)});
                    }
                }
            }
            if (is_dominant(lambda)) {
                rep.cases_checked++;
                HalfPowerValue total = spherical_sum(lambda);
                HalfPowerValue mac = macdonald_spherical(lambda);
                if (!total.value_equals(mac))
                    rep.failures.push_back({"macdonald lambda=" + weight_str(lambda),
                                            total.poly, mac.poly});
                for (const auto& u : perms) {
                    rep.cases_checked++;
                    if (permute_z(total.poly, u) != total.poly)
                        rep.failures.push_back({"sum not W-invariant, lambda=" +
                                                    weight_str(lambda) + " u=" + u.str(),
                                                total.poly, permute_z(total.poly, u)});
                }
            }
        }
    };
    if (jobs == 1) {
        work(0, report);
    } else {
        std::vector<std::thread> threads;
        for (int tid = 0; tid < jobs; ++tid)
            threads.emplace_back([&, tid] { work(tid, partial[tid]); });
        for (auto& th : threads) th.join();
        for (auto& p : partial) report.merge(std::move(p));
    }
    return report;
}

}  // namespace bosonic
