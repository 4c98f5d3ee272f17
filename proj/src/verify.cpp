#include "bosonic/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "bosonic/demazure.hpp"

namespace bosonic {

void VerificationReport::merge(VerificationReport&& other) {
    cases_checked += other.cases_checked;
    for (auto& f : other.failures) failures.push_back(std::move(f));
}

namespace {

std::string spin_str(HSpin s) { return s.str(); }

// The two 3-vertex systems of the crossing figure. The strand entering at
// the lower-left corner (a) carries z_1; the other strand carries z_2.
// VertexFn(west, north, east, south, z_index) and RmatFn(sw, nw, ne, se).
//
// The interior vertical spin is forced by conservation, computed by
// `flow(top, in, out)` which returns the south spin of a vertex or nullopt.
template <class V, class VertexFn, class RmatFn, class FlowFn>
LaurentPoly ybe_lhs(int rank, HSpin a, HSpin b, const V& c, HSpin d, HSpin e, const V& f,
                    const std::vector<HSpin>& hspins, VertexFn vertex, RmatFn rmat,
                    FlowFn flow) {
    LaurentPoly total = LaurentPoly::zero(rank);
    for (HSpin g : hspins) {
        auto k = flow(c, g, d);
        if (!k) continue;
        for (HSpin h : hspins) {
            LaurentPoly w = rmat(a, b, g, h);
            if (w.is_zero()) continue;
            w *= vertex(g, c, d, *k, 1);
            if (w.is_zero()) continue;
            w *= vertex(h, *k, e, f, 2);
            total += w;
        }
    }
    return total;
}

template <class V, class VertexFn, class RmatFn, class FlowFn>
LaurentPoly ybe_rhs(int rank, HSpin a, HSpin b, const V& c, HSpin d, HSpin e, const V& f,
                    const std::vector<HSpin>& hspins, VertexFn vertex, RmatFn rmat,
                    FlowFn flow) {
    LaurentPoly total = LaurentPoly::zero(rank);
    for (HSpin g : hspins) {
        auto k = flow(f, g, a);  // bottom vertex read upward: top = f + in(g) - out(a)
        if (!k) continue;
        for (HSpin h : hspins) {
            LaurentPoly w = vertex(a, *k, g, f, 1);
            if (w.is_zero()) continue;
            w *= vertex(b, c, h, *k, 2);
            if (w.is_zero()) continue;
            w *= rmat(g, h, d, e);
            total += w;
        }
    }
    return total;
}

std::optional<int> flow_count(int top, HSpin in, HSpin out) {
    int south = top + (in.is_plus() ? 0 : 1) - (out.is_plus() ? 0 : 1);
    if (south < 0) return std::nullopt;
    return south;
}

std::optional<int> flow_mono(int color, int top, HSpin in, HSpin out) {
    int south = top + (in == HSpin::color(color) ? 1 : 0) -
                (out == HSpin::color(color) ? 1 : 0);
    if (south < 0) return std::nullopt;
    return south;
}

std::optional<VSpinC> flow_multi(const VSpinC& top, HSpin in, HSpin out) {
    VSpinC south = top;
    if (in.is_color()) south[in.color_index() - 1] += 1;
    if (out.is_color()) {
        if (south[out.color_index() - 1] == 0) return std::nullopt;
        south[out.color_index() - 1] -= 1;
    }
    return south;
}

template <class Fn>
void run_cases(long long n, int jobs, VerificationReport& report, Fn per_case) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (long long i = 0; i < n; ++i) per_case(i, report);
        report.cases_checked += n;
        return;
    }
    std::vector<VerificationReport> partial(jobs);
    std::vector<std::thread> threads;
    for (int tid = 0; tid < jobs; ++tid) {
        threads.emplace_back([&, tid] {
            for (long long i = tid; i < n; i += jobs) per_case(i, partial[tid]);
        });
    }
    for (auto& th : threads) th.join();
    for (auto& p : partial) report.merge(std::move(p));
    report.cases_checked += n;
}

}  // namespace

VerificationReport check_ybe_uncolored(Family family, int n_max,
                                       const UncoloredHooks& hooks) {
    VerificationReport report;
    report.check_name = "ybe-uncolored";
    report.parameter_summary = "family=" + family_name(family) +
                               " n_max=" + std::to_string(n_max);
    const int rank = 2;
    const std::vector<HSpin> hspins{HSpin::plus(), HSpin::minus()};
    auto vertex = [&](HSpin w, int n, HSpin e, int s, int zi) {
        return hooks.vertex(family, w, n, e, s, zi, rank);
    };
    auto rmat = [&](HSpin sw, HSpin nw, HSpin ne, HSpin se) {
        return hooks.rmatrix(sw, nw, ne, se, 1, 2, rank);
    };
    for (HSpin a : hspins)
        for (HSpin b : hspins)
            for (HSpin d : hspins)
                for (HSpin e : hspins)
                    for (int c = 0; c <= n_max; ++c)
                        for (int f = 0; f <= n_max; ++f) {
                            report.cases_checked++;
                            LaurentPoly lhs =
                                ybe_lhs(rank, a, b, c, d, e, f, hspins, vertex, rmat, flow_count);
                            LaurentPoly rhs =
                                ybe_rhs(rank, a, b, c, d, e, f, hspins, vertex, rmat, flow_count);
                            if (lhs != rhs) {
                                std::ostringstream os;
                                os << "a=" << spin_str(a) << " b=" << spin_str(b)
                                   << " c=" << c << " d=" << spin_str(d)
                                   << " e=" << spin_str(e) << " f=" << f;
                                report.failures.push_back({os.str(), lhs, rhs});
                            }
                        }
    return report;
}

VerificationReport check_ybe_colored(Family family, int r, int m_max, int jobs,
                                     const ColoredHooks& hooks) {
    VerificationReport report;
    report.check_name = "ybe-colored";
    report.parameter_summary = "family=" + family_name(family) + " rank=" +
                               std::to_string(r) + " m_max=" + std::to_string(m_max);
    const std::vector<HSpin> hspins = colored_hspins(r);
    const std::vector<VSpinC> vspins = multisets_up_to_total(r, m_max);
    auto vertex = [&, family, r](HSpin w, const VSpinC& n, HSpin e, const VSpinC& s,
                                 int zi) { return hooks.vertex(family, w, n, e, s, zi, r); };
    auto rmat = [&, r](HSpin sw, HSpin nw, HSpin ne, HSpin se) {
        return hooks.rmatrix(sw, nw, ne, se, 1, 2, r);
    };

    const long long nh = static_cast<long long>(hspins.size());
    const long long nv = static_cast<long long>(vspins.size());
    const long long total = nh * nh * nh * nh * nv * nv;
    run_cases(total, jobs, report, [&](long long idx, VerificationReport& rep) {
        long long q = idx;
        HSpin a = hspins[q % nh]; q /= nh;
        HSpin b = hspins[q % nh]; q /= nh;
        HSpin d = hspins[q % nh]; q /= nh;
        HSpin e = hspins[q % nh]; q /= nh;
        const VSpinC& c = vspins[q % nv]; q /= nv;
        const VSpinC& f = vspins[q % nv];
        LaurentPoly lhs = ybe_lhs(r, a, b, c, d, e, f, hspins, vertex, rmat, flow_multi);
        LaurentPoly rhs = ybe_rhs(r, a, b, c, d, e, f, hspins, vertex, rmat, flow_multi);
        if (lhs != rhs) {
            std::ostringstream os;
            os << "a=" << spin_str(a) << " b=" << spin_str(b) << " c=" << vspinc_str(c)
               << " d=" << spin_str(d) << " e=" << spin_str(e) << " f=" << vspinc_str(f);
            rep.failures.push_back({os.str(), lhs, rhs});
        }
    });
    return report;
}

VerificationReport check_ybe_aux(Family family, int r, int k, int n_max,
                                 const AuxHooks& hooks) {
    if (k < 1 || k > r) throw std::invalid_argument("check_ybe_aux: 1 <= k <= r");
    VerificationReport report;
    report.check_name = "ybe-aux";
    report.parameter_summary = "family=" + family_name(family) + " rank=" +
                               std::to_string(r) + " k=" + std::to_string(k) +
                               " n_max=" + std::to_string(n_max);
    const std::vector<HSpin> hspins = colored_hspins(r);
    const int k_left = k;
    const int k_right = (k == 1) ? r : k - 1;  // gamma_0 = gamma_r
    auto vertex = [&](HSpin w, int n, HSpin e, int s, int zi) {
        return hooks.vertex(family, k, w, n, e, s, zi, r);
    };
    auto rmat_left = [&](HSpin sw, HSpin nw, HSpin ne, HSpin se) {
        return hooks.rmatrix(k_left, sw, nw, ne, se, 1, 2, r);
    };
    auto rmat_right = [&](HSpin sw, HSpin nw, HSpin ne, HSpin se) {
        return hooks.rmatrix(k_right, sw, nw, ne, se, 1, 2, r);
    };
    auto flow = [&](int top, HSpin in, HSpin out) { return flow_mono(k, top, in, out); };
    for (HSpin a : hspins)
        for (HSpin b : hspins)
            for (HSpin d : hspins)
                for (HSpin e : hspins)
                    for (int c = 0; c <= n_max; ++c)
                        for (int f = 0; f <= n_max; ++f) {
                            report.cases_checked++;
                            LaurentPoly lhs =
                                ybe_lhs(r, a, b, c, d, e, f, hspins, vertex, rmat_left, flow);
                            LaurentPoly rhs =
                                ybe_rhs(r, a, b, c, d, e, f, hspins, vertex, rmat_right, flow);
                            if (lhs != rhs) {
                                std::ostringstream os;
                                os << "a=" << spin_str(a) << " b=" << spin_str(b)
                                   << " c=" << c << " d=" << spin_str(d)
                                   << " e=" << spin_str(e) << " f=" << f;
                                report.failures.push_back({os.str(), lhs, rhs});
                            }
                        }
    return report;
}

VerificationReport check_local_lifting(int r, int n_max) {
    VerificationReport report;
    report.check_name = "local-lifting";
    report.parameter_summary =
        "rank=" + std::to_string(r) + " n_max=" + std::to_string(n_max);
    const std::vector<HSpin> unc{HSpin::plus(), HSpin::minus()};
    auto lifts_h = [&](HSpin A) {
        std::vector<HSpin> out;
        if (A.is_plus()) {
            out.push_back(HSpin::plus());
        } else {
            for (int c = 1; c <= r; ++c) out.push_back(HSpin::color(c));
        }
        return out;
    };
    for (HSpin A : unc)
        for (int B = 0; B <= n_max; ++B)
            for (HSpin C : unc)
                for (int D = 0; D <= n_max; ++D) {
                    LaurentPoly lhs = uncolored_weight(Family::R, A, B, C, D, 1, r);
                    for (HSpin a : lifts_h(A))
                        for (const VSpinC& b : multisets_with_total(r, B)) {
                            report.cases_checked++;
                            LaurentPoly rhs(r);
                            for (HSpin c : lifts_h(C))
                                for (const VSpinC& d : multisets_with_total(r, D))
                                    rhs += fused_weight(Family::R, a, b, c, d, 1, r);
                            if (lhs != rhs) {
                                std::ostringstream os;
                                os << "A=" << A.str() << " B=" << B << " C=" << C.str()
                                   << " D=" << D << " a=" << a.str()
                                   << " b=" << vspinc_str(b);
                                report.failures.push_back({os.str(), lhs, rhs});
                            }
                        }
                }
    return report;
}

VerificationReport check_global_lifting(const WeightVec& lambda,
                                        const std::vector<int>& flag, Family family) {
    VerificationReport report;
    report.check_name = "global-lifting";
    std::ostringstream ps;
    ps << "family=" << family_name(family) << " lambda=[";
    for (size_t i = 0; i < lambda.size(); ++i) ps << (i ? "," : "") << lambda[i];
    ps << "] flag=[";
    for (size_t i = 0; i < flag.size(); ++i) ps << (i ? "," : "") << flag[i];
    ps << "]";
    report.parameter_summary = ps.str();

    LaurentPoly lhs = partition_function(SystemSpec::uncolored(family, lambda));
    LaurentPoly rhs(static_cast<int>(lambda.size()));
    std::vector<int> d = flag;
    std::sort(d.begin(), d.end());
    do {
        rhs += partition_function(SystemSpec::colored(family, lambda, flag, d));
    } while (std::next_permutation(d.begin(), d.end()));
    report.cases_checked++;
    if (lhs != rhs) report.failures.push_back({report.parameter_summary, lhs, rhs});
    return report;
}

VerificationReport check_monostatic(const WeightVec& lambda, const std::vector<int>& flag) {
    VerificationReport report;
    report.check_name = "monostatic";
    int r = static_cast<int>(lambda.size());
    Permutation w = flag_to_permutation(flag);
    LaurentPoly expected =
        LaurentPoly::z_power(r, lambda) * LaurentPoly::t(r, length(w));
    for (Family family : {Family::P, Family::R}) {
        SystemSpec spec = SystemSpec::colored(family, lambda, flag, flag);
        report.cases_checked++;
        LaurentPoly z = partition_function(spec);
        long long states = count_states(spec);
        if (z != expected || states != 1) {
            report.failures.push_back(
                {"family=" + family_name(family) + " w=" + w.str() +
                     " states=" + std::to_string(states),
                 z, expected});
        }
    }
    report.parameter_summary = "w=" + w.str() + " Z=" + to_string(expected);
    return report;
}

VerificationReport check_demeval(const WeightVec& lambda) {
    VerificationReport report;
    report.check_name = "demeval";
    int r = static_cast<int>(lambda.size());
    report.parameter_summary = "rank=" + std::to_string(r);
    for (const auto& y : all_permutations(r)) {
        for (const auto& w : all_permutations(r)) {
            report.cases_checked++;
            SystemSpec spec =
                SystemSpec::colored(Family::R, lambda, flag_of(y), flag_of(w));
            LaurentPoly lhs = partition_function(spec);
            LaurentPoly rhs = tau(lambda, w, y);
            if (lhs != rhs)
                report.failures.push_back({"w=" + w.str() + " y=" + y.str(), lhs, rhs});
        }
    }
    return report;
}

VerificationReport check_demtrain(const WeightVec& lambda, int i, const Permutation& w) {
    VerificationReport report;
    report.check_name = "demtrain";
    int r = static_cast<int>(lambda.size());
    report.parameter_summary = "i=" + std::to_string(i) + " w=" + w.str();
    Permutation siw = Permutation::simple(r, i) * w;
    bool ascent = length(siw) > length(w);
    for (const auto& c : all_permutations(r)) {
        report.cases_checked++;
        SystemSpec base = SystemSpec::colored(Family::R, lambda, flag_of(c), flag_of(w));
        SystemSpec swapped =
            SystemSpec::colored(Family::R, lambda, flag_of(c), flag_of(siw));
        LaurentPoly zw = partition_function(base);
        LaurentPoly lhs = partition_function(swapped);
        LaurentPoly rhs = ascent ? dl_apply(i, zw) : dl_inv_apply(i, zw);
        if (lhs != rhs)
            report.failures.push_back(
                {"c=" + c.str() + (ascent ? " ascent" : " descent"), lhs, rhs});
    }
    return report;
}

VerificationReport check_uncolored_pf(const WeightVec& lambda) {
    VerificationReport report;
    report.check_name = "uncolored-pf";
    std::ostringstream ps;
    ps << "lambda=[";
    for (size_t i = 0; i < lambda.size(); ++i) ps << (i ? "," : "") << lambda[i];
    ps << "]";
    report.parameter_summary = ps.str();

    LaurentPoly zp = partition_function(SystemSpec::uncolored(Family::P, lambda));
    LaurentPoly zr = partition_function(SystemSpec::uncolored(Family::R, lambda));
    LaurentPoly zp_tm = partition_function_transfer(SystemSpec::uncolored(Family::P, lambda));
    LaurentPoly zr_tm = partition_function_transfer(SystemSpec::uncolored(Family::R, lambda));
    LaurentPoly p = p_polynomial(lambda);
    LaurentPoly rp = r_polynomial(lambda);
    LaurentPoly oracle = r_polynomial_symmetrized(lambda);
    LaurentPoly vl = v_lambda(lambda);

    auto expect = [&](const char* what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
        report.cases_checked++;
        if (lhs != rhs)
            report.failures.push_back({report.parameter_summary + " " + what, lhs, rhs});
    };
    expect("Z_P=P", zp, p);
    expect("Z_R=R", zr, rp);
    expect("Z_R=R_oracle", zr, oracle);
    expect("Z_P=R_oracle/v", zp, exact_div(oracle, vl));
    expect("Z_P=transfer", zp, zp_tm);
    expect("Z_R=transfer", zr, zr_tm);
    expect("Z_R=v*Z_P", zr, vl * zp);
    return report;
}

VerificationReport check_laurent_properties(int rank, int trials, unsigned seed) {
    VerificationReport report;
    report.check_name = "laurent-props";
    report.parameter_summary =
        "rank=" + std::to_string(rank) + " trials=" + std::to_string(trials) +
        " seed=" + std::to_string(seed);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> exp_dist(-2, 2), coeff_dist(-9, 9),
        nterms_dist(1, 5);
    auto random_poly = [&] {
        LaurentPoly f(rank);
        int n = nterms_dist(rng);
        for (int k = 0; k < n; ++k) {
            Monomial m{std::vector<int>(rank), 0};
            for (int i = 0; i < rank; ++i) m.z[i] = exp_dist(rng);
            m.t = exp_dist(rng);
            f.add_term(m, coeff_dist(rng));
        }
        return f;
    };
    auto perms = all_permutations(rank);
    std::uniform_int_distribution<size_t> perm_dist(0, perms.size() - 1);
    for (int n = 0; n < trials; ++n) {
        LaurentPoly f = random_poly(), g = random_poly(), h = random_poly();
        auto expect = [&](const char* what, const LaurentPoly& lhs, const LaurentPoly& rhs) {
            report.cases_checked++;
            if (lhs != rhs)
                report.failures.push_back({std::string(what) + " trial " + std::to_string(n),
                                           lhs, rhs});
        };
        expect("assoc-mul", (f * g) * h, f * (g * h));
        expect("comm-mul", f * g, g * f);
        expect("distrib", f * (g + h), f * g + f * h);
        expect("invert_z-involution", invert_z(invert_z(f)), f);
        expect("invert_t-involution", invert_t(invert_t(f)), f);
        const Permutation &u = perms[perm_dist(rng)], &v = perms[perm_dist(rng)];
        expect("permute-action", permute_z(permute_z(f, u), v), permute_z(f, v * u));
        if (!g.is_zero()) expect("exact_div-roundtrip", exact_div(f * g, g), f);
    }
    return report;
}

}  // namespace bosonic
