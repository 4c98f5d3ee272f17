#include "bosonic/demazure.hpp"

namespace bosonic {

namespace {

void check_index(int i, const LaurentPoly& f) {
    if (i < 1 || i >= f.rank())
        throw std::invalid_argument("simple reflection index out of range");
}

LaurentPoly si_f(int i, const LaurentPoly& f) {
    return permute_z(f, Permutation::simple(f.rank(), i));
}

// (L_{i,t} + 1) f = (z_i f - z_{i+1} s_i f - t z_{i+1} f + t z_i s_i f) / (z_i - z_{i+1})
LaurentPoly dl_plus_one(int i, const LaurentPoly& f) {
    check_index(i, f);
    int r = f.rank();
    LaurentPoly sf = si_f(i, f);
    LaurentPoly zi = LaurentPoly::z(r, i), zj = LaurentPoly::z(r, i + 1);
    LaurentPoly t = LaurentPoly::t(r, 1);
    LaurentPoly num = zi * f - zj * sf - t * (zj * f - zi * sf);
    return exact_div(num, zi - zj);
}

}  // namespace

LaurentPoly partial_op(int i, const LaurentPoly& f) {
    check_index(i, f);
    int r = f.rank();
    LaurentPoly zi = LaurentPoly::z(r, i), zj = LaurentPoly::z(r, i + 1);
    LaurentPoly num = zi * f - zj * si_f(i, f);
    return exact_div(num, zi - zj);
}

LaurentPoly partial_circ_op(int i, const LaurentPoly& f) {
    check_index(i, f);
    int r = f.rank();
    LaurentPoly zi = LaurentPoly::z(r, i), zj = LaurentPoly::z(r, i + 1);
    LaurentPoly num = zj * (f - si_f(i, f));
    return exact_div(num, zi - zj);
}

namespace {

template <class Op>
LaurentPoly apply_word(const Permutation& w, const LaurentPoly& f, Op op) {
    auto word = reduced_word(w);
    LaurentPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = op(*it, g);
    return g;
}

}  // namespace

LaurentPoly partial_word(const Permutation& w, const LaurentPoly& f) {
    return apply_word(w, f, partial_op);
}

LaurentPoly partial_circ_word(const Permutation& w, const LaurentPoly& f) {
    return apply_word(w, f, partial_circ_op);
}

LaurentPoly dl_apply(int i, const LaurentPoly& f) { return dl_plus_one(i, f) - f; }

LaurentPoly dl_inv_apply(int i, const LaurentPoly& f) {
    // L^{-1} = t^{-1}(L + 1) - 1
    return dl_plus_one(i, f) * LaurentPoly::t(f.rank(), -1) - f;
}

LaurentPoly dl_word_apply(const Permutation& w, const LaurentPoly& f) {
    return apply_word(w, f, dl_apply);
}

LaurentPoly dl_word_inv_apply(const Permutation& w, const LaurentPoly& f) {
    // (L_{i_1} ... L_{i_k})^{-1} applies L_{i_1}^{-1} first
    auto word = reduced_word(w);
    LaurentPoly g = f;
    for (int i : word) g = dl_inv_apply(i, g);
    return g;
}

LaurentPoly omega(const LaurentPoly& f) {
    return partial_word(Permutation::longest(f.rank()), f);
}

LaurentPoly omega_alternating(const LaurentPoly& f) {
    int r = f.rank();
    WeightVec delta(r);
    for (int i = 0; i < r; ++i) delta[i] = r - 1 - i;
    LaurentPoly shifted = LaurentPoly::z_power(r, delta) * f;
    LaurentPoly num(r);
    for (const auto& w : all_permutations(r)) {
        LaurentPoly term = permute_z(shifted, w);
        num += (length(w) % 2 == 0) ? term : -term;
    }
    return exact_div(num, vandermonde(r));
}

LaurentPoly vandermonde(int rank) {
    LaurentPoly v = LaurentPoly::constant(rank, 1);
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            v *= LaurentPoly::z(rank, i) - LaurentPoly::z(rank, j);
    return v;
}

LaurentPoly hl_root_product(int rank) {
    LaurentPoly p = LaurentPoly::constant(rank, 1);
    for (int i = 1; i <= rank; ++i)
        for (int j = i + 1; j <= rank; ++j)
            p *= LaurentPoly::constant(rank, 1) -
                 LaurentPoly::t(rank, 1) * LaurentPoly::z(rank, j) * LaurentPoly::z(rank, i, -1);
    return p;
}

LaurentPoly r_polynomial(const WeightVec& lambda) {
    if (!is_dominant(lambda)) throw NonDominantError("r_polynomial: lambda must be dominant");
    int r = static_cast<int>(lambda.size());
    return omega(hl_root_product(r) * LaurentPoly::z_power(r, lambda));
}

LaurentPoly r_polynomial_symmetrized(const WeightVec& lambda) {
    if (!is_dominant(lambda))
        throw NonDominantError("r_polynomial_symmetrized: lambda must be dominant");
    int r = static_cast<int>(lambda.size());
    LaurentPoly core = LaurentPoly::z_power(r, lambda);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            core *= LaurentPoly::z(r, i) - LaurentPoly::t(r, 1) * LaurentPoly::z(r, j);
    LaurentPoly num(r);
    for (const auto& w : all_permutations(r)) {
        LaurentPoly term = permute_z(core, w);
        num += (length(w) % 2 == 0) ? term : -term;
    }
    return exact_div(num, vandermonde(r));
}

LaurentPoly v_m_poly(int m, int rank) {
    LaurentPoly v = LaurentPoly::constant(rank, 1);
    for (int i = 1; i <= m; ++i) {
        LaurentPoly geo(rank);
        for (int k = 0; k < i; ++k) geo += LaurentPoly::t(rank, k);
        v *= geo;
    }
    return v;
}

LaurentPoly v_lambda(const WeightVec& lambda) {
    int r = static_cast<int>(lambda.size());
    LaurentPoly v = LaurentPoly::constant(r, 1);
    int run = 1;
    for (int i = 1; i <= r; ++i) {
        if (i < r && lambda[i] == lambda[i - 1]) {
            ++run;
        } else {
            v *= v_m_poly(run, r);
            run = 1;
        }
    }
    return v;
}

LaurentPoly p_polynomial(const WeightVec& lambda) {
    return exact_div(r_polynomial(lambda), v_lambda(lambda));
}

LaurentPoly tau(const WeightVec& lambda, const Permutation& w, const Permutation& y) {
    int r = static_cast<int>(lambda.size());
    if (w.rank() != r || y.rank() != r) throw RankMismatchError("tau: rank mismatch");
    LaurentPoly f = LaurentPoly::z_power(r, lambda);
    f = dl_word_inv_apply(y, f);
    f = dl_word_apply(w, f);
    return f * LaurentPoly::t(r, length(y));
}

LaurentPoly theta_sum(const LaurentPoly& f) {
    LaurentPoly total(f.rank());
    for (const auto& w : all_permutations(f.rank())) total += dl_word_apply(w, f);
    return total;
}

}  // namespace bosonic
