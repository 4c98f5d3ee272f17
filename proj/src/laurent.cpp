#include "bosonic/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace bosonic {

void LaurentPoly::check_rank(const LaurentPoly& g) const {
    if (rank_ != g.rank_) throw RankMismatchError("LaurentPoly rank mismatch");
}

LaurentPoly LaurentPoly::constant(int rank, Coeff c) {
    LaurentPoly f(rank);
    f.add_term(Monomial{std::vector<int>(rank, 0), 0}, c);
    return f;
}

LaurentPoly LaurentPoly::z(int rank, int i, int exp) {
    if (i < 1 || i > rank) throw std::invalid_argument("z variable index out of range");
    Monomial m{std::vector<int>(rank, 0), 0};
    m.z[i - 1] = exp;
    return from_term(rank, std::move(m), 1);
}

LaurentPoly LaurentPoly::t(int rank, int exp) {
    return from_term(rank, Monomial{std::vector<int>(rank, 0), exp}, 1);
}

LaurentPoly LaurentPoly::z_power(int rank, const WeightVec& lambda) {
    if (static_cast<int>(lambda.size()) != rank)
        throw RankMismatchError("z_power: weight length != rank");
    return from_term(rank, Monomial{lambda, 0}, 1);
}

LaurentPoly LaurentPoly::from_term(int rank, Monomial m, Coeff c) {
    LaurentPoly f(rank);
    f.add_term(m, c);
    return f;
}

void LaurentPoly::add_term(const Monomial& m, const Coeff& c) {
    if (static_cast<int>(m.z.size()) != rank_)
        throw RankMismatchError("monomial rank != polynomial rank");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly g(rank_);
    for (const auto& [m, c] : terms_) g.terms_.emplace(m, -c);
    return g;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
    check_rank(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
    check_rank(g);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
    f.check_rank(g);
    LaurentPoly h(f.rank());
    Monomial m{std::vector<int>(f.rank(), 0), 0};
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            for (int i = 0; i < f.rank(); ++i) m.z[i] = mf.z[i] + mg.z[i];
            m.t = mf.t + mg.t;
            h.add_term(m, cf * cg);
        }
    }
    return h;
}

LaurentPoly LaurentPoly::operator*(const Coeff& c) const {
    LaurentPoly h(rank_);
    if (c == 0) return h;
    for (const auto& [m, k] : terms_) h.terms_.emplace(m, k * c);
    return h;
}

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g) { return f + g; }
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g) { return f * g; }

LaurentPoly permute_z(const LaurentPoly& f, const Permutation& w) {
    if (w.rank() != f.rank()) throw RankMismatchError("permute_z rank mismatch");
    LaurentPoly g(f.rank());
    Monomial m{std::vector<int>(f.rank(), 0), 0};
    for (const auto& [mf, c] : f.terms()) {
        for (int i = 1; i <= f.rank(); ++i) m.z[w(i) - 1] = mf.z[i - 1];
        m.t = mf.t;
        g.add_term(m, c);
    }
    return g;
}

LaurentPoly invert_z(const LaurentPoly& f) {
    LaurentPoly g(f.rank());
    Monomial m{std::vector<int>(f.rank(), 0), 0};
    for (const auto& [mf, c] : f.terms()) {
        for (int i = 0; i < f.rank(); ++i) m.z[i] = -mf.z[i];
        m.t = mf.t;
        g.add_term(m, c);
    }
    return g;
}

LaurentPoly invert_t(const LaurentPoly& f) {
    LaurentPoly g(f.rank());
    for (const auto& [mf, c] : f.terms()) {
        Monomial m = mf;
        m.t = -m.t;
        g.add_term(m, c);
    }
    return g;
}

namespace {

// Componentwise minimum exponent vector over all terms (z and t).
Monomial min_exponents(const LaurentPoly& f) {
    Monomial lo{std::vector<int>(f.rank(), 0), 0};
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (first) {
            lo = m;
            first = false;
        } else {
            for (int i = 0; i < f.rank(); ++i) lo.z[i] = std::min(lo.z[i], m.z[i]);
            lo.t = std::min(lo.t, m.t);
        }
    }
    return lo;
}

LaurentPoly shift(const LaurentPoly& f, const Monomial& by, int sign) {
    LaurentPoly g(f.rank());
    Monomial m{std::vector<int>(f.rank(), 0), 0};
    for (const auto& [mf, c] : f.terms()) {
        for (int i = 0; i < f.rank(); ++i) m.z[i] = mf.z[i] + sign * by.z[i];
        m.t = mf.t + sign * by.t;
        g.add_term(m, c);
    }
    return g;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    if (f.rank() != g.rank()) throw RankMismatchError("exact_div rank mismatch");
    if (f.is_zero()) return LaurentPoly::zero(f.rank());

    // Normalize both to ordinary polynomials; the monomial shift is undone
    // at the end. Long division against the lex-leading term of g then
    // terminates, and any failure of term or coefficient divisibility
    // means no exact Laurent quotient exists.
    Monomial fshift = min_exponents(f);
    Monomial gshift = min_exponents(g);
    LaurentPoly rem = shift(f, fshift, -1);
    LaurentPoly div = shift(g, gshift, -1);

    const auto& [glead, gc] = *div.terms().rbegin();
    LaurentPoly quot(f.rank());
    Monomial qm{std::vector<int>(f.rank(), 0), 0};
    while (!rem.is_zero()) {
        const auto& [flead, fc] = *rem.terms().rbegin();
        bool ok = flead.t >= glead.t;
        for (int i = 0; ok && i < f.rank(); ++i) ok = flead.z[i] >= glead.z[i];
        if (!ok) throw NotDivisibleError("exact_div: leading monomial not divisible");
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), fc.get_mpz_t(), gc.get_mpz_t());
        if (r != 0) throw NotDivisibleError("exact_div: leading coefficient not divisible");
        for (int i = 0; i < f.rank(); ++i) qm.z[i] = flead.z[i] - glead.z[i];
        qm.t = flead.t - glead.t;
        quot.add_term(qm, q);
        rem -= LaurentPoly::from_term(f.rank(), qm, q) * div;
    }
    // quotient of shifted polys times z^{fshift - gshift}
    Monomial back = fshift;
    for (int i = 0; i < f.rank(); ++i) back.z[i] -= gshift.z[i];
    back.t -= gshift.t;
    return shift(quot, back, +1);
}

mpq_class eval(const LaurentPoly& f, const std::vector<mpq_class>& z_values,
               const mpq_class& t_value) {
    if (static_cast<int>(z_values.size()) != f.rank())
        throw RankMismatchError("eval: wrong number of z values");
    auto power = [](const mpq_class& base, int e) {
        if (e == 0) return mpq_class(1);
        if (base == 0) throw std::domain_error("eval: zero substituted with negative exponent");
        mpq_class b = base;
        if (e < 0) {
            b = 1 / b;
            e = -e;
        }
        mpq_class acc(1);
        for (int k = 0; k < e; ++k) acc *= b;
        return acc;
    };
    mpq_class total(0);
    for (const auto& [m, c] : f.terms()) {
        mpq_class term(c);
        for (int i = 0; i < f.rank(); ++i)
            if (m.z[i] != 0) term *= power(z_values[i], m.z[i]);
        if (m.t != 0) term *= power(t_value, m.t);
        total += term;
    }
    return total;
}

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading (lex-largest) terms first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Coeff a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < f.rank(); ++i) {
            if (m.z[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "z" + std::to_string(i + 1);
            if (m.z[i] != 1) vars += "^" + std::to_string(m.z[i]);
        }
        if (m.t != 0) {
            if (!vars.empty()) vars += "*";
            vars += "t";
            if (m.t != 1) vars += "^" + std::to_string(m.t);
        }
        if (vars.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << vars;
        }
    }
    return os.str();
}

}  // namespace bosonic
