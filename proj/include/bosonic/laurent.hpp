#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bosonic/weyl.hpp"

namespace bosonic {

using Coeff = mpz_class;

struct RankMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when exact_div has no exact quotient. Load-bearing: operator
// numerators that fail to divide indicate a transcription bug upstream.
struct NotDivisibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonDominantError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exponent data of one term: z_1^{z[0]} ... z_r^{z[r-1]} t^{t}.
// Exponents may be negative. Ordered lexicographically on z then t;
// this is the canonical term order used for serialization and division.
struct Monomial {
    std::vector<int> z;
    int t = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Multivariate Laurent polynomial in z_1..z_r and t with mpz coefficients.
// Canonical form: no zero coefficients are stored, so equality of values
// is equality of term maps. Immutable in spirit: all operations return
// fresh values and are safe to call concurrently.
class LaurentPoly {
public:
    LaurentPoly() : rank_(0) {}
    explicit LaurentPoly(int rank) : rank_(rank) {}

    static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
    static LaurentPoly constant(int rank, Coeff c);
    static LaurentPoly z(int rank, int i, int exp = 1);  // z_i^exp, 1-based i
    static LaurentPoly t(int rank, int exp = 1);
    static LaurentPoly z_power(int rank, const WeightVec& lambda);  // z^lambda
    static LaurentPoly from_term(int rank, Monomial m, Coeff c);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Coeff& c);  // accumulates, keeps canonical

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& g);
    LaurentPoly& operator-=(const LaurentPoly& g);
    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
    LaurentPoly& operator*=(const LaurentPoly& g) { return *this = *this * g; }
    LaurentPoly operator*(const Coeff& c) const;

    bool operator==(const LaurentPoly&) const = default;

private:
    void check_rank(const LaurentPoly& g) const;

    int rank_;
    std::map<Monomial, Coeff> terms_;
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);

// (w f)(z) = f(w^{-1} z); on monomials permute_z(z^lambda, w) = z^{w lambda}.
LaurentPoly permute_z(const LaurentPoly& f, const Permutation& w);

LaurentPoly invert_z(const LaurentPoly& f);  // z_i -> z_i^{-1} for all i
LaurentPoly invert_t(const LaurentPoly& f);  // t -> t^{-1}

// Exact quotient h with f = g*h; throws NotDivisibleError otherwise.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

// Exact rational evaluation; substituted values must be nonzero wherever
// a negative exponent occurs.
mpq_class eval(const LaurentPoly& f, const std::vector<mpq_class>& z_values,
               const mpq_class& t_value);

std::string to_string(const LaurentPoly& f);

}  // namespace bosonic
