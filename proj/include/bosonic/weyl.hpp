#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bosonic {

// Weight lattice of GL_r, identified with Z^r.
using WeightVec = std::vector<int>;

// An element of the symmetric group S_r in one-line notation:
// one_line[i-1] = w(i), values 1..r.
//
// Global action conventions used throughout the library:
//   (w * v)(i) = w(v(i))
//   (w lambda)_{w(i)} = lambda_i          (act_on_weight)
//   (w f)(z) = f(w^{-1} z)                (laurent::permute_z)
// These are consistent on monomials: permute_z(z^lambda, w) = z^{w lambda}.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int r);
    static Permutation simple(int r, int i);  // s_i, 1 <= i < r
    static Permutation longest(int r);        // w0: i -> r+1-i

    int rank() const { return static_cast<int>(one_line_.size()); }
    int operator()(int i) const { return one_line_[i - 1]; }
    const std::vector<int>& one_line() const { return one_line_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend Permutation operator*(const Permutation& u, const Permutation& v);
    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return one_line_ < o.one_line_; }

    std::string str() const;  // "[2,1,3]"

private:
    std::vector<int> one_line_;
};

// Number of inversions #{i<j : w(i) > w(j)}.
int length(const Permutation& w);

// Lexicographically smallest reduced word (indices of simple reflections).
std::vector<int> reduced_word(const Permutation& w);

// Complete set of reduced words, rank <= 4 only.
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

// Strong Bruhat order, y <= w (Ehresmann tableau criterion).
bool bruhat_leq(const Permutation& y, const Permutation& w);

// (w lambda)_{w(i)} = lambda_i.
WeightVec act_on_weight(const Permutation& w, const WeightVec& lambda);

// <lambda, 2 rho> = sum_i lambda_i (r + 1 - 2i).
long long pairing_2rho(const WeightVec& lambda);

// The unique minimal-length y with y(lambda) weakly increasing;
// equal entries keep their relative order.
Permutation minimal_sorter(const WeightVec& lambda);

bool is_dominant(const WeightVec& lambda);      // weakly decreasing
bool is_antidominant(const WeightVec& lambda);  // weakly increasing

inline int num_positive_roots(int r) { return r * (r - 1) / 2; }

// All r! group elements, in a fixed deterministic order.
std::vector<Permutation> all_permutations(int r);

}  // namespace bosonic
