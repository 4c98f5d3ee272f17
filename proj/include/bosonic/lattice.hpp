#pragma once

#include <functional>
#include <optional>

#include "bosonic/weights.hpp"

namespace bosonic {

// A lattice system: r rows (row i carries z_i, top to bottom) and columns
// labeled col_max down to col_min from left to right. Boundary conditions:
// left horizontal all +, right horizontal all - (uncolored) or the right
// flag (colored); bottom vertical vacuum; top vertical determined by
// (lambda, top flag). The normalized partition function carries the factor
// (z_1...z_r)^{col_min}, making it independent of the padding.
struct SystemSpec {
    Model model = Model::Uncolored;
    Family family = Family::R;
    int rank = 0;
    WeightVec lambda;
    std::vector<int> top_flag;    // color indices 1..r, colored only
    std::vector<int> right_flag;  // color indices 1..r, colored only
    int col_min = 0;              // M <= min(lambda_r, 0)
    int col_max = 0;              // N >= max(lambda_1, 0)

    static SystemSpec uncolored(Family family, WeightVec lambda);
    static SystemSpec colored(Family family, WeightVec lambda, std::vector<int> top_flag,
                              std::vector<int> right_flag);

    SystemSpec with_columns(int m, int n) const;
    int num_columns() const { return col_max - col_min + 1; }
    void validate() const;  // throws on malformed specs
};

// Convert between flags and Weyl group elements: c = w c0 has
// c_i = gamma_{w^{-1}(i)}.
std::vector<int> flag_of(const Permutation& w);
Permutation flag_to_permutation(const std::vector<int>& flag);  // proper flags only

// Top boundary spins per column, ordered left (col_max) to right (col_min).
std::vector<VSpinU> top_boundary_uncolored(const SystemSpec& spec);
std::vector<VSpinC> top_boundary_colored(const SystemSpec& spec);

// One full edge assignment. Horizontal edges: h[i][k] is the spin left of
// the k-th vertex of row i (k = 0 is the left boundary, k = C the right
// boundary). Vertical edges: v[j][k] sits above row j+1 in the k-th column
// (j = 0 is the top boundary, j = r the bottom boundary). Uncolored states
// use v_count, colored ones v_mult.
struct State {
    std::vector<std::vector<HSpin>> h;
    std::vector<std::vector<int>> v_count;
    std::vector<std::vector<VSpinC>> v_mult;
};

// Depth-first enumeration of all states with nonzero weight, row-major and
// deterministic; the callback returns false to stop early. Weights are the
// raw products of vertex weights (no column normalization).
using StateCallback = std::function<bool(const State&, const LaurentPoly&)>;
void for_each_state(const SystemSpec& spec, const StateCallback& cb);

long long count_states(const SystemSpec& spec);

// Normalized partition function (z_1...z_r)^{col_min} * sum of weights.
LaurentPoly partition_function(const SystemSpec& spec);

// Column transfer matrix for the uncolored models: entry (delta, epsilon)
// is indexed by bitmasks over rows (bit i-1 set = spin "-" in row i) and is
// zero unless #minus(epsilon) - #minus(delta) = m.
using TransferMatrix = std::vector<std::vector<LaurentPoly>>;
TransferMatrix column_transfer_matrix(Family family, int m, int r);

// Same value as partition_function, computed by contracting column
// transfer matrices against the boundary vectors. Uncolored only.
LaurentPoly partition_function_transfer(const SystemSpec& spec);

}  // namespace bosonic
