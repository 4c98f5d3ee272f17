#pragma once

#include <string>
#include <vector>

#include "bosonic/laurent.hpp"

namespace bosonic {

enum class Family { P, R };
enum class Model { Uncolored, Colored };

std::string family_name(Family f);

// Spin of a horizontal edge: the vacuum "+", the uncolored particle "-",
// or a color gamma_k with 1 <= k <= r. Colors are ordered
// gamma_1 > gamma_2 > ... > gamma_r, i.e. smaller index = larger color.
class HSpin {
public:
    constexpr HSpin() : code_(0) {}

    static constexpr HSpin plus() { return HSpin(0); }
    static constexpr HSpin minus() { return HSpin(-1); }
    static constexpr HSpin color(int k) { return HSpin(k); }

    bool is_plus() const { return code_ == 0; }
    bool is_minus() const { return code_ == -1; }
    bool is_color() const { return code_ >= 1; }
    int color_index() const { return code_; }

    bool operator==(const HSpin&) const = default;

    std::string str() const;

private:
    explicit constexpr HSpin(int code) : code_(code) {}
    int code_;
};

// gamma_a > gamma_b iff a < b; both arguments must be colors.
bool color_greater(HSpin a, HSpin b);

// Vertical spins: occupancy count (uncolored / monochrome) or a multiset
// of colors stored as multiplicities (mult[k-1] = copies of gamma_k).
using VSpinU = int;
using VSpinC = std::vector<int>;

std::string vspinc_str(const VSpinC& b);

// --- Uncolored vertex weights (patterns A/B/C/D) ------------------------
// Edge order: (a, b, c, d) = (west, north, east, south); the weight is a
// Laurent polynomial in rank `rank` variables using z_{z_index}.
LaurentPoly uncolored_weight(Family family, HSpin a, VSpinU b, HSpin c, VSpinU d,
                             int z_index, int rank);

// --- Monochrome vertex of color `vertex_color` --------------------------
// The vertical edge carries only that color; horizontal edges carry any
// color or +.
LaurentPoly monochrome_weight(Family family, int vertex_color, HSpin a, VSpinU b,
                              HSpin c, VSpinU d, int z_index, int rank);

// --- Fused colored vertex ------------------------------------------------
// Product of the r monochrome vertices gamma_r, ..., gamma_1 laid out left
// to right; the internal horizontal chain is uniquely determined when the
// configuration is admissible, otherwise the weight is 0.
LaurentPoly fused_weight(Family family, HSpin a, const VSpinC& b, HSpin c,
                         const VSpinC& d, int z_index, int rank);

// --- R-matrices -----------------------------------------------------------
// Corner order (sw, nw, ne, se) matches the crossing figures; zi and zj are
// the variable indices of the two strands.
LaurentPoly rmatrix_uncolored(HSpin sw, HSpin nw, HSpin ne, HSpin se, int zi, int zj,
                              int rank);
LaurentPoly rmatrix_colored(HSpin sw, HSpin nw, HSpin ne, HSpin se, int zi, int zj,
                            int rank);
// Auxiliary R-matrix labeled by a color (the monochrome column it is about
// to cross); for vertex_color = gamma_r it coincides with rmatrix_colored.
LaurentPoly rmatrix_aux(int vertex_color, HSpin sw, HSpin nw, HSpin ne, HSpin se,
                        int zi, int zj, int rank);

// All horizontal spins of the colored palette: +, gamma_1..gamma_r.
std::vector<HSpin> colored_hspins(int r);

// All multisets of colors with given total multiplicity / up to a total.
std::vector<VSpinC> multisets_with_total(int r, int total);
std::vector<VSpinC> multisets_up_to_total(int r, int max_total);

}  // namespace bosonic
