#include "bosonic/weights.hpp"

#include <numeric>

namespace bosonic {

std::string family_name(Family f) { return f == Family::P ? "P" : "R"; }

std::string HSpin::str() const {
    if (is_plus()) return "+";
    if (is_minus()) return "-";
    return "g" + std::to_string(code_);
}

bool color_greater(HSpin a, HSpin b) {
    if (!a.is_color() || !b.is_color())
        throw std::invalid_argument("color_greater: arguments must be colors");
    return a.color_index() < b.color_index();
}

std::string vspinc_str(const VSpinC& b) {
    std::string s = "{";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s + "}";
}

namespace {

LaurentPoly one(int rank) { return LaurentPoly::constant(rank, 1); }

// 1 + t + ... + t^n, the expanded D(n) R-weight.
LaurentPoly t_geometric(int rank, int n) {
    LaurentPoly f(rank);
    for (int k = 0; k <= n; ++k) f += LaurentPoly::t(rank, k);
    return f;
}

// z_i (1 - t^{e})
LaurentPoly z_one_minus_tpow(int rank, int z_index, int e) {
    return LaurentPoly::z(rank, z_index) * (one(rank) - LaurentPoly::t(rank, e));
}

}  // namespace

LaurentPoly uncolored_weight(Family family, HSpin a, VSpinU b, HSpin c, VSpinU d,
                             int z_index, int rank) {
    if (b < 0 || d < 0) return LaurentPoly::zero(rank);
    if (a.is_plus() && c.is_plus() && b == d)  // A(n)
        return one(rank);
    if (a.is_minus() && c.is_minus() && b == d)  // B(n)
        return LaurentPoly::z(rank, z_index);
    if (a.is_minus() && c.is_plus() && d == b + 1) {  // C(n), n = b
        return family == Family::P ? z_one_minus_tpow(rank, z_index, b + 1)
                                   : z_one_minus_tpow(rank, z_index, 1);
    }
    if (a.is_plus() && c.is_minus() && b == d + 1) {  // D(n), n = d
        return family == Family::P ? one(rank) : t_geometric(rank, d);
    }
    return LaurentPoly::zero(rank);
}

LaurentPoly monochrome_weight(Family family, int vertex_color, HSpin a, VSpinU b,
                              HSpin c, VSpinU d, int z_index, int rank) {
    if (b < 0 || d < 0) return LaurentPoly::zero(rank);
    const HSpin own = HSpin::color(vertex_color);
    if (b == d) {
        if (a != c) return LaurentPoly::zero(rank);
        if (a.is_plus()) return one(rank);  // A(n)
        if (!a.is_color()) return LaurentPoly::zero(rank);
        // B(n): compare the vertex color with the passing color
        if (a == own) return LaurentPoly::z(rank, z_index);
        return color_greater(own, a) ? LaurentPoly::t(rank, b) : one(rank);
    }
    if (d == b + 1) {  // C(n), n = b: absorb one boson of the vertex color
        if (a != own || !c.is_plus()) return LaurentPoly::zero(rank);
        return family == Family::P ? z_one_minus_tpow(rank, z_index, b + 1)
                                   : z_one_minus_tpow(rank, z_index, 1);
    }
    if (b == d + 1) {  // D(n), n = d: emit one boson of the vertex color
        if (!a.is_plus() || c != own) return LaurentPoly::zero(rank);
        return family == Family::P ? one(rank) : t_geometric(rank, d);
    }
    return LaurentPoly::zero(rank);
}

LaurentPoly fused_weight(Family family, HSpin a, const VSpinC& b, HSpin c,
                         const VSpinC& d, int z_index, int rank) {
    int r = static_cast<int>(b.size());
    if (static_cast<int>(d.size()) != r)
        throw std::invalid_argument("fused_weight: multiset sizes differ");
    if (a.is_minus() || c.is_minus())
        throw std::invalid_argument("fused_weight: uncolored spin in colored vertex");
    // Walk the monochrome chain gamma_r, ..., gamma_1; the horizontal spin
    // after each column is forced by the vertical transition.
    HSpin h = a;
    LaurentPoly w = one(rank);
    for (int k = r; k >= 1; --k) {
        int bk = b[k - 1], dk = d[k - 1];
        HSpin out;
        if (dk == bk) {
            out = h;  // pass through (A or B)
        } else if (dk == bk + 1) {
            if (h != HSpin::color(k)) return LaurentPoly::zero(rank);
            out = HSpin::plus();
        } else if (bk == dk + 1) {
            if (!h.is_plus()) return LaurentPoly::zero(rank);
            out = HSpin::color(k);
        } else {
            return LaurentPoly::zero(rank);
        }
        LaurentPoly step = monochrome_weight(family, k, h, bk, out, dk, z_index, rank);
        if (step.is_zero()) return step;
        w *= step;
        h = out;
    }
    if (h != c) return LaurentPoly::zero(rank);
    return w;
}

namespace {

LaurentPoly zi_minus_tzj(int rank, int zi, int zj) {
    return LaurentPoly::z(rank, zi) - LaurentPoly::t(rank, 1) * LaurentPoly::z(rank, zj);
}
LaurentPoly zi_minus_zj(int rank, int zi, int zj) {
    return LaurentPoly::z(rank, zi) - LaurentPoly::z(rank, zj);
}
LaurentPoly one_minus_t_z(int rank, int zk) {
    return (LaurentPoly::constant(rank, 1) - LaurentPoly::t(rank, 1)) *
           LaurentPoly::z(rank, zk);
}

}  // namespace

LaurentPoly rmatrix_uncolored(HSpin sw, HSpin nw, HSpin ne, HSpin se, int zi, int zj,
                              int rank) {
    const HSpin P = HSpin::plus(), M = HSpin::minus();
    if (sw == P && nw == P && ne == P && se == P) return zi_minus_tzj(rank, zi, zj);
    if (sw == M && nw == M && ne == M && se == M) return zi_minus_tzj(rank, zi, zj);
    if (sw == M && nw == P && ne == P && se == M) return one_minus_t_z(rank, zi);
    if (sw == P && nw == M && ne == M && se == P) return one_minus_t_z(rank, zj);
    if (sw == P && nw == M && ne == P && se == M)
        return LaurentPoly::t(rank, 1) * zi_minus_zj(rank, zi, zj);
    if (sw == M && nw == P && ne == M && se == P) return zi_minus_zj(rank, zi, zj);
    return LaurentPoly::zero(rank);
}

LaurentPoly rmatrix_colored(HSpin sw, HSpin nw, HSpin ne, HSpin se, int zi, int zj,
                            int rank) {
    const HSpin P = HSpin::plus();
    if (sw == P && nw == P) {
        if (ne == P && se == P) return zi_minus_tzj(rank, zi, zj);
        return LaurentPoly::zero(rank);
    }
    if (sw.is_color() && nw.is_color()) {
        HSpin c = sw, d = nw;
        if (c == d) {
            if (ne == c && se == c) return zi_minus_tzj(rank, zi, zj);
            return LaurentPoly::zero(rank);
        }
        if (ne == d && se == c)  // colors bounce
            return color_greater(d, c) ? one_minus_t_z(rank, zi) : one_minus_t_z(rank, zj);
        if (ne == c && se == d)  // colors cross
            return color_greater(c, d)
                       ? zi_minus_zj(rank, zi, zj)
                       : LaurentPoly::t(rank, 1) * zi_minus_zj(rank, zi, zj);
        return LaurentPoly::zero(rank);
    }
    if (sw.is_color() && nw == P) {
        HSpin c = sw;
        if (ne == P && se == c) return one_minus_t_z(rank, zi);
        if (ne == c && se == P) return zi_minus_zj(rank, zi, zj);
        return LaurentPoly::zero(rank);
    }
    if (sw == P && nw.is_color()) {
        HSpin c = nw;
        if (ne == c && se == P) return one_minus_t_z(rank, zj);
        if (ne == P && se == c) return LaurentPoly::t(rank, 1) * zi_minus_zj(rank, zi, zj);
        return LaurentPoly::zero(rank);
    }
    return LaurentPoly::zero(rank);
}

LaurentPoly rmatrix_aux(int vertex_color, HSpin sw, HSpin nw, HSpin ne, HSpin se,
                        int zi, int zj, int rank) {
    const HSpin P = HSpin::plus();
    const HSpin c = HSpin::color(vertex_color);
    if (sw == P && nw == P) {
        if (ne == P && se == P) return zi_minus_tzj(rank, zi, zj);
        return LaurentPoly::zero(rank);
    }
    if (sw.is_color() && nw.is_color()) {
        HSpin d = sw, e = nw;
        if (d == e) {
            if (ne == d && se == d) return zi_minus_tzj(rank, zi, zj);
            return LaurentPoly::zero(rank);
        }
        if (ne == d && se == e)  // colors cross straight through
            return color_greater(e, d)
                       ? LaurentPoly::t(rank, 1) * zi_minus_zj(rank, zi, zj)
                       : zi_minus_zj(rank, zi, zj);
        if (ne == e && se == d) {  // colors bounce; case split involves c
            if (d == c) return one_minus_t_z(rank, zi);
            if (e == c) return one_minus_t_z(rank, zj);
            bool zj_case = (color_greater(e, c) && color_greater(c, d)) ||
                           (color_greater(c, d) && color_greater(d, e)) ||
                           (color_greater(d, e) && color_greater(e, c));
            return zj_case ? one_minus_t_z(rank, zj) : one_minus_t_z(rank, zi);
        }
        return LaurentPoly::zero(rank);
    }
    if (sw.is_color() && nw == P) {
        HSpin d = sw;
        if (ne == P && se == d) return one_minus_t_z(rank, zi);
        if (ne == d && se == P) return zi_minus_zj(rank, zi, zj);
        return LaurentPoly::zero(rank);
    }
    if (sw == P && nw.is_color()) {
        HSpin d = nw;
        if (ne == d && se == P) return one_minus_t_z(rank, zj);
        if (ne == P && se == d) return LaurentPoly::t(rank, 1) * zi_minus_zj(rank, zi, zj);
        return LaurentPoly::zero(rank);
    }
    return LaurentPoly::zero(rank);
}

std::vector<HSpin> colored_hspins(int r) {
    std::vector<HSpin> out{HSpin::plus()};
    for (int k = 1; k <= r; ++k) out.push_back(HSpin::color(k));
    return out;
}

std::vector<VSpinC> multisets_with_total(int r, int total) {
    std::vector<VSpinC> out;
    VSpinC cur(r, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == r - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int m = 0; m <= left; ++m) {
            cur[pos] = m;
            self(self, pos + 1, left - m);
        }
    };
    if (r == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, total);
    return out;
}

std::vector<VSpinC> multisets_up_to_total(int r, int max_total) {
    std::vector<VSpinC> out;
    for (int n = 0; n <= max_total; ++n) {
        auto part = multisets_with_total(r, n);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace bosonic
