#include "bosonic/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace bosonic {

SystemSpec SystemSpec::uncolored(Family family, WeightVec lambda) {
    SystemSpec s;
    s.model = Model::Uncolored;
    s.family = family;
    s.rank = static_cast<int>(lambda.size());
    s.lambda = std::move(lambda);
    s.col_min = std::min(s.lambda.back(), 0);
    s.col_max = std::max(s.lambda.front(), 0);
    s.validate();
    return s;
}

SystemSpec SystemSpec::colored(Family family, WeightVec lambda, std::vector<int> top_flag,
                               std::vector<int> right_flag) {
    SystemSpec s;
    s.model = Model::Colored;
    s.family = family;
    s.rank = static_cast<int>(lambda.size());
    s.lambda = std::move(lambda);
    s.top_flag = std::move(top_flag);
    s.right_flag = std::move(right_flag);
    s.col_min = std::min(s.lambda.back(), 0);
    s.col_max = std::max(s.lambda.front(), 0);
    s.validate();
    return s;
}

SystemSpec SystemSpec::with_columns(int m, int n) const {
    SystemSpec s = *this;
    s.col_min = m;
    s.col_max = n;
    s.validate();
    return s;
}

void SystemSpec::validate() const {
    if (rank < 1) throw std::invalid_argument("SystemSpec: rank must be positive");
    if (static_cast<int>(lambda.size()) != rank)
        throw std::invalid_argument("SystemSpec: lambda length != rank");
    if (!is_dominant(lambda)) throw NonDominantError("SystemSpec: lambda must be dominant");
    if (col_min > std::min(lambda.back(), 0) || col_max < std::max(lambda.front(), 0))
        throw std::invalid_argument("SystemSpec: column range must cover [min(l_r,0), max(l_1,0)]");
    if (model == Model::Colored) {
        if (static_cast<int>(top_flag.size()) != rank ||
            static_cast<int>(right_flag.size()) != rank)
            throw std::invalid_argument("SystemSpec: flags must have length rank");
        for (int c : top_flag)
            if (c < 1 || c > rank) throw std::invalid_argument("SystemSpec: bad top flag color");
        for (int c : right_flag)
            if (c < 1 || c > rank) throw std::invalid_argument("SystemSpec: bad right flag color");
    }
}

std::vector<int> flag_of(const Permutation& w) {
    Permutation wi = w.inverse();
    std::vector<int> flag(w.rank());
    for (int i = 1; i <= w.rank(); ++i) flag[i - 1] = wi(i);
    return flag;
}

Permutation flag_to_permutation(const std::vector<int>& flag) {
    return Permutation(flag).inverse();
}

std::vector<VSpinU> top_boundary_uncolored(const SystemSpec& spec) {
    std::vector<VSpinU> top(spec.num_columns(), 0);
    for (int part : spec.lambda) top[spec.col_max - part] += 1;
    return top;
}

std::vector<VSpinC> top_boundary_colored(const SystemSpec& spec) {
    std::vector<VSpinC> top(spec.num_columns(), VSpinC(spec.rank, 0));
    for (int i = 0; i < spec.rank; ++i)
        top[spec.col_max - spec.lambda[i]][spec.top_flag[i] - 1] += 1;
    return top;
}

namespace {

// Shared DFS skeleton for both models. VSpin is int (uncolored) or VSpinC.
template <class VSpin>
struct Enumerator {
    const SystemSpec& spec;
    const StateCallback& cb;
    int rows, cols;
    std::vector<VSpin> verts;  // current vertical spins between processed rows
    State state;
    std::vector<LaurentPoly> row_weights;  // partial products per vertex, stack
    bool stopped = false;

    Enumerator(const SystemSpec& s, const StateCallback& c)
        : spec(s), cb(c), rows(s.rank), cols(s.num_columns()) {
        state.h.assign(rows, std::vector<HSpin>(cols + 1, HSpin::plus()));
    }

    // Candidate outputs at a vertex: (east spin, south spin, weight).
    virtual std::vector<std::tuple<HSpin, VSpin, LaurentPoly>> options(
        int row, HSpin west, const VSpin& north) = 0;
    virtual HSpin right_boundary(int row) const = 0;
    virtual bool is_vacuum(const VSpin& v) const = 0;
    virtual void record_verticals(int row_below) = 0;
    virtual ~Enumerator() = default;

    void run() {
        row_weights.push_back(LaurentPoly::constant(spec.rank, 1));
        vertex(0, 0, HSpin::plus());
    }

    void vertex(int row, int col, HSpin west) {
        if (stopped) return;
        if (col == cols) {
            if (west != right_boundary(row)) return;
            if (row + 1 == rows) {
                for (const auto& v : verts)
                    if (!is_vacuum(v)) return;
                if (!cb(state, row_weights.back())) stopped = true;
                return;
            }
            vertex(row + 1, 0, HSpin::plus());
            return;
        }
        state.h[row][col] = west;
        VSpin north = verts[col];
        for (auto& [east, south, w] : options(row, west, north)) {
            state.h[row][col + 1] = east;
            verts[col] = south;
            record_verticals(row + 1);
            row_weights.push_back(row_weights.back() * w);
            vertex(row, col + 1, east);
            row_weights.pop_back();
            verts[col] = north;
            if (stopped) return;
        }
    }
};

struct UncoloredEnum : Enumerator<int> {
    UncoloredEnum(const SystemSpec& s, const StateCallback& c) : Enumerator(s, c) {
        verts = top_boundary_uncolored(s);
        state.v_count.assign(rows + 1, verts);
        for (int j = 1; j <= rows; ++j) state.v_count[j].assign(cols, 0);
        state.v_count[0] = verts;
    }
    std::vector<std::tuple<HSpin, int, LaurentPoly>> options(int row, HSpin west,
                                                             const int& north) override {
        std::vector<std::tuple<HSpin, int, LaurentPoly>> out;
        for (HSpin east : {HSpin::plus(), HSpin::minus()}) {
            int south = north + (west.is_minus() ? 1 : 0) - (east.is_minus() ? 1 : 0);
            if (south < 0) continue;
            assert(south <= spec.rank);  // only r particles enter the system
            LaurentPoly w =
                uncolored_weight(spec.family, west, north, east, south, row + 1, spec.rank);
            if (!w.is_zero()) out.emplace_back(east, south, std::move(w));
        }
        return out;
    }
    HSpin right_boundary(int) const override { return HSpin::minus(); }
    bool is_vacuum(const int& v) const override { return v == 0; }
    void record_verticals(int row_below) override { state.v_count[row_below] = verts; }
};

struct ColoredEnum : Enumerator<VSpinC> {
    ColoredEnum(const SystemSpec& s, const StateCallback& c) : Enumerator(s, c) {
        verts = top_boundary_colored(s);
        state.v_mult.assign(rows + 1, std::vector<VSpinC>(cols, VSpinC(s.rank, 0)));
        state.v_mult[0] = verts;
    }
    std::vector<std::tuple<HSpin, VSpinC, LaurentPoly>> options(int row, HSpin west,
                                                                const VSpinC& north) override {
        std::vector<std::tuple<HSpin, VSpinC, LaurentPoly>> out;
        for (HSpin east : colored_hspins(spec.rank)) {
            VSpinC south = north;
            if (west.is_color()) south[west.color_index() - 1] += 1;
            if (east.is_color()) {
                if (south[east.color_index() - 1] == 0) continue;
                south[east.color_index() - 1] -= 1;
            }
            assert(std::accumulate(south.begin(), south.end(), 0) <= spec.rank);
            LaurentPoly w =
                fused_weight(spec.family, west, north, east, south, row + 1, spec.rank);
            if (!w.is_zero()) out.emplace_back(east, std::move(south), std::move(w));
        }
        return out;
    }
    HSpin right_boundary(int row) const override {
        return HSpin::color(spec.right_flag[row]);
    }
    bool is_vacuum(const VSpinC& v) const override {
        return std::all_of(v.begin(), v.end(), [](int m) { return m == 0; });
    }
    void record_verticals(int row_below) override { state.v_mult[row_below] = verts; }
};

}  // namespace

void for_each_state(const SystemSpec& spec, const StateCallback& cb) {
    spec.validate();
    if (spec.model == Model::Uncolored) {
        UncoloredEnum e(spec, cb);
        e.run();
    } else {
        ColoredEnum e(spec, cb);
        e.run();
    }
}

long long count_states(const SystemSpec& spec) {
    long long n = 0;
    for_each_state(spec, [&](const State&, const LaurentPoly&) {
        ++n;
        return true;
    });
    return n;
}

namespace {

LaurentPoly column_normalization(const SystemSpec& spec) {
    WeightVec e(spec.rank, spec.col_min);
    return LaurentPoly::z_power(spec.rank, e);
}

}  // namespace

LaurentPoly partition_function(const SystemSpec& spec) {
    LaurentPoly total(spec.rank);
    for_each_state(spec, [&](const State&, const LaurentPoly& w) {
        total += w;
        return true;
    });
    return total * column_normalization(spec);
}

TransferMatrix column_transfer_matrix(Family family, int m, int r) {
    if (m < 0 || m > r) throw std::invalid_argument("column_transfer_matrix: 0 <= m <= r");
    int dim = 1 << r;
    TransferMatrix mat(dim, std::vector<LaurentPoly>(dim, LaurentPoly::zero(r)));
    for (int delta = 0; delta < dim; ++delta) {
        for (int eps = 0; eps < dim; ++eps) {
            LaurentPoly w = LaurentPoly::constant(r, 1);
            int n = m;
            bool ok = true;
            for (int i = 1; i <= r && ok; ++i) {
                HSpin west = (delta >> (i - 1)) & 1 ? HSpin::minus() : HSpin::plus();
                HSpin east = (eps >> (i - 1)) & 1 ? HSpin::minus() : HSpin::plus();
                int south = n + (west.is_minus() ? 1 : 0) - (east.is_minus() ? 1 : 0);
                if (south < 0) {
                    ok = false;
                    break;
                }
                LaurentPoly step = uncolored_weight(family, west, n, east, south, i, r);
                if (step.is_zero()) {
                    ok = false;
                    break;
                }
                w *= step;
                n = south;
            }
            if (ok && n == 0) mat[delta][eps] = std::move(w);
        }
    }
    return mat;
}

LaurentPoly partition_function_transfer(const SystemSpec& spec) {
    spec.validate();
    if (spec.model != Model::Uncolored)
        throw std::invalid_argument("partition_function_transfer: uncolored systems only");
    int r = spec.rank;
    int dim = 1 << r;
    auto top = top_boundary_uncolored(spec);
    // row vector over {+,-}^r, starting at all-plus
    std::vector<LaurentPoly> v(dim, LaurentPoly::zero(r));
    v[0] = LaurentPoly::constant(r, 1);
    for (int m : top) {
        TransferMatrix mat = column_transfer_matrix(spec.family, m, r);
        std::vector<LaurentPoly> next(dim, LaurentPoly::zero(r));
        for (int a = 0; a < dim; ++a) {
            if (v[a].is_zero()) continue;
            for (int b = 0; b < dim; ++b) {
                if (mat[a][b].is_zero()) continue;
                next[b] += v[a] * mat[a][b];
            }
        }
        v = std::move(next);
    }
    return v[dim - 1] * column_normalization(spec);
}

}  // namespace bosonic
