#include "bosonic/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace bosonic {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    std::vector<bool> seen(one_line_.size(), false);
    for (int v : one_line_) {
        if (v < 1 || v > rank() || seen[v - 1])
            throw std::invalid_argument("Permutation: not a permutation of 1..r");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int r) {
    std::vector<int> v(r);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::simple(int r, int i) {
    if (i < 1 || i >= r) throw std::invalid_argument("simple reflection index out of range");
    Permutation w = identity(r);
    std::swap(w.one_line_[i - 1], w.one_line_[i]);
    return w;
}

Permutation Permutation::longest(int r) {
    std::vector<int> v(r);
    for (int i = 0; i < r; ++i) v[i] = r - i;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(rank());
    for (int i = 1; i <= rank(); ++i) v[(*this)(i) - 1] = i;
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= rank(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch in composition");
    std::vector<int> w(u.rank());
    for (int i = 1; i <= u.rank(); ++i) w[i - 1] = u(v(i));
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    std::string s = "[";
    for (int i = 0; i < rank(); ++i) {
        if (i) s += ",";
        s += std::to_string(one_line_[i]);
    }
    return s + "]";
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.rank(); ++i)
        for (int j = i + 1; j <= w.rank(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

namespace {
// s_i w < w  iff  w^{-1}(i) > w^{-1}(i+1).
bool is_left_descent(const Permutation& w, int i) {
    Permutation wi = w.inverse();
    return wi(i) > wi(i + 1);
}
}  // namespace

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation cur = w;
    while (!cur.is_identity()) {
        for (int i = 1; i < cur.rank(); ++i) {
            if (is_left_descent(cur, i)) {
                word.push_back(i);
                cur = Permutation::simple(cur.rank(), i) * cur;
                break;
            }
        }
    }
    return word;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    if (w.rank() > 4) throw std::invalid_argument("all_reduced_words: rank too large");
    if (w.is_identity()) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 1; i < w.rank(); ++i) {
        if (is_left_descent(w, i)) {
            for (auto tail : all_reduced_words(Permutation::simple(w.rank(), i) * w)) {
                tail.insert(tail.begin(), i);
                out.push_back(std::move(tail));
            }
        }
    }
    return out;
}

bool bruhat_leq(const Permutation& y, const Permutation& w) {
    if (y.rank() != w.rank()) throw std::invalid_argument("rank mismatch in bruhat_leq");
    int r = y.rank();
    std::vector<int> ys, ws;
    for (int k = 1; k <= r; ++k) {
        ys.insert(std::upper_bound(ys.begin(), ys.end(), y(k)), y(k));
        ws.insert(std::upper_bound(ws.begin(), ws.end(), w(k)), w(k));
        for (int j = 0; j < k; ++j)
            if (ys[j] > ws[j]) return false;
    }
    return true;
}

WeightVec act_on_weight(const Permutation& w, const WeightVec& lambda) {
    if (static_cast<int>(lambda.size()) != w.rank())
        throw std::invalid_argument("rank mismatch in act_on_weight");
    WeightVec out(lambda.size());
    for (int i = 1; i <= w.rank(); ++i) out[w(i) - 1] = lambda[i - 1];
    return out;
}

long long pairing_2rho(const WeightVec& lambda) {
    long long s = 0;
    int r = static_cast<int>(lambda.size());
    for (int i = 1; i <= r; ++i) s += static_cast<long long>(lambda[i - 1]) * (r + 1 - 2 * i);
    return s;
}

Permutation minimal_sorter(const WeightVec& lambda) {
    int r = static_cast<int>(lambda.size());
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return lambda[a] < lambda[b]; });
    std::vector<int> y(r);
    for (int k = 0; k < r; ++k) y[idx[k]] = k + 1;
    return Permutation(std::move(y));
}

bool is_dominant(const WeightVec& lambda) {
    return std::is_sorted(lambda.rbegin(), lambda.rend());
}

bool is_antidominant(const WeightVec& lambda) {
    return std::is_sorted(lambda.begin(), lambda.end());
}

std::vector<Permutation> all_permutations(int r) {
    std::vector<int> v(r);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace bosonic
