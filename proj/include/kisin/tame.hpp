#pragma once

#include <vector>

#include "kisin/affine.hpp"

namespace kisin {

// Tame principal series type tau = chi_1 + ... + chi_n with
// chi_i = (sigma_0 . omega_f)^{a_i}, encoded by the exponents a_i in
// [0, p^f - 2] and their base-p digit rows a_{i,k}.
class TameType {
public:
    TameType(long long p, int f, std::vector<long long> exponents);

    long long p() const { return p_; }
    int f() const { return f_; }
    int n() const { return static_cast<int>(exps_.size()); }
    long long order() const { return order_; } // p^f - 1, the order of Delta
    const std::vector<long long>& exponents() const { return exps_; }
    long long digit(int i, int k) const { return digits_[i][k]; }

    // a_i^{(j)} = sum_k a_{i, f-j+k} p^k (indices mod f); satisfies
    // a_i^{(j)} = p^j a_i mod p^f - 1, which is asserted.
    std::vector<long long> twisted_exponents(int j) const;

    bool characters_distinct() const;
    bool trivial() const; // all characters equal

private:
    long long p_;
    int f_;
    long long order_;
    std::vector<long long> exps_;
    std::vector<std::vector<long long>> digits_;
};

// Per-embedding sorting permutations (s_0, ..., s_{f-1}): s_j, given as the
// list (s_j(1), ..., s_j(n)) of 1-indexed positions, sorts the j-th twisted
// exponent vector weakly increasingly.
class Orientation {
public:
    explicit Orientation(std::vector<std::vector<int>> perms);

    int f() const { return static_cast<int>(s_.size()); }
    int n() const { return s_.empty() ? 0 : static_cast<int>(s_[0].size()); }
    // 0-indexed accessor: position i of the sorted order at embedding j maps
    // to original index s(j, i).
    int s(int j, int i) const { return s_[j][i] - 1; }
    const std::vector<std::vector<int>>& perms() const { return s_; }

    bool operator<(const Orientation& o) const { return s_ < o.s_; }
    bool operator==(const Orientation& o) const { return s_ == o.s_; }

private:
    std::vector<std::vector<int>> s_;
};

bool is_orientation(const TameType& type, const Orientation& o);

// All orientations of the type; unique iff the characters are pairwise
// distinct, of size (n!)^f when all characters coincide.
std::vector<Orientation> orientations(const TameType& type);

// Consecutive blocks grouping equal values of the sorted twisted exponents;
// the standard parabolic P_j.  Throws InvalidOrientation if o does not sort.
BlockPartition parabolic_blocks(const TameType& type, const Orientation& o, int j);

} // namespace kisin
