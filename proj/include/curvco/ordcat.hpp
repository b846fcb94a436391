#pragma once

#include "curvco/module.hpp"

#include <vector>

namespace curvco {

// Nondecreasing map between finite ordinals {1..I} -> {1..J}.
struct OrdMap {
    int source = 0;
    int target = 0;
    std::vector<int> values; // length `source`, entries in 1..target, weakly monotone

    static OrdMap id(int n);
    bool valid() const;
    bool operator==(const OrdMap& o) const = default;
};

OrdMap compose_ord(const OrdMap& phi, const OrdMap& psi); // phi then psi

// (phi_* n)_j = sum_{i in phi^{-1} j} n_i
MultiIndex pushforward(const OrdMap& phi, const MultiIndex& n);

// All nondecreasing maps I -> J in lexicographic order; C(I+J-1, I) of them.
std::vector<OrdMap> enumerate_maps(int I, int J);

// The canonical map |_| n_i -> I collapsing the i-th block to i, so that its
// pushforward regroups a length-||n|| multi-index into an I-indexed one.
MultiIndex block_pushforward(const MultiIndex& n, const MultiIndex& k);

// All m in N^I with m <= bound componentwise, lexicographic.
std::vector<MultiIndex> multi_indices_below(const MultiIndex& bound);

// All k in {0..K}^len, lexicographic.
std::vector<MultiIndex> cube(int K, int len);

// All ordered compositions of m into `parts` parts, entries in [lo, hi].
std::vector<MultiIndex> compositions(int m, int parts, int lo, int hi);

} // namespace curvco
