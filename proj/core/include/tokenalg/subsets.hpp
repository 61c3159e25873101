#pragma once

#include <vector>

#include "tokenalg/rational.hpp"

namespace tokenalg {

/// A k-subset of {1..n} as a strictly increasing sequence, together with its
/// 0-based position in the lexicographic order of all k-subsets.
struct KSubset {
    std::vector<int> elements;
    int rank = 0;

    bool operator==(const KSubset& other) const { return elements == other.elements; }
};

long long binomial(int n, int k);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<KSubset> k_subsets(int n, int k);

int subset_rank(const std::vector<int>& elements, int n);
KSubset subset_unrank(int rank, int n, int k);

/// Symmetric difference of two sorted element sequences.
std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace tokenalg
