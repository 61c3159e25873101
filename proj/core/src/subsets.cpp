#include "tokenalg/subsets.hpp"

#include <algorithm>

namespace tokenalg {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::vector<KSubset> k_subsets(int n, int k) {
    if (k < 0 || k > n) throw InputError("k out of range 0.." + std::to_string(n));
    std::vector<KSubset> out;
    out.reserve(static_cast<size_t>(binomial(n, k)));
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    int rank = 0;
    while (true) {
        out.push_back({cur, rank++});
        if (k == 0) break;
        // advance to the lexicographic successor
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int subset_rank(const std::vector<int>& elements, int n) {
    int k = static_cast<int>(elements.size());
    long long rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < elements[i]; ++v) rank += binomial(n - v, k - 1 - i);
        prev = elements[i];
    }
    return static_cast<int>(rank);
}

KSubset subset_unrank(int rank, int n, int k) {
    std::vector<int> elements;
    elements.reserve(k);
    long long r = rank;
    int v = 1;
    for (int i = 0; i < k; ++i) {
        while (true) {
            long long below = binomial(n - v, k - 1 - i);
            if (r < below) break;
            r -= below;
            ++v;
        }
        elements.push_back(v++);
    }
    return {std::move(elements), rank};
}

std::vector<int> symmetric_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace tokenalg
