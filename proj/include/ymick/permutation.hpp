#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ymick/error.hpp"

namespace ymick {

// A permutation of {1..m} in one-line notation: perm[i-1] = sigma(i).
using Perm = std::vector<int>;

inline Perm perm_identity(int m) {
    Perm p(m);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline void perm_validate(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1])
            throw IndexOutOfRange("perm_validate: not a permutation");
        seen[v - 1] = 1;
    }
}

// (a * b)(i) = a(b(i)): b acts first.
inline Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("perm_compose: size mismatch");
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
    return c;
}

inline Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

inline int perm_sign(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

inline Perm transposition(int m, int p, int q) {
    if (p < 1 || q < 1 || p > m || q > m || p == q)
        throw IndexOutOfRange("transposition: bad indices");
    Perm t = perm_identity(m);
    std::swap(t[p - 1], t[q - 1]);
    return t;
}

inline std::vector<Perm> all_permutations(int m) {
    Perm p = perm_identity(m);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Relabels positions: out[sigma(i)-1] = labels[i-1].
template <class T>
std::vector<T> perm_apply_labels(const Perm& sigma, const std::vector<T>& labels) {
    if (sigma.size() != labels.size())
        throw DimensionMismatch("perm_apply_labels: size mismatch");
    std::vector<T> out(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) out[sigma[i] - 1] = labels[i];
    return out;
}

// Longest element of S_m: i -> m+1-i.
inline Perm longest_element(int m) {
    Perm p(m);
    for (int i = 0; i < m; ++i) p[i] = m - i;
    return p;
}

inline int perm_length(const Perm& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

// Lexicographically smallest reduced word (c_1,...,c_K) with
// sigma = s_{c_1} s_{c_2} ... s_{c_K}. Greedy: the smallest admissible
// first letter is the smallest left descent, then recurse.
inline std::vector<int> reduced_word(const Perm& sigma) {
    Perm cur = sigma;
    int m = static_cast<int>(sigma.size());
    std::vector<int> word;
    int len = perm_length(cur);
    while (len > 0) {
        for (int c = 1; c < m; ++c) {
            Perm next = perm_compose(transposition(m, c, c + 1), cur);
            if (perm_length(next) == len - 1) {
                word.push_back(c);
                cur = next;
                --len;
                break;
            }
        }
    }
    return word;
}

inline void all_reduced_words_impl(const Perm& sigma, std::vector<int>& prefix,
                                   std::vector<std::vector<int>>& out) {
    int len = perm_length(sigma);
    if (len == 0) {
        out.push_back(prefix);
        return;
    }
    int m = static_cast<int>(sigma.size());
    for (int c = 1; c < m; ++c) {
        Perm next = perm_compose(transposition(m, c, c + 1), sigma);
        if (perm_length(next) == len - 1) {
            prefix.push_back(c);
            all_reduced_words_impl(next, prefix, out);
            prefix.pop_back();
        }
    }
}

inline std::vector<std::vector<int>> all_reduced_words(const Perm& sigma) {
    std::vector<int> prefix;
    std::vector<std::vector<int>> out;
    all_reduced_words_impl(sigma, prefix, out);
    return out;
}

}  // namespace ymick
