#pragma once

// Test-side oracles, kept independent of the library's computation paths:
// plain loops over the defining formulas and brute-force enumerations.

#include "plethyon/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace oracles {

inline plethyon::Int fact(std::int64_t n) {
    plethyon::Int r = 1;
    while (n > 1) r *= n--;
    return r;
}

// prod over i of i!^{v_i} * v_i!  (vector notation, v[0] is position 1)
inline plethyon::Int autiv(const std::vector<std::int64_t>& v) {
    plethyon::Int r = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        plethyon::Int f = fact(std::int64_t(i) + 1);
        for (std::int64_t j = 0; j < v[i]; ++j) r *= f;
        r *= fact(v[i]);
    }
    return r;
}

inline plethyon::Int lambda_factorial(const std::vector<std::int64_t>& v) {
    plethyon::Int r = 1;
    for (std::int64_t m : v) r *= fact(m);
    return r;
}

inline plethyon::Int word_factorial(const std::vector<std::int64_t>& w) {
    plethyon::Int r = 1;
    for (std::int64_t x : w) r *= fact(x);
    return r;
}

// (V^k v)_i = v_{i/k} when k | i, else 0; vector positions 1-based.
inline std::vector<std::int64_t> verschiebung_vec(std::int64_t k,
                                                  const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out(std::size_t(k) * v.size(), 0);
    for (std::size_t i = 1; i <= v.size(); ++i) out[std::size_t(k) * i - 1] = v[i - 1];
    return out;
}

// All set partitions of {0..n-1}, each as a list of blocks (sets sorted).
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (auto& block : cur) {
            block.push_back(i);
            self(self, i + 1);
            block.pop_back();
        }
        cur.push_back({i});
        self(self, i + 1);
        cur.pop_back();
    };
    rec(rec, 0);
    return out;
}

// B_{n,k} as a map from the sorted multiset of block sizes to the number
// of partitions of an n-set into k blocks with those sizes.
inline std::map<std::vector<int>, plethyon::Int> bell_types(int n, int k) {
    std::map<std::vector<int>, plethyon::Int> out;
    for (const auto& p : set_partitions(n)) {
        if (int(p.size()) != k) continue;
        std::vector<int> sizes;
        for (const auto& b : p) sizes.push_back(int(b.size()));
        std::sort(sizes.begin(), sizes.end());
        out[sizes] += 1;
    }
    return out;
}

}  // namespace oracles
