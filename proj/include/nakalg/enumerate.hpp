#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "nakalg/kupisch.hpp"

namespace nakalg {

// All linear Kupisch series of length n, lexicographically; there are
// Catalan(n-1) of them.
inline std::vector<KupischSeries> enumerate_linear(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<KupischSeries> out;
    std::vector<long> c(static_cast<size_t>(n));
    c[static_cast<size_t>(n - 1)] = 1;
    const std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(KupischSeries{Orientation::Linear, c});
            return;
        }
        // c_i >= max(2, c_{i-1}-1) and the projective must fit: c_i <= n-i+1
        const long lo = i == 1 ? 2 : std::max(2L, c[static_cast<size_t>(i - 2)] - 1);
        for (long v = lo; v <= n - i + 1; ++v) {
            c[static_cast<size_t>(i - 1)] = v;
            rec(i + 1);
        }
    };
    if (n == 1) {
        out.push_back(KupischSeries{Orientation::Linear, c});
    } else {
        rec(1);
    }
    return out;
}

// All cyclic Kupisch series with 2 <= c_i <= loewy_bound, optionally
// deduplicated up to rotation (keeping the lexicographically least rotation).
inline std::vector<KupischSeries> enumerate_cyclic(int n, long loewy_bound, bool up_to_rotation = false) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (loewy_bound < 2) throw std::invalid_argument("Loewy bound must be at least 2");
    std::vector<KupischSeries> out;
    std::vector<long> c(static_cast<size_t>(n));
    const auto admissible_step = [&](long prev, long next) { return next >= prev - 1; };
    const std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (!admissible_step(c[static_cast<size_t>(n - 1)], c[0])) return;
            if (up_to_rotation) {
                for (int s = 1; s < n; ++s) {
                    std::vector<long> rot(static_cast<size_t>(n));
                    for (int k = 0; k < n; ++k) rot[static_cast<size_t>(k)] = c[static_cast<size_t>((k + s) % n)];
                    if (rot < c) return;
                }
            }
            out.push_back(KupischSeries{Orientation::Cyclic, c});
            return;
        }
        for (long v = 2; v <= loewy_bound; ++v) {
            if (i > 0 && !admissible_step(c[static_cast<size_t>(i - 1)], v)) continue;
            c[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace nakalg
