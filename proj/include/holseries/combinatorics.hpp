#pragma once

#include <cstdint>
#include <vector>

namespace holseries {

// binom(n, k) as a 64-bit integer; 0 for k < 0 or k > n.
inline std::int64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Exponent vectors of total degree d over nvars variables, lexicographic.
inline std::vector<std::vector<int>> exponent_vectors(int nvars, int d) {
    std::vector<std::vector<int>> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(nvars, 0);
    // recursive enumeration without recursion: distribute d over positions
    struct Frame {
        int pos;
        int left;
    };
    std::vector<int> stack_val;
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace holseries
