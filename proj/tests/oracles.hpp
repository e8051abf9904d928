// Independent oracles for derived test values. Nothing here shares code with
// src/: elementary divisors come from minor gcds, ranks from fraction-free
// elimination, hom groups from brute-force enumeration.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace oracles {

using i64 = std::int64_t;

inline i64 gcd_abs(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Determinant of the square submatrix picked by rows/cols, by cofactor expansion.
inline i64 minor_det(const std::vector<std::vector<i64>>& m, std::vector<int> rows,
                     std::vector<int> cols) {
    if (rows.empty()) return 1;
    i64 det = 0;
    for (size_t k = 0; k < cols.size(); ++k) {
        i64 entry = m[rows[0]][cols[k]];
        if (entry != 0) {
            std::vector<int> r2(rows.begin() + 1, rows.end());
            std::vector<int> c2;
            for (size_t j = 0; j < cols.size(); ++j)
                if (j != k) c2.push_back(cols[j]);
            i64 sub = minor_det(m, r2, c2);
            det += (k % 2 ? -1 : 1) * entry * sub;
        }
    }
    return det;
}

// gcd of all k x k minors; 0 if all vanish.
inline i64 minor_gcd(const std::vector<std::vector<i64>>& m, int k) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    i64 g = 0;
    std::vector<int> rsel(k), csel(k);
    std::vector<int> ridx(k), cidx(k);
    // Enumerate row subsets then column subsets.
    std::vector<std::vector<int>> rsets, csets;
    std::vector<int> cur;
    auto gen = [](int n, int k, std::vector<std::vector<int>>& out) {
        std::vector<int> sel(k);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                out.push_back(sel);
                return;
            }
            for (int i = start; i <= n - (k - depth); ++i) {
                sel[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        if (k <= n) rec(0, 0);
    };
    gen(rows, k, rsets);
    gen(cols, k, csets);
    for (const auto& r : rsets)
        for (const auto& c : csets) g = gcd_abs(g, minor_det(m, r, c));
    return g;
}

// Elementary divisors d_1 | d_2 | ... via d_k = gcd(k-minors)/gcd((k-1)-minors).
inline std::vector<i64> elementary_divisors(const std::vector<std::vector<i64>>& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int n = std::min(rows, cols);
    std::vector<i64> out;
    i64 prev = 1;
    for (int k = 1; k <= n; ++k) {
        i64 g = minor_gcd(m, k);
        if (g == 0) {
            while (static_cast<int>(out.size()) < n) out.push_back(0);
            return out;
        }
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Rank over the rationals by fraction-free (Bareiss-style) elimination.
inline int rational_rank(std::vector<std::vector<i64>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[rank]);
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            i64 a = m[rank][col], b = m[i][col];
            i64 g = gcd_abs(a, b);
            i64 ca = b / g, cb = a / g;
            for (int j = 0; j < cols; ++j) m[i][j] = cb * m[i][j] - ca * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Number of additive maps A -> B for small finite groups given as invariant lists,
// counted by enumerating all generator images.
inline i64 count_hom_maps(const std::vector<i64>& a, const std::vector<i64>& b) {
    i64 border = 1;
    for (i64 d : b) border *= d;
    i64 count = 0;
    // One generator image per factor of A, each an element of B; |B|^|a| candidates.
    i64 total = 1;
    for (size_t i = 0; i < a.size(); ++i) total *= border;
    for (i64 code = 0; code < total; ++code) {
        i64 c = code;
        bool ok = true;
        for (size_t j = 0; j < a.size() && ok; ++j) {
            // decode image of generator j
            i64 rem = c % border;
            c /= border;
            std::vector<i64> img(b.size());
            for (size_t i = 0; i < b.size(); ++i) {
                img[i] = rem % b[i];
                rem /= b[i];
            }
            // well-defined: a[j] * img == 0 in B
            for (size_t i = 0; i < b.size(); ++i)
                if ((a[j] * img[i]) % b[i] != 0) ok = false;
        }
        if (ok) ++count;
    }
    return count;
}

enum class Pairing { hom, ext1, tensor, tor1 };

// Expected cyclic orders (0 meaning a free factor, 1s dropped) of the pairing
// of two groups given by invariant lists, from the per-factor rules.
inline std::vector<i64> pairing_orders(Pairing kind, const std::vector<i64>& a,
                                       const std::vector<i64>& b) {
    std::vector<i64> out;
    auto push = [&](i64 o) {
        if (o != 1) out.push_back(o);
    };
    for (i64 x : a)
        for (i64 y : b) {
            switch (kind) {
                case Pairing::hom:
                    if (x == 0) push(y);
                    else if (y != 0) push(gcd_abs(x, y));
                    break;
                case Pairing::ext1:
                    if (x != 0) push(y == 0 ? x : gcd_abs(x, y));
                    break;
                case Pairing::tensor:
                    if (x == 0) push(y);
                    else if (y == 0) push(x);
                    else push(gcd_abs(x, y));
                    break;
                case Pairing::tor1:
                    if (x != 0 && y != 0) push(gcd_abs(x, y));
                    break;
            }
        }
    return out;
}

// Free rank plus the multiset of prime-power pieces, a complete isomorphism
// invariant of a finitely generated abelian group.
struct GroupShape {
    int free_rank = 0;
    std::vector<std::pair<i64, int>> prime_powers;  // sorted (p, exponent)
    friend bool operator==(const GroupShape&, const GroupShape&) = default;
};

inline GroupShape group_shape(const std::vector<i64>& orders) {
    GroupShape s;
    for (i64 o : orders) {
        if (o == 0) {
            ++s.free_rank;
            continue;
        }
        i64 n = o < 0 ? -o : o;
        for (i64 p = 2; p * p <= n; ++p) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e) s.prime_powers.push_back({p, e});
        }
        if (n > 1) s.prime_powers.push_back({n, 1});
    }
    std::sort(s.prime_powers.begin(), s.prime_powers.end());
    return s;
}

}  // namespace oracles
