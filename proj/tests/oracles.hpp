#pragma once

// Test-only oracles, independent of the library's computation paths.

#include "latkit/lattice.hpp"

namespace latkit::oracles {

// determinant by cofactor expansion (exponential; n <= 10)
inline Rat det_cofactor(const QMat& m) {
    const std::size_t n = m.rows;
    if (n == 0) return Rat(1);
    if (n == 1) return m.at(0, 0);
    Rat acc(0);
    for (std::size_t k = 0; k < n; ++k) {
        if (m.at(0, k) == 0) continue;
        QMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                minor.at(i - 1, cj++) = m.at(i, j);
            }
        }
        Rat term = m.at(0, k) * det_cofactor(minor);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline Int det_cofactor(const ZMat& m) {
    Rat d = det_cofactor(QMat(m));
    return d.get_num();
}

// norm -2 count by exhaustive search over a coordinate box
inline std::size_t root_count_box(const IntegerLattice& l, long box) {
    const int n = l.rank();
    std::vector<long> v(n, -box);
    std::size_t count = 0;
    while (true) {
        QVec q(n);
        for (int i = 0; i < n; ++i) q[i] = v[i];
        if (inner_product(l, q, q) == -2) ++count;
        int i = 0;
        while (i < n && v[i] == box) v[i++] = -box;
        if (i == n) break;
        ++v[i];
    }
    return count;
}

inline std::size_t closed_form_root_count(const ADEType& t) {
    long n = t.index;
    switch (t.family) {
        case 'A': return static_cast<std::size_t>(n * (n + 1));
        case 'D': return static_cast<std::size_t>(2 * n * (n - 1));
        default: return n == 6 ? 72 : n == 7 ? 126 : 240;
    }
}

// Smith diagonal via gcds of k x k minors (tiny matrices only)
inline std::vector<Int> snf_diag_by_minors(const ZMat& m) {
    const std::size_t n = std::min(m.rows, m.cols);
    std::vector<Int> dk(n + 1);
    dk[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // gcd over all k x k minors
        std::vector<std::size_t> ri(k), ci(k);
        Int g = 0;
        auto rows_rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
            if (depth == k) {
                auto cols_rec = [&](auto&& cself, std::size_t cfrom,
                                    std::size_t cdepth) -> void {
                    if (cdepth == k) {
                        ZMat sub(k, k);
                        for (std::size_t i = 0; i < k; ++i)
                            for (std::size_t j = 0; j < k; ++j)
                                sub.at(i, j) = m.at(ri[i], ci[j]);
                        Int d = det_cofactor(sub);
                        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
                        return;
                    }
                    for (std::size_t c = cfrom; c < m.cols; ++c) {
                        ci[cdepth] = c;
                        cself(cself, c + 1, cdepth + 1);
                    }
                };
                cols_rec(cols_rec, 0, 0);
                return;
            }
            for (std::size_t r = from; r < m.rows; ++r) {
                ri[depth] = r;
                self(self, r + 1, depth + 1);
            }
        };
        rows_rec(rows_rec, 0, 0);
        dk[k] = g;
    }
    std::vector<Int> diag(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (dk[k] == 0)
            diag[k - 1] = 0;
        else
            diag[k - 1] = dk[k] / dk[k - 1];
    }
    return diag;
}

// deterministic pseudo-random stream for property tests
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long next_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace latkit::oracles
