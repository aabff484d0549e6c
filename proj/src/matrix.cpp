#include "latkit/matrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace latkit {

ZMat::ZMat(std::initializer_list<std::initializer_list<long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (const auto& r : init) {
        if (r.size() != cols) throw domain_error("ragged matrix initializer");
        for (long x : r) a.emplace_back(x);
    }
}

ZMat ZMat::identity(std::size_t n) {
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZVec ZMat::row(std::size_t i) const {
    return ZVec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void ZMat::set_row(std::size_t i, const ZVec& v) {
    std::copy(v.begin(), v.end(), a.begin() + i * cols);
}

QMat::QMat(const ZMat& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = Rat(m.a[i]);
}

QVec QMat::row(std::size_t i) const {
    return QVec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

ZMat transpose(const ZMat& m) {
    ZMat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

QMat transpose(const QMat& m) {
    QMat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

template <typename M1, typename M2, typename Out>
static Out mul_impl(const M1& x, const M2& y) {
    if (x.cols != y.rows) throw domain_error("matrix product shape mismatch");
    Out z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const auto& xv = x.at(i, k);
            if (xv == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += xv * y.at(k, j);
        }
    return z;
}

ZMat mul(const ZMat& x, const ZMat& y) { return mul_impl<ZMat, ZMat, ZMat>(x, y); }
QMat mul(const QMat& x, const QMat& y) { return mul_impl<QMat, QMat, QMat>(x, y); }
QMat mul(const QMat& x, const ZMat& y) { return mul_impl<QMat, ZMat, QMat>(x, y); }
QMat mul(const ZMat& x, const QMat& y) { return mul_impl<ZMat, QMat, QMat>(x, y); }

ZVec mul(const ZMat& m, const ZVec& v) {
    if (m.cols != v.size()) throw domain_error("matrix-vector shape mismatch");
    ZVec out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

QVec mul(const QMat& m, const QVec& v) {
    if (m.cols != v.size()) throw domain_error("matrix-vector shape mismatch");
    QVec out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

bool is_symmetric(const ZMat& m) {
    if (m.rows != m.cols) return false;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = i + 1; j < m.cols; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

Int det(const ZMat& m) {
    if (m.rows != m.cols) throw domain_error("determinant of non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return 1;
    ZMat w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Rat det(const QMat& m) {
    if (m.rows != m.cols) throw domain_error("determinant of non-square matrix");
    QMat w = m;
    const std::size_t n = w.rows;
    Rat d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w.at(p, k) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            d = -d;
        }
        d *= w.at(k, k);
        Rat inv = 1 / w.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0) continue;
            Rat f = w.at(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return d;
}

std::size_t rank(const ZMat& m) {
    QMat w(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
        std::size_t p = r;
        while (p < w.rows && w.at(p, c) == 0) ++p;
        if (p == w.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
        Rat inv = 1 / w.at(r, c);
        for (std::size_t i = r + 1; i < w.rows; ++i) {
            if (w.at(i, c) == 0) continue;
            Rat f = w.at(i, c) * inv;
            for (std::size_t j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

QMat inverse(const QMat& m) {
    if (m.rows != m.cols) throw domain_error("inverse of non-square matrix");
    const std::size_t n = m.rows;
    QMat w = m;
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w.at(p, k) == 0) ++p;
        if (p == n) throw domain_error("singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rat piv = 1 / w.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            w.at(k, j) *= piv;
            inv.at(k, j) *= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rat f = w.at(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

QMat inverse(const ZMat& m) { return inverse(QMat(m)); }

QVec solve_left(const ZMat& m, const QVec& b) {
    // x * m = b with m of full row rank; b must lie in the row space.
    // Via the Euclidean Gram matrix: x (m m^T) = b m^T.
    ZMat mmt = mul(m, transpose(m));
    QVec c = mul(QMat(m), b);
    QVec x = mul(inverse(mmt), c);
    QVec back = mul(transpose(QMat(m)), x);
    if (back != b) throw domain_error("no exact solution");
    return x;
}

ZMat row_hnf(const ZMat& m) {
    ZMat w = m;
    const std::size_t rows = w.rows, cols = w.cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // reduce column c below row r to a single nonzero entry via gcd steps
        while (true) {
            std::size_t piv = rows;
            Int best;
            for (std::size_t i = r; i < rows; ++i) {
                if (w.at(i, c) == 0) continue;
                Int av = abs(w.at(i, c));
                if (piv == rows || av < best) {
                    piv = i;
                    best = av;
                }
            }
            if (piv == rows) break;
            if (piv != r)
                for (std::size_t j = 0; j < cols; ++j) std::swap(w.at(r, j), w.at(piv, j));
            if (w.at(r, c) < 0)
                for (std::size_t j = 0; j < cols; ++j) w.at(r, j) = -w.at(r, j);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (w.at(i, c) == 0) continue;
                Int q = floor_div(w.at(i, c), w.at(r, c));
                if (q != 0)
                    for (std::size_t j = 0; j < cols; ++j) w.at(i, j) -= q * w.at(r, j);
                if (w.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (w.at(r, c) == 0) continue;
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(w.at(i, c), w.at(r, c));
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) w.at(i, j) -= q * w.at(r, j);
        }
        ++r;
    }
    ZMat out(r, cols);
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, w.row(i));
    return out;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const Int& d : diag)
        if (d != 0) ++r;
    return r;
}

namespace {

struct SnfWork {
    ZMat a, u, uinv, v, vinv;

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (std::size_t r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
        for (std::size_t c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
    }
    // row i += t * row j
    void row_add(std::size_t i, std::size_t j, const Int& t) {
        for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) += t * a.at(j, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) += t * u.at(j, c);
        for (std::size_t r = 0; r < uinv.rows; ++r) uinv.at(r, j) -= t * uinv.at(r, i);
    }
    // col j += t * col i
    void col_add(std::size_t j, std::size_t i, const Int& t) {
        for (std::size_t r = 0; r < a.rows; ++r) a.at(r, j) += t * a.at(r, i);
        for (std::size_t r = 0; r < v.rows; ++r) v.at(r, j) += t * v.at(r, i);
        for (std::size_t c = 0; c < vinv.cols; ++c) vinv.at(i, c) -= t * vinv.at(j, c);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
        for (std::size_t r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const ZMat& m) {
    const std::size_t rows = m.rows, cols = m.cols;
    SnfWork w{m, ZMat::identity(rows), ZMat::identity(rows), ZMat::identity(cols),
              ZMat::identity(cols)};

    const std::size_t n = std::min(rows, cols);
    for (std::size_t k = 0; k < n; ++k) {
        // pivot: smallest nonzero |entry| in the trailing block, row-major ties
        std::size_t pi = rows, pj = cols;
        Int best;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                if (w.a.at(i, j) == 0) continue;
                Int av = abs(w.a.at(i, j));
                if (pi == rows || av < best) {
                    pi = i;
                    pj = j;
                    best = av;
                }
            }
        if (pi == rows) break;
        w.row_swap(k, pi);
        w.col_swap(k, pj);
        while (true) {
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (w.a.at(i, k) == 0) continue;
                Int q = floor_div(w.a.at(i, k), w.a.at(k, k));
                w.row_add(i, k, -q);
                if (w.a.at(i, k) != 0) {
                    w.row_swap(k, i);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (w.a.at(k, j) == 0) continue;
                Int q = floor_div(w.a.at(k, j), w.a.at(k, k));
                w.col_add(j, k, -q);
                if (w.a.at(k, j) != 0) {
                    w.col_swap(k, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (w.a.at(k, k) < 0) w.row_negate(k);
    }

    // enforce the divisibility chain d1 | d2 | ...
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            Int &dk = w.a.at(k, k), &dn = w.a.at(k + 1, k + 1);
            if (dk == 0 && dn != 0) {
                w.row_swap(k, k + 1);
                w.col_swap(k, k + 1);
                changed = true;
                continue;
            }
            if (dk == 0 || dn % dk == 0) continue;
            // fold d_{k+1} into column k and re-reduce the 2x2 block
            w.col_add(k, k + 1, 1);
            while (true) {
                if (w.a.at(k + 1, k) != 0) {
                    Int q = floor_div(w.a.at(k + 1, k), w.a.at(k, k));
                    w.row_add(k + 1, k, -q);
                    if (w.a.at(k + 1, k) != 0) w.row_swap(k, k + 1);
                    continue;
                }
                if (w.a.at(k, k + 1) != 0) {
                    Int q = floor_div(w.a.at(k, k + 1), w.a.at(k, k));
                    w.col_add(k + 1, k, -q);
                    if (w.a.at(k, k + 1) != 0) w.col_swap(k, k + 1);
                    continue;
                }
                break;
            }
            if (w.a.at(k, k) < 0) w.row_negate(k);
            if (w.a.at(k + 1, k + 1) < 0) w.row_negate(k + 1);
            changed = true;
        }
    }

    SmithDecomposition out;
    out.left = std::move(w.u);
    out.left_inv = std::move(w.uinv);
    out.right = std::move(w.v);
    out.right_inv = std::move(w.vinv);
    out.diag.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.diag[k] = w.a.at(k, k);
    return out;
}

ZMat kernel_basis(const ZMat& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::size_t r = s.rank();
    ZMat out(m.cols - r, m.cols);
    for (std::size_t k = r; k < m.cols; ++k)
        for (std::size_t i = 0; i < m.cols; ++i) out.at(k - r, i) = s.right.at(i, k);
    return row_hnf(out);
}

ZMat saturate_rows(const ZMat& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::size_t r = s.rank();
    ZMat out(r, m.cols);
    for (std::size_t i = 0; i < r; ++i) out.set_row(i, s.right_inv.row(i));
    return row_hnf(out);
}

}  // namespace latkit
