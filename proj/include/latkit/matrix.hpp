#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>

#include "latkit/numeric.hpp"

namespace latkit {

// Dense row-major matrix over Z (arbitrary precision).
struct ZMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    ZMat(std::initializer_list<std::initializer_list<long>> init);

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static ZMat identity(std::size_t n);
    ZVec row(std::size_t i) const;
    void set_row(std::size_t i, const ZVec& v);
    bool operator==(const ZMat& o) const = default;
};

// Dense row-major matrix over Q.
struct QMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    explicit QMat(const ZMat& m);

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    QVec row(std::size_t i) const;
    bool operator==(const QMat& o) const = default;
};

ZMat transpose(const ZMat& m);
QMat transpose(const QMat& m);
ZMat mul(const ZMat& x, const ZMat& y);
QMat mul(const QMat& x, const QMat& y);
QMat mul(const QMat& x, const ZMat& y);
QMat mul(const ZMat& x, const QMat& y);
ZVec mul(const ZMat& m, const ZVec& v);
QVec mul(const QMat& m, const QVec& v);

bool is_symmetric(const ZMat& m);

// Exact determinant, fraction-free (Bareiss).
Int det(const ZMat& m);
Rat det(const QMat& m);

// Rank over Q.
std::size_t rank(const ZMat& m);

// Exact inverse via Gauss-Jordan; throws domain_error if singular.
QMat inverse(const QMat& m);
QMat inverse(const ZMat& m);

// Solves x * m = b for a row vector x; m must have full row rank and b must
// lie in the row space (throws otherwise).
QVec solve_left(const ZMat& m, const QVec& b);

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// returns a matrix whose rows are a canonical basis (pivot columns strictly
// increasing, pivots positive, entries above each pivot reduced into
// [0, pivot)). Zero rows are dropped.
ZMat row_hnf(const ZMat& m);

// Smith normal form with transformation matrices: left * m * right = diag,
// |det left| = |det right| = 1, diag entries non-negative with d1 | d2 | ...
// The inverses are tracked alongside so callers can move between coordinate
// systems without re-inverting.
struct SmithDecomposition {
    ZMat left, right, left_inv, right_inv;
    std::vector<Int> diag;  // length min(rows, cols)
    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const ZMat& m);

// Basis of the saturated right kernel {v : m v = 0} as rows.
ZMat kernel_basis(const ZMat& m);

// Canonical basis (rows) of the saturation of the row span of m inside Z^n:
// the largest sublattice of Z^n contained in the Q-span of the rows.
ZMat saturate_rows(const ZMat& m);

}  // namespace latkit
