#pragma once

#include <span>
#include <string>

#include "latkit/matrix.hpp"

namespace latkit {

struct Signature {
    int n_plus = 0;
    int n_minus = 0;
    bool operator==(const Signature&) const = default;
};

// Simply laced type A_n (n >= 1), D_n (n >= 4) or E_n (6 <= n <= 8).
struct ADEType {
    char family;  // 'A', 'D' or 'E'
    int index;

    ADEType(char f, int n);
    int rank() const { return index; }
    std::string name() const { return std::string(1, family) + std::to_string(index); }
    auto operator<=>(const ADEType&) const = default;
};

// Even lattice of full rank given by an exact symmetric Gram matrix. All
// internal tables use the negative definite sign convention for root and
// definite lattices.
struct IntegerLattice {
    ZMat gram;
    std::vector<std::string> labels;  // empty or one per basis vector
    bool degenerate = false;

    int rank() const { return static_cast<int>(gram.rows); }

    // Rejects non-symmetric and degenerate Gram matrices.
    static IntegerLattice make(ZMat g, std::vector<std::string> labels = {});
    // Span form: degenerate Gram permitted and flagged.
    static IntegerLattice make_span(ZMat g, std::vector<std::string> labels = {});

    bool is_even() const;
};

// A sublattice of `ambient` presented by integer coordinate row vectors.
struct Embedding {
    IntegerLattice ambient;
    ZMat basis;  // k x rank(ambient), rows linearly independent

    int rank() const { return static_cast<int>(basis.rows); }
    ZMat induced_gram() const;  // pairwise ambient products of the rows
    static Embedding make(IntegerLattice ambient, ZMat basis);
};

IntegerLattice make_ade(const ADEType& t);
IntegerLattice make_hyperbolic();
IntegerLattice direct_sum(std::span<const IntegerLattice> parts);
IntegerLattice direct_sum(std::initializer_list<IntegerLattice> parts);

Int discriminant(const IntegerLattice& l);
Signature signature(const IntegerLattice& l);
Rat inner_product(const IntegerLattice& l, const QVec& v, const QVec& w);

// Basis of the saturated orthogonal complement of `sub` in its ambient
// lattice, as an embedding into the same ambient.
Embedding orthogonal_complement(const Embedding& sub);

// Flips the sign of the Gram matrix (conversion between the negative
// definite convention used here and the positive definite one).
IntegerLattice sign_flip(const IntegerLattice& l);

}  // namespace latkit
