#pragma once

#include <cstdint>

#include "latkit/lattice.hpp"

namespace latkit {

// Finite abelian group A_L = L^dual / L with its Q/2Z-valued quadratic form.
// Elements are addressed by residue tuples over the invariant factors > 1;
// all per-generator data is computed once at construction.
struct DiscriminantGroup {
    IntegerLattice parent;
    std::vector<Int> invariant_factors;  // d1 | d2 | ..., all > 1
    std::vector<QVec> generator_lifts;   // dual-lattice lifts, parent basis coords
    Int order;                           // = discriminant(parent)

    using Elem = std::vector<long>;

    int length() const { return static_cast<int>(invariant_factors.size()); }
    Elem zero() const { return Elem(invariant_factors.size(), 0); }
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, long k) const;
    long element_order(const Elem& a) const;

    QVec lift(const Elem& a) const;
    // Class of a dual-lattice vector (throws if v is not in the dual).
    Elem class_of(const QVec& v) const;

    // q(a) reduced into [0, 2); for even parents independent of the lift.
    Rat q(const Elem& a) const;
    // b(a, c) reduced into [0, 1).
    Rat b(const Elem& a, const Elem& c) const;

    // Linear element indexing (mixed radix, first factor fastest).
    std::uint64_t index_of(const Elem& a) const;
    Elem element_at(std::uint64_t idx) const;

  private:
    friend DiscriminantGroup discriminant_group(const IntegerLattice&);
    ZMat snf_left;                // maps Z^n/(G Z^n) to SNF coordinates
    std::vector<std::size_t> factor_pos;
    QMat lift_products;           // pairwise Gram products of the generator lifts
};

DiscriminantGroup discriminant_group(const IntegerLattice& l);

inline int group_length(const DiscriminantGroup& g) { return g.length(); }

Rat q_value(const DiscriminantGroup& g, const DiscriminantGroup::Elem& a);
Rat b_value(const DiscriminantGroup& g, const DiscriminantGroup::Elem& a,
            const DiscriminantGroup::Elem& b);

// Comparison of the computed discriminant forms of the ADE lattices
// (A_1..A_12, D_4..D_12, E_6, E_7, E_8) against their closed forms. Values on
// cyclic groups are matched up to the choice of generator; for D_{2n} a
// generating pair realizing the closed form must exist.
struct AdeTableEntry {
    std::string lattice;
    std::vector<Int> factors;
    std::vector<Rat> q_on_generators;
    std::string expected;
    bool pass = false;
};

struct AdeTableReport {
    std::vector<AdeTableEntry> entries;
    bool pass = true;
};

AdeTableReport verify_ade_table();

}  // namespace latkit
