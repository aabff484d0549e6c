#pragma once

#include "latkit/lattice.hpp"

namespace latkit {

inline constexpr int kMaxEnumerationRank = 26;

// All vectors w in (shift + Z^n) with 0 < |w.G.w| <= max_norm_abs, for a
// negative definite Gram matrix G. Exact rational arithmetic throughout.
// Results are sorted lexicographically by coordinates.
std::vector<QVec> short_vectors_coset(const ZMat& gram, const QVec& shift,
                                      const Int& max_norm_abs);

struct RootSystem {
    IntegerLattice parent;
    std::vector<ZVec> roots;  // all norm -2 vectors, lexicographically sorted
    std::vector<ADEType> components;            // sorted ADE decomposition
    std::vector<ZMat> component_simple_roots;   // rows in canonical label order
    ZMat simple_roots;                          // concatenation over components

    std::size_t count() const { return roots.size(); }
};

// Complete norm -2 enumeration plus ADE classification of the root span.
// The default entry point may use OpenMP worker threads internally; the
// serial variant is the reference implementation and both return identical
// canonically sorted results.
RootSystem enumerate_roots(const IntegerLattice& l);
RootSystem enumerate_roots_serial(const IntegerLattice& l);

// Raw enumeration kernels (no classification).
std::vector<ZVec> root_vectors(const IntegerLattice& l);
std::vector<ZVec> root_vectors_serial(const IntegerLattice& l);

// Sublattice generated by all roots, with a canonical integral basis.
Embedding root_span(const IntegerLattice& l);

std::vector<ADEType> ade_classify(const RootSystem& rs);

// True iff the root span has full rank and index 1.
bool is_root_lattice(const IntegerLattice& l);

}  // namespace latkit
