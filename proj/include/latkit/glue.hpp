#pragma once

#include <cstdint>
#include <optional>

#include "latkit/discform.hpp"
#include "latkit/roots.hpp"

namespace latkit {

inline constexpr std::uint64_t kDefaultDiscGroupCap = 10000;

using Elem = DiscriminantGroup::Elem;

// Subgroup of a discriminant group on which q vanishes identically.
// Canonical form: the sorted element list; generators are a minimal
// generating set, built greedily over the sorted elements.
struct IsotropicSubgroup {
    std::vector<Elem> generators;
    std::vector<Elem> elements;  // sorted, includes the identity

    Int order() const { return Int(static_cast<long>(elements.size())); }
};

struct OverlatticeResult {
    IntegerLattice lattice;   // Gram on the new basis
    Int index;                // [L' : L]
    std::vector<QVec> glue_lifts;
    QMat change_of_basis;     // rows: new basis in old coordinates
};

// All elements with q = 0 mod 2Z, in linear-index order (identity first).
std::vector<Elem> isotropic_elements(const DiscriminantGroup& g,
                                     std::uint64_t cap = kDefaultDiscGroupCap);
std::vector<Elem> isotropic_elements_serial(const DiscriminantGroup& g,
                                            std::uint64_t cap = kDefaultDiscGroupCap);

// Every subgroup on which q vanishes identically (the trivial one included),
// ordered by (order, element list).
std::vector<IsotropicSubgroup> isotropic_subgroups(
    const DiscriminantGroup& g, std::uint64_t cap = kDefaultDiscGroupCap);

OverlatticeResult overlattice_from(const DiscriminantGroup& g,
                                   const IsotropicSubgroup& h);

// Smallest primitive sublattice of the ambient containing the embedded
// lattice, together with the index [L_sat : L].
std::pair<Embedding, Int> saturation(const Embedding& e);
bool is_primitive(const Embedding& e);

// Maps the overlattice produced from `h` back to its subgroup of A_L
// (the round trip of the overlattice/subgroup correspondence).
IsotropicSubgroup subgroup_of_overlattice(const DiscriminantGroup& g,
                                          const OverlatticeResult& o);

// Representative of v modulo L with all coefficients over the given root
// basis in [0, p-1] / p. Requires p*v integral.
QVec minimal_glue_vector(const IntegerLattice& l, const QVec& v, long p);

// Sublattice spanned by the basis roots appearing with non-zero coefficient
// in a minimal glue vector.
Embedding concentration_support(const IntegerLattice& l, const QVec& minimal_glue);

// True iff the overlattice attached to `h` is again a root lattice. Decided
// by two independent routes (norm -2 lift generation and the root span of
// the constructed overlattice) whose agreement is asserted.
bool overlattice_is_root_lattice(const DiscriminantGroup& g, const IsotropicSubgroup& h);

struct ThresholdScanRow {
    int r;
    bool admits_overlattice;
    bool admits_nonroot_overlattice;
};

struct ThresholdScanReport {
    long p;
    std::vector<ThresholdScanRow> rows;
    bool matches_thresholds;  // against: p=2 -> (4, 8); p=3 -> (3, 6); p=5 -> (2, 4)
};

ThresholdScanReport overlattice_threshold_scan(long p, int r_max,
                           std::uint64_t cap = kDefaultDiscGroupCap);

struct NoOverlatticeReport {
    struct Entry {
        std::string lattice;
        std::size_t nontrivial_isotropic_elements;
        bool pass;
    };
    std::vector<Entry> entries;
    bool pass = true;
};

// A6, A6+A6, A10 and A12 admit no non-trivial overlattice.
NoOverlatticeReport no_overlattice_check();

struct RootOverlatticeSweepReport {
    int rank_cap;
    std::size_t lattices_checked = 0;
    std::size_t overlattices_checked = 0;
    std::vector<std::string> counterexamples;
    bool pass = true;
};

// Every overlattice of every root lattice of rank <= rank_cap (all ADE
// multisets) must again be a root lattice; rank_cap is meant to be < 8.
RootOverlatticeSweepReport root_overlattice_sweep(int rank_cap = 7);

// All ADE multisets with total rank <= rank_cap, each as (types, lattice).
std::vector<std::pair<std::vector<ADEType>, IntegerLattice>> ade_multisets(int rank_cap);

}  // namespace latkit
