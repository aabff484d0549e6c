#pragma once

#include "latkit/curvegraph.hpp"
#include "latkit/glue.hpp"

namespace latkit {

// Rank-10 lattice with Gram 1 - delta_ij, basis F1..F4, E1..E6, together
// with the integral class H = (1/3)(F1+...+E6) and the unimodular index-3
// overlattice it generates.
struct TenSequenceModel {
    IntegerLattice lattice;
    QVec h;
    DiscriminantGroup disc;
    OverlatticeResult overlattice;
};

TenSequenceModel build_ten_sequence_model();

// Intersection table of the candidate curve classes R_j, R_{j1,j2,j3} and R
// orthogonal to all half-fibres of the ten-sequence model.
struct CurveTableReport {
    std::size_t classes_checked = 0;
    std::size_t identities_checked = 0;
    std::vector<std::string> failures;
    bool pass = true;
};

CurveTableReport candidate_curve_table(const TenSequenceModel& model);

// Replays the embedding chain: the span of the four half-fibres is U + A2,
// A2 + E6 glues to an even unimodular rank-8 lattice with 240 roots, and the
// induced primitive A2 has an E6 complement (rank 6, disc 3, 72 roots,
// q = 2/3).
struct ComplementChainReport {
    bool span_is_u_plus_a2 = false;
    std::size_t nontrivial_subgroups = 0;   // raw count
    std::size_t subgroup_orbits = 0;        // modulo the A2 diagram swap
    bool overlattices_unimodular_even = false;
    std::size_t overlattice_roots = 0;
    bool a2_primitive = false;
    bool a2e6_not_primitive = false;
    int complement_rank = 0;
    Int complement_disc;
    std::size_t complement_roots = 0;
    Rat complement_q;
    bool complement_in_u_ambient_matches = false;
    bool pass = false;
};

ComplementChainReport e6_complement_chain();

// Checkable over-exceptional lattice conditions: rank bound, primitivity in
// Num(S), primitivity of the doubled pullback, and the excluded-configuration
// scan (four disjoint roots, three orthogonal A2 pairs, an E6 subsystem).
struct OverExceptionalPredicates {
    bool rank_ok = false;
    bool primitive_in_num_s = false;
    bool pullback_primitive = false;
    bool forbidden_free = false;
    std::vector<std::string> forbidden_found;
};

OverExceptionalPredicates over_exceptional_predicates(const Embedding& eprime,
                                                      const Embedding& pullback);

// Excluded configurations alone (callable on any root-spanned embedding).
std::vector<std::string> forbidden_configuration_scan(const IntegerLattice& root_lattice);

// rank <= 10 and primitive.
bool k3_over_exceptional_check(const Embedding& e);

// Full analysis of the K3 surface with Picard lattice U + E8 + E8 and finite
// automorphism group, from its 19-curve dual graph: fibration classes, the
// 16-curve orthogonal span D8 + D8, saturation of index 2 with quotient Z/2,
// concentration at the eight bold curves, and 2-divisibility of their sum.
struct K3PipelineReport {
    std::size_t configuration_count = 0;
    std::size_t ii_star_count = 0;
    std::size_t i12_star_count = 0;
    std::vector<std::string> orthogonal_labels;
    std::vector<ADEType> span_components;
    Int saturation_index;
    std::vector<Int> quotient_factors;
    std::vector<std::string> concentration_labels;
    std::vector<ADEType> concentration_components;
    bool bold_sum_two_divisible = false;
    bool saturation_roots_in_span = false;
    std::size_t saturation_root_count = 0;
    bool span_passes_k3_check = true;  // must come out false: rank 16, index 2
    bool ambient_certified = false;    // even, unimodular, signature (1,17)
    ZMat class_coordinates;            // 19 x 18, rows in the standard basis
    bool pass = false;
};

K3PipelineReport finite_automorphism_k3_pipeline(bool swap_e8_blocks = false);

// Orthogonal vertex sets of the case-analysis figures equal their printed
// bold sets.
struct FigureOrthogonalityReport {
    struct Entry {
        std::string figure;
        std::vector<std::string> computed;
        std::vector<std::string> printed_bold;
        bool pass;
    };
    std::vector<Entry> entries;
    bool pass = true;
};

FigureOrthogonalityReport figure_orthogonality_check();

}  // namespace latkit
