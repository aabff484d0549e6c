#pragma once

#include "latkit/lattice.hpp"

namespace latkit {

inline constexpr int kMaxGraphVertices = 64;

// Weighted dual graph of (-2)-curves. Edge weight w means intersection
// number w between the two curves; weight 2 encodes the double edges of the
// two-component fibres.
struct CurveGraph {
    struct Vertex {
        std::string label;
        Int self = -2;
        bool bold = false;
    };
    std::vector<Vertex> vertices;
    ZMat weights;  // symmetric, zero diagonal

    int size() const { return static_cast<int>(vertices.size()); }
    int add_vertex(const std::string& label, Int self = -2, bool bold = false);
    void add_edge(const std::string& u, const std::string& v, long w = 1);
    void add_edge(int u, int v, long w = 1);
    int index_of(const std::string& label) const;
    long weight(int u, int v) const { return weights.at(u, v).get_si(); }
};

// Gram matrix from intersection numbers; degenerate output permitted and
// flagged (graphs containing full fibres span degenerate lattices).
IntegerLattice lattice_from_graph(const CurveGraph& g);

enum class KodairaFamily { In, InStar, IIStar, IIIStar, IVStar };

// Effective class F supported on an extended ADE diagram with the standard
// Kodaira multiplicities; F.F = 0 and F.v = 0 for every support vertex.
struct EllipticConfiguration {
    KodairaFamily family;
    int n = 0;  // I_n cycle length / I_n* chain index; 0 for the E-types
    std::vector<int> support;         // vertex indices, sorted
    std::vector<int> multiplicities;  // parallel to support

    std::string kodaira_name() const;
    ZVec class_vector(int graph_size) const;
    auto operator<=>(const EllipticConfiguration&) const = default;
};

// All vertex subsets of g carrying an extended ADE structure with valid
// multiplicities, found by template-driven backtracking and re-verified
// against the Gram matrix. Canonically sorted. Only fibres with at least
// two reduced components are representable as multi-vertex configurations;
// irreducible fibres and the additive types with one or two components
// other than the weight-2 pair have no graph template here.
std::vector<EllipticConfiguration> find_elliptic_configurations(const CurveGraph& g);

struct OverExceptionalVertexSet {
    std::vector<int> vertices;      // sorted
    IntegerLattice spanned;         // induced Gram on the subset (may be degenerate)
    std::vector<std::string> labels;
};

// Vertices orthogonal to every provided configuration class.
OverExceptionalVertexSet orthogonal_vertex_set(
    const CurveGraph& g, const std::vector<EllipticConfiguration>& configs);

// Component bound for s pairwise disjoint fibres of one fibration: the total
// number of support vertices may not exceed 8 + s.
bool component_bound_check(const CurveGraph& g,
                           const std::vector<EllipticConfiguration>& fibres);

// Built-in encodings of the dual graphs used by the analysis, bold flags as
// printed. Names: e8_a1_a1, e7_a1_a1, d5_d5_a1, d8_a1_a1_iii_star,
// d8_a1_a1_i_star, k3_u_e8_e8.
std::vector<std::pair<std::string, CurveGraph>> figure_catalog();
CurveGraph figure(const std::string& name);

}  // namespace latkit
