#include "latkit/curvegraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latkit {

int CurveGraph::add_vertex(const std::string& label, Int self, bool bold) {
    const std::size_t m = vertices.size();
    vertices.push_back(Vertex{label, std::move(self), bold});
    ZMat w(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) w.at(i, j) = weights.at(i, j);
    weights = std::move(w);
    return static_cast<int>(m);
}

int CurveGraph::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].label == label) return static_cast<int>(i);
    throw domain_error("unknown vertex label " + label);
}

void CurveGraph::add_edge(int u, int v, long w) {
    if (u == v) throw domain_error("self-loops are not allowed");
    if (w < 1) throw domain_error("edge weight must be positive");
    weights.at(u, v) = w;
    weights.at(v, u) = w;
}

void CurveGraph::add_edge(const std::string& u, const std::string& v, long w) {
    add_edge(index_of(u), index_of(v), w);
}

IntegerLattice lattice_from_graph(const CurveGraph& g) {
    const int n = g.size();
    ZMat gram(n, n);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        gram.at(i, i) = g.vertices[i].self;
        labels.push_back(g.vertices[i].label);
        for (int j = 0; j < n; ++j)
            if (i != j) gram.at(i, j) = g.weights.at(i, j);
    }
    return IntegerLattice::make_span(std::move(gram), std::move(labels));
}

std::string EllipticConfiguration::kodaira_name() const {
    switch (family) {
        case KodairaFamily::In: return "I" + std::to_string(n);
        case KodairaFamily::InStar: return "I" + std::to_string(n) + "*";
        case KodairaFamily::IIStar: return "II*";
        case KodairaFamily::IIIStar: return "III*";
        case KodairaFamily::IVStar: return "IV*";
    }
    return "?";
}

ZVec EllipticConfiguration::class_vector(int graph_size) const {
    ZVec f(graph_size, Int(0));
    for (std::size_t k = 0; k < support.size(); ++k) f[support[k]] = multiplicities[k];
    return f;
}

namespace {

struct Search {
    const CurveGraph& g;
    int n;
    std::vector<std::vector<int>> adj1;  // weight-1 neighbours, ascending
    ZMat gram;
    std::set<EllipticConfiguration> found;

    explicit Search(const CurveGraph& graph)
        : g(graph), n(graph.size()), adj1(graph.size()) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && g.weight(u, v) == 1) adj1[u].push_back(v);
        gram = lattice_from_graph(g).gram;
    }

    bool induced_matches(const std::vector<int>& support,
                         const std::set<std::pair<int, int>>& edges,
                         std::pair<int, int> double_edge = {-1, -1}) const {
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = a + 1; b < support.size(); ++b) {
                int u = std::min(support[a], support[b]);
                int v = std::max(support[a], support[b]);
                long want = edges.count({u, v}) ? 1 : 0;
                if (double_edge == std::make_pair(u, v)) want = 2;
                if (g.weight(u, v) != want) return false;
            }
        return true;
    }

    void emit(KodairaFamily family, int index, const std::vector<int>& support,
              const std::vector<int>& mults) {
        std::vector<std::size_t> order(support.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
        EllipticConfiguration c;
        c.family = family;
        c.n = index;
        for (std::size_t i : order) {
            c.support.push_back(support[i]);
            c.multiplicities.push_back(mults[i]);
        }
        // numeric guard: F.F = 0 and F orthogonal to its support
        ZVec f = c.class_vector(n);
        ZVec gf = mul(gram, f);
        Int ff(0);
        for (int i = 0; i < n; ++i) ff += f[i] * gf[i];
        if (ff != 0) throw std::logic_error("configuration class has non-zero square");
        for (int v : c.support)
            if (gf[v] != 0)
                throw std::logic_error("configuration class meets its own support");
        found.insert(std::move(c));
    }

    // ---- I_n ----------------------------------------------------------

    void search_cycles() {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.weight(u, v) == 2 && induced_matches({u, v}, {}, {u, v}))
                    emit(KodairaFamily::In, 2, {u, v}, {1, 1});

        std::vector<int> path;
        std::vector<bool> used(n, false);
        auto dfs = [&](auto&& self, int start) -> void {
            int cur = path.back();
            for (int next : adj1[cur]) {
                if (next == start && path.size() >= 3 && path[1] < path.back()) {
                    std::set<std::pair<int, int>> edges;
                    for (std::size_t i = 0; i < path.size(); ++i) {
                        int a = path[i], b = path[(i + 1) % path.size()];
                        edges.insert({std::min(a, b), std::max(a, b)});
                    }
                    if (induced_matches(path, edges))
                        emit(KodairaFamily::In, static_cast<int>(path.size()), path,
                             std::vector<int>(path.size(), 1));
                    continue;
                }
                if (next <= start || used[next]) continue;
                bool chord = false;  // contact with an interior path vertex
                for (std::size_t i = 1; i + 1 < path.size(); ++i)
                    if (g.weight(path[i], next) != 0) {
                        chord = true;
                        break;
                    }
                if (chord) continue;
                used[next] = true;
                path.push_back(next);
                self(self, start);
                path.pop_back();
                used[next] = false;
            }
        };
        for (int s = 0; s < n; ++s) {
            path.assign(1, s);
            std::fill(used.begin(), used.end(), false);
            used[s] = true;
            dfs(dfs, s);
        }
    }

    // ---- I_n* ---------------------------------------------------------

    void emit_in_star(const std::vector<int>& chain, const std::vector<int>& leaves) {
        std::vector<int> support = chain;
        support.insert(support.end(), leaves.begin(), leaves.end());
        std::set<int> distinct(support.begin(), support.end());
        if (distinct.size() != support.size()) return;
        std::set<std::pair<int, int>> edges;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            edges.insert({std::min(chain[i], chain[i + 1]),
                          std::max(chain[i], chain[i + 1])});
        for (int k = 0; k < 2; ++k)
            edges.insert({std::min(chain.front(), leaves[k]),
                          std::max(chain.front(), leaves[k])});
        for (int k = 2; k < 4; ++k)
            edges.insert({std::min(chain.back(), leaves[k]),
                          std::max(chain.back(), leaves[k])});
        if (!induced_matches(support, edges)) return;
        std::vector<int> mults(chain.size(), 2);
        mults.insert(mults.end(), 4, 1);
        emit(KodairaFamily::InStar, static_cast<int>(chain.size()) - 1, support, mults);
    }

    void search_in_star() {
        std::vector<int> chain;
        std::vector<bool> used(n, false);

        auto leaves_at = [&](int c) {
            std::vector<int> out;
            for (int v : adj1[c])
                if (!used[v]) out.push_back(v);
            return out;
        };

        auto try_chain = [&]() {
            if (chain.front() > chain.back()) return;  // canonical orientation
            if (chain.size() == 1) {
                std::vector<int> cand = leaves_at(chain[0]);
                const std::size_t m = cand.size();
                for (std::size_t a = 0; a < m; ++a)
                    for (std::size_t b = a + 1; b < m; ++b)
                        for (std::size_t c = b + 1; c < m; ++c)
                            for (std::size_t d = c + 1; d < m; ++d)
                                emit_in_star(chain,
                                             {cand[a], cand[b], cand[c], cand[d]});
            } else {
                std::vector<int> left = leaves_at(chain.front());
                std::vector<int> right = leaves_at(chain.back());
                for (std::size_t a = 0; a < left.size(); ++a)
                    for (std::size_t b = a + 1; b < left.size(); ++b)
                        for (std::size_t c = 0; c < right.size(); ++c)
                            for (std::size_t d = c + 1; d < right.size(); ++d)
                                emit_in_star(chain, {left[a], left[b], right[c],
                                                     right[d]});
            }
        };

        auto extend = [&](auto&& self) -> void {
            try_chain();
            int cur = chain.back();
            for (int next : adj1[cur]) {
                if (used[next]) continue;
                used[next] = true;
                chain.push_back(next);
                self(self);
                chain.pop_back();
                used[next] = false;
            }
        };

        for (int s = 0; s < n; ++s) {
            chain.assign(1, s);
            std::fill(used.begin(), used.end(), false);
            used[s] = true;
            extend(extend);
        }
    }

    // ---- affine E templates --------------------------------------------

    // all weight-1 simple paths of `len` vertices starting next to c
    std::vector<std::vector<int>> arms_of_length(int c, int len) const {
        std::vector<std::vector<int>> out;
        std::vector<int> arm;
        auto rec = [&](auto&& self) -> void {
            if (static_cast<int>(arm.size()) == len) {
                out.push_back(arm);
                return;
            }
            int cur = arm.empty() ? c : arm.back();
            for (int next : adj1[cur]) {
                if (next == c) continue;
                if (std::find(arm.begin(), arm.end(), next) != arm.end()) continue;
                arm.push_back(next);
                self(self);
                arm.pop_back();
            }
        };
        rec(rec);
        return out;
    }

    static bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            if (std::find(b.begin(), b.end(), x) != b.end()) return false;
        return true;
    }

    void emit_e_type(KodairaFamily family, int c,
                     const std::vector<std::vector<int>>& arms,
                     const std::vector<std::vector<int>>& arm_mults, int c_mult) {
        std::vector<int> support{c};
        std::vector<int> mults{c_mult};
        std::set<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < arms.size(); ++k) {
            int prev = c;
            for (std::size_t i = 0; i < arms[k].size(); ++i) {
                support.push_back(arms[k][i]);
                mults.push_back(arm_mults[k][i]);
                edges.insert({std::min(prev, arms[k][i]), std::max(prev, arms[k][i])});
                prev = arms[k][i];
            }
        }
        std::set<int> distinct(support.begin(), support.end());
        if (distinct.size() != support.size()) return;
        if (!induced_matches(support, edges)) return;
        emit(family, 0, support, mults);
    }

    void search_e_types() {
        for (int c = 0; c < n; ++c) {
            auto arms1 = arms_of_length(c, 1);
            auto arms2 = arms_of_length(c, 2);
            auto arms3 = arms_of_length(c, 3);
            auto arms5 = arms_of_length(c, 5);

            // IV*: three arms of length 2 (unordered)
            for (std::size_t i = 0; i < arms2.size(); ++i)
                for (std::size_t j = i + 1; j < arms2.size(); ++j)
                    for (std::size_t k = j + 1; k < arms2.size(); ++k) {
                        if (!disjoint(arms2[i], arms2[j]) ||
                            !disjoint(arms2[i], arms2[k]) ||
                            !disjoint(arms2[j], arms2[k]))
                            continue;
                        emit_e_type(KodairaFamily::IVStar, c,
                                    {arms2[i], arms2[j], arms2[k]},
                                    {{2, 1}, {2, 1}, {2, 1}}, 3);
                    }

            // III*: two arms of length 3 (unordered) and one leaf
            for (std::size_t i = 0; i < arms3.size(); ++i)
                for (std::size_t j = i + 1; j < arms3.size(); ++j) {
                    if (!disjoint(arms3[i], arms3[j])) continue;
                    for (const auto& t : arms1) {
                        if (!disjoint(t, arms3[i]) || !disjoint(t, arms3[j])) continue;
                        emit_e_type(KodairaFamily::IIIStar, c,
                                    {arms3[i], arms3[j], t},
                                    {{3, 2, 1}, {3, 2, 1}, {2}}, 4);
                    }
                }

            // II*: arms of lengths 5, 2 and 1
            for (const auto& a : arms5)
                for (const auto& b : arms2) {
                    if (!disjoint(a, b)) continue;
                    for (const auto& t : arms1) {
                        if (!disjoint(t, a) || !disjoint(t, b)) continue;
                        emit_e_type(KodairaFamily::IIStar, c, {a, b, t},
                                    {{5, 4, 3, 2, 1}, {4, 2}, {3}}, 6);
                    }
                }
        }
    }
};

}  // namespace

std::vector<EllipticConfiguration> find_elliptic_configurations(const CurveGraph& g) {
    if (g.size() > kMaxGraphVertices)
        throw resource_error("graph larger than the vertex cap", Int(g.size()));
    Search s(g);
    s.search_cycles();
    s.search_in_star();
    s.search_e_types();
    return {s.found.begin(), s.found.end()};
}

OverExceptionalVertexSet orthogonal_vertex_set(
    const CurveGraph& g, const std::vector<EllipticConfiguration>& configs) {
    if (configs.empty()) throw domain_error("no configurations provided");
    const int n = g.size();
    ZMat gram = lattice_from_graph(g).gram;
    std::vector<bool> orth(n, true);
    for (const EllipticConfiguration& c : configs) {
        ZVec gf = mul(gram, c.class_vector(n));
        for (int v = 0; v < n; ++v)
            if (gf[v] != 0) orth[v] = false;
    }
    OverExceptionalVertexSet out;
    for (int v = 0; v < n; ++v)
        if (orth[v]) out.vertices.push_back(v);
    const int k = static_cast<int>(out.vertices.size());
    ZMat sub(k, k);
    for (int i = 0; i < k; ++i) {
        out.labels.push_back(g.vertices[out.vertices[i]].label);
        for (int j = 0; j < k; ++j) sub.at(i, j) = gram.at(out.vertices[i], out.vertices[j]);
    }
    out.spanned = IntegerLattice::make_span(std::move(sub), out.labels);
    return out;
}

bool component_bound_check(const CurveGraph& g,
                           const std::vector<EllipticConfiguration>& fibres) {
    std::set<int> all;
    std::size_t total = 0;
    for (const EllipticConfiguration& f : fibres) {
        for (int v : f.support) all.insert(v);
        total += f.support.size();
    }
    if (all.size() != total) throw domain_error("fibre supports overlap");
    (void)g;
    return total <= 8 + fibres.size();
}

namespace {

CurveGraph build_e8_a1_a1() {
    CurveGraph g;
    for (int i = 0; i <= 10; ++i) g.add_vertex("R" + std::to_string(i));
    for (int i = 0; i < 8; ++i) g.add_edge(i, i + 1);
    g.add_edge("R3", "R10");
    g.add_edge("R7", "R9");
    g.add_edge("R0", "R7");
    g.add_edge("R8", "R9", 2);
    return g;
}

CurveGraph build_e7_a1_a1() {
    CurveGraph g;
    for (int i = 0; i <= 9; ++i) g.add_vertex("R" + std::to_string(i));
    for (int i = 0; i < 6; ++i) g.add_edge(i, i + 1);
    g.add_edge("R3", "R8");
    g.add_edge("R5", "R7");
    g.add_edge("R5", "R9");
    g.add_edge("R1", "R9");
    g.add_edge("R6", "R7", 2);
    return g;
}

CurveGraph build_d5_d5_a1() {
    CurveGraph g;
    g.add_vertex("R1", -2, true);
    g.add_vertex("R2", -2, true);
    for (int i = 3; i <= 11; ++i) g.add_vertex("R" + std::to_string(i));
    g.add_edge("R1", "R3");
    g.add_edge("R2", "R3");
    g.add_edge("R3", "R4");
    g.add_edge("R4", "R5");
    g.add_edge("R5", "R7");
    g.add_edge("R4", "R6");
    g.add_edge("R6", "R7");
    g.add_edge("R7", "R8");
    g.add_edge("R8", "R9");
    g.add_edge("R9", "R11");
    g.add_edge("R8", "R10");
    g.add_edge("R10", "R11");
    g.add_edge("R7", "R11");
    return g;
}

CurveGraph build_d8_a1_a1_iii_star() {
    CurveGraph g;
    for (int i = 1; i <= 11; ++i) g.add_vertex("R" + std::to_string(i));
    g.add_edge("R1", "R2");
    g.add_edge("R2", "R3");
    g.add_edge("R2", "R4");
    g.add_edge("R4", "R5");
    g.add_edge("R5", "R6");
    g.add_edge("R6", "R7");
    g.add_edge("R7", "R8");
    g.add_edge("R7", "R9");
    g.add_edge("R7", "R10");
    g.add_edge("R3", "R11");
    g.add_edge("R11", "R8");
    g.add_edge("R9", "R10", 2);
    return g;
}

CurveGraph build_d8_a1_a1_i_star() {
    // chain between the branch vertex and the far end instantiated at one
    // intermediate vertex (the D8 case of the family)
    CurveGraph g;
    g.add_vertex("R1", -2, true);
    g.add_vertex("R2", -2, true);
    g.add_vertex("R3", -2, true);
    g.add_vertex("C1");
    g.add_vertex("R0");
    for (int i = 4; i <= 9; ++i) g.add_vertex("R" + std::to_string(i));
    g.add_edge("R1", "R2");
    g.add_edge("R2", "R3");
    g.add_edge("R2", "C1");
    g.add_edge("C1", "R0");
    g.add_edge("R0", "R4");
    g.add_edge("R4", "R5");
    g.add_edge("R5", "R6");
    g.add_edge("R5", "R7");
    g.add_edge("R5", "R8");
    g.add_edge("R0", "R9");
    g.add_edge("R9", "R5");
    g.add_edge("R7", "R8", 2);
    return g;
}

CurveGraph build_k3_u_e8_e8() {
    CurveGraph g;
    g.add_vertex("R1");
    g.add_vertex("R2");
    g.add_vertex("R3");
    g.add_vertex("R4", -2, true);
    g.add_vertex("R5");
    g.add_vertex("R6", -2, true);
    g.add_vertex("R7");
    g.add_vertex("R8", -2, true);
    g.add_vertex("R9", -2, true);
    g.add_vertex("S0");
    g.add_vertex("R11", -2, true);
    g.add_vertex("R12");
    g.add_vertex("R13", -2, true);
    g.add_vertex("R14");
    g.add_vertex("R15", -2, true);
    g.add_vertex("R16");
    g.add_vertex("R17");
    g.add_vertex("R18");
    g.add_vertex("R19", -2, true);
    const char* path[] = {"R1", "R2",  "R3",  "R4",  "R5",  "R6",  "R7",  "R8", "S0",
                          "R11", "R12", "R13", "R14", "R15", "R16", "R17", "R18"};
    for (int i = 0; i < 16; ++i) g.add_edge(path[i], path[i + 1]);
    g.add_edge("R3", "R9");
    g.add_edge("R16", "R19");
    return g;
}

}  // namespace

std::vector<std::pair<std::string, CurveGraph>> figure_catalog() {
    std::vector<std::pair<std::string, CurveGraph>> out;
    out.emplace_back("e8_a1_a1", build_e8_a1_a1());
    out.emplace_back("e7_a1_a1", build_e7_a1_a1());
    out.emplace_back("d5_d5_a1", build_d5_d5_a1());
    out.emplace_back("d8_a1_a1_iii_star", build_d8_a1_a1_iii_star());
    out.emplace_back("d8_a1_a1_i_star", build_d8_a1_a1_i_star());
    out.emplace_back("k3_u_e8_e8", build_k3_u_e8_e8());
    return out;
}

CurveGraph figure(const std::string& name) {
    for (auto& [n, g] : figure_catalog())
        if (n == name) return g;
    throw domain_error("unknown figure " + name);
}

}  // namespace latkit
