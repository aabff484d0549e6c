#include <doctest.h>

#include <set>

#include "latkit/curvegraph.hpp"
#include "latkit/roots.hpp"

using namespace latkit;

namespace {

CurveGraph cycle_graph(int n) {
    CurveGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST_CASE("lattice from graph") {
    CurveGraph path;
    path.add_vertex("a");
    path.add_vertex("b");
    path.add_edge("a", "b");
    CHECK(lattice_from_graph(path).gram == make_ade(ADEType('A', 2)).gram);

    CurveGraph pair;
    pair.add_vertex("a");
    pair.add_vertex("b");
    pair.add_edge("a", "b", 2);
    IntegerLattice l = lattice_from_graph(pair);
    CHECK(l.gram == ZMat{{-2, 2}, {2, -2}});
    CHECK(l.degenerate);

    CHECK_THROWS_AS(pair.add_edge("a", "a"), domain_error);
    CHECK_THROWS_AS(pair.add_edge("a", "zzz"), domain_error);
}

TEST_CASE("a bare cycle carries one configuration") {
    CurveGraph g = cycle_graph(3);
    auto configs = find_elliptic_configurations(g);
    REQUIRE(configs.size() == 1);
    CHECK(configs[0].family == KodairaFamily::In);
    CHECK(configs[0].n == 3);
    CHECK(configs[0].kodaira_name() == "I3");
    CHECK(configs[0].multiplicities == std::vector<int>{1, 1, 1});
}

TEST_CASE("configuration classes are isotropic and support-orthogonal") {
    for (const auto& [name, g] : figure_catalog()) {
        ZMat gram = lattice_from_graph(g).gram;
        for (const auto& c : find_elliptic_configurations(g)) {
            ZVec f = c.class_vector(g.size());
            ZVec gf = mul(gram, f);
            Int ff(0);
            for (int i = 0; i < g.size(); ++i) ff += f[i] * gf[i];
            CHECK(ff == 0);
            for (int v : c.support) CHECK(gf[v] == 0);
        }
    }
}

TEST_CASE("multiplicity patterns follow the Kodaira tables") {
    for (const auto& [name, g] : figure_catalog()) {
        for (const auto& c : find_elliptic_configurations(g)) {
            int maxm = *std::max_element(c.multiplicities.begin(),
                                         c.multiplicities.end());
            switch (c.family) {
                case KodairaFamily::In: {
                    CHECK(maxm == 1);
                    CHECK(static_cast<int>(c.support.size()) == c.n);
                    break;
                }
                case KodairaFamily::InStar: {
                    CHECK(maxm == 2);
                    CHECK(static_cast<int>(c.support.size()) == c.n + 5);
                    int ones = 0;
                    for (int m : c.multiplicities)
                        if (m == 1) ++ones;
                    CHECK(ones == 4);
                    break;
                }
                case KodairaFamily::IVStar: CHECK(maxm == 3); break;
                case KodairaFamily::IIIStar: CHECK(maxm == 4); break;
                case KodairaFamily::IIStar: CHECK(maxm == 6); break;
            }
        }
    }
}

TEST_CASE("the extended case graph contains the expected configurations") {
    CurveGraph g = figure("e8_a1_a1");
    auto configs = find_elliptic_configurations(g);
    std::set<std::string> kinds;
    bool has_iii_star_on_8 = false;
    for (const auto& c : configs) {
        kinds.insert(c.kodaira_name());
        if (c.family == KodairaFamily::IIIStar && c.support.size() == 8)
            has_iii_star_on_8 = true;
    }
    CHECK(has_iii_star_on_8);
    CHECK(kinds.count("I2") == 1);
    CHECK(kinds.count("I8") == 1);
    CHECK(kinds.count("II*") == 1);

    auto orth = orthogonal_vertex_set(g, configs);
    CHECK(orth.vertices.empty());
}

TEST_CASE("orthogonal set shrinks as configurations are added") {
    CurveGraph g = figure("d5_d5_a1");
    auto configs = find_elliptic_configurations(g);
    REQUIRE(configs.size() >= 2);
    std::vector<EllipticConfiguration> one{configs[0]};
    auto small = orthogonal_vertex_set(g, configs);
    auto large = orthogonal_vertex_set(g, one);
    for (int v : small.vertices)
        CHECK(std::find(large.vertices.begin(), large.vertices.end(), v) !=
              large.vertices.end());
    CHECK_THROWS_AS(orthogonal_vertex_set(g, {}), domain_error);
}

TEST_CASE("component bound") {
    CurveGraph g = figure("e8_a1_a1");
    auto configs = find_elliptic_configurations(g);
    EllipticConfiguration i8, i2;
    for (const auto& c : configs) {
        if (c.kodaira_name() == "I8") i8 = c;
        if (c.kodaira_name() == "I2") i2 = c;
    }
    CHECK(component_bound_check(g, {i8, i2}));     // 10 <= 8 + 2
    CHECK(component_bound_check(g, {}));           // vacuous

    CurveGraph ten = cycle_graph(10);
    auto tconfigs = find_elliptic_configurations(ten);
    REQUIRE(tconfigs.size() == 1);
    CHECK_FALSE(component_bound_check(ten, tconfigs));  // 10 > 8 + 1

    CHECK_THROWS_AS(component_bound_check(g, {i8, i8}), domain_error);
}

TEST_CASE("graph size cap") {
    CurveGraph big;
    for (int i = 0; i < 65; ++i) big.add_vertex("v" + std::to_string(i));
    for (int i = 0; i + 1 < 65; ++i) big.add_edge(i, i + 1);
    CHECK_THROWS_AS(find_elliptic_configurations(big), resource_error);
}

TEST_CASE("figure catalog shape") {
    auto catalog = figure_catalog();
    CHECK(catalog.size() == 6);
    CurveGraph d5 = figure("d5_d5_a1");
    CHECK(d5.size() == 11);
    int bold = 0;
    for (const auto& v : d5.vertices)
        if (v.bold) ++bold;
    CHECK(bold == 2);
    CurveGraph k3 = figure("k3_u_e8_e8");
    CHECK(k3.size() == 19);
    bold = 0;
    for (const auto& v : k3.vertices)
        if (v.bold) ++bold;
    CHECK(bold == 8);
    CHECK_THROWS_AS(figure("nope"), domain_error);
}

TEST_CASE("the 19-curve graph has exactly the three fibration classes") {
    CurveGraph g = figure("k3_u_e8_e8");
    auto configs = find_elliptic_configurations(g);
    REQUIRE(configs.size() == 3);
    int ii = 0, i12 = 0;
    for (const auto& c : configs) {
        if (c.family == KodairaFamily::IIStar) ++ii;
        if (c.family == KodairaFamily::InStar && c.n == 12) ++i12;
    }
    CHECK(ii == 2);
    CHECK(i12 == 1);

    auto orth = orthogonal_vertex_set(g, configs);
    CHECK(orth.vertices.size() == 16);
    CHECK_FALSE(orth.spanned.degenerate);
    RootSystem rs = enumerate_roots(orth.spanned);
    CHECK(rs.components == std::vector<ADEType>{ADEType('D', 8), ADEType('D', 8)});
}
