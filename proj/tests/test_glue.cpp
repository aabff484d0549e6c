#include <doctest.h>

#include <set>

#include "catalog.hpp"
#include "latkit/glue.hpp"
#include "oracles.hpp"

using namespace latkit;

namespace {

IntegerLattice catalog_lattice(const std::string& name) {
    for (const auto& e : testcat::standard_catalog())
        if (e.name == name) return e.lattice;
    throw std::logic_error("missing catalog entry " + name);
}

}  // namespace

TEST_CASE("isotropic elements") {
    auto g14 = discriminant_group(testcat::power(ADEType('A', 1), 4));
    auto iso = isotropic_elements(g14);
    REQUIRE(iso.size() == 2);
    CHECK(iso[0] == g14.zero());
    CHECK(iso[1] == DiscriminantGroup::Elem(4, 1));

    auto g_a6 = discriminant_group(make_ade(ADEType('A', 6)));
    CHECK(isotropic_elements(g_a6).size() == 1);

    auto g_u = discriminant_group(make_hyperbolic());
    CHECK(isotropic_elements(g_u).size() == 1);

    // serial kernel agrees with the parallel one
    for (const char* name : {"A1^8", "A2^5", "A4^3"}) {
        auto g = discriminant_group(catalog_lattice(name));
        CHECK(isotropic_elements(g) == isotropic_elements_serial(g));
    }
}

TEST_CASE("isotropic subgroup enumeration") {
    auto g_ae = discriminant_group(catalog_lattice("A2+E6"));
    auto subs = isotropic_subgroups(g_ae);
    REQUIRE(subs.size() == 3);  // trivial + two order-3 glue subgroups
    CHECK(subs[0].elements.size() == 1);
    CHECK(subs[1].elements.size() == 3);
    CHECK(subs[2].elements.size() == 3);

    auto g18 = discriminant_group(catalog_lattice("A1^8"));
    auto subs18 = isotropic_subgroups(g18);
    bool has_all_ones = false;
    for (const auto& h : subs18)
        if (h.elements.size() == 2 &&
            h.elements[1] == DiscriminantGroup::Elem(8, 1))
            has_all_ones = true;
    CHECK(has_all_ones);

    auto g_e8 = discriminant_group(make_ade(ADEType('E', 8)));
    CHECK(isotropic_subgroups(g_e8).size() == 1);
}

TEST_CASE("overlattice construction") {
    // A2+E6 glues to an even unimodular rank-8 lattice with 240 roots
    auto g = discriminant_group(catalog_lattice("A2+E6"));
    auto subs = isotropic_subgroups(g);
    for (const auto& h : subs) {
        if (h.elements.size() == 1) continue;
        OverlatticeResult o = overlattice_from(g, h);
        CHECK(o.index == 3);
        CHECK(discriminant(o.lattice) == 1);
        CHECK(o.lattice.is_even());
        CHECK(enumerate_roots(o.lattice).count() == 240);
    }

    // A1^4 with the all-ones glue is D4
    auto g14 = discriminant_group(testcat::power(ADEType('A', 1), 4));
    auto subs14 = isotropic_subgroups(g14);
    REQUIRE(subs14.size() == 2);
    OverlatticeResult d4 = overlattice_from(g14, subs14[1]);
    CHECK(d4.index == 2);
    CHECK(discriminant(d4.lattice) == 4);
    RootSystem rs = enumerate_roots(d4.lattice);
    CHECK(rs.count() == 24);
    CHECK(rs.components == std::vector<ADEType>{ADEType('D', 4)});

    // trivial subgroup reproduces the lattice
    OverlatticeResult same = overlattice_from(g14, subs14[0]);
    CHECK(same.index == 1);
    CHECK(same.lattice.gram == testcat::power(ADEType('A', 1), 4).gram);

    // non-isotropic input is rejected
    IsotropicSubgroup bad;
    bad.generators.push_back({1, 0, 0, 0});
    bad.elements.push_back(g14.zero());
    bad.elements.push_back({1, 0, 0, 0});
    CHECK_THROWS_AS(overlattice_from(g14, bad), domain_error);
}

TEST_CASE("index formula holds over the catalog") {
    std::size_t instances = 0;
    for (const auto& e : testcat::standard_catalog()) {
        auto g = discriminant_group(e.lattice);
        if (g.order > 3000) continue;
        for (const auto& h : isotropic_subgroups(g)) {
            if (h.elements.size() == 1) continue;
            OverlatticeResult o = overlattice_from(g, h);
            CHECK(discriminant(e.lattice) ==
                  discriminant(o.lattice) * o.index * o.index);
            ++instances;
            if (instances > 60) return;  // plenty; acceptance does the full sweep
        }
    }
}

TEST_CASE("overlattice/subgroup round trip") {
    for (const char* name : {"A1^4", "A2+E6", "A1^8", "D4", "A5+A1"}) {
        IntegerLattice l = catalog_lattice(name);
        auto g = discriminant_group(l);
        auto subs = isotropic_subgroups(g);
        std::set<std::vector<std::string>> distinct;
        for (const auto& h : subs) {
            OverlatticeResult o = overlattice_from(g, h);
            IsotropicSubgroup back = subgroup_of_overlattice(g, o);
            CHECK(back.elements == h.elements);
            // overlattices are pairwise distinct as sublattices of L tensor Q
            std::vector<std::string> key;
            for (const Rat& x : o.change_of_basis.a) key.push_back(to_string(x));
            distinct.insert(key);
        }
        CHECK(distinct.size() == subs.size());
    }
}

TEST_CASE("saturation and primitivity") {
    // the glued A2+E6 inside its own overlattice has index 3
    auto g = discriminant_group(catalog_lattice("A2+E6"));
    auto subs = isotropic_subgroups(g);
    OverlatticeResult o = overlattice_from(g, subs[1]);
    QMat old_in_new = inverse(o.change_of_basis);
    ZMat rows(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) rows.at(i, j) = old_in_new.at(i, j).get_num();
    Embedding full = Embedding::make(o.lattice, rows);
    auto [sat, index] = saturation(full);
    CHECK(index == 3);
    CHECK_FALSE(is_primitive(full));
    // the saturation itself is primitive and saturation is idempotent
    auto [sat2, index2] = saturation(sat);
    CHECK(index2 == 1);
    CHECK(is_primitive(sat));
    CHECK(sat2.basis == sat.basis);
    // the induced A2 alone is primitive
    ZMat a2rows(2, 8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 8; ++j) a2rows.at(i, j) = rows.at(i, j);
    CHECK(is_primitive(Embedding::make(o.lattice, a2rows)));

    // a direct summand is primitive
    IntegerLattice ue8 = direct_sum({make_hyperbolic(), make_ade(ADEType('E', 8))});
    ZMat urows(2, 10);
    urows.at(0, 0) = 1;
    urows.at(1, 1) = 1;
    CHECK(is_primitive(Embedding::make(ue8, urows)));

    // the A1^4 frame of a D4 inside E8 has saturation index 2
    IntegerLattice e8 = make_ade(ADEType('E', 8));
    ZMat frame(4, 8);
    frame.at(0, 1) = 1;                    // e2
    frame.at(1, 3) = 1;                    // e4
    frame.at(2, 7) = 1;                    // e8
    frame.at(3, 1) = 1;                    // e2 + e4 + e8 + 2 e3
    frame.at(3, 3) = 1;
    frame.at(3, 7) = 1;
    frame.at(3, 2) = 2;
    Embedding d4frame = Embedding::make(e8, frame);
    CHECK(d4frame.induced_gram() == testcat::power(ADEType('A', 1), 4).gram);
    auto [satf, idxf] = saturation(d4frame);
    CHECK(idxf == 2);
}

TEST_CASE("minimal glue vectors") {
    IntegerLattice a3 = make_ade(ADEType('A', 3));
    // 2e with e = (1/4)(e1 + 2 e2 + 3 e3)
    QVec v{Rat(1, 2), Rat(1), Rat(3, 2)};
    QVec m = minimal_glue_vector(a3, v, 2);
    CHECK(m == QVec{Rat(1, 2), Rat(0), Rat(1, 2)});

    QVec integral{Rat(5), Rat(-3), Rat(2)};
    CHECK(minimal_glue_vector(a3, integral, 2) == QVec(3, Rat(0)));

    IntegerLattice a18 = testcat::power(ADEType('A', 1), 8);
    QVec half(8, Rat(1, 2));
    CHECK(minimal_glue_vector(a18, half, 2) == half);

    CHECK_THROWS_AS(minimal_glue_vector(a3, QVec{Rat(1, 3), Rat(0), Rat(0)}, 2),
                    domain_error);
}

TEST_CASE("concentration support") {
    IntegerLattice a3 = make_ade(ADEType('A', 3));
    QVec glue{Rat(1, 2), Rat(0), Rat(1, 2)};
    Embedding support = concentration_support(a3, glue);
    CHECK(support.rank() == 2);
    CHECK(support.induced_gram() == testcat::power(ADEType('A', 1), 2).gram);

    // order-p classes of A_{pr-1} vanish exactly at positions p, 2p, ...
    for (auto [p, r] : std::vector<std::pair<long, long>>{
             {2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {2, 5}, {5, 2}, {2, 6}, {3, 4}}) {
        long n = p * r - 1;
        IntegerLattice l = make_ade(ADEType('A', static_cast<int>(n)));
        auto g = discriminant_group(l);
        REQUIRE(g.invariant_factors == std::vector<Int>{p * r});
        for (long m = 1; m < p; ++m) {
            DiscriminantGroup::Elem cls{m * r};
            QVec lift = g.lift(cls);
            QVec minimal = minimal_glue_vector(l, lift, p);
            for (long pos = 1; pos <= n; ++pos) {
                bool zero = minimal[pos - 1] == 0;
                CHECK(zero == (pos % p == 0));
            }
            Embedding supp = concentration_support(l, minimal);
            IntegerLattice sl = IntegerLattice::make(supp.induced_gram());
            auto comps = enumerate_roots(sl).components;
            CHECK(comps == std::vector<ADEType>(r, ADEType('A', static_cast<int>(p - 1))));
        }
    }
}

TEST_CASE("root overlattice detection") {
    auto g14 = discriminant_group(testcat::power(ADEType('A', 1), 4));
    auto subs14 = isotropic_subgroups(g14);
    CHECK(overlattice_is_root_lattice(g14, subs14[0]));  // trivial
    CHECK(overlattice_is_root_lattice(g14, subs14[1]));  // D4

    auto g18 = discriminant_group(testcat::power(ADEType('A', 1), 8));
    for (const auto& h : isotropic_subgroups(g18)) {
        if (h.elements.size() != 2) continue;
        if (h.elements[1] == DiscriminantGroup::Elem(8, 1))
            CHECK_FALSE(overlattice_is_root_lattice(g18, h));
    }
}

TEST_CASE("threshold scan on small ranges") {
    ThresholdScanReport p2 = overlattice_threshold_scan(2, 5);
    CHECK(p2.matches_thresholds);
    CHECK_FALSE(p2.rows[2].admits_overlattice);
    CHECK(p2.rows[3].admits_overlattice);
    CHECK_FALSE(p2.rows[3].admits_nonroot_overlattice);

    ThresholdScanReport p5 = overlattice_threshold_scan(5, 2);
    CHECK(p5.matches_thresholds);
    CHECK(p5.rows[1].admits_overlattice);
}

TEST_CASE("no-overlattice quartet") {
    NoOverlatticeReport rep = no_overlattice_check();
    CHECK(rep.pass);
    REQUIRE(rep.entries.size() == 4);
    for (const auto& e : rep.entries) CHECK(e.nontrivial_isotropic_elements == 0);
}

TEST_CASE("rank-4 sweep finds only root overlattices") {
    RootOverlatticeSweepReport rep = root_overlattice_sweep(4);
    CHECK(rep.pass);
    CHECK(rep.lattices_checked == 12);  // multisets of rank <= 4
    CHECK(rep.counterexamples.empty());
}

TEST_CASE("ADE multiset generation") {
    auto sets = ade_multisets(3);
    CHECK(sets.size() == 6);  // A1, A1^2, A1^3, A2, A2+A1, A3
}

TEST_CASE("enumeration cap") {
    IntegerLattice big = testcat::power(ADEType('A', 4), 5);  // |A| = 3125
    auto g = discriminant_group(big);
    CHECK_THROWS_AS(isotropic_elements(g, 3000), resource_error);
    try {
        isotropic_elements(g, 3000);
    } catch (const resource_error& e) {
        CHECK(e.required == 3125);
    }
}
