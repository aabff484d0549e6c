#include <doctest.h>

#include <set>

#include "catalog.hpp"
#include "latkit/glue.hpp"
#include "oracles.hpp"

using namespace latkit;

TEST_CASE("root counts match the box-search oracle") {
    for (int n = 1; n <= 4; ++n) {
        IntegerLattice l = make_ade(ADEType('A', n));
        CHECK(root_vectors(l).size() == oracles::root_count_box(l, 2));
    }
    IntegerLattice d4 = make_ade(ADEType('D', 4));
    CHECK(root_vectors(d4).size() == oracles::root_count_box(d4, 2));
}

TEST_CASE("root counts match the closed forms up to rank 12") {
    for (const auto& e : testcat::standard_catalog()) {
        if (e.lattice.rank() > 12) continue;
        // closed forms only for single ADE blocks
        if (e.name.find('+') != std::string::npos || e.name.find('^') != std::string::npos)
            continue;
        ADEType t(e.name[0], std::stoi(e.name.substr(1)));
        CHECK(root_vectors(e.lattice).size() == oracles::closed_form_root_count(t));
    }
    // additivity over direct sums
    IntegerLattice d8d8 = testcat::power(ADEType('D', 8), 2);
    CHECK(root_vectors(d8d8).size() == 224);
    IntegerLattice mix = direct_sum({make_ade(ADEType('A', 3)), make_ade(ADEType('E', 6))});
    CHECK(root_vectors(mix).size() == 12 + 72);
}

TEST_CASE("parallel and serial enumeration agree") {
    for (const char* name : {"E8", "D8+D8", "A5+A1", "A2^4"}) {
        for (const auto& e : testcat::standard_catalog()) {
            if (e.name != name) continue;
            CHECK(root_vectors(e.lattice) == root_vectors_serial(e.lattice));
        }
    }
}

TEST_CASE("root lists are closed under negation with norm -2") {
    IntegerLattice l = direct_sum({make_ade(ADEType('D', 5)), make_ade(ADEType('A', 2))});
    auto roots = root_vectors(l);
    std::set<ZVec> set(roots.begin(), roots.end());
    for (const ZVec& r : roots) {
        CHECK(inner_product(l, to_qvec(r), to_qvec(r)) == -2);
        ZVec neg(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
        CHECK(set.count(neg) == 1);
    }
}

TEST_CASE("ADE classification round trip") {
    for (int n = 1; n <= 12; ++n) {
        RootSystem rs = enumerate_roots(make_ade(ADEType('A', n)));
        CHECK(rs.components == std::vector<ADEType>{ADEType('A', n)});
    }
    for (int n = 4; n <= 12; ++n) {
        RootSystem rs = enumerate_roots(make_ade(ADEType('D', n)));
        CHECK(rs.components == std::vector<ADEType>{ADEType('D', n)});
    }
    for (int n = 6; n <= 8; ++n) {
        RootSystem rs = enumerate_roots(make_ade(ADEType('E', n)));
        CHECK(rs.components == std::vector<ADEType>{ADEType('E', n)});
    }
    RootSystem mixed = enumerate_roots(
        direct_sum({make_ade(ADEType('A', 1)), make_ade(ADEType('D', 6)),
                    make_ade(ADEType('A', 1))}));
    CHECK(mixed.components ==
          std::vector<ADEType>{ADEType('A', 1), ADEType('A', 1), ADEType('D', 6)});
}

TEST_CASE("simple roots form a basis with products in {0,1}") {
    for (const char* name : {"E7", "D8", "A2^3", "A1^4+D4"}) {
        for (const auto& e : testcat::standard_catalog()) {
            if (e.name != name) continue;
            RootSystem rs = enumerate_roots(e.lattice);
            CHECK(rs.simple_roots.rows == static_cast<std::size_t>(e.lattice.rank()));
            CHECK(rank(rs.simple_roots) == rs.simple_roots.rows);
            for (std::size_t i = 0; i < rs.simple_roots.rows; ++i)
                for (std::size_t j = i + 1; j < rs.simple_roots.rows; ++j) {
                    Rat p = inner_product(e.lattice, to_qvec(rs.simple_roots.row(i)),
                                          to_qvec(rs.simple_roots.row(j)));
                    CHECK((p == 0 || p == 1));
                }
        }
    }
}

TEST_CASE("simple root Gram matches the canonical ADE Gram") {
    for (const char* fam : {"A6", "D7", "E8"}) {
        ADEType t(fam[0], fam[1] - '0');
        RootSystem rs = enumerate_roots(make_ade(t));
        REQUIRE(rs.component_simple_roots.size() == 1);
        const ZMat& rows = rs.component_simple_roots[0];
        ZMat gram(rows.rows, rows.rows);
        for (std::size_t i = 0; i < rows.rows; ++i)
            for (std::size_t j = 0; j < rows.rows; ++j)
                gram.at(i, j) = inner_product(make_ade(t), to_qvec(rows.row(i)),
                                              to_qvec(rows.row(j)))
                                    .get_num();
        CHECK(gram == make_ade(t).gram);
    }
}

TEST_CASE("root span and root lattice detection") {
    CHECK(is_root_lattice(make_ade(ADEType('E', 8))));
    CHECK(is_root_lattice(testcat::power(ADEType('A', 2), 3)));

    IntegerLattice no_roots = IntegerLattice::make(ZMat{{-4}});
    CHECK(root_vectors(no_roots).empty());
    CHECK(root_span(no_roots).rank() == 0);
    CHECK_FALSE(is_root_lattice(no_roots));

    // index-2 overlattice of A1^8: roots stay in A1^8
    IntegerLattice a18 = testcat::power(ADEType('A', 1), 8);
    DiscriminantGroup g = discriminant_group(a18);
    IsotropicSubgroup all_ones;
    all_ones.generators.push_back(DiscriminantGroup::Elem(8, 1));
    all_ones.elements.push_back(g.zero());
    all_ones.elements.push_back(DiscriminantGroup::Elem(8, 1));
    OverlatticeResult o = overlattice_from(g, all_ones);
    CHECK(root_vectors(o.lattice).size() == 16);
    Embedding span = root_span(o.lattice);
    CHECK(span.rank() == 8);
    CHECK_FALSE(is_root_lattice(o.lattice));
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(root_vectors(make_hyperbolic()), domain_error);
    ZMat big(27, 27);
    for (int i = 0; i < 27; ++i) big.at(i, i) = -2;
    CHECK_THROWS_AS(root_vectors(IntegerLattice::make(std::move(big))), resource_error);
}

TEST_CASE("coset short vectors") {
    IntegerLattice a1 = make_ade(ADEType('A', 1));
    QVec shift{Rat(1, 2)};
    auto vecs = short_vectors_coset(a1.gram, shift, 2);
    REQUIRE(vecs.size() == 2);
    CHECK(vecs[0] == QVec{Rat(-1, 2)});
    CHECK(vecs[1] == QVec{Rat(1, 2)});

    // norm -2 lifts of the D4 glue class inside A1^4
    IntegerLattice a14 = testcat::power(ADEType('A', 1), 4);
    QVec half(4, Rat(1, 2));
    auto lifts = short_vectors_coset(a14.gram, half, 2);
    bool found_root = false;
    for (const QVec& w : lifts)
        if (inner_product(a14, w, w) == -2) found_root = true;
    CHECK(found_root);
}
