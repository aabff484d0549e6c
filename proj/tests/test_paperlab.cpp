#include <doctest.h>

#include "catalog.hpp"
#include "latkit/paperlab.hpp"

using namespace latkit;

namespace {

QVec unit(int n, int i) {
    QVec v(n, Rat(0));
    v[i] = 1;
    return v;
}

Embedding double_into(const IntegerLattice& block_ambient, const ZMat& rows) {
    // block-diagonal doubling of an embedding for pullback checks
    IntegerLattice amb2 = direct_sum({block_ambient, block_ambient});
    const int n = block_ambient.rank();
    ZMat d(2 * rows.rows, 2 * n);
    for (std::size_t i = 0; i < rows.rows; ++i)
        for (int j = 0; j < n; ++j) {
            d.at(i, j) = rows.at(i, j);
            d.at(rows.rows + i, n + j) = rows.at(i, j);
        }
    return Embedding::make(amb2, d);
}

}  // namespace

TEST_CASE("ten-sequence model") {
    TenSequenceModel m = build_ten_sequence_model();
    CHECK(discriminant(m.lattice) == 9);
    CHECK(inner_product(m.lattice, m.h, m.h) == 10);
    for (int j = 0; j < 6; ++j)
        CHECK(inner_product(m.lattice, m.h, unit(10, 4 + j)) == 3);
    CHECK(m.overlattice.index == 3);
    CHECK(discriminant(m.overlattice.lattice) == 1);
    CHECK(m.overlattice.lattice.is_even());
    CHECK(signature(m.overlattice.lattice) == Signature{1, 9});
}

TEST_CASE("candidate curve table") {
    TenSequenceModel m = build_ten_sequence_model();
    CurveTableReport rep = candidate_curve_table(m);
    CHECK(rep.pass);
    CHECK(rep.classes_checked == 26);  // 5 + 20 + 1
    CHECK(rep.failures.empty());

    // spot values
    auto E = [&](int j) { return unit(10, 3 + j); };
    QVec r123 = m.h, r456 = m.h;
    for (int j : {1, 2, 3})
        for (int i = 0; i < 10; ++i) r123[i] -= E(j)[i];
    for (int j : {4, 5, 6})
        for (int i = 0; i < 10; ++i) r456[i] -= E(j)[i];
    CHECK(inner_product(m.lattice, r123, r456) == 1);
    CHECK(inner_product(m.lattice, r123, r123) == -2);
    QVec big(10);
    for (int i = 0; i < 10; ++i) big[i] = 2 * m.h[i];
    for (int j = 1; j <= 6; ++j)
        for (int i = 0; i < 10; ++i) big[i] -= E(j)[i];
    CHECK(inner_product(m.lattice, big, big) == -2);
}

TEST_CASE("complement chain") {
    ComplementChainReport rep = e6_complement_chain();
    CHECK(rep.pass);
    CHECK(rep.span_is_u_plus_a2);
    CHECK(rep.nontrivial_subgroups == 2);
    CHECK(rep.subgroup_orbits == 1);
    CHECK(rep.overlattice_roots == 240);
    CHECK(rep.a2_primitive);
    CHECK(rep.a2e6_not_primitive);
    CHECK(rep.complement_rank == 6);
    CHECK(rep.complement_disc == 3);
    CHECK(rep.complement_roots == 72);
    CHECK(rep.complement_q == Rat(2, 3));
    CHECK(rep.complement_in_u_ambient_matches);
}

TEST_CASE("over-exceptional predicates") {
    IntegerLattice ue8 = direct_sum({make_hyperbolic(), make_ade(ADEType('E', 8))});

    SUBCASE("rank six candidate fails the rank bound") {
        // E6 subdiagram of the E8 block
        ZMat rows(6, 10);
        int cols[] = {2, 3, 4, 5, 6, 9};  // e1..e5 and the branch node
        for (int i = 0; i < 6; ++i) rows.at(i, cols[i]) = 1;
        Embedding e = Embedding::make(ue8, rows);
        CHECK(e.induced_gram() == make_ade(ADEType('E', 6)).gram);
        ZMat block(6, 8);
        for (int i = 0; i < 6; ++i) block.at(i, cols[i] - 2) = 1;
        Embedding pullback = double_into(make_ade(ADEType('E', 8)), block);
        OverExceptionalPredicates p = over_exceptional_predicates(e, pullback);
        CHECK_FALSE(p.rank_ok);
        CHECK(p.primitive_in_num_s);
        CHECK_FALSE(p.forbidden_free);
    }

    SUBCASE("non-primitive A1^4 frame is flagged") {
        ZMat rows(4, 10);
        rows.at(0, 3) = 1;  // e2
        rows.at(1, 5) = 1;  // e4
        rows.at(2, 9) = 1;  // e8
        rows.at(3, 3) = 1;  // e2 + e4 + e8 + 2 e3
        rows.at(3, 5) = 1;
        rows.at(3, 9) = 1;
        rows.at(3, 4) = 2;
        Embedding e = Embedding::make(ue8, rows);
        CHECK(e.induced_gram() == testcat::power(ADEType('A', 1), 4).gram);
        ZMat block(4, 8);
        block.at(0, 1) = 1;
        block.at(1, 3) = 1;
        block.at(2, 7) = 1;
        block.at(3, 1) = 1;
        block.at(3, 3) = 1;
        block.at(3, 7) = 1;
        block.at(3, 2) = 2;
        Embedding pullback = double_into(make_ade(ADEType('E', 8)), block);
        OverExceptionalPredicates p = over_exceptional_predicates(e, pullback);
        CHECK(p.rank_ok);
        CHECK_FALSE(p.primitive_in_num_s);
        std::vector<std::string> want{"four disjoint (-2)-classes"};
        CHECK(p.forbidden_found == want);
    }

    SUBCASE("the zero lattice satisfies everything") {
        Embedding e = Embedding::make(ue8, ZMat(0, 10));
        IntegerLattice amb2 = direct_sum({ue8, ue8});
        Embedding pullback = Embedding::make(amb2, ZMat(0, 20));
        OverExceptionalPredicates p = over_exceptional_predicates(e, pullback);
        CHECK(p.rank_ok);
        CHECK(p.primitive_in_num_s);
        CHECK(p.pullback_primitive);
        CHECK(p.forbidden_free);
    }

    SUBCASE("non-root input is rejected") {
        ZMat rows(1, 10);
        rows.at(0, 0) = 1;
        rows.at(0, 1) = -2;  // norm -4 vector in U
        Embedding e = Embedding::make(ue8, rows);
        ZMat pbrows(2, 20);
        pbrows.at(0, 0) = 1;
        pbrows.at(0, 1) = -2;
        pbrows.at(1, 10) = 1;
        pbrows.at(1, 11) = -2;
        Embedding pb = Embedding::make(direct_sum({ue8, ue8}), pbrows);
        CHECK_THROWS_AS(over_exceptional_predicates(e, pb), domain_error);
    }
}

TEST_CASE("forbidden configuration scan") {
    CHECK(forbidden_configuration_scan(testcat::power(ADEType('A', 1), 4)) ==
          std::vector<std::string>{"four disjoint (-2)-classes"});
    CHECK(forbidden_configuration_scan(testcat::power(ADEType('A', 2), 3)) ==
          std::vector<std::string>{"three orthogonal A2 pairs"});
    auto e6 = forbidden_configuration_scan(make_ade(ADEType('E', 6)));
    CHECK(e6 == std::vector<std::string>{"four disjoint (-2)-classes",
                                         "three orthogonal A2 pairs",
                                         "six classes spanning E6"});
    CHECK(forbidden_configuration_scan(make_ade(ADEType('A', 3))).empty());
}

TEST_CASE("K3 over-exceptional checker") {
    IntegerLattice amb = direct_sum(
        {make_hyperbolic(), make_ade(ADEType('E', 8)), make_ade(ADEType('E', 8))});

    SUBCASE("zero lattice passes") {
        CHECK(k3_over_exceptional_check(Embedding::make(amb, ZMat(0, 18))));
    }
    SUBCASE("E8 + A1^2 at the boundary rank passes") {
        ZMat rows(10, 18);
        for (int i = 0; i < 8; ++i) rows.at(i, 2 + i) = 1;  // first E8 block
        rows.at(8, 10) = 1;   // e1 of the second block
        rows.at(9, 12) = 1;   // e3 of the second block (orthogonal to e1)
        Embedding e = Embedding::make(amb, rows);
        CHECK(k3_over_exceptional_check(e));
    }
    SUBCASE("rank 16 fails") {
        ZMat rows(16, 18);
        for (int i = 0; i < 16; ++i) rows.at(i, 2 + i) = 1;
        CHECK_FALSE(k3_over_exceptional_check(Embedding::make(amb, rows)));
    }
    SUBCASE("non-primitive rank 10 fails") {
        // two D4-type frames plus two extra orthogonal roots
        ZMat rows(10, 18);
        auto frame = [&](int r0, int off) {
            rows.at(r0 + 0, off + 1) = 1;
            rows.at(r0 + 1, off + 3) = 1;
            rows.at(r0 + 2, off + 7) = 1;
            rows.at(r0 + 3, off + 1) = 1;
            rows.at(r0 + 3, off + 3) = 1;
            rows.at(r0 + 3, off + 7) = 1;
            rows.at(r0 + 3, off + 2) = 2;
        };
        frame(0, 2);
        frame(4, 10);
        rows.at(8, 2 + 5) = 1;   // e6 of the first block
        rows.at(9, 10 + 5) = 1;  // e6 of the second block
        Embedding e = Embedding::make(amb, rows);
        CHECK(e.induced_gram() == testcat::power(ADEType('A', 1), 10).gram);
        CHECK_FALSE(k3_over_exceptional_check(e));
    }
}

TEST_CASE("finite-automorphism K3 pipeline") {
    K3PipelineReport rep = finite_automorphism_k3_pipeline();
    CHECK(rep.pass);
    CHECK(rep.ambient_certified);
    CHECK(rep.configuration_count == 3);
    CHECK(rep.ii_star_count == 2);
    CHECK(rep.i12_star_count == 1);
    CHECK(rep.orthogonal_labels.size() == 16);
    CHECK(rep.span_components == std::vector<ADEType>{ADEType('D', 8), ADEType('D', 8)});
    CHECK(rep.saturation_index == 2);
    CHECK(rep.quotient_factors == std::vector<Int>{2});
    std::vector<std::string> bold{"R4", "R6", "R8", "R9", "R11", "R13", "R15", "R19"};
    std::vector<std::string> conc = rep.concentration_labels;
    std::sort(conc.begin(), conc.end());
    std::sort(bold.begin(), bold.end());
    CHECK(conc == bold);
    CHECK(rep.concentration_components == std::vector<ADEType>(8, ADEType('A', 1)));
    CHECK(rep.bold_sum_two_divisible);
    CHECK(rep.saturation_roots_in_span);
    CHECK(rep.saturation_root_count == 224);
    CHECK_FALSE(rep.span_passes_k3_check);  // rank 16 and non-primitive

    // the standard-basis coordinates reproduce all intersection numbers
    CurveGraph g = figure("k3_u_e8_e8");
    IntegerLattice amb = direct_sum(
        {make_hyperbolic(), make_ade(ADEType('E', 8)), make_ade(ADEType('E', 8))});
    ZMat pairing = lattice_from_graph(g).gram;
    for (int v = 0; v < 19; ++v)
        for (int w = 0; w <= v; ++w) {
            Rat ip = inner_product(amb, to_qvec(rep.class_coordinates.row(v)),
                                   to_qvec(rep.class_coordinates.row(w)));
            CHECK(ip == Rat(pairing.at(v, w)));
        }

    // stable under permuting the two E8 summands
    K3PipelineReport swapped = finite_automorphism_k3_pipeline(true);
    CHECK(swapped.pass);
    CHECK(swapped.orthogonal_labels == rep.orthogonal_labels);
    CHECK(swapped.concentration_labels == rep.concentration_labels);
    CHECK(swapped.saturation_index == rep.saturation_index);
}

TEST_CASE("figure orthogonality") {
    FigureOrthogonalityReport rep = figure_orthogonality_check();
    CHECK(rep.pass);
    REQUIRE(rep.entries.size() == 5);
    for (const auto& e : rep.entries) CHECK(e.pass);
    CHECK(rep.entries[2].computed == std::vector<std::string>{"R1", "R2"});
    CHECK(rep.entries[4].computed == std::vector<std::string>{"R1", "R2", "R3"});
}
