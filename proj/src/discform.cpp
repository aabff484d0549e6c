#include "latkit/discform.hpp"

#include <algorithm>
#include <numeric>

namespace latkit {

DiscriminantGroup::Elem DiscriminantGroup::add(const Elem& a, const Elem& b) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long d = invariant_factors[i].get_si();
        out[i] = (a[i] + b[i]) % d;
    }
    return out;
}

DiscriminantGroup::Elem DiscriminantGroup::neg(const Elem& a) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long d = invariant_factors[i].get_si();
        out[i] = (d - a[i]) % d;
    }
    return out;
}

DiscriminantGroup::Elem DiscriminantGroup::mul(const Elem& a, long k) const {
    Elem out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        long d = invariant_factors[i].get_si();
        long r = ((a[i] * k) % d + d) % d;
        out[i] = r;
    }
    return out;
}

long DiscriminantGroup::element_order(const Elem& a) const {
    long ord = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long d = invariant_factors[i].get_si();
        long g = std::gcd(a[i], d);
        ord = std::lcm(ord, d / g);
    }
    return ord;
}

QVec DiscriminantGroup::lift(const Elem& a) const {
    QVec out(parent.gram.rows, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += Rat(a[i]) * generator_lifts[i][j];
    }
    return out;
}

DiscriminantGroup::Elem DiscriminantGroup::class_of(const QVec& v) const {
    QVec gv = latkit::mul(QMat(parent.gram), v);
    if (!is_integral(gv)) throw domain_error("vector is not in the dual lattice");
    ZVec m(gv.size());
    for (std::size_t i = 0; i < gv.size(); ++i) m[i] = gv[i].get_num();
    ZVec y = latkit::mul(snf_left, m);
    Elem out(invariant_factors.size());
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        Int r = y[factor_pos[i]] % invariant_factors[i];
        if (r < 0) r += invariant_factors[i];
        out[i] = r.get_si();
    }
    return out;
}

Rat DiscriminantGroup::q(const Elem& a) const {
    Rat acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        acc += Rat(a[i]) * Rat(a[i]) * lift_products.at(i, i);
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (a[j] == 0) continue;
            acc += 2 * Rat(a[i]) * Rat(a[j]) * lift_products.at(i, j);
        }
    }
    return reduce_mod_2z(acc);
}

Rat DiscriminantGroup::b(const Elem& a, const Elem& c) const {
    Rat acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            acc += Rat(a[i]) * Rat(c[j]) * lift_products.at(i, j);
        }
    }
    return reduce_mod_1(acc);
}

std::uint64_t DiscriminantGroup::index_of(const Elem& a) const {
    std::uint64_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        idx += stride * static_cast<std::uint64_t>(a[i]);
        stride *= invariant_factors[i].get_ui();
    }
    return idx;
}

DiscriminantGroup::Elem DiscriminantGroup::element_at(std::uint64_t idx) const {
    Elem out(invariant_factors.size());
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
        std::uint64_t d = invariant_factors[i].get_ui();
        out[i] = static_cast<long>(idx % d);
        idx /= d;
    }
    return out;
}

DiscriminantGroup discriminant_group(const IntegerLattice& l) {
    if (l.degenerate) throw domain_error("discriminant group of a degenerate lattice");
    SmithDecomposition s = smith_normal_form(l.gram);

    DiscriminantGroup g;
    g.parent = l;
    g.order = 1;
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        g.order *= s.diag[i];
        if (s.diag[i] > 1) {
            g.invariant_factors.push_back(s.diag[i]);
            g.factor_pos.push_back(i);
        }
    }
    g.order = abs(g.order);
    g.snf_left = s.left;

    for (std::size_t k = 0; k < g.invariant_factors.size(); ++k) {
        std::size_t pos = g.factor_pos[k];
        QVec lift(l.gram.rows);
        for (std::size_t i = 0; i < l.gram.rows; ++i) {
            lift[i] = Rat(s.right.at(i, pos)) / Rat(g.invariant_factors[k]);
            lift[i].canonicalize();
        }
        g.generator_lifts.push_back(std::move(lift));
    }

    const std::size_t k = g.invariant_factors.size();
    g.lift_products = QMat(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Rat p = inner_product(l, g.generator_lifts[i], g.generator_lifts[j]);
            g.lift_products.at(i, j) = p;
            g.lift_products.at(j, i) = p;
        }
    return g;
}

Rat q_value(const DiscriminantGroup& g, const DiscriminantGroup::Elem& a) {
    return g.q(a);
}

Rat b_value(const DiscriminantGroup& g, const DiscriminantGroup::Elem& a,
            const DiscriminantGroup::Elem& b) {
    return g.b(a, b);
}

namespace {

bool factors_equal(const std::vector<Int>& got, const std::vector<long>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
        if (got[i] != want[i]) return false;
    return true;
}

// Cyclic case: the closed-form value must be attained on some generator.
bool cyclic_matches(const DiscriminantGroup& g, const Rat& want) {
    long d = g.invariant_factors[0].get_si();
    for (long u = 1; u < d; ++u) {
        if (std::gcd(u, d) != 1) continue;
        if (g.q({u}) == reduce_mod_2z(want)) return true;
    }
    return false;
}

// D_{2n} case: some generating pair must realize (1, -n/2) with b = 1/2.
bool klein_matches(const DiscriminantGroup& g, const Rat& q2) {
    const std::vector<DiscriminantGroup::Elem> elems{{1, 0}, {0, 1}, {1, 1}};
    for (const auto& x : elems)
        for (const auto& y : elems) {
            if (x == y) continue;
            if (g.q(x) == Rat(1) && g.q(y) == reduce_mod_2z(q2) &&
                g.b(x, y) == Rat(1, 2))
                return true;
        }
    return false;
}

}  // namespace

AdeTableReport verify_ade_table() {
    AdeTableReport rep;
    auto push = [&rep](const std::string& name, const DiscriminantGroup& g,
                       const std::string& expected, bool pass) {
        AdeTableEntry e;
        e.lattice = name;
        e.factors = g.invariant_factors;
        for (std::size_t i = 0; i < g.invariant_factors.size(); ++i) {
            DiscriminantGroup::Elem a = g.zero();
            a[i] = 1;
            e.q_on_generators.push_back(g.q(a));
        }
        e.expected = expected;
        e.pass = pass;
        rep.entries.push_back(std::move(e));
        rep.pass = rep.pass && pass;
    };

    for (int n = 1; n <= 12; ++n) {
        auto g = discriminant_group(make_ade(ADEType('A', n)));
        bool ok = factors_equal(g.invariant_factors, {n + 1}) &&
                  cyclic_matches(g, Rat(-n, n + 1));
        push("A" + std::to_string(n), g,
             "Z/" + std::to_string(n + 1) + ", q = -" + std::to_string(n) + "/" +
                 std::to_string(n + 1),
             ok);
    }
    for (int n = 4; n <= 12; ++n) {
        auto g = discriminant_group(make_ade(ADEType('D', n)));
        bool ok;
        std::string expected;
        if (n % 2 == 0) {
            ok = factors_equal(g.invariant_factors, {2, 2}) &&
                 klein_matches(g, Rat(-n / 2, 2));
            expected = "Z/2 x Z/2, q = (1, -" + std::to_string(n / 2) + "/2), b = 1/2";
        } else {
            ok = factors_equal(g.invariant_factors, {4}) && cyclic_matches(g, Rat(-n, 4));
            expected = "Z/4, q = -" + std::to_string(n) + "/4";
        }
        push("D" + std::to_string(n), g, expected, ok);
    }
    {
        auto g = discriminant_group(make_ade(ADEType('E', 6)));
        bool ok = factors_equal(g.invariant_factors, {3}) && cyclic_matches(g, Rat(2, 3));
        push("E6", g, "Z/3, q = 2/3", ok);
    }
    {
        auto g = discriminant_group(make_ade(ADEType('E', 7)));
        bool ok = factors_equal(g.invariant_factors, {2}) && cyclic_matches(g, Rat(1, 2));
        push("E7", g, "Z/2, q = 1/2", ok);
    }
    {
        auto g = discriminant_group(make_ade(ADEType('E', 8)));
        bool ok = g.invariant_factors.empty() && g.order == 1;
        push("E8", g, "trivial", ok);
    }
    return rep;
}

}  // namespace latkit
