#include "latkit/glue.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latkit {

namespace {

std::uint64_t group_size_checked(const DiscriminantGroup& g, std::uint64_t cap) {
    if (g.order > Int(static_cast<unsigned long>(cap)))
        throw resource_error("discriminant group larger than the enumeration cap",
                             g.order);
    return g.order.get_ui();
}

// mixed-radix arithmetic on linear element indices (no bignum traffic)
struct IndexArith {
    std::vector<std::uint64_t> radix;
    std::uint64_t size = 1;

    explicit IndexArith(const DiscriminantGroup& g) {
        for (const Int& d : g.invariant_factors) {
            radix.push_back(d.get_ui());
            size *= d.get_ui();
        }
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t out = 0, stride = 1;
        for (std::uint64_t d : radix) {
            out += stride * ((a % d + b % d) % d);
            a /= d;
            b /= d;
            stride *= d;
        }
        return out;
    }
    long order_of(std::uint64_t a) const {
        long ord = 1;
        for (std::uint64_t d : radix) {
            long r = static_cast<long>(a % d);
            a /= d;
            long g = std::gcd(r, static_cast<long>(d));
            ord = std::lcm(ord, static_cast<long>(d) / g);
        }
        return ord;
    }
};

// closure of the subgroup given by sorted ids with one extra element
std::vector<std::uint64_t> closure_with(const IndexArith& ar,
                                        const std::vector<std::uint64_t>& h,
                                        std::uint64_t x) {
    std::vector<std::uint64_t> out = h;
    std::uint64_t cur = 0;
    long ord = ar.order_of(x);
    for (long k = 1; k < ord; ++k) {
        cur = ar.add(cur, x);
        for (std::uint64_t e : h) out.push_back(ar.add(e, cur));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> greedy_generators(const IndexArith& ar,
                                             const std::vector<std::uint64_t>& elements) {
    std::vector<std::uint64_t> gens;
    std::vector<std::uint64_t> span{0};
    for (std::uint64_t e : elements) {
        if (std::binary_search(span.begin(), span.end(), e)) continue;
        gens.push_back(e);
        span = closure_with(ar, span, e);
    }
    return gens;
}

// q-zero bitmap over linear element indices
std::vector<bool> isotropy_mask(const DiscriminantGroup& g, std::uint64_t size,
                                bool parallel) {
    std::vector<bool> iso(size, false);
    if (parallel) {
        std::vector<char> tmp(size, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long i = 0; i < static_cast<long long>(size); ++i)
            tmp[i] = g.q(g.element_at(i)) == 0 ? 1 : 0;
        for (std::uint64_t i = 0; i < size; ++i) iso[i] = tmp[i] != 0;
    } else {
        for (std::uint64_t i = 0; i < size; ++i) iso[i] = g.q(g.element_at(i)) == 0;
    }
    return iso;
}

std::vector<Elem> isotropic_elements_impl(const DiscriminantGroup& g, std::uint64_t cap,
                                          bool parallel) {
    std::uint64_t size = group_size_checked(g, cap);
    std::vector<bool> iso = isotropy_mask(g, size, parallel);
    std::vector<Elem> out;
    for (std::uint64_t i = 0; i < size; ++i)
        if (iso[i]) out.push_back(g.element_at(i));
    return out;
}

// all subgroups contained in the isotropic locus, as sorted id lists
std::vector<std::vector<std::uint64_t>> isotropic_subgroup_ids(
    const DiscriminantGroup& g, std::uint64_t cap) {
    std::uint64_t size = group_size_checked(g, cap);
    std::vector<bool> iso = isotropy_mask(g, size, true);
    IndexArith ar(g);
    std::vector<std::uint64_t> iso_ids;
    for (std::uint64_t i = 0; i < size; ++i)
        if (iso[i]) iso_ids.push_back(i);

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<std::uint64_t>> queue;
    std::vector<std::uint64_t> trivial{0};
    seen.insert(trivial);
    queue.push_back(trivial);

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<std::uint64_t> h = queue[qi];
        for (std::uint64_t x : iso_ids) {
            if (x == 0 || std::binary_search(h.begin(), h.end(), x)) continue;
            std::vector<std::uint64_t> ext = closure_with(ar, h, x);
            bool all_iso = true;
            for (std::uint64_t e : ext)
                if (!iso[e]) {
                    all_iso = false;
                    break;
                }
            if (!all_iso) continue;
            if (seen.insert(ext).second) queue.push_back(std::move(ext));
        }
    }
    return {seen.begin(), seen.end()};
}

IsotropicSubgroup subgroup_from_ids(const DiscriminantGroup& g, const IndexArith& ar,
                                    const std::vector<std::uint64_t>& ids) {
    IsotropicSubgroup s;
    for (std::uint64_t i : ids) s.elements.push_back(g.element_at(i));
    std::sort(s.elements.begin(), s.elements.end());
    std::vector<std::uint64_t> sorted_by_elem;
    for (const Elem& e : s.elements) sorted_by_elem.push_back(g.index_of(e));
    for (std::uint64_t i : greedy_generators(ar, sorted_by_elem))
        s.generators.push_back(g.element_at(i));
    return s;
}

// ids of elements admitting a norm -2 lift in the dual
std::vector<bool> norm2_lift_mask(const DiscriminantGroup& g, std::uint64_t size) {
    std::vector<char> tmp(size, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(size); ++i) {
        QVec lift = g.lift(g.element_at(i));
        bool has = false;
        for (const QVec& w : short_vectors_coset(g.parent.gram, lift, 2))
            if (inner_product(g.parent, w, w) == -2) {
                has = true;
                break;
            }
        tmp[i] = has ? 1 : 0;
    }
    std::vector<bool> out(size);
    for (std::uint64_t i = 0; i < size; ++i) out[i] = tmp[i] != 0;
    return out;
}

bool root_overlattice_with_mask(const DiscriminantGroup& g, const IndexArith& ar,
                                const std::vector<std::uint64_t>& ids,
                                const std::vector<bool>& lift_mask,
                                const IsotropicSubgroup& h) {
    // route 1: elements with a norm -2 lift must generate the subgroup
    std::vector<std::uint64_t> gen{0};
    for (std::uint64_t e : ids) {
        if (!lift_mask[e]) continue;
        if (std::binary_search(gen.begin(), gen.end(), e)) continue;
        gen = closure_with(ar, gen, e);
    }
    bool route1 = gen.size() == ids.size();

    // route 2: root span of the constructed overlattice has full rank, index 1
    OverlatticeResult o = overlattice_from(g, h);
    bool route2 = is_root_lattice(o.lattice);

    if (route1 != route2)
        throw std::logic_error("root-overlattice routes disagree");
    return route1;
}

}  // namespace

std::vector<Elem> isotropic_elements(const DiscriminantGroup& g, std::uint64_t cap) {
    return isotropic_elements_impl(g, cap, true);
}

std::vector<Elem> isotropic_elements_serial(const DiscriminantGroup& g,
                                            std::uint64_t cap) {
    return isotropic_elements_impl(g, cap, false);
}

std::vector<IsotropicSubgroup> isotropic_subgroups(const DiscriminantGroup& g,
                                                   std::uint64_t cap) {
    IndexArith ar(g);
    std::vector<IsotropicSubgroup> out;
    for (const auto& ids : isotropic_subgroup_ids(g, cap))
        out.push_back(subgroup_from_ids(g, ar, ids));
    std::sort(out.begin(), out.end(), [](const IsotropicSubgroup& a,
                                         const IsotropicSubgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

OverlatticeResult overlattice_from(const DiscriminantGroup& g,
                                   const IsotropicSubgroup& h) {
    for (const Elem& e : h.elements)
        if (g.q(e) != 0) throw domain_error("subgroup is not isotropic");

    const std::size_t n = g.parent.gram.rows;
    std::vector<QVec> lifts;
    for (const Elem& e : h.generators) lifts.push_back(g.lift(e));

    Int m = 1;
    for (const QVec& w : lifts) {
        Int d = denominator_lcm(w);
        Int l;
        mpz_lcm(l.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        m = l;
    }

    ZMat stack(n + lifts.size(), n);
    for (std::size_t i = 0; i < n; ++i) stack.at(i, i) = m;
    for (std::size_t k = 0; k < lifts.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = Rat(m) * lifts[k][j];
            stack.at(n + k, j) = scaled.get_num();  // integral by choice of m
        }
    ZMat hnf = row_hnf(stack);
    if (hnf.rows != n) throw std::logic_error("overlattice basis rank defect");

    QMat basis(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            basis.at(i, j) = Rat(hnf.at(i, j), m);
            basis.at(i, j).canonicalize();
        }

    QMat new_gram_q = mul(mul(basis, g.parent.gram), transpose(basis));
    ZMat new_gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integral(new_gram_q.at(i, j)))
                throw std::logic_error("overlattice Gram is not integral");
            new_gram.at(i, j) = new_gram_q.at(i, j).get_num();
            if (i == j && new_gram.at(i, j) % 2 != 0)
                throw std::logic_error("overlattice is not even");
        }

    OverlatticeResult out;
    out.lattice = IntegerLattice::make(std::move(new_gram));
    out.index = h.order();
    out.glue_lifts = std::move(lifts);
    out.change_of_basis = std::move(basis);

    // disc(L)/disc(L') = index^2, exactly
    Int dl = discriminant(g.parent), dlp = discriminant(out.lattice);
    if (dl != dlp * out.index * out.index)
        throw std::logic_error("overlattice index formula violated");
    return out;
}

std::pair<Embedding, Int> saturation(const Embedding& e) {
    if (e.basis.rows == 0) return {e, Int(1)};
    SmithDecomposition s = smith_normal_form(e.basis);
    Int idx = 1;
    for (const Int& d : s.diag)
        if (d != 0) idx *= d;
    ZMat sat = saturate_rows(e.basis);
    return {Embedding{e.ambient, std::move(sat)}, abs(idx)};
}

bool is_primitive(const Embedding& e) { return saturation(e).second == 1; }

IsotropicSubgroup subgroup_of_overlattice(const DiscriminantGroup& g,
                                          const OverlatticeResult& o) {
    IndexArith ar(g);
    std::vector<std::uint64_t> span{0};
    for (std::size_t i = 0; i < o.change_of_basis.rows; ++i) {
        Elem cls = g.class_of(o.change_of_basis.row(i));
        span = closure_with(ar, span, g.index_of(cls));
    }
    return subgroup_from_ids(g, ar, span);
}

QVec minimal_glue_vector(const IntegerLattice& l, const QVec& v, long p) {
    if (v.size() != l.gram.rows) throw domain_error("glue vector length mismatch");
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat pv = Rat(p) * v[i];
        if (!is_integral(pv)) throw domain_error("p * v is not integral");
        Int num = pv.get_num() % p;
        if (num < 0) num += p;
        out[i] = Rat(num, p);
        out[i].canonicalize();
    }
    return out;
}

Embedding concentration_support(const IntegerLattice& l, const QVec& minimal_glue) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < minimal_glue.size(); ++i)
        if (minimal_glue[i] != 0) support.push_back(i);
    ZMat basis(support.size(), l.gram.rows);
    for (std::size_t k = 0; k < support.size(); ++k) basis.at(k, support[k]) = 1;
    return Embedding{l, std::move(basis)};
}

bool overlattice_is_root_lattice(const DiscriminantGroup& g,
                                 const IsotropicSubgroup& h) {
    IndexArith ar(g);
    std::vector<std::uint64_t> ids;
    for (const Elem& e : h.elements) ids.push_back(g.index_of(e));
    std::sort(ids.begin(), ids.end());

    // lift mask evaluated on the subgroup's own elements only
    std::uint64_t size = ids.empty() ? 1 : ids.back() + 1;
    std::vector<bool> mask(size, false);
    for (std::uint64_t e : ids) {
        QVec lift = g.lift(g.element_at(e));
        for (const QVec& w : short_vectors_coset(g.parent.gram, lift, 2))
            if (inner_product(g.parent, w, w) == -2) {
                mask[e] = true;
                break;
            }
    }
    return root_overlattice_with_mask(g, ar, ids, mask, h);
}

ThresholdScanReport overlattice_threshold_scan(long p, int r_max, std::uint64_t cap) {
    ThresholdScanReport rep;
    rep.p = p;
    for (int r = 1; r <= r_max; ++r) {
        std::vector<IntegerLattice> parts(r, make_ade(ADEType('A', static_cast<int>(p - 1))));
        IntegerLattice l = direct_sum(std::span<const IntegerLattice>(parts));
        DiscriminantGroup g = discriminant_group(l);
        IndexArith ar(g);
        auto ids_list = isotropic_subgroup_ids(g, cap);
        bool admits = ids_list.size() > 1;
        bool nonroot = false;
        if (admits) {
            std::vector<bool> mask = norm2_lift_mask(g, group_size_checked(g, cap));
            for (const auto& ids : ids_list) {
                if (ids.size() == 1) continue;
                IsotropicSubgroup h = subgroup_from_ids(g, ar, ids);
                if (!root_overlattice_with_mask(g, ar, ids, mask, h)) {
                    nonroot = true;
                    break;
                }
            }
        }
        rep.rows.push_back({r, admits, nonroot});
    }
    long over_min = p == 2 ? 4 : p == 3 ? 3 : 2;
    long nonroot_min = p == 2 ? 8 : p == 3 ? 6 : 4;
    rep.matches_thresholds = true;
    for (const ThresholdScanRow& row : rep.rows) {
        if (row.admits_overlattice != (row.r >= over_min)) rep.matches_thresholds = false;
        if (row.admits_nonroot_overlattice != (row.r >= nonroot_min))
            rep.matches_thresholds = false;
    }
    return rep;
}

NoOverlatticeReport no_overlattice_check() {
    NoOverlatticeReport rep;
    auto check = [&rep](const std::string& name, const IntegerLattice& l) {
        DiscriminantGroup g = discriminant_group(l);
        std::vector<Elem> iso = isotropic_elements(g);
        NoOverlatticeReport::Entry e{name, iso.size() - 1, iso.size() == 1};
        rep.pass = rep.pass && e.pass;
        rep.entries.push_back(std::move(e));
    };
    check("A6", make_ade(ADEType('A', 6)));
    check("A6+A6", direct_sum({make_ade(ADEType('A', 6)), make_ade(ADEType('A', 6))}));
    check("A10", make_ade(ADEType('A', 10)));
    check("A12", make_ade(ADEType('A', 12)));
    return rep;
}

std::vector<std::pair<std::vector<ADEType>, IntegerLattice>> ade_multisets(int rank_cap) {
    std::vector<ADEType> all_types;
    for (int n = 1; n <= rank_cap; ++n) all_types.emplace_back('A', n);
    for (int n = 4; n <= rank_cap; ++n) all_types.emplace_back('D', n);
    for (int n = 6; n <= std::min(rank_cap, 8); ++n) all_types.emplace_back('E', n);

    std::vector<std::pair<std::vector<ADEType>, IntegerLattice>> out;
    std::vector<ADEType> current;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (!current.empty()) {
            std::vector<IntegerLattice> parts;
            for (const ADEType& t : current) parts.push_back(make_ade(t));
            out.emplace_back(current, direct_sum(std::span<const IntegerLattice>(parts)));
        }
        for (std::size_t i = from; i < all_types.size(); ++i) {
            if (all_types[i].rank() > remaining) continue;
            current.push_back(all_types[i]);
            self(self, i, remaining - all_types[i].rank());
            current.pop_back();
        }
    };
    rec(rec, 0, rank_cap);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ra = 0, rb = 0;
        for (const auto& t : a.first) ra += t.rank();
        for (const auto& t : b.first) rb += t.rank();
        if (ra != rb) return ra < rb;
        return a.first < b.first;
    });
    return out;
}

RootOverlatticeSweepReport root_overlattice_sweep(int rank_cap) {
    RootOverlatticeSweepReport rep;
    rep.rank_cap = rank_cap;
    auto catalog = ade_multisets(rank_cap);
    rep.lattices_checked = catalog.size();

    std::vector<std::vector<std::string>> bad(catalog.size());
    std::vector<std::size_t> counts(catalog.size(), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long k = 0; k < static_cast<long>(catalog.size()); ++k) {
        const auto& [types, l] = catalog[k];
        std::string name;
        for (const ADEType& t : types) name += (name.empty() ? "" : "+") + t.name();
        DiscriminantGroup g = discriminant_group(l);
        IndexArith ar(g);
        auto ids_list = isotropic_subgroup_ids(g, kDefaultDiscGroupCap);
        if (ids_list.size() > 1) {
            std::vector<bool> mask =
                norm2_lift_mask(g, group_size_checked(g, kDefaultDiscGroupCap));
            for (const auto& ids : ids_list) {
                if (ids.size() == 1) continue;
                ++counts[k];
                IsotropicSubgroup h = subgroup_from_ids(g, ar, ids);
                if (!root_overlattice_with_mask(g, ar, ids, mask, h))
                    bad[k].push_back(name + " index " + h.order().get_str());
            }
        }
    }
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        rep.overlattices_checked += counts[k];
        for (auto& s : bad[k]) rep.counterexamples.push_back(std::move(s));
    }
    rep.pass = rep.counterexamples.empty();
    return rep;
}

}  // namespace latkit
