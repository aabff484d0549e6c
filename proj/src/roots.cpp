#include "latkit/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latkit {

namespace {

// Exact LDL data for a positive definite rational form:
// Q(y) = sum_i d[i] * (y_i + sum_{j>i} u[i][j] y_j)^2.
struct Ldl {
    std::size_t n;
    std::vector<Rat> d;
    QMat u;
};

Ldl ldl_positive(const ZMat& gram_negdef) {
    const std::size_t n = gram_negdef.rows;
    QMat p(gram_negdef);
    for (auto& x : p.a) x = -x;
    Ldl f{n, std::vector<Rat>(n), QMat(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        Rat di = p.at(i, i);
        for (std::size_t k = 0; k < i; ++k) di -= f.d[k] * f.u.at(k, i) * f.u.at(k, i);
        if (di <= 0) throw domain_error("lattice is not negative definite");
        f.d[i] = di;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat s = p.at(i, j);
            for (std::size_t k = 0; k < i; ++k)
                s -= f.d[k] * f.u.at(k, i) * f.u.at(k, j);
            f.u.at(i, j) = s / di;
        }
    }
    return f;
}

// Upper bound on sqrt(t) for t >= 0.
Rat sqrt_upper(const Rat& t) {
    if (t <= 0) return Rat(0);
    Int num = t.get_num(), den = t.get_den();
    return Rat(isqrt(num * den) + 1, den);
}

struct Enumerator {
    const Ldl& f;
    const QVec& shift;
    Rat max_norm;
    std::vector<QVec>* out;
    QVec y;  // filled from the back

    Enumerator(const Ldl& f, const QVec& shift, Rat max_norm, std::vector<QVec>* out)
        : f(f), shift(shift), max_norm(std::move(max_norm)), out(out), y(f.n) {}

    Rat center(std::size_t i) const {
        Rat c(0);
        for (std::size_t j = i + 1; j < f.n; ++j)
            if (f.u.at(i, j) != 0 && y[j] != 0) c += f.u.at(i, j) * y[j];
        return c;
    }

    // level = number of coordinates still unset; chooses index level-1
    void recurse(std::size_t level, const Rat& used) {
        std::size_t i = level - 1;
        Rat c = center(i);
        Rat budget = max_norm - used;
        Rat t = budget / f.d[i];
        Rat bound = sqrt_upper(t);
        // y_i = x + shift_i with x integral
        Rat lo_r = -c - bound - shift[i];
        Rat hi_r = -c + bound - shift[i];
        Int x = ceil_rat(lo_r);
        Int hi = floor_rat(hi_r);
        for (; x <= hi; ++x) {
            Rat yi = Rat(x) + shift[i];
            Rat term = yi + c;
            Rat add = f.d[i] * term * term;
            if (add > budget) continue;
            y[i] = yi;
            Rat used2 = used + add;
            if (i == 0) {
                if (used2 > 0) out->push_back(y);
            } else {
                recurse(i, used2);
            }
        }
        y[i] = 0;
    }
};

std::vector<QVec> enumerate_coset(const ZMat& gram, const QVec& shift,
                                  const Int& max_norm_abs, bool parallel) {
    const std::size_t n = gram.rows;
    if (n == 0) return {};
    if (static_cast<int>(n) > kMaxEnumerationRank)
        throw resource_error("enumeration rank cap exceeded", Int(static_cast<long>(n)));
    Ldl f = ldl_positive(gram);
    Rat max_norm{max_norm_abs};

    std::vector<QVec> result;
    if (n == 1 || !parallel) {
        Enumerator e(f, shift, max_norm, &result);
        e.recurse(n, Rat(0));
    } else {
        // independent subtrees per value of the outermost coordinate
        std::size_t i = n - 1;
        Rat t = max_norm / f.d[i];
        Rat bound = sqrt_upper(t);
        Int x0 = ceil_rat(-bound - shift[i]);
        Int x1 = floor_rat(bound - shift[i]);
        long count = x1 < x0 ? 0 : Int(x1 - x0 + 1).get_si();
        std::vector<std::vector<QVec>> buckets(count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long k = 0; k < count; ++k) {
            Rat yi = Rat(x0 + k) + shift[i];
            Rat add = f.d[i] * yi * yi;
            if (add > max_norm) continue;
            Enumerator e(f, shift, max_norm, &buckets[k]);
            e.y[i] = yi;
            if (i == 0) {
                if (add > 0) buckets[k].push_back(e.y);
            } else {
                e.recurse(i, add);
            }
        }
        for (auto& b : buckets)
            result.insert(result.end(), std::make_move_iterator(b.begin()),
                          std::make_move_iterator(b.end()));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<ZVec> norm2_vectors(const IntegerLattice& l, bool parallel) {
    if (l.degenerate) throw domain_error("root enumeration needs a definite lattice");
    QVec shift(l.gram.rows, Rat(0));
    std::vector<QVec> all = enumerate_coset(l.gram, shift, 2, parallel);
    std::vector<ZVec> roots;
    for (const QVec& w : all) {
        Rat norm(0);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j)
                if (l.gram.at(i, j) != 0) norm += w[i] * w[j] * Rat(l.gram.at(i, j));
        if (norm != -2) continue;
        ZVec v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i].get_num();
        roots.push_back(std::move(v));
    }
    return roots;
}

struct Component {
    std::vector<std::size_t> nodes;  // indices into the simple root list
};

}  // namespace

std::vector<QVec> short_vectors_coset(const ZMat& gram, const QVec& shift,
                                      const Int& max_norm_abs) {
    if (shift.size() != gram.rows) throw domain_error("shift length mismatch");
    return enumerate_coset(gram, shift, max_norm_abs, true);
}

std::vector<ZVec> root_vectors(const IntegerLattice& l) { return norm2_vectors(l, true); }
std::vector<ZVec> root_vectors_serial(const IntegerLattice& l) {
    return norm2_vectors(l, false);
}

namespace {

RootSystem build_root_system(const IntegerLattice& l, std::vector<ZVec> roots) {
    RootSystem rs;
    rs.parent = l;
    rs.roots = std::move(roots);

    // positive roots: first nonzero coordinate positive
    std::vector<ZVec> pos;
    std::set<ZVec> pos_set;
    for (const ZVec& r : rs.roots) {
        bool positive = false;
        for (const Int& x : r) {
            if (x != 0) {
                positive = x > 0;
                break;
            }
        }
        if (positive) {
            pos.push_back(r);
            pos_set.insert(r);
        }
    }

    // simple roots are the indecomposable positive roots
    std::vector<ZVec> simple;
    for (const ZVec& r : pos) {
        bool decomposable = false;
        for (const ZVec& a : pos) {
            if (a == r) continue;
            ZVec diff(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - a[i];
            if (pos_set.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(r);
    }
    std::sort(simple.begin(), simple.end());

    const std::size_t m = simple.size();
    auto prod = [&](std::size_t i, std::size_t j) {
        Rat p = inner_product(l, to_qvec(simple[i]), to_qvec(simple[j]));
        return p.get_num();
    };
    std::vector<std::vector<std::size_t>> adj(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Int p = prod(i, j);
            if (p == 0) continue;
            if (p != 1)
                throw std::logic_error("simple roots with pairing outside {0,1}");
            adj[i].push_back(j);
            adj[j].push_back(i);
        }

    // connected components
    std::vector<int> comp_of(m, -1);
    std::vector<Component> comps;
    for (std::size_t s = 0; s < m; ++s) {
        if (comp_of[s] >= 0) continue;
        Component c;
        std::vector<std::size_t> stack{s};
        comp_of[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            c.nodes.push_back(v);
            for (std::size_t w : adj[v])
                if (comp_of[w] < 0) {
                    comp_of[w] = static_cast<int>(comps.size());
                    stack.push_back(w);
                }
        }
        std::sort(c.nodes.begin(), c.nodes.end());
        comps.push_back(std::move(c));
    }

    // classify each component by its degree structure and order its simple
    // roots to match the fixed ADE basis labelling
    std::vector<std::pair<ADEType, ZMat>> classified;
    for (const Component& c : comps) {
        const std::size_t k = c.nodes.size();
        std::map<std::size_t, std::size_t> deg;
        std::size_t trivalent = SIZE_MAX;
        int tri_count = 0;
        for (std::size_t v : c.nodes) {
            std::size_t d = 0;
            for (std::size_t w : adj[v])
                if (comp_of[w] == comp_of[c.nodes[0]]) ++d;
            deg[v] = d;
            if (d >= 4) throw std::logic_error("simple-root graph has a degree-4 node");
            if (d == 3) {
                trivalent = v;
                ++tri_count;
            }
        }
        if (tri_count > 1)
            throw std::logic_error("simple-root graph has two branch nodes");

        auto walk_arm = [&](std::size_t from, std::size_t first) {
            std::vector<std::size_t> arm{first};
            std::size_t prev = from, cur = first;
            while (true) {
                std::size_t next = SIZE_MAX;
                for (std::size_t w : adj[cur])
                    if (w != prev) next = w;
                if (next == SIZE_MAX) break;
                arm.push_back(next);
                prev = cur;
                cur = next;
                if (arm.size() > k) throw std::logic_error("cycle in simple-root graph");
            }
            return arm;
        };

        std::vector<std::size_t> order;
        ADEType type('A', 1);
        if (tri_count == 0) {
            // path; orient from the lexicographically smaller endpoint
            std::vector<std::size_t> ends;
            for (std::size_t v : c.nodes)
                if (deg[v] <= 1) ends.push_back(v);
            std::size_t start = ends[0];
            if (ends.size() == 2 && simple[ends[1]] < simple[ends[0]]) start = ends[1];
            order.push_back(start);
            std::size_t prev = SIZE_MAX, cur = start;
            while (order.size() < k) {
                std::size_t next = SIZE_MAX;
                for (std::size_t w : adj[cur])
                    if (w != prev) next = w;
                if (next == SIZE_MAX)
                    throw std::logic_error("disconnected walk in simple-root path");
                order.push_back(next);
                prev = cur;
                cur = next;
            }
            type = ADEType('A', static_cast<int>(k));
        } else {
            std::vector<std::vector<std::size_t>> arms;
            for (std::size_t w : adj[trivalent]) arms.push_back(walk_arm(trivalent, w));
            std::sort(arms.begin(), arms.end(),
                      [&](const auto& a, const auto& b) {
                          if (a.size() != b.size()) return a.size() < b.size();
                          return simple[a.back()] < simple[b.back()];
                      });
            const auto la = arms[0].size(), lb = arms[1].size(), lc = arms[2].size();
            if (la == 1 && lb == 1) {
                // D_{lc+3}: long arm reversed, then centre, then the two forks
                type = ADEType('D', static_cast<int>(lc + 3));
                for (auto it = arms[2].rbegin(); it != arms[2].rend(); ++it)
                    order.push_back(*it);
                order.push_back(trivalent);
                std::size_t f1 = arms[0][0], f2 = arms[1][0];
                if (simple[f2] < simple[f1]) std::swap(f1, f2);
                order.push_back(f1);
                order.push_back(f2);
            } else if (la == 1 && lb == 2 && lc >= 2 && lc <= 4) {
                // E_{lc+4}: two-arm gives e1,e2; centre e3; long arm e4..; tail last
                type = ADEType('E', static_cast<int>(lc + 4));
                order.push_back(arms[1][1]);
                order.push_back(arms[1][0]);
                order.push_back(trivalent);
                for (std::size_t v : arms[2]) order.push_back(v);
                order.push_back(arms[0][0]);
            } else {
                throw std::logic_error("branch node arms do not match any ADE diagram");
            }
        }

        ZMat rows(k, l.gram.rows);
        for (std::size_t i = 0; i < k; ++i) rows.set_row(i, simple[order[i]]);
        classified.emplace_back(type, std::move(rows));
    }

    std::sort(classified.begin(), classified.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second.a < b.second.a;
              });

    std::size_t total = 0;
    for (const auto& [t, rows] : classified) total += rows.rows;
    rs.simple_roots = ZMat(total, l.gram.rows);
    std::size_t at = 0;
    for (auto& [t, rows] : classified) {
        rs.components.push_back(t);
        for (std::size_t i = 0; i < rows.rows; ++i) rs.simple_roots.set_row(at++, rows.row(i));
        rs.component_simple_roots.push_back(std::move(rows));
    }
    return rs;
}

}  // namespace

RootSystem enumerate_roots(const IntegerLattice& l) {
    return build_root_system(l, root_vectors(l));
}

RootSystem enumerate_roots_serial(const IntegerLattice& l) {
    return build_root_system(l, root_vectors_serial(l));
}

Embedding root_span(const IntegerLattice& l) {
    std::vector<ZVec> roots = root_vectors(l);
    ZMat m(roots.size(), l.gram.rows);
    for (std::size_t i = 0; i < roots.size(); ++i) m.set_row(i, roots[i]);
    return Embedding{l, row_hnf(m)};
}

std::vector<ADEType> ade_classify(const RootSystem& rs) { return rs.components; }

bool is_root_lattice(const IntegerLattice& l) {
    Embedding span = root_span(l);
    if (span.basis.rows != l.gram.rows) return false;
    Int d = det(span.basis);
    return d == 1 || d == -1;
}

}  // namespace latkit
