#include "latkit/lattice.hpp"

#include <algorithm>

namespace latkit {

ADEType::ADEType(char f, int n) : family(f), index(n) {
    bool ok = (f == 'A' && n >= 1) || (f == 'D' && n >= 4) || (f == 'E' && n >= 6 && n <= 8);
    if (!ok) throw domain_error("invalid ADE type " + std::string(1, f) + std::to_string(n));
}

IntegerLattice IntegerLattice::make(ZMat g, std::vector<std::string> labels) {
    if (!is_symmetric(g)) throw domain_error("Gram matrix is not symmetric");
    if (g.rows == 0) throw domain_error("empty Gram matrix");
    if (det(g) == 0) throw domain_error("degenerate Gram matrix");
    if (!labels.empty() && labels.size() != g.rows)
        throw domain_error("label count does not match rank");
    return IntegerLattice{std::move(g), std::move(labels), false};
}

IntegerLattice IntegerLattice::make_span(ZMat g, std::vector<std::string> labels) {
    if (!is_symmetric(g)) throw domain_error("Gram matrix is not symmetric");
    bool degen = (g.rows == 0) || det(g) == 0;
    return IntegerLattice{std::move(g), std::move(labels), degen};
}

bool IntegerLattice::is_even() const {
    for (std::size_t i = 0; i < gram.rows; ++i)
        if (gram.at(i, i) % 2 != 0) return false;
    return true;
}

ZMat Embedding::induced_gram() const {
    return mul(mul(basis, ambient.gram), transpose(basis));
}

Embedding Embedding::make(IntegerLattice ambient, ZMat basis) {
    if (basis.cols != ambient.gram.rows)
        throw domain_error("embedding vectors have wrong length");
    if (basis.rows > 0 && latkit::rank(basis) != basis.rows)
        throw domain_error("embedding vectors are linearly dependent");
    return Embedding{std::move(ambient), std::move(basis)};
}

IntegerLattice make_ade(const ADEType& t) {
    const int n = t.index;
    ZMat g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, i) = -2;
    auto join = [&](int i, int j) {
        g.at(i, j) = 1;
        g.at(j, i) = 1;
    };
    switch (t.family) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) join(i, i + 1);
            break;
        case 'D':
            // path e1..e_{n-2}, forks e_{n-1} and e_n on e_{n-2}
            for (int i = 0; i + 1 < n - 2; ++i) join(i, i + 1);
            join(n - 3, n - 2);
            join(n - 3, n - 1);
            break;
        case 'E':
            // path e1..e_{n-1}, with e_n attached to e3
            for (int i = 0; i + 1 < n - 1; ++i) join(i, i + 1);
            join(2, n - 1);
            break;
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i + 1);
    return IntegerLattice::make(std::move(g), std::move(labels));
}

IntegerLattice make_hyperbolic() {
    ZMat g{{0, 1}, {1, 0}};
    return IntegerLattice::make(std::move(g), {"u1", "u2"});
}

IntegerLattice direct_sum(std::span<const IntegerLattice> parts) {
    if (parts.empty()) throw domain_error("direct sum of an empty list");
    int total = 0;
    for (const auto& p : parts) total += p.rank();
    ZMat g(total, total);
    std::vector<std::string> labels;
    labels.reserve(total);
    int off = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& p = parts[k];
        for (int i = 0; i < p.rank(); ++i)
            for (int j = 0; j < p.rank(); ++j) g.at(off + i, off + j) = p.gram.at(i, j);
        for (int i = 0; i < p.rank(); ++i) {
            std::string base =
                p.labels.empty() ? "e" + std::to_string(i + 1) : p.labels[i];
            labels.push_back(std::to_string(k + 1) + "." + base);
        }
        off += p.rank();
    }
    return IntegerLattice::make(std::move(g), std::move(labels));
}

IntegerLattice direct_sum(std::initializer_list<IntegerLattice> parts) {
    return direct_sum(std::span<const IntegerLattice>(parts.begin(), parts.size()));
}

Int discriminant(const IntegerLattice& l) {
    Int d = det(l.gram);
    return abs(d);
}

Signature signature(const IntegerLattice& l) {
    const std::size_t n = l.gram.rows;
    QMat q(l.gram);
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        // pick a nonzero diagonal pivot, creating one by a congruence move
        // (e_i -> e_i + e_j) when the trailing diagonal is entirely zero
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (q.at(i, i) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (q.at(i, j) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == n) break;  // trailing block is zero (degenerate input)
            for (std::size_t c = 0; c < n; ++c) q.at(bi, c) += q.at(bj, c);
            for (std::size_t r = 0; r < n; ++r) q.at(r, bi) += q.at(r, bj);
            p = bi;
        }
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(q.at(k, c), q.at(p, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(q.at(r, k), q.at(r, p));
        }
        const Rat d = q.at(k, k);
        if (d > 0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (q.at(i, k) == 0) continue;
            Rat f = q.at(i, k) / d;
            for (std::size_t j = k; j < n; ++j) q.at(i, j) -= f * q.at(k, j);
        }
        for (std::size_t j = k + 1; j < n; ++j) q.at(k, j) = 0;
    }
    return sig;
}

Rat inner_product(const IntegerLattice& l, const QVec& v, const QVec& w) {
    if (v.size() != l.gram.rows || w.size() != l.gram.rows)
        throw domain_error("vector length does not match lattice rank");
    Rat out(0);
    for (std::size_t i = 0; i < l.gram.rows; ++i) {
        if (v[i] == 0) continue;
        Rat acc(0);
        for (std::size_t j = 0; j < l.gram.cols; ++j) {
            if (l.gram.at(i, j) == 0 || w[j] == 0) continue;
            acc += Rat(l.gram.at(i, j)) * w[j];
        }
        out += v[i] * acc;
    }
    return out;
}

Embedding orthogonal_complement(const Embedding& sub) {
    // kernel of v -> (v . s_i) over the ambient basis; saturated by construction
    ZMat pairing = mul(sub.basis, sub.ambient.gram);  // k x n
    ZMat comp = kernel_basis(pairing);
    return Embedding{sub.ambient, std::move(comp)};
}

IntegerLattice sign_flip(const IntegerLattice& l) {
    ZMat g = l.gram;
    for (auto& x : g.a) x = -x;
    return IntegerLattice{std::move(g), l.labels, l.degenerate};
}

}  // namespace latkit
