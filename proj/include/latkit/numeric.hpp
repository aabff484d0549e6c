#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace latkit {

using Int = mpz_class;
using Rat = mpq_class;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Thrown when an input violates an operation's precondition.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed a configured cap. `required`
// reports the bound the caller would need to raise the cap to.
struct resource_error : std::runtime_error {
    Int required;
    resource_error(const std::string& what, Int req)
        : std::runtime_error(what), required(std::move(req)) {}
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int ceil_rat(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Smallest representative of r modulo m (m > 0) in [0, m).
inline Rat mod_into(const Rat& r, const Rat& m) {
    Rat q = r / m;
    Rat f(floor_rat(q));
    Rat out = r - f * m;
    out.canonicalize();
    return out;
}

inline Rat reduce_mod_2z(const Rat& r) { return mod_into(r, Rat(2)); }
inline Rat reduce_mod_1(const Rat& r) { return mod_into(r, Rat(1)); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline bool is_integral(const QVec& v) {
    for (const Rat& x : v)
        if (!is_integral(x)) return false;
    return true;
}

inline Int denominator_lcm(const QVec& v) {
    Int l = 1;
    for (const Rat& x : v) {
        Int g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        l = g;
    }
    return l;
}

inline QVec to_qvec(const ZVec& v) {
    QVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

// Exact decimal or "p/q" string, never a float.
inline std::string to_string(const Rat& r) {
    if (is_integral(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace latkit
