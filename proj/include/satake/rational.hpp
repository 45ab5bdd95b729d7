#ifndef SATAKE_RATIONAL_HPP
#define SATAKE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "satake/error.hpp"

namespace satake {

// Exact rational scalar used everywhere.  mpq_class keeps values canonical
// (reduced, positive denominator) through its arithmetic operators.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw Error(errc::internal, "rational is not a machine integer: " + r.get_str());
    return r.get_num().get_si();
}

// Canonical rendering: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Parse "p" or "p/q" (arbitrary precision).  Rejects anything else.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error(errc::parse_error, "empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw Error(errc::parse_error, "bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Floor of a rational as an exact integer.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

using QVec = std::vector<Rat>;
using IVec = std::vector<long>;

// Three-way compare: size first, then elementwise.  Returns <0, 0, >0.
int qvec_cmp(const QVec& a, const QVec& b);

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& a);
bool qvec_is_zero(const QVec& a);

// Dot product of an integer functional with a rational vector.
Rat ivec_pair(const IVec& f, const QVec& v);

}  // namespace satake

#endif
