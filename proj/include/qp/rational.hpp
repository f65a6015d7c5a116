#pragma once

// Exact scalars. Integers and rationals are GMP bignums; mpq_class keeps the
// canonical form we rely on everywhere (reduced, positive denominator), and
// its decimal string format is exactly the wire format "p/q" (or "p").

#include <gmpxx.h>

#include <string>

#include "qp/errors.hpp"

namespace qp {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw BadParamsError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Int parse_int(const std::string& s) {
    Int z;
    if (z.set_str(s, 10) != 0) throw ParseError("bad integer literal: " + s);
    return z;
}

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for any integer e; negative exponents invert (base must be nonzero).
inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e > 0) return Rat(0);
        throw BadParamsError("0 raised to a negative power");
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(pow_int(base.get_num(), a), pow_int(base.get_den(), a));
    r.canonicalize();
    if (e < 0) r = 1 / r;
    return r;
}

inline int sign(const Rat& q) { return sgn(q); }

// Exact square root when q is the square of a rational; false otherwise.
inline bool rat_sqrt(const Rat& q, Rat& out) {
    if (q < 0) return false;
    Int num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = Rat(rn, rd);
    out.canonicalize();
    return true;
}

} // namespace qp
