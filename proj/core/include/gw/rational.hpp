#ifndef GW_RATIONAL_HPP
#define GW_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace gw {

// Exact rational number. GMP keeps values canonicalized (lowest terms,
// positive denominator) after every arithmetic operation.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// x^e for integer e (e < 0 requires x != 0).
inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to negative power");
        return Rat(0);
    }
    Rat base = e < 0 ? Rat(1 / x) : x;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline Rat factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

// Renders "num/den", or just "num" when den == 1.
inline std::string rat_str(const Rat& x) {
    return x.get_str();
}

// Parses "num" or "num/den"; throws on malformed input.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace gw

#endif
