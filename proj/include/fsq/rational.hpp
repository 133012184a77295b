#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsq {

// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p" (arbitrary precision).
inline Scalar scalar_from_string(const std::string& s) {
    auto slash = s.find('/');
    Scalar q;
    if (slash == std::string::npos) {
        q = Scalar(mpz_class(s));
    } else {
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
        q = Scalar(num, den);
        q.canonicalize();
    }
    return q;
}

// "p/q", or "p" when the denominator is 1.
inline std::string scalar_to_string(const Scalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

// Requires is_integer(q) and a value that fits in long.
inline long to_long(const Scalar& q) {
    if (!is_integer(q)) throw std::domain_error("scalar is not an integer: " + scalar_to_string(q));
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer too large for long");
    return q.get_num().get_si();
}

}  // namespace fsq
