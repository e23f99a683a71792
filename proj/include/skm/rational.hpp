#pragma once

#include <gmpxx.h>

#include <string>

namespace skm {

// Exact arithmetic backing all counting and series code. Path counts pass
// 64 bits near length 90, so GMP integers/rationals are used end to end.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace skm
