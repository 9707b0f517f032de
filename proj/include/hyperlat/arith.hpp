#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperlat {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Error hierarchy. Parse/validation errors map to CLI exit 2,
// MalformedError (a broken internal invariant) to exit 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct NotUnimodularError : Error {
    using Error::Error;
};
struct DegenerateFormError : Error {
    using Error::Error;
};
struct NotHyperbolicError : Error {
    using Error::Error;
};
struct BadReferenceError : Error {
    using Error::Error;
};
struct NotIsometryError : Error {
    using Error::Error;
};
struct NotInOPrimeError : Error {
    using Error::Error;
};
struct LatticeMismatchError : Error {
    using Error::Error;
};
struct NotPolarizedError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct MalformedError : Error {
    using Error::Error;
};

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Canonical string: lowest terms, positive denominator, "p" or "p/q".
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Accepts "p", "p/q", decimal ("1.25", ".5"), and scientific ("1e-12", "2.5e3").
Rat parse_rational(const std::string& text);

inline RatVector to_rat_vector(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

inline bool is_zero_vector(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero_vector(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace hyperlat
