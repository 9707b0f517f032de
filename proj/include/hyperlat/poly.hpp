#pragma once

#include <optional>
#include <string>

#include "hyperlat/arith.hpp"

namespace hyperlat {

// Rational polynomial, ascending coefficients, no trailing zeros.
using RatPoly = std::vector<Rat>;

// Integer polynomial with arbitrary-precision coefficients, ascending
// degree order. The zero polynomial has an empty coefficient vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(IntVector coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(const Int& a) { return IntPoly(IntVector{a}); }
    // x - a
    static IntPoly linear_root(const Rat& a);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const IntVector& coeffs() const { return c_; }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    const Int& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const IntPoly& other) const { return c_ == other.c_; }
    bool operator!=(const IntPoly& other) const { return !(*this == other); }

    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator-() const;
    IntPoly scaled(const Int& k) const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return sign_of(eval(x)); }

    IntPoly derivative() const;

    Int content() const;           // gcd of coefficients, nonnegative
    IntPoly primitive_part() const;  // content removed, leading coefficient > 0

    // Coefficients reversed: x^deg * p(1/x). Requires nonzero constant term.
    IntPoly reciprocal() const;
    bool is_palindromic() const;

    // Exact division; returns nullopt when the division has a remainder or
    // rational quotient coefficients.
    std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

    std::string to_string() const;  // human-readable, ascending "c0 + c1 x + ..."

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    IntVector c_;
};

// gcd of integer polynomials: primitive with positive leading coefficient;
// gcd(0, p) = primitive part of p.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), primitive: same distinct roots, all simple.
IntPoly square_free_part(const IntPoly& p);

// Cyclotomic polynomial of index n.
IntPoly cyclotomic(unsigned n);

// All indices n with Euler phi(n) <= bound, ascending.
std::vector<unsigned> cyclotomic_indices_up_to_phi(unsigned bound);

// Divides out every cyclotomic factor Phi_n with phi(n) <= deg(p),
// with multiplicity. Reports one index per removed factor when asked.
IntPoly strip_cyclotomic_factors(const IntPoly& p, std::vector<unsigned>* removed = nullptr);

// True iff every complex root of monic p is a root of unity, decided by
// full cyclotomic stripping. Throws DomainError when p is not monic.
bool is_quasi_unipotent_poly(const IntPoly& p);

// For reciprocal p of even degree 2m with p(0) = 1: the degree-m polynomial
// T with p(x) = x^m T(x + 1/x).
IntPoly trace_polynomial(const IntPoly& p);

// RatPoly helpers (internal substrate for gcd and field arithmetic).
RatPoly rat_poly(const IntPoly& p);
int rat_poly_degree(const RatPoly& p);
void rat_poly_normalize(RatPoly& p);
RatPoly rat_poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly rat_poly_sub(const RatPoly& a, const RatPoly& b);
// division with remainder; quotient optional
RatPoly rat_poly_rem(const RatPoly& a, const RatPoly& b, RatPoly* quotient = nullptr);
IntPoly clear_denominators(const RatPoly& p);  // primitive, positive leading

}  // namespace hyperlat
