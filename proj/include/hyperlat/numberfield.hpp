#pragma once

#include <memory>

#include "hyperlat/roots.hpp"

namespace hyperlat {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Raised when an inversion meets a zero divisor of a reducible modulus;
// carries a proper factor so the caller can shrink the modulus and retry.
struct FieldSplit {
    IntPoly factor;
};

// Q[x]/(modulus) with a designated real root theta of the modulus. The
// modulus is monic and square-free but not certified irreducible; arithmetic
// stays correct through split-and-retry on the rare zero divisor.
class NumberField {
public:
    static FieldPtr create(const IntPoly& monic_square_free, const RatInterval& theta_interval);
    static FieldPtr rationals();  // degree-1 field, theta = 0

    unsigned degree() const { return static_cast<unsigned>(modulus_.degree()); }
    const IntPoly& modulus() const { return modulus_; }
    const AlgebraicNumber& theta() const { return theta_; }

    // Modulus factor containing theta (used after a FieldSplit).
    FieldPtr shrink(const IntPoly& factor) const;

private:
    NumberField() = default;
    IntPoly modulus_;
    AlgebraicNumber theta_;
};

class NFElem {
public:
    NFElem() = default;
    NFElem(FieldPtr field, RatPoly coeffs);

    static NFElem from_rat(const FieldPtr& field, const Rat& r);
    static NFElem zero(const FieldPtr& field) { return from_rat(field, Rat(0)); }
    static NFElem one(const FieldPtr& field) { return from_rat(field, Rat(1)); }
    static NFElem generator(const FieldPtr& field);  // the class of x

    const FieldPtr& field() const { return field_; }
    const RatPoly& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    std::optional<Rat> rational_value() const;

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator-() const;
    bool operator==(const NFElem& o) const;
    bool operator!=(const NFElem& o) const { return !(*this == o); }

    NFElem inverse() const;  // throws FieldSplit on zero divisor, DomainError on zero

    // Exact sign of the value at theta.
    int sign() const;

    // The value as a certified algebraic number (defining polynomial from
    // the multiplication matrix, interval refined until isolating).
    AlgebraicNumber to_algebraic() const;

private:
    void reduce();

    FieldPtr field_;
    RatPoly c_;  // degree < field degree
};

using NFVector = std::vector<NFElem>;

NFVector nf_vector_from_rat(const FieldPtr& field, const RatVector& v);
bool nf_vector_is_zero(const NFVector& v);

}  // namespace hyperlat
