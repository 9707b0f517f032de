#pragma once

#include "hyperlat/roots.hpp"

namespace hyperlat {

// Spectral-radius pattern of a monic reciprocal-compatible polynomial:
// every root on the unit circle (RhoOne), a degree-2 unit carrier with a
// real root above 1 (QuadraticInteger), or a Salem carrier (Salem).
// Malformed marks input matching none of the three patterns.
struct SpectralKind {
    enum class Tag { RhoOne, QuadraticInteger, Salem, Malformed };

    Tag tag = Tag::Malformed;
    std::optional<AlgebraicNumber> rho;  // set for QuadraticInteger and Salem
    IntPoly carrier;                     // cyclotomic-free square-free factor

    bool is_rho_one() const { return tag == Tag::RhoOne; }
    bool is_quadratic() const { return tag == Tag::QuadraticInteger; }
    bool is_salem() const { return tag == Tag::Salem; }
    bool is_malformed() const { return tag == Tag::Malformed; }
};

// Requires p monic with p(0) = +-1; strips cyclotomic factors internally.
// The Salem pattern (exactly two real roots rho > 1 > 1/rho, all remaining
// roots on the unit circle) is certified exactly through the trace
// polynomial: all its roots real, exactly one above 2, none below -2.
SpectralKind salem_test(const IntPoly& p);

}  // namespace hyperlat
