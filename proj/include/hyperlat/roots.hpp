#pragma once

#include <optional>

#include "hyperlat/poly.hpp"

namespace hyperlat {

struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw DomainError("interval endpoints out of order");
    }

    Rat width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool disjoint(const RatInterval& other) const { return hi < other.lo || other.hi < lo; }
};

// Sturm chain of a square-free polynomial. Root counting requires
// non-root endpoints.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& square_free);

    int variations(const Rat& x) const;
    // number of roots in the open interval (a, b); a < b, q(a) != 0 != q(b)
    int count_roots(const Rat& a, const Rat& b) const;
    int count_all_roots() const;

    const IntPoly& poly() const { return chain_.front(); }
    // a bound B with every real root in (-B, B), and q(+-B) != 0
    Rat root_bound() const;

private:
    std::vector<IntPoly> chain_;
};

// One interval per distinct real root of p (computed on the square-free
// part), pairwise disjoint including endpoints, each containing exactly one
// root with nonzero polynomial signs at its endpoints.
std::vector<RatInterval> isolate_real_roots(const IntPoly& p);

// Real algebraic number: square-free primitive defining polynomial plus an
// isolating interval. A point interval designates an exact rational root.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;  // the rational 0

    static AlgebraicNumber from_rational(const Rat& r);
    static AlgebraicNumber one() { return from_rational(Rat(1)); }
    // Validates that exactly one root of p lies in iv (after square-free
    // reduction); endpoint signs must be nonzero unless iv is a point.
    static AlgebraicNumber from_root(const IntPoly& p, const RatInterval& iv);

    const IntPoly& poly() const { return poly_; }
    const RatInterval& interval() const { return iv_; }

    bool is_rational() const;
    std::optional<Rat> rational_value() const;

    void refine_to(const Rat& width);
    RatInterval refined(const Rat& width) const;
    void refine_step();

    int sign() const;                 // sign of the number
    int compare_rat(const Rat& r) const;  // sign of (value - r)

    AlgebraicNumber inverse() const;       // requires nonzero
    AlgebraicNumber pow(unsigned long s) const;  // s >= 1

    // Exact product; degree of the resulting defining polynomial is
    // deg(a)*deg(b), rejected above the guard.
    static AlgebraicNumber multiply(const AlgebraicNumber& a, const AlgebraicNumber& b,
                                    unsigned degree_guard = 64);

    static bool equal(const AlgebraicNumber& a, const AlgebraicNumber& b);
    static bool pow_equal(const AlgebraicNumber& a, unsigned long s, const AlgebraicNumber& b,
                          unsigned long t);
    static int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

private:
    IntPoly poly_ = IntPoly{0, 1};  // square-free, primitive, positive leading
    RatInterval iv_;                // default [0, 0]
    int sign_lo_ = 0;  // sign of poly_ at lo (0 only for point intervals)
    int sign_hi_ = 0;
};

// Certified enclosure of log(x) for rational x > 0, width <= eps.
RatInterval log_interval(const Rat& x, const Rat& eps);

// Certified enclosure of log(a) of width <= eps for a > 0.
RatInterval log_of(const AlgebraicNumber& a, const Rat& eps);

}  // namespace hyperlat
