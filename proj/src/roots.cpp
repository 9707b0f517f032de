#include "hyperlat/roots.hpp"

#include <algorithm>

#include "hyperlat/linalg.hpp"

namespace hyperlat {

SturmChain::SturmChain(const IntPoly& square_free) {
    if (square_free.is_zero()) throw DomainError("Sturm chain of zero polynomial");
    chain_.push_back(square_free.primitive_part());
    if (chain_.front().degree() == 0) return;
    chain_.push_back(square_free.derivative().primitive_part());
    while (chain_.back().degree() > 0) {
        RatPoly r = rat_poly_rem(rat_poly(chain_[chain_.size() - 2]), rat_poly(chain_.back()));
        rat_poly_normalize(r);
        if (r.empty()) {
            // nontrivial gcd: input was not square-free
            throw DomainError("Sturm chain requires a square-free polynomial");
        }
        IntPoly next = clear_denominators(r);
        // primitive normalization must keep sign: clear_denominators gives a
        // positive leading coefficient, restore the real sign of -r
        if (sign_of(r.back()) > 0) next = -next;
        chain_.push_back(next);
    }
}

int SturmChain::variations(const Rat& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    if (a >= b) throw DomainError("count_roots: empty interval");
    if (chain_.front().sign_at(a) == 0 || chain_.front().sign_at(b) == 0)
        throw DomainError("count_roots: endpoint is a root");
    return variations(a) - variations(b);
}

Rat SturmChain::root_bound() const {
    const IntPoly& q = chain_.front();
    if (q.degree() <= 0) return Rat(1);
    Int maxabs(0);
    for (int i = 0; i < q.degree(); ++i) {
        Int a = abs(q[static_cast<std::size_t>(i)]);
        if (a > maxabs) maxabs = a;
    }
    Int lead = abs(q.leading());
    // Cauchy: every root has |x| < 1 + max|a_i|/|a_n| <= 2 + max/lead rounded up
    Int bound = 2 + maxabs / lead;
    return Rat(bound);
}

int SturmChain::count_all_roots() const {
    if (chain_.front().degree() <= 0) return 0;
    Rat b = root_bound();
    return count_roots(-b, b);
}

namespace {

// A point of (a, b) that is not a root of q, walking the dyadic grid.
Rat pick_nonroot_point(const IntPoly& q, const Rat& a, const Rat& b) {
    Rat half(1, 2);
    Rat mid = (a + b) * half;
    if (q.sign_at(mid) != 0) return mid;
    // try a + (b-a) * j / 2^t, j odd
    for (int t = 2; t <= 64; ++t) {
        Int den = Int(1) << t;
        for (Int j(1); j < den; j += 2) {
            Rat point = a + (b - a) * make_rat(j, den);
            if (q.sign_at(point) != 0) return point;
        }
    }
    throw MalformedError("pick_nonroot_point: could not avoid roots");
}

void isolate_rec(const SturmChain& chain, const Rat& a, const Rat& b, int count,
                 std::vector<RatInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.emplace_back(a, b);
        return;
    }
    const IntPoly& q = chain.poly();
    Rat m = pick_nonroot_point(q, a, b);
    int left = chain.count_roots(a, m);
    isolate_rec(chain, a, m, left, out);
    isolate_rec(chain, m, b, count - left, out);
}

// Shrink an isolating interval (sign change at the endpoints) until the
// given point is strictly outside it. Collapses to a point interval when a
// bisection point hits the root exactly.
RatInterval shrink_away_from(const IntPoly& q, RatInterval iv, const Rat& point) {
    int slo = q.sign_at(iv.lo);
    int shi = q.sign_at(iv.hi);
    Rat half(1, 2);
    while (iv.lo == point || iv.hi == point) {
        Rat m = (iv.lo + iv.hi) * half;
        int sm = q.sign_at(m);
        if (sm == 0) return RatInterval(m, m);
        if (sm == slo) {
            iv.lo = m;
        } else {
            iv.hi = m;
            shi = sm;
        }
    }
    (void)shi;
    return iv;
}

}  // namespace

std::vector<RatInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
    IntPoly q = square_free_part(p);
    if (q.degree() <= 0) return {};

    SturmChain chain(q);
    Rat b = chain.root_bound();
    int total = chain.count_roots(-b, b);
    std::vector<RatInterval> out;
    isolate_rec(chain, -b, b, total, out);
    std::sort(out.begin(), out.end(),
              [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });

    // detach intervals sharing an endpoint
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        if (out[i].hi == out[i + 1].lo) out[i] = shrink_away_from(q, out[i], out[i].hi);
    }
    return out;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& r) {
    AlgebraicNumber a;
    a.poly_ = IntPoly::linear_root(r);
    a.iv_ = RatInterval(r, r);
    a.sign_lo_ = 0;
    a.sign_hi_ = 0;
    return a;
}

AlgebraicNumber AlgebraicNumber::from_root(const IntPoly& p, const RatInterval& iv) {
    if (p.is_zero()) throw DomainError("algebraic number needs a nonzero polynomial");
    AlgebraicNumber a;
    a.poly_ = square_free_part(p);
    if (a.poly_.degree() < 1) throw DomainError("algebraic number needs a root");
    a.iv_ = iv;
    if (iv.is_point()) {
        if (a.poly_.sign_at(iv.lo) != 0)
            throw DomainError("point interval does not hit a root");
        a.sign_lo_ = a.sign_hi_ = 0;
        // normalize the defining polynomial of a rational value
        Rat r = iv.lo;
        a.poly_ = IntPoly::linear_root(r);
        return a;
    }
    a.sign_lo_ = a.poly_.sign_at(iv.lo);
    a.sign_hi_ = a.poly_.sign_at(iv.hi);
    if (a.sign_lo_ == 0 || a.sign_hi_ == 0)
        throw DomainError("isolating interval endpoints must not be roots");
    SturmChain chain(a.poly_);
    if (chain.count_roots(iv.lo, iv.hi) != 1)
        throw DomainError("interval does not isolate exactly one root");
    return a;
}

bool AlgebraicNumber::is_rational() const { return iv_.is_point() || poly_.degree() == 1; }

std::optional<Rat> AlgebraicNumber::rational_value() const {
    if (iv_.is_point()) return iv_.lo;
    if (poly_.degree() == 1) return make_rat(-poly_[0], poly_[1]);
    return std::nullopt;
}

void AlgebraicNumber::refine_step() {
    if (iv_.is_point()) return;
    Rat m = (iv_.lo + iv_.hi) * Rat(1, 2);
    int sm = poly_.sign_at(m);
    if (sm == 0) {
        iv_ = RatInterval(m, m);
        sign_lo_ = sign_hi_ = 0;
        poly_ = IntPoly::linear_root(m);
        return;
    }
    if (sm == sign_lo_)
        iv_.lo = m;
    else
        iv_.hi = m;
}

void AlgebraicNumber::refine_to(const Rat& width) {
    if (width <= 0) throw DomainError("refine: width must be positive");
    while (!iv_.is_point() && iv_.width() > width) refine_step();
}

RatInterval AlgebraicNumber::refined(const Rat& width) const {
    AlgebraicNumber copy = *this;
    copy.refine_to(width);
    return copy.interval();
}

int AlgebraicNumber::compare_rat(const Rat& r) const {
    auto cmp3 = [](const Rat& x, const Rat& y) { return x < y ? -1 : (x == y ? 0 : 1); };
    if (auto v = rational_value()) return cmp3(*v, r);
    // exact: r is the designated root iff poly_(r) = 0 and r lies inside
    if (iv_.contains(r) && poly_.sign_at(r) == 0) return 0;
    AlgebraicNumber copy = *this;
    while (copy.iv_.contains(r)) {
        copy.refine_step();
        if (auto v = copy.rational_value()) return cmp3(*v, r);
    }
    return copy.iv_.hi < r ? -1 : 1;
}

int AlgebraicNumber::sign() const { return compare_rat(Rat(0)); }

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (compare_rat(Rat(0)) == 0) throw DomainError("inverse of zero");
    if (auto v = rational_value()) return from_rational(1 / *v);
    AlgebraicNumber copy = *this;
    // drop a possible root at 0 from the carrier, then separate from 0
    while (copy.iv_.contains(Rat(0))) copy.refine_step();
    IntPoly rev = copy.poly_;
    if (rev.coeffs().front() == 0) {
        IntVector c(rev.coeffs().begin() + 1, rev.coeffs().end());
        rev = IntPoly(std::move(c));
    }
    rev = rev.reciprocal().primitive_part();
    RatInterval iv(1 / copy.iv_.hi, 1 / copy.iv_.lo);
    return from_root(rev, iv);
}

namespace {

// interval power for an interval not containing 0
RatInterval power_interval(const RatInterval& iv, unsigned long s) {
    Rat lo(1), hi(1);
    for (unsigned long i = 0; i < s; ++i) {
        lo *= iv.lo;
        hi *= iv.hi;
    }
    if (lo <= hi) return RatInterval(lo, hi);
    return RatInterval(hi, lo);
}

AlgebraicNumber root_in_interval(const IntPoly& defining, const AlgebraicNumber& base,
                                 unsigned long s) {
    // Refine base until base^s isolates exactly one root of defining.
    IntPoly q = square_free_part(defining);
    SturmChain chain(q);
    AlgebraicNumber b = base;
    while (b.interval().contains(Rat(0))) b.refine_step();
    for (int iter = 0; iter < 4096; ++iter) {
        RatInterval piv = power_interval(b.interval(), s);
        if (q.sign_at(piv.lo) != 0 && q.sign_at(piv.hi) != 0 &&
            (piv.is_point() || chain.count_roots(piv.lo, piv.hi) == 1))
            return AlgebraicNumber::from_root(q, piv);
        if (auto v = b.rational_value()) {
            Rat pw(1);
            for (unsigned long i = 0; i < s; ++i) pw *= *v;
            return AlgebraicNumber::from_rational(pw);
        }
        b.refine_step();
    }
    throw MalformedError("power interval failed to isolate");
}

}  // namespace

AlgebraicNumber AlgebraicNumber::pow(unsigned long s) const {
    if (s == 0) return from_rational(Rat(1));
    if (s == 1) return *this;
    if (auto v = rational_value()) {
        Rat pw(1);
        for (unsigned long i = 0; i < s; ++i) pw *= *v;
        return from_rational(pw);
    }
    // defining polynomial of the s-th power: char poly of companion^s
    RatPoly monic = rat_poly(poly_);
    Rat inv = 1 / monic.back();
    for (auto& c : monic) c *= inv;
    RatMatrix comp = companion(monic);

    RatMatrix cp = RatMatrix::identity(comp.rows());
    RatMatrix base = comp;
    unsigned long e = s;
    while (e > 0) {
        if (e & 1UL) cp = cp * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    IntPoly defining = clear_denominators(char_poly_rat(cp));
    return root_in_interval(defining, *this, s);
}

AlgebraicNumber AlgebraicNumber::multiply(const AlgebraicNumber& a, const AlgebraicNumber& b,
                                          unsigned degree_guard) {
    if (auto v = a.rational_value()) {
        if (*v == 0) return from_rational(Rat(0));
        // roots of p(x / v): scale the designated root of b by v
        RatPoly p = rat_poly(b.poly_);
        Rat f(1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            p[i] /= f;
            f *= *v;
        }
        IntPoly q = square_free_part(clear_denominators(p));
        SturmChain chain(q);
        AlgebraicNumber bb = b;
        while (true) {
            Rat d1 = bb.interval().lo * *v;
            Rat d2 = bb.interval().hi * *v;
            RatInterval cand = d1 <= d2 ? RatInterval(d1, d2) : RatInterval(d2, d1);
            if (cand.is_point()) return from_rational(cand.lo);
            if (q.sign_at(cand.lo) != 0 && q.sign_at(cand.hi) != 0 &&
                chain.count_roots(cand.lo, cand.hi) == 1)
                return from_root(q, cand);
            bb.refine_step();
        }
    }
    if (b.rational_value()) return multiply(b, a, degree_guard);

    unsigned da = static_cast<unsigned>(a.poly_.degree());
    unsigned db = static_cast<unsigned>(b.poly_.degree());
    if (da * db > degree_guard) throw DomainError("algebraic product exceeds degree guard");

    auto monic_of = [](const IntPoly& p) {
        RatPoly m = rat_poly(p);
        Rat inv = 1 / m.back();
        for (auto& c : m) c *= inv;
        return m;
    };
    RatMatrix ca = companion(monic_of(a.poly_));
    RatMatrix cb = companion(monic_of(b.poly_));
    RatMatrix kron = kronecker_product(ca, cb);
    IntPoly defining = clear_denominators(char_poly_rat(kron));
    IntPoly q = square_free_part(defining);
    SturmChain chain(q);

    AlgebraicNumber aa = a;
    AlgebraicNumber bb = b;
    while (aa.interval().contains(Rat(0))) aa.refine_step();
    while (bb.interval().contains(Rat(0))) bb.refine_step();
    while (true) {
        Rat c1 = aa.interval().lo * bb.interval().lo;
        Rat c2 = aa.interval().lo * bb.interval().hi;
        Rat c3 = aa.interval().hi * bb.interval().lo;
        Rat c4 = aa.interval().hi * bb.interval().hi;
        Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
        Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
        if (lo == hi) return from_rational(lo);
        if (q.sign_at(lo) != 0 && q.sign_at(hi) != 0 && chain.count_roots(lo, hi) == 1)
            return from_root(q, RatInterval(lo, hi));
        aa.refine_step();
        bb.refine_step();
    }
}

bool AlgebraicNumber::equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    auto ra = a.rational_value();
    auto rb = b.rational_value();
    if (ra && rb) return *ra == *rb;
    if (ra) return b.compare_rat(*ra) == 0;
    if (rb) return a.compare_rat(*rb) == 0;

    IntPoly g = poly_gcd(a.poly_, b.poly_);
    if (g.degree() < 1) return false;  // no common root at all
    SturmChain gchain(g);

    auto counts_one = [&](const AlgebraicNumber& x) {
        // endpoints of x's interval are non-roots of x.poly_, hence of g | poly
        return gchain.count_roots(x.iv_.lo, x.iv_.hi) == 1;
    };
    if (!counts_one(a) || !counts_one(b)) return false;

    AlgebraicNumber aa = a;
    AlgebraicNumber bb = b;
    // Isolate the designated g-roots, then merge or separate.
    while (true) {
        if (aa.iv_.disjoint(bb.iv_)) return false;
        Rat lo = std::min(aa.iv_.lo, bb.iv_.lo);
        Rat hi = std::max(aa.iv_.hi, bb.iv_.hi);
        if (g.sign_at(lo) != 0 && g.sign_at(hi) != 0 && gchain.count_roots(lo, hi) == 1)
            return true;
        aa.refine_step();
        bb.refine_step();
        auto va = aa.rational_value();
        auto vb = bb.rational_value();
        if (va && vb) return *va == *vb;
        if (va) return bb.compare_rat(*va) == 0;
        if (vb) return aa.compare_rat(*vb) == 0;
    }
}

bool AlgebraicNumber::pow_equal(const AlgebraicNumber& a, unsigned long s,
                                const AlgebraicNumber& b, unsigned long t) {
    if (s == 0 || t == 0) throw DomainError("pow_equal: exponents must be positive");
    return equal(a.pow(s), b.pow(t));
}

int AlgebraicNumber::compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (equal(a, b)) return 0;
    AlgebraicNumber aa = a;
    AlgebraicNumber bb = b;
    while (!aa.iv_.disjoint(bb.iv_)) {
        aa.refine_step();
        bb.refine_step();
    }
    return aa.iv_.hi < bb.iv_.lo ? -1 : 1;
}

namespace {

// 2*atanh(z) = log((1+z)/(1-z)) with certified truncation, 0 <= z < 1/2.
RatInterval atanh_twice(const Rat& z, const Rat& eps) {
    if (z == 0) return RatInterval(Rat(0), Rat(0));
    Rat sum(0);
    Rat zsq = z * z;
    Rat term = z;  // z^{2k+1}
    unsigned long k = 0;
    while (true) {
        sum += term / Rat(static_cast<long>(2 * k + 1));
        term *= zsq;
        ++k;
        // tail bound: term / (2k+1) * (1 / (1 - z^2))
        Rat tail = term / Rat(static_cast<long>(2 * k + 1)) / (Rat(1) - zsq);
        if (Rat(2) * tail <= eps) {
            Rat lo = Rat(2) * sum;
            return RatInterval(lo, lo + Rat(2) * tail);
        }
    }
}

}  // namespace

RatInterval log_interval(const Rat& x, const Rat& eps) {
    if (x <= 0) throw DomainError("log of non-positive rational");
    if (x == 1) return RatInterval(Rat(0), Rat(0));
    if (x < 1) {
        RatInterval pos = log_interval(1 / x, eps);
        return RatInterval(-pos.hi, -pos.lo);
    }
    // reduce x = y * 2^k with y in [1, 2)
    long k = 0;
    Rat y = x;
    while (y >= 2) {
        y /= 2;
        ++k;
    }
    Rat part = eps / Rat(2 * (k + 1));
    RatInterval acc = atanh_twice((y - 1) / (y + 1), part);
    if (k > 0) {
        RatInterval log2 = atanh_twice(Rat(1, 3), part);
        acc.lo += Rat(k) * log2.lo;
        acc.hi += Rat(k) * log2.hi;
    }
    return acc;
}

namespace {

// Widen to enclosing dyadic bounds with denominator 2^bits; keeps the
// enclosure certified while shortening the printed rationals.
RatInterval round_outward(const RatInterval& iv, unsigned long bits) {
    Int den = Int(1) << bits;
    Rat lo = make_rat(rat_floor(iv.lo * Rat(den)), den);
    Rat hi = make_rat(rat_ceil(iv.hi * Rat(den)), den);
    return RatInterval(lo, hi);
}

}  // namespace

RatInterval log_of(const AlgebraicNumber& a, const Rat& eps) {
    if (auto v = a.rational_value()) {
        if (*v == 1) return RatInterval(Rat(0), Rat(0));
        return log_interval(*v, eps);
    }
    AlgebraicNumber x = a;
    // positive separation, then width small enough that log spread <= eps/4
    while (x.interval().lo <= 0) x.refine_step();
    Rat target = eps / 4 * x.interval().lo;
    if (target > eps / 4) target = eps / 4;
    x.refine_to(target);
    Rat eighth = eps / 8;
    RatInterval lo_enc = log_interval(x.interval().lo, eighth);
    RatInterval hi_enc = log_interval(x.interval().hi, eighth);
    RatInterval raw(lo_enc.lo, hi_enc.hi);
    // spread so far <= eps/4 + eps/4; dyadic rounding adds <= 2*2^-bits
    unsigned long bits = 1;
    while (make_rat(Int(1), Int(1) << bits) * 8 > eps && bits < 4096) ++bits;
    return round_outward(raw, bits);
}

}  // namespace hyperlat
