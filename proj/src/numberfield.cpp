#include "hyperlat/numberfield.hpp"

#include "hyperlat/linalg.hpp"

namespace hyperlat {

FieldPtr NumberField::create(const IntPoly& monic_square_free, const RatInterval& theta_interval) {
    if (!monic_square_free.is_monic()) throw DomainError("field modulus must be monic");
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->modulus_ = monic_square_free;
    f->theta_ = AlgebraicNumber::from_root(monic_square_free, theta_interval);
    return f;
}

FieldPtr NumberField::rationals() {
    // Q[x]/(x), theta = 0
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->modulus_ = IntPoly{0, 1};
    f->theta_ = AlgebraicNumber::from_rational(Rat(0));
    return f;
}

FieldPtr NumberField::shrink(const IntPoly& factor) const {
    IntPoly f = factor.primitive_part();
    auto complement = modulus_.divide_exact(f);
    if (!complement) throw MalformedError("field split factor does not divide modulus");

    auto contains_theta = [&](const IntPoly& candidate) {
        if (candidate.degree() < 1) return false;
        SturmChain chain(square_free_part(candidate));
        AlgebraicNumber th = theta_;
        // ensure the interval endpoints are non-roots of the candidate
        while (true) {
            const RatInterval& iv = th.interval();
            if (iv.is_point()) return candidate.sign_at(iv.lo) == 0;
            if (candidate.sign_at(iv.lo) != 0 && candidate.sign_at(iv.hi) != 0)
                return chain.count_roots(iv.lo, iv.hi) == 1;
            th.refine_step();
        }
    };

    IntPoly chosen = contains_theta(f) ? f : *complement;
    // make monic: the modulus is monic, so a monic rescale is exact
    if (!chosen.is_monic()) {
        RatPoly m = rat_poly(chosen);
        Rat inv = 1 / m.back();
        for (auto& c : m) c *= inv;
        chosen = clear_denominators(m);
        if (!chosen.is_monic())
            throw MalformedError("field split factor could not be made monic");
    }
    AlgebraicNumber th = theta_;
    while (!th.interval().is_point() &&
           (chosen.sign_at(th.interval().lo) == 0 || chosen.sign_at(th.interval().hi) == 0))
        th.refine_step();
    return create(chosen, th.interval());
}

NFElem::NFElem(FieldPtr field, RatPoly coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    reduce();
}

void NFElem::reduce() {
    if (!field_) throw DomainError("element without field");
    rat_poly_normalize(c_);
    if (rat_poly_degree(c_) >= static_cast<int>(field_->degree()))
        c_ = rat_poly_rem(c_, rat_poly(field_->modulus()));
}

NFElem NFElem::from_rat(const FieldPtr& field, const Rat& r) {
    RatPoly c;
    if (r != 0) c.push_back(r);
    return NFElem(field, std::move(c));
}

NFElem NFElem::generator(const FieldPtr& field) {
    return NFElem(field, RatPoly{Rat(0), Rat(1)});
}

std::optional<Rat> NFElem::rational_value() const {
    if (c_.empty()) return Rat(0);
    if (c_.size() == 1) return c_[0];
    return std::nullopt;
}

NFElem NFElem::operator+(const NFElem& o) const {
    RatPoly out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return NFElem(field_ ? field_ : o.field_, std::move(out));
}

NFElem NFElem::operator-(const NFElem& o) const { return *this + (-o); }

NFElem NFElem::operator-() const {
    RatPoly out = c_;
    for (auto& x : out) x = -x;
    return NFElem(field_, std::move(out));
}

NFElem NFElem::operator*(const NFElem& o) const {
    return NFElem(field_ ? field_ : o.field_, rat_poly_mul(c_, o.c_));
}

bool NFElem::operator==(const NFElem& o) const { return c_ == o.c_; }

NFElem NFElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero field element");
    // extended Euclid over Q[x]: s*c + t*modulus = gcd
    RatPoly r0 = rat_poly(field_->modulus());
    RatPoly r1 = c_;
    RatPoly s0, s1{Rat(1)};
    while (true) {
        RatPoly q;
        RatPoly r2 = rat_poly_rem(r0, r1, &q);
        rat_poly_normalize(r2);
        if (r2.empty()) break;
        RatPoly s2 = rat_poly_sub(s0, rat_poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (rat_poly_degree(r1) > 0) {
        // zero divisor: r1 is a proper factor of the modulus
        throw FieldSplit{clear_denominators(r1)};
    }
    Rat inv = 1 / r1[0];
    for (auto& x : s1) x *= inv;
    return NFElem(field_, std::move(s1));
}

int NFElem::sign() const {
    if (c_.empty()) return 0;
    if (c_.size() == 1) return sign_of(c_[0]);

    // zero at theta iff gcd(c, modulus) vanishes at theta
    IntPoly num = clear_denominators(c_);
    IntPoly g = poly_gcd(num, field_->modulus());
    if (g.degree() >= 1) {
        SturmChain chain(square_free_part(g));
        AlgebraicNumber th = field_->theta();
        while (!th.interval().is_point() &&
               (g.sign_at(th.interval().lo) == 0 || g.sign_at(th.interval().hi) == 0))
            th.refine_step();
        if (th.interval().is_point()) {
            if (g.sign_at(th.interval().lo) == 0) return 0;
        } else if (chain.count_roots(th.interval().lo, th.interval().hi) == 1) {
            return 0;
        }
    }

    // nonzero value: interval evaluation until the sign is definite
    AlgebraicNumber th = field_->theta();
    while (true) {
        const RatInterval& iv = th.interval();
        // Horner with interval endpoints
        Rat lo(0), hi(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            Rat a1 = lo * iv.lo, a2 = lo * iv.hi, a3 = hi * iv.lo, a4 = hi * iv.hi;
            Rat nlo = std::min(std::min(a1, a2), std::min(a3, a4));
            Rat nhi = std::max(std::max(a1, a2), std::max(a3, a4));
            lo = nlo + c_[i];
            hi = nhi + c_[i];
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (iv.is_point()) {
            // exact rational evaluation
            Rat v(0);
            for (std::size_t i = c_.size(); i-- > 0;) v = v * iv.lo + c_[i];
            return sign_of(v);
        }
        th.refine_step();
    }
}

AlgebraicNumber NFElem::to_algebraic() const {
    if (auto r = rational_value()) return AlgebraicNumber::from_rational(*r);

    // defining polynomial: char poly of the multiplication-by-value matrix
    const unsigned d = field_->degree();
    RatMatrix mult(d, d);
    RatPoly col = c_;
    RatPoly modulus = rat_poly(field_->modulus());
    // columns: value * theta^j reduced mod modulus
    for (unsigned j = 0; j < d; ++j) {
        for (unsigned i = 0; i < d; ++i)
            mult(i, j) = i < col.size() ? col[i] : Rat(0);
        // multiply col by x and reduce
        RatPoly next(col.size() + 1, Rat(0));
        for (std::size_t i = 0; i < col.size(); ++i) next[i + 1] = col[i];
        col = rat_poly_rem(next, modulus);
    }
    IntPoly defining = square_free_part(clear_denominators(char_poly_rat(mult)));
    SturmChain chain(defining);

    AlgebraicNumber th = field_->theta();
    while (true) {
        const RatInterval& iv = th.interval();
        Rat lo(0), hi(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            Rat a1 = lo * iv.lo, a2 = lo * iv.hi, a3 = hi * iv.lo, a4 = hi * iv.hi;
            Rat nlo = std::min(std::min(a1, a2), std::min(a3, a4));
            Rat nhi = std::max(std::max(a1, a2), std::max(a3, a4));
            lo = nlo + c_[i];
            hi = nhi + c_[i];
        }
        if (lo == hi) return AlgebraicNumber::from_rational(lo);
        if (defining.sign_at(lo) != 0 && defining.sign_at(hi) != 0 &&
            chain.count_roots(lo, hi) == 1)
            return AlgebraicNumber::from_root(defining, RatInterval(lo, hi));
        th.refine_step();
    }
}

NFVector nf_vector_from_rat(const FieldPtr& field, const RatVector& v) {
    NFVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(NFElem::from_rat(field, x));
    return out;
}

bool nf_vector_is_zero(const NFVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace hyperlat
