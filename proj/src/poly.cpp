#include "hyperlat/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hyperlat {

IntPoly IntPoly::linear_root(const Rat& a) {
    // den*x - num, primitive by canonicalization of a
    IntVector c{-a.get_num(), a.get_den()};
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    IntVector out(std::max(c_.size(), other.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] += other.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
    IntVector out(std::max(c_.size(), other.c_.size()), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < other.c_.size(); ++i) out[i] -= other.c_[i];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly();
    IntVector out(c_.size() + other.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) out[i + j] += c_[i] * other.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    IntVector out = c_;
    for (auto& x : out) x = -x;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Int& k) const {
    IntVector out = c_;
    for (auto& x : out) x *= k;
    return IntPoly(std::move(out));
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    IntVector out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(out));
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (leading() < 0) g = -g;
    IntVector out = c_;
    for (auto& x : out) {
        Int q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        x = q;
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::reciprocal() const {
    if (is_zero() || c_.front() == 0) throw DomainError("reciprocal: zero constant term");
    IntVector out(c_.rbegin(), c_.rend());
    return IntPoly(std::move(out));
}

bool IntPoly::is_palindromic() const {
    const std::size_t n = c_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (c_[i] != c_[n - 1 - i]) return false;
    return true;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("division by zero polynomial");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree()) return std::nullopt;

    RatPoly quotient;
    RatPoly rem = rat_poly_rem(rat_poly(*this), rat_poly(divisor), &quotient);
    if (rat_poly_degree(rem) >= 0) return std::nullopt;
    IntVector out(quotient.size());
    for (std::size_t i = 0; i < quotient.size(); ++i) {
        if (quotient[i].get_den() != 1) return std::nullopt;
        out[i] = quotient[i].get_num();
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Int a = abs(c_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

RatPoly rat_poly(const IntPoly& p) {
    RatPoly out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rat(p[i]);
    return out;
}

int rat_poly_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

void rat_poly_normalize(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    rat_poly_normalize(out);
    return out;
}

RatPoly rat_poly_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    rat_poly_normalize(out);
    return out;
}

RatPoly rat_poly_rem(const RatPoly& a, const RatPoly& b, RatPoly* quotient) {
    RatPoly divisor = b;
    rat_poly_normalize(divisor);
    if (divisor.empty()) throw DomainError("polynomial division by zero");
    RatPoly r = a;
    rat_poly_normalize(r);
    RatPoly q;
    if (rat_poly_degree(r) >= rat_poly_degree(divisor))
        q.assign(r.size() - divisor.size() + 1, Rat(0));
    const Rat lead = divisor.back();
    while (rat_poly_degree(r) >= rat_poly_degree(divisor)) {
        std::size_t shift = r.size() - divisor.size();
        Rat f = r.back() / lead;
        q[shift] = f;
        for (std::size_t i = 0; i < divisor.size(); ++i) r[shift + i] -= f * divisor[i];
        rat_poly_normalize(r);
    }
    if (quotient) *quotient = std::move(q);
    return r;
}

IntPoly clear_denominators(const RatPoly& p) {
    if (p.empty()) return IntPoly();
    Int l(1);
    for (const auto& x : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rat v = p[i] * Rat(l);
        out[i] = v.get_num();
    }
    return IntPoly(std::move(out)).primitive_part();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    RatPoly x = rat_poly(a);
    RatPoly y = rat_poly(b);
    while (!y.empty()) {
        RatPoly r = rat_poly_rem(x, y);
        // monic-normalize to tame coefficient growth
        if (!r.empty()) {
            Rat inv = 1 / r.back();
            for (auto& c : r) c *= inv;
        }
        x = std::move(y);
        y = std::move(r);
    }
    return clear_denominators(x);
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw DomainError("square_free_part: zero polynomial");
    IntPoly prim = p.primitive_part();
    if (prim.degree() == 0) return IntPoly::constant(Int(1));
    IntPoly g = poly_gcd(prim, prim.derivative());
    if (g.degree() == 0) return prim;
    auto q = prim.divide_exact(g);
    if (!q) throw MalformedError("square_free_part: inexact division by gcd");
    return q->primitive_part();
}

namespace {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace

namespace {

IntPoly cyclotomic_uncached(unsigned n, std::map<unsigned, IntPoly>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    IntVector xn(n + 1, Int(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPoly result(std::move(xn));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto q = result.divide_exact(cyclotomic_uncached(d, cache));
        if (!q) throw MalformedError("cyclotomic recursion failed");
        result = *q;
    }
    cache[n] = result;
    return result;
}

}  // namespace

IntPoly cyclotomic(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic index must be positive");
    thread_local std::map<unsigned, IntPoly> cache;
    return cyclotomic_uncached(n, cache);
}

std::vector<unsigned> cyclotomic_indices_up_to_phi(unsigned bound) {
    // phi(n) >= sqrt(n/2), so phi(n) <= bound forces n <= 2*bound^2
    std::vector<unsigned> out;
    unsigned limit = 2 * bound * bound + 1;
    for (unsigned n = 1; n <= limit; ++n)
        if (euler_phi(n) <= bound) out.push_back(n);
    return out;
}

IntPoly strip_cyclotomic_factors(const IntPoly& p, std::vector<unsigned>* removed) {
    if (p.is_zero()) throw DomainError("strip_cyclotomic_factors: zero polynomial");
    IntPoly rest = p;
    unsigned bound = static_cast<unsigned>(p.degree());
    if (bound == 0) return rest;
    for (unsigned n : cyclotomic_indices_up_to_phi(bound)) {
        IntPoly phi = cyclotomic(n);
        while (true) {
            auto q = rest.divide_exact(phi);
            if (!q) break;
            rest = *q;
            if (removed) removed->push_back(n);
            if (rest.degree() == 0) return rest;
        }
    }
    return rest;
}

bool is_quasi_unipotent_poly(const IntPoly& p) {
    if (!p.is_monic()) throw DomainError("is_quasi_unipotent_poly: polynomial not monic");
    if (p.degree() == 0) return true;
    // necessary: constant term +-1 (product of roots of unity)
    if (p[0] != 1 && p[0] != -1) return false;
    IntPoly rest = strip_cyclotomic_factors(p);
    return rest.degree() == 0;
}

IntPoly trace_polynomial(const IntPoly& p) {
    int d = p.degree();
    if (d < 2 || d % 2 != 0) throw DomainError("trace_polynomial: degree must be even >= 2");
    if (!p.is_palindromic()) throw DomainError("trace_polynomial: polynomial not reciprocal");
    const int m = d / 2;

    // p(x) = x^m sum-of c_{m+k}(x^k + x^-k); x^k + x^-k = P_k(y),
    // P_0 = 2, P_1 = y, P_{k+1} = y P_k - P_{k-1}
    std::vector<IntPoly> cheb;
    cheb.push_back(IntPoly{2});
    cheb.push_back(IntPoly{0, 1});
    for (int k = 2; k <= m; ++k) {
        IntPoly next = IntPoly{0, 1} * cheb[static_cast<std::size_t>(k - 1)] -
                       cheb[static_cast<std::size_t>(k - 2)];
        cheb.push_back(next);
    }

    IntPoly t = IntPoly::constant(p[static_cast<std::size_t>(m)]);
    for (int k = 1; k <= m; ++k)
        t = t + cheb[static_cast<std::size_t>(k)].scaled(p[static_cast<std::size_t>(m + k)]);
    return t;
}

}  // namespace hyperlat
