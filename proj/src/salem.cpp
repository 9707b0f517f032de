#include "hyperlat/salem.hpp"

namespace hyperlat {

namespace {

// Largest real root of a square-free polynomial, if any.
std::optional<AlgebraicNumber> largest_real_root(const IntPoly& q) {
    auto intervals = isolate_real_roots(q);
    if (intervals.empty()) return std::nullopt;
    return AlgebraicNumber::from_root(q, intervals.back());
}

}  // namespace

SpectralKind salem_test(const IntPoly& p) {
    if (!p.is_monic()) throw DomainError("salem_test: polynomial not monic");
    if (p.degree() < 1) throw DomainError("salem_test: constant polynomial");
    if (p[0] != 1 && p[0] != -1) throw DomainError("salem_test: p(0) must be +-1");

    SpectralKind out;
    IntPoly carrier = square_free_part(strip_cyclotomic_factors(p));
    out.carrier = carrier;

    if (carrier.degree() == 0) {
        out.tag = SpectralKind::Tag::RhoOne;
        return out;
    }

    // The carrier inherits constant term +-1 (cyclotomics have unit
    // constant terms), so a degree-1 carrier is impossible here.
    if (carrier.degree() == 1) {
        out.tag = SpectralKind::Tag::Malformed;
        return out;
    }

    if (carrier.degree() == 2) {
        auto intervals = isolate_real_roots(carrier);
        if (intervals.size() != 2) {
            out.tag = SpectralKind::Tag::Malformed;
            return out;
        }
        AlgebraicNumber rho = AlgebraicNumber::from_root(carrier, intervals.back());
        if (rho.compare_rat(Rat(1)) <= 0) {
            out.tag = SpectralKind::Tag::Malformed;
            return out;
        }
        out.tag = SpectralKind::Tag::QuadraticInteger;
        out.rho = rho;
        return out;
    }

    // Salem pattern: reciprocal of even degree 2m; trace polynomial with all
    // m roots real, exactly one above 2 and none below -2 certifies two real
    // roots rho > 1 > 1/rho and every other root on the unit circle.
    if (carrier.degree() % 2 != 0 || !carrier.is_palindromic() || carrier[0] != 1) {
        out.tag = SpectralKind::Tag::Malformed;
        return out;
    }
    IntPoly trace = trace_polynomial(carrier);
    IntPoly trace_sf = square_free_part(trace);
    if (trace_sf.degree() != trace.degree()) {
        // repeated trace roots would mean repeated carrier roots
        out.tag = SpectralKind::Tag::Malformed;
        return out;
    }
    SturmChain chain(trace_sf);
    int real_count = chain.count_all_roots();
    if (real_count != trace.degree()) {
        out.tag = SpectralKind::Tag::Malformed;
        return out;
    }
    Rat bound = chain.root_bound();
    if (trace_sf.sign_at(Rat(2)) == 0 || trace_sf.sign_at(Rat(-2)) == 0) {
        // would mean x = +-1 divides the carrier; cyclotomic-free forbids it
        out.tag = SpectralKind::Tag::Malformed;
        return out;
    }
    int above_two = chain.count_roots(Rat(2), bound);
    int below_minus_two = chain.count_roots(-bound, Rat(-2));
    if (above_two != 1 || below_minus_two != 0) {
        out.tag = SpectralKind::Tag::Malformed;
        return out;
    }

    auto rho = largest_real_root(carrier);
    if (!rho || rho->compare_rat(Rat(1)) <= 0) {
        out.tag = SpectralKind::Tag::Malformed;
        return out;
    }
    out.tag = SpectralKind::Tag::Salem;
    out.rho = *rho;
    return out;
}

}  // namespace hyperlat
