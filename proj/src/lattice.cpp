#include "hyperlat/lattice.hpp"

namespace hyperlat {

const char* cone_position_name(ConePosition p) {
    switch (p) {
        case ConePosition::Interior: return "interior";
        case ConePosition::Boundary: return "boundary";
        case ConePosition::Outside: return "outside";
    }
    return "?";
}

LatticePtr Lattice::create(IntMatrix gram, IntVector cone_ref) {
    if (!gram.is_square()) throw ShapeError("gram matrix must be square");
    if (!gram.is_symmetric()) throw ShapeError("gram matrix must be symmetric");
    if (cone_ref.size() != gram.rows()) throw ShapeError("cone reference has wrong dimension");

    if (det(gram) == 0) throw DegenerateFormError("gram matrix is degenerate");
    Signature sig = signature(gram);
    if (!(sig.n_plus == 1 && sig.n_zero == 0 && sig.n_minus == gram.rows() - 1))
        throw NotHyperbolicError("signature is not (1, r-1)");

    LatticePtr lat(new Lattice(std::move(gram), std::move(cone_ref)));
    if (lat->pairing(lat->cone_ref(), lat->cone_ref()) <= 0)
        throw BadReferenceError("cone reference must have positive self-intersection");
    return lat;
}

Int Lattice::pairing(const IntVector& u, const IntVector& v) const {
    if (u.size() != rank() || v.size() != rank()) throw ShapeError("pairing: dimension mismatch");
    Int acc(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (u[i] == 0) continue;
        Int row(0);
        for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

Rat Lattice::pairing(const RatVector& u, const RatVector& v) const {
    if (u.size() != rank() || v.size() != rank()) throw ShapeError("pairing: dimension mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (u[i] == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < rank(); ++j) row += Rat(gram_(i, j)) * v[j];
        acc += u[i] * row;
    }
    return acc;
}

NFElem Lattice::pairing(const NFVector& u, const NFVector& v) const {
    if (u.size() != rank() || v.size() != rank()) throw ShapeError("pairing: dimension mismatch");
    FieldPtr field;
    for (const auto& x : u)
        if (x.field()) field = x.field();
    if (!field)
        for (const auto& x : v)
            if (x.field()) field = x.field();
    if (!field) throw DomainError("pairing: vectors without field");
    NFElem acc = NFElem::zero(field);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (u[i].is_zero()) continue;
        NFElem row = NFElem::zero(field);
        for (std::size_t j = 0; j < rank(); ++j) {
            if (v[j].is_zero() || gram_(i, j) == 0) continue;
            row = row + NFElem::from_rat(field, Rat(gram_(i, j))) * v[j];
        }
        acc = acc + u[i] * row;
    }
    return acc;
}

ConePosition Lattice::cone_position(const RatVector& v) const {
    if (is_zero_vector(v)) throw DomainError("cone_position of the zero vector");
    Rat norm = pairing(v, v);
    Rat against_ref = pairing(v, to_rat_vector(cone_ref_));
    if (norm > 0 && against_ref > 0) return ConePosition::Interior;
    if (norm == 0 && against_ref > 0) return ConePosition::Boundary;
    return ConePosition::Outside;
}

ConePosition Lattice::cone_position(const NFVector& v) const {
    if (nf_vector_is_zero(v)) throw DomainError("cone_position of the zero vector");
    int norm_sign = pairing(v, v).sign();
    FieldPtr field;
    for (const auto& x : v)
        if (x.field()) field = x.field();
    NFVector ref = nf_vector_from_rat(field, cone_ref_rat());
    int ref_sign = pairing(v, ref).sign();
    if (norm_sign > 0 && ref_sign > 0) return ConePosition::Interior;
    if (norm_sign == 0 && ref_sign > 0) return ConePosition::Boundary;
    return ConePosition::Outside;
}

IntVector Lattice::primitive(const IntVector& v) const {
    if (v.size() != rank()) throw ShapeError("primitive: dimension mismatch");
    if (is_zero_vector(v)) throw DomainError("primitive of the zero vector");
    Int g(0);
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int q;
        mpz_divexact(q.get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
        out[i] = q;
    }
    Int against_ref = pairing(out, cone_ref_);
    bool flip = false;
    if (against_ref < 0) {
        flip = true;
    } else if (against_ref == 0) {
        for (const auto& x : out) {
            if (x != 0) {
                flip = x < 0;
                break;
            }
        }
    }
    if (flip)
        for (auto& x : out) x = -x;
    return out;
}

IntVector Lattice::primitive(const RatVector& v) const {
    if (is_zero_vector(v)) throw DomainError("primitive of the zero vector");
    Int l(1);
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat s = v[i] * Rat(l);
        scaled[i] = s.get_num();
    }
    return primitive(scaled);
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

}  // namespace hyperlat
