#include "hyperlat/isometry.hpp"

#include <numeric>

namespace hyperlat {

const char* isometry_class_name(IsometryClass::Tag t) {
    switch (t) {
        case IsometryClass::Tag::Elliptic: return "elliptic";
        case IsometryClass::Tag::Parabolic: return "parabolic";
        case IsometryClass::Tag::Loxodromic: return "loxodromic";
    }
    return "?";
}

Isometry Isometry::create(LatticePtr lat, IntMatrix m) {
    if (!lat) throw DomainError("isometry needs a lattice");
    if (!m.is_square() || m.rows() != lat->rank())
        throw ShapeError("isometry matrix shape does not match lattice rank");

    const IntMatrix& g = lat->gram();
    if (m.transpose() * g * m != g) throw NotIsometryError("matrix does not preserve the form");
    Int d = det(m);
    if (d != 1 && d != -1) throw NotUnimodularError("isometry must have det +-1");

    IntVector image = m.apply(lat->cone_ref());
    if (lat->pairing(image, lat->cone_ref()) <= 0)
        throw NotInOPrimeError("isometry swaps the positive-cone components");
    return Isometry(std::move(lat), std::move(m));
}

Isometry Isometry::identity(LatticePtr lat) {
    std::size_t n = lat->rank();
    return Isometry(std::move(lat), IntMatrix::identity(n));
}

Isometry Isometry::compose(const Isometry& other) const {
    if (!same_lattice(lat_, other.lat_)) throw LatticeMismatchError("compose: different lattices");
    return Isometry(lat_, m_ * other.m_);
}

Isometry Isometry::inverse() const {
    // g^{-1} = gram^{-1} g^T gram, necessarily integral
    RatMatrix gi = rat_inverse(to_rat_matrix(lat_->gram()));
    RatMatrix inv = gi * to_rat_matrix(m_.transpose()) * to_rat_matrix(lat_->gram());
    IntMatrix out(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            if (inv(i, j).get_den() != 1) throw MalformedError("isometry inverse not integral");
            out(i, j) = inv(i, j).get_num();
        }
    return Isometry(lat_, std::move(out));
}

Isometry Isometry::power(long k) const {
    if (k == 0) return identity(lat_);
    if (k > 0) return Isometry(lat_, mat_pow(m_, k));
    return Isometry(lat_, mat_pow(inverse().m_, -k));
}

bool Isometry::operator==(const Isometry& other) const {
    return same_lattice(lat_, other.lat_) && m_ == other.m_;
}

namespace {

// Cyclotomic-free square-free carrier of the characteristic polynomial.
IntPoly spectral_carrier(const IntMatrix& m) {
    return square_free_part(strip_cyclotomic_factors(char_poly(m)));
}

}  // namespace

AlgebraicNumber spectral_radius(const Isometry& g) {
    IntPoly p = char_poly(g.matrix());
    if (is_quasi_unipotent_poly(p)) return AlgebraicNumber::one();
    IntPoly carrier = spectral_carrier(g.matrix());
    auto intervals = isolate_real_roots(carrier);
    if (intervals.empty()) throw MalformedError("non-quasi-unipotent isometry without real spectrum");
    AlgebraicNumber rho = AlgebraicNumber::from_root(carrier, intervals.back());
    if (rho.compare_rat(Rat(1)) <= 0)
        throw MalformedError("spectral radius of an isometry must exceed 1 when not 1");
    return rho;
}

RatInterval entropy(const Isometry& g, const Rat& eps) {
    if (eps <= 0) throw DomainError("entropy: width must be positive");
    AlgebraicNumber rho = spectral_radius(g);
    if (auto v = rho.rational_value(); v && *v == 1) return RatInterval(Rat(0), Rat(0));
    return log_of(rho, eps);
}

IsometryClass classify(const Isometry& g) {
    IntPoly p = char_poly(g.matrix());
    if (!is_quasi_unipotent_poly(p)) {
        IsometryClass out;
        out.tag = IsometryClass::Tag::Loxodromic;
        out.rho = spectral_radius(g);
        return out;
    }

    // quasi-unipotent: finite order iff semisimple iff the square-free part
    // of the characteristic polynomial annihilates the matrix
    IntPoly sf = square_free_part(p);
    if (!poly_at_matrix(sf, g.matrix()).is_zero()) {
        IsometryClass out;
        out.tag = IsometryClass::Tag::Parabolic;
        return out;
    }

    unsigned long order = 1;
    for (unsigned n : cyclotomic_indices_up_to_phi(static_cast<unsigned>(p.degree()))) {
        if (p.divide_exact(cyclotomic(n))) order = std::lcm(order, static_cast<unsigned long>(n));
    }
    if (!g.power(static_cast<long>(order)).is_identity())
        throw MalformedError("computed elliptic order failed verification");
    IsometryClass out;
    out.tag = IsometryClass::Tag::Elliptic;
    out.order = order;
    return out;
}

SpectralKind salem_kind(const Isometry& g) {
    IsometryClass cls = classify(g);
    if (!cls.is_loxodromic()) throw DomainError("salem_kind requires a loxodromic isometry");
    SpectralKind kind = salem_test(char_poly(g.matrix()));
    if (kind.is_malformed() || kind.is_rho_one())
        throw MalformedError("loxodromic isometry outside the Salem/quadratic patterns");
    if (!AlgebraicNumber::equal(*kind.rho, *cls.rho))
        throw MalformedError("salem_test root does not match the spectral radius");
    return kind;
}

namespace {

// Kernel of (m - theta I) over the field, via Gauss-Jordan with
// split-and-retry around zero divisors of a reducible modulus.
NFVector eigenvector_in_field(const IntMatrix& m, FieldPtr& field) {
    const std::size_t n = m.rows();
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            std::vector<std::vector<NFElem>> a(n, std::vector<NFElem>(n, NFElem::zero(field)));
            NFElem theta = NFElem::generator(field);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    a[i][j] = NFElem::from_rat(field, Rat(m(i, j)));
                    if (i == j) a[i][j] = a[i][j] - theta;
                }

            // reduced echelon form over the field
            std::vector<std::size_t> pivots;
            std::size_t row = 0;
            for (std::size_t col = 0; col < n && row < n; ++col) {
                std::size_t p = row;
                while (p < n && a[p][col].is_zero()) ++p;
                if (p == n) continue;
                std::swap(a[p], a[row]);
                NFElem inv = a[row][col].inverse();
                for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
                for (std::size_t i = 0; i < n; ++i) {
                    if (i == row || a[i][col].is_zero()) continue;
                    NFElem f = a[i][col];
                    for (std::size_t j = col; j < n; ++j)
                        a[i][j] = a[i][j] - f * a[row][j];
                }
                pivots.push_back(col);
                ++row;
            }

            if (pivots.size() != n - 1)
                throw MalformedError("Perron eigenspace is not one-dimensional");

            std::vector<bool> is_pivot(n, false);
            for (auto c : pivots) is_pivot[c] = true;
            std::size_t free_col = 0;
            while (free_col < n && is_pivot[free_col]) ++free_col;

            NFVector v(n, NFElem::zero(field));
            v[free_col] = NFElem::one(field);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                if (pivots[r] < free_col) v[pivots[r]] = -a[r][free_col];

            // normalize: first nonzero coordinate = 1
            for (std::size_t i = 0; i < n; ++i) {
                if (v[i].is_zero()) continue;
                NFElem inv = v[i].inverse();
                for (auto& x : v) x = x * inv;
                break;
            }
            return v;
        } catch (const FieldSplit& split) {
            field = field->shrink(split.factor);
        }
    }
    throw MalformedError("field splitting did not terminate");
}

}  // namespace

PerronData perron_ray(const Isometry& g) {
    IsometryClass cls = classify(g);
    if (!cls.is_loxodromic()) throw DomainError("perron_ray requires a loxodromic isometry");

    AlgebraicNumber rho = *cls.rho;
    FieldPtr field = NumberField::create(rho.poly(), rho.interval());
    NFVector v = eigenvector_in_field(g.matrix(), field);

    // exact check g v = theta v in the field
    NFElem theta = NFElem::generator(field);
    const IntMatrix& m = g.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        NFElem acc = NFElem::zero(field);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0 || v[j].is_zero()) continue;
            acc = acc + NFElem::from_rat(field, Rat(m(i, j))) * v[j];
        }
        if (!(acc == theta * v[i])) throw MalformedError("Perron eigenvector check failed");
    }

    // certify the ray meets the closed cone; flip to the cone-side
    // representative for the position only
    const Lattice& lat = *g.lattice();
    int norm_sign = lat.pairing(v, v).sign();
    NFVector ref = nf_vector_from_rat(field, lat.cone_ref_rat());
    int ref_sign = lat.pairing(v, ref).sign();
    if (ref_sign == 0 || norm_sign < 0)
        throw MalformedError("Perron eigenvector does not span a cone ray");

    PerronData out;
    out.rho = field->theta();
    out.field = field;
    out.v = v;
    out.position = norm_sign == 0 ? ConePosition::Boundary : ConePosition::Interior;
    return out;
}

namespace {

Polarization polarized_result(const Isometry& g, const NFElem& lambda) {
    Polarization out;
    if (auto r = lambda.rational_value()) {
        if (*r == 1) {
            out.tag = Polarization::Tag::Fixed;
            return out;
        }
        if (*r <= 0) throw MalformedError("cone-preserving isometry scaled a cone vector by <= 0");
    }
    out.tag = Polarization::Tag::Scaled;
    out.lambda_field = lambda;
    AlgebraicNumber lam = lambda.to_algebraic();
    out.lambda = lam;
    int vs_one = lam.compare_rat(Rat(1));
    if (vs_one == 0) {
        out.tag = Polarization::Tag::Fixed;
        out.lambda.reset();
        out.lambda_field.reset();
        return out;
    }
    out.lambda_above_one = vs_one > 0;

    // Scaled lambda must be rho(g)^{+-1}
    AlgebraicNumber rho = spectral_radius(g);
    AlgebraicNumber expected = out.lambda_above_one ? rho : rho.inverse();
    if (!AlgebraicNumber::equal(lam, expected))
        throw MalformedError("polarization scalar differs from the spectral radius");
    return out;
}

}  // namespace

Polarization check_polarized(const Isometry& g, const NFVector& d) {
    if (d.size() != g.rank()) throw ShapeError("check_polarized: dimension mismatch");
    if (nf_vector_is_zero(d)) throw DomainError("check_polarized: zero vector");
    ConePosition pos = g.lattice()->cone_position(d);
    if (pos == ConePosition::Outside)
        throw DomainError("check_polarized: vector outside the closed cone");

    FieldPtr field;
    for (const auto& x : d)
        if (x.field()) field = x.field();

    NFVector vec = d;
    const IntMatrix& m = g.matrix();
    for (int attempt = 0; attempt < 64; ++attempt) {
        try {
            NFVector image(vec.size(), NFElem::zero(field));
            for (std::size_t i = 0; i < m.rows(); ++i) {
                NFElem acc = NFElem::zero(field);
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (m(i, j) == 0 || vec[j].is_zero()) continue;
                    acc = acc + NFElem::from_rat(field, Rat(m(i, j))) * vec[j];
                }
                image[i] = acc;
            }

            // proportionality: lambda from the first nonzero coordinate
            std::size_t lead = 0;
            while (lead < vec.size() && vec[lead].is_zero()) ++lead;
            NFElem lambda = image[lead] * vec[lead].inverse();
            for (std::size_t i = 0; i < vec.size(); ++i) {
                if (!(image[i] == lambda * vec[i])) return Polarization{};
            }
            return polarized_result(g, lambda);
        } catch (const FieldSplit& split) {
            // zero divisor of a reducible modulus: shrink to the factor
            // carrying theta and re-map the vector (values at theta agree)
            field = field->shrink(split.factor);
            for (auto& x : vec) x = NFElem(field, x.coeffs());
        }
    }
    throw MalformedError("field splitting did not terminate");
}

Polarization check_polarized(const Isometry& g, const RatVector& d) {
    FieldPtr q = NumberField::rationals();
    return check_polarized(g, nf_vector_from_rat(q, d));
}

}  // namespace hyperlat
