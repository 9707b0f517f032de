#pragma once

#include "hyperlat/lattice.hpp"
#include "hyperlat/salem.hpp"

namespace hyperlat {

// Element of O(L)': integral matrix preserving the form, unimodular, and
// keeping the chosen positive-cone component.
class Isometry {
public:
    static Isometry create(LatticePtr lat, IntMatrix m);
    static Isometry identity(LatticePtr lat);

    const LatticePtr& lattice() const { return lat_; }
    const IntMatrix& matrix() const { return m_; }
    std::size_t rank() const { return m_.rows(); }

    Isometry compose(const Isometry& other) const;  // this * other
    Isometry inverse() const;
    Isometry power(long k) const;

    bool operator==(const Isometry& other) const;
    bool is_identity() const { return m_.is_identity(); }

private:
    Isometry(LatticePtr lat, IntMatrix m) : lat_(std::move(lat)), m_(std::move(m)) {}

    LatticePtr lat_;
    IntMatrix m_;
};

struct IsometryClass {
    enum class Tag { Elliptic, Parabolic, Loxodromic };

    Tag tag;
    unsigned long order = 0;             // Elliptic only
    std::optional<AlgebraicNumber> rho;  // Loxodromic only

    bool is_elliptic() const { return tag == Tag::Elliptic; }
    bool is_parabolic() const { return tag == Tag::Parabolic; }
    bool is_loxodromic() const { return tag == Tag::Loxodromic; }
};

const char* isometry_class_name(IsometryClass::Tag t);

// Largest real root of the characteristic polynomial; exactly 1 iff the
// polynomial is quasi-unipotent (decided exactly, never numerically).
AlgebraicNumber spectral_radius(const Isometry& g);

// Certified enclosure of log(spectral radius) of width <= eps;
// the exact point [0, 0] when the radius is 1.
RatInterval entropy(const Isometry& g, const Rat& eps);

IsometryClass classify(const Isometry& g);

// Salem / quadratic-integer verdict for a loxodromic isometry.
SpectralKind salem_kind(const Isometry& g);

struct PerronData {
    AlgebraicNumber rho;
    FieldPtr field;        // Q(rho), theta = rho
    NFVector v;            // eigenvector, first nonzero coordinate = 1
    ConePosition position;  // of the cone-side representative of the ray
};

// Exact eigenray of a loxodromic isometry for the eigenvalue rho, in the
// field generated by rho, certified to span a ray of the closed cone.
PerronData perron_ray(const Isometry& g);

struct Polarization {
    enum class Tag { Fixed, Scaled, NotEigen };

    Tag tag = Tag::NotEigen;
    std::optional<AlgebraicNumber> lambda;  // Scaled only
    std::optional<NFElem> lambda_field;     // Scaled only, over the vector's field
    bool lambda_above_one = false;          // Scaled only

    bool is_fixed() const { return tag == Tag::Fixed; }
    bool is_scaled() const { return tag == Tag::Scaled; }
    bool not_eigen() const { return tag == Tag::NotEigen; }
};

// Determines whether g scales d; d must be a nonzero vector of the closed
// cone. A Scaled verdict with lambda != 1 is checked against
// spectral_radius(g)^{+-1}.
Polarization check_polarized(const Isometry& g, const NFVector& d);
Polarization check_polarized(const Isometry& g, const RatVector& d);

}  // namespace hyperlat
