#pragma once

#include <memory>

#include "hyperlat/linalg.hpp"
#include "hyperlat/numberfield.hpp"

namespace hyperlat {

// Position of a nonzero vector relative to the closed positive cone.
enum class ConePosition { Interior, Boundary, Outside };

const char* cone_position_name(ConePosition p);

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

// Hyperbolic lattice: non-degenerate symmetric integral form of signature
// (1, r-1), with the positive-cone component fixed by a stored reference
// vector of positive self-intersection.
class Lattice {
public:
    static LatticePtr create(IntMatrix gram, IntVector cone_ref);

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const IntVector& cone_ref() const { return cone_ref_; }
    RatVector cone_ref_rat() const { return to_rat_vector(cone_ref_); }

    Int pairing(const IntVector& u, const IntVector& v) const;
    Rat pairing(const RatVector& u, const RatVector& v) const;
    NFElem pairing(const NFVector& u, const NFVector& v) const;

    ConePosition cone_position(const RatVector& v) const;
    ConePosition cone_position(const NFVector& v) const;

    // Divides by the gcd of the entries; sign fixed so that
    // (result, cone_ref) > 0 when nonzero, else leading entry positive.
    IntVector primitive(const IntVector& v) const;
    IntVector primitive(const RatVector& v) const;  // scales away denominators first

    bool operator==(const Lattice& other) const {
        return gram_ == other.gram_ && cone_ref_ == other.cone_ref_;
    }

private:
    Lattice(IntMatrix gram, IntVector cone_ref)
        : gram_(std::move(gram)), cone_ref_(std::move(cone_ref)) {}

    IntMatrix gram_;
    IntVector cone_ref_;
};

bool same_lattice(const LatticePtr& a, const LatticePtr& b);

}  // namespace hyperlat
