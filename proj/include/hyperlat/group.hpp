#pragma once

#include "hyperlat/isometry.hpp"

namespace hyperlat {

// Finitely generated subgroup of O(L)'.
struct GroupSpec {
    LatticePtr lat;
    std::vector<Isometry> generators;

    static GroupSpec create(LatticePtr lat, std::vector<Isometry> generators);
};

// Word over generator indices: letter i >= 0 is generator i,
// letter -i-1 is the inverse of generator i.
using Word = std::vector<int>;

inline int inverse_letter(int letter) { return -letter - 1; }

struct RayReport {
    IntVector ray;  // primitive integral
    ConePosition position = ConePosition::Boundary;
};

// Intersection of the fixed subspaces of the generators, met with the
// closed cone: an Interior fixed ray when the restricted form has a
// positive direction, else the Boundary ray through the radical of the
// restriction, else nothing. Every generator fixes the returned ray.
std::optional<RayReport> common_fixed_ray(const GroupSpec& g);

struct NullVerdict {
    enum class Tag { YesFixedRay, YesFinite, No, Inconclusive };

    Tag tag;
    std::optional<RayReport> ray;  // YesFixedRay
    std::size_t orbit_size = 0;    // YesFinite
    Word witness;                  // No
    unsigned word_bound = 0;       // Inconclusive

    bool is_yes() const { return tag == Tag::YesFixedRay || tag == Tag::YesFinite; }
};

// Semi-decision of null entropy for the whole group, in fixed branch
// order: loxodromic generator, common fixed ray, finite basis orbit,
// bounded word search.
NullVerdict null_entropy_decide(const GroupSpec& g, unsigned word_bound);

// (m - I)^rank == 0 exactly.
bool unipotent_test(const Isometry& g);

struct PhiReport {
    std::vector<AlgebraicNumber> lambdas;        // one per generator
    std::vector<long> exponents;                 // lambda_i = lambda0^{e_i} when cyclic
    std::optional<AlgebraicNumber> image_generator;  // lambda0 > 1; empty when trivial or undecided
    bool image_trivial = false;                  // all lambda = 1
    bool is_discrete_cyclic = false;
    unsigned exponent_bound = 0;
};

// The eigenvalue homomorphism g -> log lambda_g on a common scaled ray.
// Decides, through exact power comparisons bounded by exponent_bound,
// whether the image is trivial or infinite cyclic with generator lambda0.
PhiReport phi_map(const GroupSpec& g, const NFVector& ray, unsigned exponent_bound);

// Distinct non-loxodromic elements among words of length <= word_bound,
// canonically ordered.
std::vector<IntMatrix> null_subset_enumerate(const GroupSpec& g, unsigned word_bound);

struct PowerMatch {
    enum class Tag { Found, NotFoundWithin, NotCompatible };

    Tag tag;
    long t1 = 0;
    long t2 = 0;
    IntMatrix power;     // the common power matrix g1^t1 = g2^t2
    std::string reason;  // NotCompatible
};

// Decides g1^t1 = g2^t2 for loxodromic g1, g2 polarized by a common ray:
// shared-eigenray check, exponent search on the spectral radii, then the
// pigeonhole iteration d_k = g1^{ak} g2^{-bk} with exact verification.
PowerMatch equal_up_to_powers(const Isometry& g1, const Isometry& g2, unsigned exponent_bound,
                              unsigned pigeonhole_bound);

struct FibrationClass {
    std::optional<IntVector> class_vector;
    // an Interior fixed vector certifies finite action, not a fibration
    bool finite_on_lattice_note = false;
};

// The primitive integral boundary ray fixed by the whole group, when it
// exists: the candidate invariant fibre class.
FibrationClass invariant_fibration_class(const GroupSpec& g);

}  // namespace hyperlat
