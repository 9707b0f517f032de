#include "hyperlat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hyperlat {

GroupSpec GroupSpec::create(LatticePtr lat, std::vector<Isometry> generators) {
    if (!lat) throw DomainError("group needs a lattice");
    if (generators.empty()) throw DomainError("group needs at least one generator");
    for (const auto& g : generators)
        if (!same_lattice(g.lattice(), lat))
            throw LatticeMismatchError("group generators on different lattices");
    return GroupSpec{std::move(lat), std::move(generators)};
}

std::optional<RayReport> common_fixed_ray(const GroupSpec& g) {
    const std::size_t r = g.lat->rank();
    const std::size_t k = g.generators.size();

    // stacked (m_i - I): kernel = intersection of the fixed subspaces
    RatMatrix stacked(k * r, r);
    for (std::size_t t = 0; t < k; ++t) {
        const IntMatrix& m = g.generators[t].matrix();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                stacked(t * r + i, j) = Rat(m(i, j) - (i == j ? 1 : 0));
    }
    std::vector<RatVector> fixed = kernel_basis(stacked);
    if (fixed.empty()) return std::nullopt;

    // form restricted to the fixed subspace
    const std::size_t s = fixed.size();
    RatMatrix restricted(s, s);
    for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a; b < s; ++b) {
            Rat val = g.lat->pairing(fixed[a], fixed[b]);
            restricted(a, b) = val;
            restricted(b, a) = val;
        }

    auto expand = [&](const RatVector& coords) {
        RatVector v(r, Rat(0));
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t i = 0; i < r; ++i) v[i] += coords[a] * fixed[a][i];
        return v;
    };

    Signature sig = signature(restricted);
    if (sig.n_plus >= 1) {
        RatVector diag;
        RatMatrix basis = congruence_diagonalize(restricted, diag);
        for (std::size_t i = 0; i < s; ++i) {
            if (diag[i] <= 0) continue;
            RatVector coords(s);
            for (std::size_t a = 0; a < s; ++a) coords[a] = basis(a, i);
            RayReport report;
            report.ray = g.lat->primitive(expand(coords));
            report.position = ConePosition::Interior;
            return report;
        }
        throw MalformedError("positive signature without a positive direction");
    }
    if (sig.n_zero >= 1) {
        std::vector<RatVector> radical = kernel_basis(restricted);
        if (radical.size() != 1)
            throw MalformedError("radical of the restricted form is not one-dimensional");
        RayReport report;
        report.ray = g.lat->primitive(expand(radical[0]));
        if (g.lat->pairing(to_rat_vector(report.ray), g.lat->cone_ref_rat()) <= 0)
            throw MalformedError("isotropic fixed vector orthogonal to the reference");
        report.position = ConePosition::Boundary;
        return report;
    }
    return std::nullopt;
}

bool unipotent_test(const Isometry& g) {
    IntMatrix nil = g.matrix() - IntMatrix::identity(g.rank());
    return mat_pow(nil, static_cast<long>(g.rank())).is_zero();
}

namespace {

bool is_loxodromic_matrix(const IntMatrix& m) {
    return !is_quasi_unipotent_poly(char_poly(m));
}

struct Enumerated {
    std::vector<Isometry> elements;  // BFS discovery order, identity first
    std::vector<Word> words;
    bool complete = false;  // no new elements before the bound was reached
};

// BFS over distinct group elements with the alphabet g0, g0^-1, g1, ...
Enumerated enumerate_elements(const GroupSpec& g, unsigned word_bound) {
    std::vector<Isometry> alphabet;
    std::vector<int> letters;
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        alphabet.push_back(g.generators[i]);
        letters.push_back(static_cast<int>(i));
        alphabet.push_back(g.generators[i].inverse());
        letters.push_back(inverse_letter(static_cast<int>(i)));
    }

    Enumerated out;
    std::map<IntMatrix, std::size_t> seen;
    Isometry id = Isometry::identity(g.lat);
    out.elements.push_back(id);
    out.words.push_back({});
    seen.emplace(id.matrix(), 0);

    std::vector<std::size_t> frontier{0};
    for (unsigned depth = 1; depth <= word_bound && !frontier.empty(); ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            for (std::size_t a = 0; a < alphabet.size(); ++a) {
                Isometry candidate = out.elements[idx].compose(alphabet[a]);
                auto [it, inserted] = seen.emplace(candidate.matrix(), out.elements.size());
                if (!inserted) continue;
                Word w = out.words[idx];
                w.push_back(letters[a]);
                out.elements.push_back(std::move(candidate));
                out.words.push_back(std::move(w));
                next.push_back(out.elements.size() - 1);
            }
        }
        frontier = std::move(next);
    }
    out.complete = frontier.empty();
    return out;
}

}  // namespace

NullVerdict null_entropy_decide(const GroupSpec& g, unsigned word_bound) {
    if (word_bound < 1) throw DomainError("word bound must be >= 1");

    // (a) a loxodromic generator decides immediately
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        if (is_loxodromic_matrix(g.generators[i].matrix())) {
            NullVerdict v;
            v.tag = NullVerdict::Tag::No;
            v.witness = {static_cast<int>(i)};
            return v;
        }
    }

    // (b) a commonly fixed cone ray certifies null entropy for every word
    if (auto ray = common_fixed_ray(g)) {
        NullVerdict v;
            v.tag = NullVerdict::Tag::YesFixedRay;
        v.ray = *ray;
        return v;
    }

    // (c) finite orbit of the standard basis certifies a finite group
    {
        const std::size_t r = g.lat->rank();
        std::vector<IntMatrix> action;
        for (const auto& gen : g.generators) {
            action.push_back(gen.matrix());
            action.push_back(gen.inverse().matrix());
        }
        std::set<IntVector> orbit;
        std::vector<IntVector> frontier;
        for (std::size_t i = 0; i < r; ++i) {
            IntVector e(r, Int(0));
            e[i] = 1;
            orbit.insert(e);
            frontier.push_back(e);
        }
        bool stabilized = false;
        for (unsigned round = 1; round <= word_bound && !frontier.empty(); ++round) {
            std::vector<IntVector> next;
            for (const auto& v : frontier)
                for (const auto& m : action) {
                    IntVector w = m.apply(v);
                    if (orbit.insert(w).second) next.push_back(std::move(w));
                }
            frontier = std::move(next);
            if (frontier.empty()) stabilized = true;
        }
        if (stabilized) {
            NullVerdict v;
            v.tag = NullVerdict::Tag::YesFinite;
            v.orbit_size = orbit.size();
            return v;
        }
    }

    // (d) bounded word search for a loxodromic element
    Enumerated walk = enumerate_elements(g, word_bound);
    for (std::size_t i = 1; i < walk.elements.size(); ++i) {
        if (is_loxodromic_matrix(walk.elements[i].matrix())) {
            NullVerdict v;
            v.tag = NullVerdict::Tag::No;
            v.witness = walk.words[i];
            return v;
        }
    }
    NullVerdict v;
            v.tag = NullVerdict::Tag::Inconclusive;
    v.word_bound = word_bound;
    return v;
}

std::vector<IntMatrix> null_subset_enumerate(const GroupSpec& g, unsigned word_bound) {
    if (word_bound < 1) throw DomainError("word bound must be >= 1");
    Enumerated all = enumerate_elements(g, word_bound);
    std::vector<IntMatrix> out;
    for (const auto& e : all.elements)
        if (!is_loxodromic_matrix(e.matrix())) out.push_back(e.matrix());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Minimal (s, t) with a^s = b^t, both inputs > 1, ordered by s + t then s.
// Candidates are pruned with certified log enclosures before the exact
// power comparison.
std::optional<std::pair<unsigned long, unsigned long>> find_power_relation(
    const AlgebraicNumber& a, const AlgebraicNumber& b, unsigned bound) {
    Rat eps = make_rat(Int(1), Int(1) << 96);
    RatInterval la = log_of(a, eps);
    RatInterval lb = log_of(b, eps);
    for (unsigned long total = 2; total <= 2 * static_cast<unsigned long>(bound); ++total) {
        for (unsigned long s = 1; s < total; ++s) {
            unsigned long t = total - s;
            if (s > bound || t > bound) continue;
            Rat lo = Rat(static_cast<long>(s)) * la.lo - Rat(static_cast<long>(t)) * lb.hi;
            Rat hi = Rat(static_cast<long>(s)) * la.hi - Rat(static_cast<long>(t)) * lb.lo;
            if (lo > 0 || hi < 0) continue;
            if (AlgebraicNumber::pow_equal(a, s, b, t)) return std::make_pair(s, t);
        }
    }
    return std::nullopt;
}

// chi with gamma = chi^{t'} and mu = chi^{s'} for gamma^{s'} = mu^{t'},
// gcd(s', t') = 1: chi = gamma^x mu^y with x t' + y s' = 1.
AlgebraicNumber combine_generators(const AlgebraicNumber& gamma, const AlgebraicNumber& mu,
                                   unsigned long s1, unsigned long t1) {
    if (t1 == 1) return gamma;
    if (s1 == 1) return mu;
    long x = 0, y = 0;
    // extended Euclid on (t', s')
    long r0 = static_cast<long>(t1), r1 = static_cast<long>(s1);
    long x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    x = x0;
    y = y0;
    // x*t' + y*s' = 1
    AlgebraicNumber ga = x >= 0 ? gamma.pow(static_cast<unsigned long>(x))
                                : gamma.inverse().pow(static_cast<unsigned long>(-x));
    AlgebraicNumber mb = y >= 0 ? mu.pow(static_cast<unsigned long>(y))
                                : mu.inverse().pow(static_cast<unsigned long>(-y));
    return AlgebraicNumber::multiply(ga, mb);
}

// lambda0^k = mu for mu, lambda0 > 1; k from log enclosures, verified exactly.
std::optional<unsigned long> exact_exponent(const AlgebraicNumber& mu,
                                            const AlgebraicNumber& lambda0,
                                            unsigned long cap) {
    Rat eps = make_rat(Int(1), Int(1) << 96);
    RatInterval lm = log_of(mu, eps);
    RatInterval l0 = log_of(lambda0, eps);
    if (l0.lo <= 0) return std::nullopt;
    // k in [lm.lo/l0.hi, lm.hi/l0.lo]
    Int kmin = rat_ceil(lm.lo / l0.hi);
    Int kmax = rat_floor(lm.hi / l0.lo);
    for (Int k = kmin; k <= kmax; ++k) {
        if (k < 1 || k > Int(cap)) continue;
        unsigned long ku = k.get_ui();
        if (AlgebraicNumber::pow_equal(mu, 1, lambda0, ku)) return ku;
    }
    return std::nullopt;
}

}  // namespace

PhiReport phi_map(const GroupSpec& g, const NFVector& ray, unsigned exponent_bound) {
    if (exponent_bound < 1) throw DomainError("exponent bound must be >= 1");
    PhiReport report;
    report.exponent_bound = exponent_bound;

    std::vector<int> direction(g.generators.size(), 0);  // -1, 0 (=1), +1
    std::vector<std::optional<AlgebraicNumber>> normalized(g.generators.size());
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        Polarization pol = check_polarized(g.generators[i], ray);
        if (pol.not_eigen())
            throw NotPolarizedError("generator does not scale the given ray");
        if (pol.is_fixed()) {
            report.lambdas.push_back(AlgebraicNumber::one());
            direction[i] = 0;
        } else {
            report.lambdas.push_back(*pol.lambda);
            direction[i] = pol.lambda_above_one ? 1 : -1;
            normalized[i] = pol.lambda_above_one ? *pol.lambda : pol.lambda->inverse();
        }
    }

    bool any_scaled = false;
    for (int d : direction) any_scaled |= (d != 0);
    if (!any_scaled) {
        report.image_trivial = true;
        report.is_discrete_cyclic = true;
        report.exponents.assign(g.generators.size(), 0);
        return report;
    }

    // fold the normalized scalars into one multiplicative generator
    std::optional<AlgebraicNumber> gamma;
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        if (!normalized[i]) continue;
        if (!gamma) {
            gamma = *normalized[i];
            continue;
        }
        auto rel = find_power_relation(*gamma, *normalized[i], exponent_bound);
        if (!rel) {
            report.is_discrete_cyclic = false;
            return report;
        }
        auto [s, t] = *rel;
        unsigned long d = std::gcd(s, t);
        gamma = combine_generators(*gamma, *normalized[i], s / d, t / d);
    }

    // exponents of each generator over lambda0
    std::vector<long> exps(g.generators.size(), 0);
    unsigned long cap = static_cast<unsigned long>(exponent_bound) * exponent_bound;
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        if (!normalized[i]) continue;
        auto k = exact_exponent(*normalized[i], *gamma, cap);
        if (!k) {
            report.is_discrete_cyclic = false;
            return report;
        }
        exps[i] = direction[i] * static_cast<long>(*k);
    }
    report.exponents = std::move(exps);
    report.image_generator = *gamma;
    report.is_discrete_cyclic = true;
    return report;
}

PowerMatch equal_up_to_powers(const Isometry& g1, const Isometry& g2, unsigned exponent_bound,
                              unsigned pigeonhole_bound) {
    if (exponent_bound < 1 || pigeonhole_bound < 1)
        throw DomainError("bounds must be >= 1");
    if (!same_lattice(g1.lattice(), g2.lattice()))
        throw LatticeMismatchError("equal_up_to_powers: different lattices");
    IsometryClass c1 = classify(g1);
    IsometryClass c2 = classify(g2);
    if (!c1.is_loxodromic() || !c2.is_loxodromic())
        throw DomainError("equal_up_to_powers requires loxodromic isometries");

    // (i) shared eigenray, orienting g2 so that its scalar exceeds 1
    PerronData ray = perron_ray(g1);
    Polarization pol = check_polarized(g2, ray.v);
    if (pol.not_eigen()) {
        PowerMatch out;
        out.tag = PowerMatch::Tag::NotCompatible;
        out.reason = "no common polarizing ray";
        return out;
    }
    if (pol.is_fixed())
        throw MalformedError("loxodromic isometry fixes a cone ray");
    long flip = pol.lambda_above_one ? 1 : -1;
    Isometry g2eff = flip == 1 ? g2 : g2.inverse();

    const AlgebraicNumber& rho1 = *c1.rho;
    const AlgebraicNumber& rho2 = *c2.rho;

    // (ii) exponent pairs with rho1^a = rho2^b, pruned by log enclosures
    Rat eps = make_rat(Int(1), Int(1) << 96);
    RatInterval l1 = log_of(rho1, eps);
    RatInterval l2 = log_of(rho2, eps);
    for (unsigned long total = 2; total <= 2 * static_cast<unsigned long>(exponent_bound);
         ++total) {
        for (unsigned long a = 1; a < total; ++a) {
            unsigned long b = total - a;
            if (a > exponent_bound || b > exponent_bound) continue;
            Rat lo = Rat(static_cast<long>(a)) * l1.lo - Rat(static_cast<long>(b)) * l2.hi;
            Rat hi = Rat(static_cast<long>(a)) * l1.hi - Rat(static_cast<long>(b)) * l2.lo;
            if (lo > 0 || hi < 0) continue;
            if (!AlgebraicNumber::pow_equal(rho1, a, rho2, b)) continue;

            // (iii) pigeonhole on d_k = g1^{ak} g2eff^{-bk}
            IntMatrix A = g1.power(static_cast<long>(a)).matrix();
            IntMatrix C = g2eff.power(-static_cast<long>(b)).matrix();
            std::map<IntMatrix, unsigned long> seen;
            IntMatrix X = IntMatrix::identity(g1.rank());
            IntMatrix Y = X;
            seen.emplace(X, 0);  // d_0 = I
            for (unsigned long k = 1; k <= pigeonhole_bound; ++k) {
                X = X * A;
                Y = Y * C;
                IntMatrix D = X * Y;
                auto [it, inserted] = seen.emplace(D, k);
                if (inserted) continue;
                unsigned long m = it->second;
                long step = static_cast<long>(k - m);
                long t1 = static_cast<long>(a) * step;
                long t2 = flip * static_cast<long>(b) * step;
                Isometry p1 = g1.power(t1);
                Isometry p2 = g2.power(t2);
                if (!(p1 == p2))
                    throw MalformedError("pigeonhole candidate failed exact verification");
                PowerMatch out;
        out.tag = PowerMatch::Tag::Found;
                out.t1 = t1;
                out.t2 = t2;
                out.power = p1.matrix();
                return out;
            }
        }
    }
    PowerMatch out;
        out.tag = PowerMatch::Tag::NotFoundWithin;
    return out;
}

FibrationClass invariant_fibration_class(const GroupSpec& g) {
    FibrationClass out;
    auto ray = common_fixed_ray(g);
    if (!ray) return out;
    if (ray->position == ConePosition::Boundary) {
        out.class_vector = ray->ray;
        return out;
    }
    out.finite_on_lattice_note = true;
    return out;
}

}  // namespace hyperlat
