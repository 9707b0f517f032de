#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "hyperlat/io.hpp"

namespace {

using hyperlat::io::Json;
using namespace hyperlat;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitMalformed = 4;

std::string dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

Rat display_precision(const std::string& flag_value) {
    std::string text = flag_value;
    if (text.empty()) {
        if (const char* env = std::getenv("HYPERLAT_PRECISION")) text = env;
    }
    if (text.empty()) text = "1e-12";
    Rat p = parse_rational(text);
    if (p <= 0) throw ParseError("precision must be positive");
    return p;
}

int emit(const Json& report, int code = kExitOk) {
    std::cout << io::dump_report(report);
    return code;
}

int cmd_classify(const std::string& file, bool with_perron, const std::string& precision_flag) {
    Rat eps = display_precision(precision_flag);
    Isometry g = io::parse_isometry(io::load_json_file(file), dir_of(file));

    Json report;
    report["command"] = "classify";
    report["input"] = io::serialize_isometry(g);

    IsometryClass cls = classify(g);
    report["class"] = isometry_class_name(cls.tag);
    if (cls.is_elliptic()) {
        report["order"] = cls.order;
        report["entropy"] = io::json_interval(RatInterval(Rat(0), Rat(0)));
    } else if (cls.is_parabolic()) {
        report["entropy"] = io::json_interval(RatInterval(Rat(0), Rat(0)));
    } else {
        AlgebraicNumber rho = *cls.rho;
        report["rho_min_poly"] = io::json_int_poly(rho.poly());
        report["rho_interval"] = io::json_interval(rho.refined(eps));
        report["entropy"] = io::json_interval(entropy(g, eps));
        SpectralKind kind = salem_kind(g);
        report["salem_kind"] = kind.is_salem() ? "salem" : "quadratic_integer";
        if (with_perron) {
            PerronData perron = perron_ray(g);
            Json pj;
            pj["field_poly"] = io::json_int_poly(perron.field->modulus());
            pj["vector"] = io::json_nf_vector(perron.v);
            pj["position"] = cone_position_name(perron.position);
            report["perron"] = std::move(pj);
        }
    }
    return emit(report);
}

// Ray a `group phi` run works over: the common fixed ray when one exists,
// else the Perron ray of the first loxodromic generator.
NFVector select_phi_ray(const GroupSpec& grp, Json& report) {
    if (auto fixed = common_fixed_ray(grp)) {
        report["ray"] = io::json_int_vector(fixed->ray);
        report["ray_source"] = "common_fixed_ray";
        FieldPtr q = NumberField::rationals();
        return nf_vector_from_rat(q, to_rat_vector(fixed->ray));
    }
    for (const auto& gen : grp.generators) {
        if (classify(gen).is_loxodromic()) {
            PerronData perron = perron_ray(gen);
            report["ray"] = io::json_nf_vector(perron.v);
            report["ray_source"] = "perron_ray";
            return perron.v;
        }
    }
    throw DomainError("phi: no common fixed ray and no loxodromic generator");
}

int cmd_group(const std::string& file, const std::string& sub, unsigned word_bound,
              unsigned exponent_bound, const std::string& precision_flag) {
    Rat eps = display_precision(precision_flag);
    GroupSpec grp = io::parse_group(io::load_json_file(file), dir_of(file));

    Json report;
    report["command"] = "group";
    report["subcommand"] = sub;
    report["input"] = io::serialize_group(grp);

    if (sub == "null-entropy") {
        report["word_bound"] = word_bound;
        NullVerdict v = null_entropy_decide(grp, word_bound);
        switch (v.tag) {
            case NullVerdict::Tag::YesFixedRay: {
                report["verdict"] = "yes_fixed_ray";
                report["ray"] = io::json_int_vector(v.ray->ray);
                report["position"] = cone_position_name(v.ray->position);
                break;
            }
            case NullVerdict::Tag::YesFinite:
                report["verdict"] = "yes_finite";
                report["orbit_size"] = v.orbit_size;
                break;
            case NullVerdict::Tag::No:
                report["verdict"] = "no";
                report["witness_word"] = io::json_word(v.witness);
                break;
            case NullVerdict::Tag::Inconclusive:
                report["verdict"] = "inconclusive";
                return emit(report, kExitInconclusive);
        }
        return emit(report);
    }

    if (sub == "invariant-ray") {
        auto ray = common_fixed_ray(grp);
        if (ray) {
            report["ray"] = io::json_int_vector(ray->ray);
            report["position"] = cone_position_name(ray->position);
            Json lambdas = Json::array();
            for (std::size_t i = 0; i < grp.generators.size(); ++i) lambdas.push_back("1");
            report["lambdas"] = std::move(lambdas);
        } else {
            report["ray"] = nullptr;
        }
        return emit(report);
    }

    if (sub == "fibration-class") {
        FibrationClass fc = invariant_fibration_class(grp);
        if (fc.class_vector) {
            report["class_vector"] = io::json_int_vector(*fc.class_vector);
        } else {
            report["class_vector"] = nullptr;
            if (fc.finite_on_lattice_note)
                report["note"] = "interior fixed vector: group acts finitely on the lattice";
        }
        return emit(report);
    }

    if (sub == "null-subset") {
        report["word_bound"] = word_bound;
        auto elements = null_subset_enumerate(grp, word_bound);
        report["count"] = elements.size();
        Json arr = Json::array();
        for (const auto& m : elements) arr.push_back(io::json_int_matrix(m));
        report["elements"] = std::move(arr);
        return emit(report);
    }

    if (sub == "phi") {
        report["exponent_bound"] = exponent_bound;
        NFVector ray = select_phi_ray(grp, report);
        PhiReport phi = phi_map(grp, ray, exponent_bound);
        Json lambdas = Json::array();
        for (const auto& l : phi.lambdas) lambdas.push_back(io::json_algebraic(l, eps));
        report["lambdas"] = std::move(lambdas);
        if (phi.image_trivial) {
            report["image"] = "one";
            report["exponents"] = io::json_word(Word(phi.exponents.begin(), phi.exponents.end()));
            report["is_discrete_cyclic"] = true;
            return emit(report);
        }
        if (!phi.is_discrete_cyclic) {
            report["image"] = "undecided";
            report["is_discrete_cyclic"] = false;
            return emit(report, kExitInconclusive);
        }
        report["image"] = "cyclic";
        report["image_generator"] = io::json_algebraic(*phi.image_generator, eps);
        Json exps = Json::array();
        for (long e : phi.exponents) exps.push_back(e);
        report["exponents"] = std::move(exps);
        report["is_discrete_cyclic"] = true;
        return emit(report);
    }

    throw ParseError("unknown group subcommand: " + sub);
}

int cmd_equal_powers(const std::string& file_a, const std::string& file_b,
                     unsigned exponent_bound, unsigned pigeonhole_bound) {
    Isometry a = io::parse_isometry(io::load_json_file(file_a), dir_of(file_a));
    Isometry b = io::parse_isometry(io::load_json_file(file_b), dir_of(file_b));

    Json report;
    report["command"] = "equal-powers";
    report["input_a"] = io::serialize_isometry(a);
    report["input_b"] = io::serialize_isometry(b);
    report["exponent_bound"] = exponent_bound;
    report["pigeonhole_bound"] = pigeonhole_bound;

    PowerMatch match = equal_up_to_powers(a, b, exponent_bound, pigeonhole_bound);
    switch (match.tag) {
        case PowerMatch::Tag::Found:
            report["found"] = true;
            report["t1"] = match.t1;
            report["t2"] = match.t2;
            report["power_matrix"] = io::json_int_matrix(match.power);
            return emit(report);
        case PowerMatch::Tag::NotCompatible:
            report["found"] = false;
            report["reason"] = match.reason;
            return emit(report);
        case PowerMatch::Tag::NotFoundWithin:
            report["found"] = false;
            report["reason"] = "not found within bounds";
            return emit(report, kExitInconclusive);
    }
    return kExitMalformed;
}

int cmd_validate(const std::string& file) {
    Json doc = io::load_json_file(file);
    Json report;
    report["command"] = "validate";
    switch (io::detect_kind(doc)) {
        case io::FileKind::Lattice: {
            LatticePtr lat = io::parse_lattice(doc);
            report["kind"] = "lattice";
            report["input"] = io::serialize_lattice(*lat);
            break;
        }
        case io::FileKind::Isometry: {
            Isometry iso = io::parse_isometry(doc, dir_of(file));
            report["kind"] = "isometry";
            report["input"] = io::serialize_isometry(iso);
            break;
        }
        case io::FileKind::Group: {
            GroupSpec grp = io::parse_group(doc, dir_of(file));
            report["kind"] = "group";
            report["input"] = io::serialize_group(grp);
            break;
        }
    }
    report["valid"] = true;
    return emit(report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperlat: exact dynamics of hyperbolic-lattice isometries"};
    app.require_subcommand(1);

    std::string file, file_b, sub, precision;
    bool with_perron = false;
    unsigned word_bound = 8;
    unsigned exponent_bound = 64;
    unsigned pigeonhole_bound = 4096;

    auto* classify_cmd = app.add_subcommand("classify", "classify one isometry");
    classify_cmd->add_option("file", file, "isometry JSON file")->required();
    classify_cmd->add_flag("--perron", with_perron, "include the Perron eigenray");
    classify_cmd->add_option("--precision", precision, "display interval width");

    auto* group_cmd = app.add_subcommand("group", "analyze a generated subgroup");
    group_cmd->add_option("file", file, "group JSON file")->required();
    group_cmd
        ->add_option("subcommand", sub,
                     "null-entropy | invariant-ray | fibration-class | null-subset | phi")
        ->required();
    group_cmd->add_option("--word-bound", word_bound, "word length bound");
    group_cmd->add_option("--exponent-bound", exponent_bound, "exponent search bound");
    group_cmd->add_option("--precision", precision, "display interval width");

    auto* equal_cmd = app.add_subcommand("equal-powers", "decide g1^t1 = g2^t2");
    equal_cmd->add_option("file_a", file, "first isometry JSON file")->required();
    equal_cmd->add_option("file_b", file_b, "second isometry JSON file")->required();
    equal_cmd->add_option("--exponent-bound", exponent_bound, "exponent search bound");
    equal_cmd->add_option("--pigeonhole-bound", pigeonhole_bound, "pigeonhole iteration bound");

    auto* validate_cmd = app.add_subcommand("validate", "validate a lattice/isometry/group file");
    validate_cmd->add_option("file", file, "JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) return cmd_classify(file, with_perron, precision);
        if (group_cmd->parsed())
            return cmd_group(file, sub, word_bound, exponent_bound, precision);
        if (equal_cmd->parsed())
            return cmd_equal_powers(file, file_b, exponent_bound, pigeonhole_bound);
        if (validate_cmd->parsed()) return cmd_validate(file);
    } catch (const hyperlat::MalformedError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const hyperlat::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
