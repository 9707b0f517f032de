#include "hyperlat/io.hpp"

#include <fstream>

namespace hyperlat::io {

namespace {

const Int kInt64Max = Int("9223372036854775807");
const Int kInt64Min = Int("-9223372036854775808");

std::string join_path(const std::string& dir, const std::string& leaf) {
    if (dir.empty() || leaf.empty() || leaf.front() == '/') return leaf;
    if (dir.back() == '/') return dir + leaf;
    return dir + "/" + leaf;
}

}  // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("top-level JSON object expected in " + path);
    return doc;
}

FileKind detect_kind(const Json& doc) {
    if (doc.contains("generators")) return FileKind::Group;
    if (doc.contains("matrix")) return FileKind::Isometry;
    if (doc.contains("gram")) return FileKind::Lattice;
    throw ParseError("unrecognized document: expected gram, matrix, or generators");
}

Json json_int(const Int& x) {
    if (x <= kInt64Max && x >= kInt64Min) return Json(static_cast<std::int64_t>(x.get_si()));
    return Json(x.get_str());
}

Int int_from_json(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            return Int(s);
        } catch (const std::invalid_argument&) {
            throw ParseError(where + ": bad integer literal '" + s + "'");
        }
    }
    throw ParseError(where + ": integer expected");
}

namespace {

IntVector int_vector_from_json(const Json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw ParseError(where + ": nonempty array expected");
    IntVector out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(int_from_json(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

IntMatrix int_matrix_from_json(const Json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw ParseError(where + ": nonempty matrix expected");
    std::size_t rows = v.size();
    if (!v[0].is_array() || v[0].empty()) throw ParseError(where + "[0]: nonempty row expected");
    std::size_t cols = v[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string row_where = where + "[" + std::to_string(i) + "]";
        if (!v[i].is_array() || v[i].size() != cols)
            throw ParseError(row_where + ": row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = int_from_json(v[i][j], row_where + "[" + std::to_string(j) + "]");
    }
    return m;
}

}  // namespace

LatticePtr parse_lattice(const Json& doc) {
    if (!doc.contains("gram")) throw ParseError("lattice: missing field 'gram'");
    if (!doc.contains("cone_ref")) throw ParseError("lattice: missing field 'cone_ref'");
    IntMatrix gram = int_matrix_from_json(doc["gram"], "gram");
    IntVector ref = int_vector_from_json(doc["cone_ref"], "cone_ref");
    if (doc.contains("rank")) {
        Int r = int_from_json(doc["rank"], "rank");
        if (r != Int(static_cast<long>(gram.rows())))
            throw ParseError("rank: does not match gram dimension");
    }
    try {
        return Lattice::create(std::move(gram), std::move(ref));
    } catch (const Error& e) {
        throw ParseError(std::string("lattice: ") + e.what());
    }
}

namespace {

LatticePtr lattice_of(const Json& doc, const std::string& base_dir, const char* owner) {
    if (!doc.contains("lattice"))
        throw ParseError(std::string(owner) + ": missing field 'lattice'");
    const Json& lat = doc["lattice"];
    if (lat.is_object()) return parse_lattice(lat);
    if (lat.is_string())
        return parse_lattice(load_json_file(join_path(base_dir, lat.get<std::string>())));
    throw ParseError(std::string(owner) + ": 'lattice' must be inline or a file name");
}

}  // namespace

Isometry parse_isometry(const Json& doc, const std::string& base_dir) {
    LatticePtr lat = lattice_of(doc, base_dir, "isometry");
    if (!doc.contains("matrix")) throw ParseError("isometry: missing field 'matrix'");
    IntMatrix m = int_matrix_from_json(doc["matrix"], "matrix");
    try {
        return Isometry::create(std::move(lat), std::move(m));
    } catch (const Error& e) {
        throw ParseError(std::string("isometry: ") + e.what());
    }
}

GroupSpec parse_group(const Json& doc, const std::string& base_dir) {
    LatticePtr lat = lattice_of(doc, base_dir, "group");
    if (!doc.contains("generators") || !doc["generators"].is_array() ||
        doc["generators"].empty())
        throw ParseError("group: nonempty 'generators' array expected");
    std::vector<Isometry> gens;
    for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
        const std::string where = "generators[" + std::to_string(i) + "]";
        IntMatrix m = int_matrix_from_json(doc["generators"][i], where);
        try {
            gens.push_back(Isometry::create(lat, std::move(m)));
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    return GroupSpec::create(lat, std::move(gens));
}

Json json_int_vector(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(json_int(x));
    return out;
}

Json json_int_matrix(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json serialize_lattice(const Lattice& lat, const std::string& name) {
    Json out;
    if (!name.empty()) out["name"] = name;
    out["rank"] = lat.rank();
    out["gram"] = json_int_matrix(lat.gram());
    out["cone_ref"] = json_int_vector(lat.cone_ref());
    return out;
}

Json serialize_isometry(const Isometry& iso, const std::string& name) {
    Json out;
    if (!name.empty()) out["name"] = name;
    out["lattice"] = serialize_lattice(*iso.lattice());
    out["matrix"] = json_int_matrix(iso.matrix());
    return out;
}

Json serialize_group(const GroupSpec& grp, const std::string& name) {
    Json out;
    if (!name.empty()) out["name"] = name;
    out["lattice"] = serialize_lattice(*grp.lat);
    Json gens = Json::array();
    for (const auto& g : grp.generators) gens.push_back(json_int_matrix(g.matrix()));
    out["generators"] = std::move(gens);
    return out;
}

Json json_interval(const RatInterval& iv) {
    Json out;
    out["lo"] = rat_to_string(iv.lo);
    out["hi"] = rat_to_string(iv.hi);
    return out;
}

Json json_int_poly(const IntPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(json_int(c));
    return out;
}

Json json_rat_poly(const RatPoly& p) {
    Json out = Json::array();
    for (const auto& c : p) out.push_back(rat_to_string(c));
    return out;
}

Json json_algebraic(const AlgebraicNumber& a, const Rat& display_width) {
    Json out;
    out["min_poly"] = json_int_poly(a.poly());
    out["interval"] = json_interval(a.refined(display_width));
    return out;
}

Json json_nf_vector(const NFVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(json_rat_poly(x.coeffs()));
    return out;
}

Json json_word(const Word& w) {
    Json out = Json::array();
    for (int letter : w) out.push_back(letter);
    return out;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace hyperlat::io
