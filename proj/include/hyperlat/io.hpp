#pragma once

#include <json.hpp>

#include "hyperlat/group.hpp"

namespace hyperlat::io {

// Insertion-ordered JSON keeps reports byte-stable.
using Json = nlohmann::ordered_json;

enum class FileKind { Lattice, Isometry, Group };

Json load_json_file(const std::string& path);  // throws ParseError
FileKind detect_kind(const Json& doc);

// Parsers validate through the module constructors and throw ParseError
// with the offending field in the message.
LatticePtr parse_lattice(const Json& doc);
Isometry parse_isometry(const Json& doc, const std::string& base_dir);
GroupSpec parse_group(const Json& doc, const std::string& base_dir);

Json serialize_lattice(const Lattice& lat, const std::string& name = "");
Json serialize_isometry(const Isometry& iso, const std::string& name = "");
Json serialize_group(const GroupSpec& grp, const std::string& name = "");

// Scalar encoding helpers. Integers render as JSON numbers when they fit
// in 64 bits and as decimal strings beyond that; rationals always as
// canonical "p" / "p/q" strings.
Json json_int(const Int& x);
Int int_from_json(const Json& v, const std::string& where);
Json json_interval(const RatInterval& iv);
Json json_int_poly(const IntPoly& p);
Json json_int_vector(const IntVector& v);
Json json_int_matrix(const IntMatrix& m);
Json json_rat_poly(const RatPoly& p);
Json json_algebraic(const AlgebraicNumber& a, const Rat& display_width);
Json json_nf_vector(const NFVector& v);
Json json_word(const Word& w);

std::string dump_report(const Json& report);  // canonical text form

}  // namespace hyperlat::io
