#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "dslice/catalog.hpp"
#include "dslice/covers.hpp"
#include "dslice/families.hpp"
#include "dslice/gropes.hpp"
#include "dslice/obstructions.hpp"
#include "dslice/schedule.hpp"
#include "dslice/towers.hpp"

namespace dslice {

using Json = nlohmann::json;

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);

Json integer_json(const Integer& a);  // number when it fits in 64 bits, else a decimal string
Integer integer_from(const Json& j, const std::string& where);
Json rational_json(const Rational& q);
Rational rational_from(const Json& j, const std::string& where);
Json half_json(const HalfInt& h);
HalfInt half_from(const Json& j, const std::string& where);

Json angle_json(const ExactAngle& a);
ExactAngle angle_from(const Json& j, const std::string& where);
Json step_signature_json(const StepSignature& s);
StepSignature step_signature_from(const Json& j, const std::string& where);

Json expr_json(const KnotExpr& e);
Json knot_info_json(const CatalogKnot& k);
Json group_json(const FinAbGroup& g);

Json family_json(const FamilySpec& spec, bool with_members = true);
/// Reads a family file and checks the recorded parameters against a fresh build_J0 run.
FamilySpec family_from(const Json& j, const Catalog& cat = Catalog::builtin());

Json certificate_json(const MembershipCertificate& c);
MembershipCertificate membership_from(const Json& j, const std::string& where);
Json certificate_json(const NonMembershipCertificate& c);
NonMembershipCertificate nonmembership_from(const Json& j, const std::string& where);

Json grope_json(const GropeTree& g);
GropeTree grope_from(const Json& j, const std::string& where);
Json tower_json(const TowerTree& t);
Json schedule_json(const AbrsSchedule& s);
Json delta_json(const HandleDelta& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
Json parse_json(const std::string& text, const std::string& origin);

Catalog load_catalog(const std::string& path);
void save_certificate(const Json& cert, const std::string& path);

}  // namespace dslice
