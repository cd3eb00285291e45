#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "famop/dims.hpp"
#include "famop/law_report.hpp"
#include "famop/linear_family.hpp"
#include "famop/omega.hpp"
#include "famop/presentations.hpp"
#include "famop/set_operads.hpp"
#include "famop/typed_tree.hpp"

namespace famop {

using Json = nlohmann::ordered_json;

// Malformed documents raise ValidationError.
Json table_to_json(const Table& t);
Table table_from_json(const Json& j, int size);

// {"size": w, "left": rows, "right": rows, "ltri": rows?, "rtri": rows?}
Json omega_to_json(const OmegaStructure& o);
OmegaStructure omega_from_json(const Json& j);

// {"size": w, "table": rows}
Json magma_to_json(const Magma& m);
Magma magma_from_json(const Json& j);

// {"dec", "lt", "rt", "left", "right"}; null for sentinel types and leaf subtrees.
Json tree_to_json(const TypedTree& t);
TypedTree tree_from_json(const Json& j);

// {"dim": d, "params": w, "ops": {name: {"(a,b)": [[[c_ijk]]]}}}, rationals as "p/q".
Json family_to_json(const FamilyBilinear& f);
FamilyBilinear family_from_json(const Json& j);

// pair {"A", "v": [a, b] | "unit"}; corolla {"root", "branches"}; perm {"A", "v"}; order {"order"};
// twisted monomial {"head", "tail", "exponent"}; multiset {"multiset"}.
Json element_to_json(const OperadElement& x);
OperadElement element_from_json(const Json& j);

// {"generators", "mode", "relations": [[serialized terms]]}
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// kind, passed, instances, stats flattened into the top level, violations, the first witnesses.
Json report_to_json(const LawReport& r);

// {"n", "poly": "[c0,...]", "value_at": {"w", "v"}?}
Json poly_to_json(int n, const IntPoly& p, std::optional<long long> w = std::nullopt);

Json read_json_file(const std::string& path);

}  // namespace famop
