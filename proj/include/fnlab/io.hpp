#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fnlab/boolalg.hpp"
#include "fnlab/fnpair.hpp"
#include "fnlab/search.hpp"

namespace fnlab::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with witness
/// {line, column} (1-based) and the position in the message.
Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

// { "n": int, "covers": [[lo,hi],...], "labels": [...]? }
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j, const Limits& limits = {});

/// Algebra file: a provenance header (kind, params, element_count) followed by
/// the ambient atom count and, for proper subalgebras, the carrier masks.
struct AlgebraDoc {
  std::string kind = "powerset";
  Json params = Json::object();
  BooleanAlgebra algebra;
  std::vector<Mask> generators;
};
Json algebra_to_json(const AlgebraDoc& doc);
AlgebraDoc algebra_from_json(const Json& j);

/// Poset or algebra document; algebras become their element order.
Poset structure_from_json(const Json& j, const Limits& limits = {});

/// { "poset": <inline poset/algebra or path string>, "f": [[...]], "g": [[...]] }.
/// A path is resolved relative to base_dir.
Json pair_to_json(const FnPair& pair);
FnPair pair_from_json(const Json& j, const std::filesystem::path& base_dir = {}, const Limits& limits = {});

Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

/// Header "a,b", one row per point. An incomplete frontier ends with a
/// "# INCONCLUSIVE" comment line naming the capacity that ran out of budget.
std::string frontier_to_csv(const Frontier& f);

struct FrontierCsv {
  std::vector<CapacityPair> points;
  bool complete = true;
};
FrontierCsv frontier_from_csv(std::string_view text);

}  // namespace fnlab::io
