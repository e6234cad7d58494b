#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "icx/complex.hpp"
#include "icx/derived.hpp"
#include "icx/subgroup_system.hpp"

namespace icx {

inline constexpr int kFormatVersion = 1;

// On-disk form of a subgroup system: generator lists in cycle notation for
// R_-1, R_0, ..., R_n, in that order.
struct GroupSpec {
  std::string name;
  int degree = 0;
  int rank = 0;
  std::vector<std::vector<std::string>> subgroup_generators; // length rank+2
};

GroupSpec group_spec_from_json(const nlohmann::json& j);
nlohmann::json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_of(const SubgroupSystem& sys, const std::string& name);
SubgroupSystem system_of(const GroupSpec& spec);

// On-disk form of a complex: faces with ids and ranks, cover pairs, optional
// automorphism generators as face-id images (parallel to `faces`). File ids
// may be arbitrary; the parser normalizes everything to dense ids in order
// of appearance.
struct ComplexSpec {
  std::string name;
  int rank = -1;
  std::vector<Face> faces;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::vector<int>> automorphisms;
};

ComplexSpec complex_spec_from_json(const nlohmann::json& j);
nlohmann::json complex_spec_to_json(const ComplexSpec& spec);
ComplexSpec complex_spec_of(const IncidenceComplex& k, const std::string& name,
                            const std::vector<std::vector<int>>& automorphisms = {});
IncidenceComplex complex_of(const ComplexSpec& spec);

// Extension data: base and candidate group specs (inline objects or string
// paths relative to the referencing file), plus pi as generator/image cycle
// pairs.
ExtensionData extension_from_json(const nlohmann::json& j, const std::string& base_dir);

nlohmann::json load_json_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& contents);

void write_hasse_dot(std::ostream& out, const IncidenceComplex& k, const std::string& name);
void write_flag_graph_dot(std::ostream& out, const IncidenceComplex& k, const std::string& name);

} // namespace icx
