#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icx/catalog.hpp"
#include "icx/complex.hpp"
#include "icx/construction.hpp"
#include "icx/derived.hpp"
#include "icx/error.hpp"
#include "icx/io.hpp"

using nlohmann::json;
using namespace icx;

namespace {

// Exit codes: 0 all checks pass, 1 checks failed, 2 input error, 3 resource
// limit.
constexpr int kExitChecksFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ResourceLimit:
      return kExitResourceLimit;
    case ErrorKind::ParseError:
    case ErrorKind::InvalidDegree:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::InvalidPoset:
    case ErrorKind::InvalidInput:
    case ErrorKind::UnsupportedType:
    case ErrorKind::IoError:
      return kExitInputError;
    default:
      return kExitChecksFailed;
  }
}

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void emit(const json& report, const std::string& json_path) {
  if (!json_path.empty()) write_file_atomic(json_path, report.dump(2) + "\n");
  std::cout << report.dump(2) << std::endl;
}

json subgroup_orders(const SubgroupSystem& sys) {
  json out = json::array();
  for (int i = -1; i <= sys.rank(); ++i) out.push_back(sys.r(i).order());
  return out;
}

json verify_report(const SubgroupSystem& sys, const std::string& name, bool* all_ok) {
  json checks;
  checks["structural"] = {{"holds", true}};

  IntersectionReport ip = check_intersection_property(sys);
  json ip_json{{"holds", ip.holds}, {"mode", ip.sampled ? "sampled" : "exhaustive"}};
  if (ip.witness)
    ip_json["witness"] = {{"I", ip.witness->first.to_string()}, {"J", ip.witness->second.to_string()}};
  checks["intersection_property"] = ip_json;

  StringConditionReport sc = check_string_condition(sys);
  json sc_json{{"holds", sc.holds}};
  if (sc.witness) sc_json["witness"] = {sc.witness->first, sc.witness->second};
  checks["string_condition"] = sc_json;

  bool gscg = ip.holds && sc.holds;
  checks["generalized_string_cgroup"] = gscg;
  checks["string_cgroup"] = is_string_cgroup(sys);

  LatticeConditionReport lat = lattice_necessary_condition(sys);
  json lat_json{{"holds", lat.holds}};
  if (lat.witness) lat_json["witness"] = *lat.witness;
  checks["lattice_necessary_condition"] = lat_json;

  PrimeBoundReport pb = flag_stabilizer_prime_bound(sys);
  json pb_json{{"holds", pb.holds}, {"bound", pb.bound}};
  if (pb.offending_prime) pb_json["offending_prime"] = *pb.offending_prime;
  checks["flag_stabilizer_prime_bound"] = pb_json;

  json report{{"format_version", kFormatVersion},
              {"name", name},
              {"degree", sys.degree()},
              {"rank", sys.rank()},
              {"group_order", sys.gamma().order()},
              {"subgroup_orders", subgroup_orders(sys)},
              {"k_vector", k_vector(sys)},
              {"flag_stabilizer_order", sys.r(-1).order()},
              {"predicted_flag_count", sys.gamma().order() / sys.r(-1).order()},
              {"action_kernel_order", action_kernel(sys).order()},
              {"checks", checks}};
  *all_ok = gscg;
  return report;
}

json axiom_report(const IncidenceComplex& k, bool* all_ok) {
  Verdict i2 = check_I2(k);
  Verdict i4 = check_I4(k);
  Verdict diamond = check_diamond(k);
  Verdict conn = check_strongly_connected(k);
  Verdict flag_conn = check_strongly_flag_connected(k);
  LatticeVerdict lattice = is_lattice(k);

  auto as_json = [](const Verdict& v) {
    json out{{"holds", v.holds}};
    if (!v.holds) out["witness"] = v.witness;
    return out;
  };

  json checks;
  checks["I1"] = {{"holds", true}};
  checks["I2"] = as_json(i2);
  checks["I3_strong_connectivity"] = as_json(conn);
  checks["I3_strong_flag_connectivity"] = as_json(flag_conn);
  checks["I3_equivalence_agrees"] = conn.holds == flag_conn.holds;
  checks["I4"] = as_json(i4);
  checks["diamond"] = as_json(diamond);
  json lat_json{{"holds", lattice.holds}};
  if (lattice.witness)
    lat_json["witness"] = {{"pair", {lattice.witness->first, lattice.witness->second}},
                           {"which", lattice.which}};
  checks["lattice"] = lat_json;

  *all_ok = i2.holds && i4.holds && conn.holds && flag_conn.holds &&
            (conn.holds == flag_conn.holds);

  return json{{"rank", k.rank()},
              {"f_vector", k.f_vector()},
              {"flag_count", k.flags().size()},
              {"is_polytope", diamond.holds},
              {"checks", checks}};
}

int cmd_verify(const std::string& path, const std::string& json_out) {
  Timer timer;
  SubgroupSystem sys;
  std::string name;
  try {
    GroupSpec spec = group_spec_from_json(load_json_file(path));
    name = spec.name.empty() ? path : spec.name;
    sys = system_of(spec);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidSystem) {
      json report{{"format_version", kFormatVersion},
                  {"input", path},
                  {"checks", {{"structural", {{"holds", false}, {"witness", e.what()}}}}}};
      report["timing_ms"] = timer.ms();
      emit(report, json_out);
      return kExitChecksFailed;
    }
    throw;
  }
  bool ok = false;
  json report = verify_report(sys, name, &ok);
  report["input"] = path;
  report["timing_ms"] = timer.ms();
  emit(report, json_out);
  return ok ? 0 : kExitChecksFailed;
}

int cmd_build(const std::string& path, const std::string& out_path, const std::string& dot_path,
              const std::string& flags_dot_path, const std::string& json_out) {
  Timer timer;
  GroupSpec spec = group_spec_from_json(load_json_file(path));
  std::string name = spec.name.empty() ? path : spec.name;
  SubgroupSystem sys = system_of(spec);
  BuiltComplex built = build_complex(sys);
  const IncidenceComplex& k = built.complex();

  ComplexSpec cspec = complex_spec_of(k, name, built.action_generators());
  if (!out_path.empty()) write_file_atomic(out_path, complex_spec_to_json(cspec).dump(2) + "\n");
  if (!dot_path.empty()) {
    std::ostringstream dot;
    write_hasse_dot(dot, k, name);
    write_file_atomic(dot_path, dot.str());
  }
  if (!flags_dot_path.empty()) {
    std::ostringstream dot;
    write_flag_graph_dot(dot, k, name);
    write_file_atomic(flags_dot_path, dot.str());
  }

  json report{{"format_version", kFormatVersion},
              {"input", path},
              {"name", name},
              {"rank", k.rank()},
              {"f_vector", k.f_vector()},
              {"flag_count", k.flags().size()},
              {"k_vector", k_vector(sys)},
              {"face_count", k.face_count()}};
  report["timing_ms"] = timer.ms();
  emit(report, json_out);
  return 0;
}

int cmd_analyze(const std::string& path, const std::string& group_path,
                const std::string& json_out) {
  Timer timer;
  ComplexSpec spec = complex_spec_from_json(load_json_file(path));
  IncidenceComplex k = complex_of(spec);

  bool ok = false;
  json report = axiom_report(k, &ok);
  report["format_version"] = kFormatVersion;
  report["input"] = path;
  if (!spec.name.empty()) report["name"] = spec.name;

  if (!spec.automorphisms.empty()) {
    ActionReport action = verify_group_action(k, spec.automorphisms);
    json action_json{{"is_automorphism_set", action.is_automorphism_set},
                     {"flag_transitive", action.flag_transitive},
                     {"simply_flag_transitive", action.simply_flag_transitive},
                     {"group_order", action.group_order},
                     {"flag_stabilizer_order", action.flag_stabilizer_order}};
    report["action"] = action_json;
    ok = ok && action.is_automorphism_set;
    if (action.is_automorphism_set && action.flag_transitive) {
      Flag base = k.flags().front();
      SubgroupSystem derived = derive_system(k, spec.automorphisms, base);
      ReconstructionReport rec = verify_reconstruction(k, derived, base);
      report["derived_subgroup_orders"] = subgroup_orders(derived);
      report["derived_k_vector"] = k_vector(derived);
      report["reconstruction"] = {{"isomorphic", rec.isomorphic},
                                  {"canonical_map_used", rec.canonical_map_used}};
      ok = ok && rec.isomorphic;
      if (!group_path.empty()) {
        SubgroupSystem given = system_of(group_spec_from_json(load_json_file(group_path)));
        bool match = given.rank() == derived.rank();
        if (match)
          for (int i = -1; i <= given.rank(); ++i)
            if (given.r(i).order() != derived.r(i).order()) match = false;
        report["derived_matches_group_spec"] = match;
        ok = ok && match;
      }
    }
  }
  report["timing_ms"] = timer.ms();
  emit(report, json_out);
  return ok ? 0 : kExitChecksFailed;
}

int cmd_section(const std::string& path, int i, int j, const std::string& out_path,
                const std::string& json_out) {
  Timer timer;
  GroupSpec spec = group_spec_from_json(load_json_file(path));
  SubgroupSystem sys = system_of(spec);
  SubgroupSystem sec = section_group(sys, i, j);
  std::string name = (spec.name.empty() ? std::string(path) : spec.name) + " section(" +
                     std::to_string(i) + "," + std::to_string(j) + ")";
  if (!out_path.empty())
    write_file_atomic(out_path, group_spec_to_json(group_spec_of(sec, name)).dump(2) + "\n");

  BuiltComplex built = build_complex(sec);
  json report{{"format_version", kFormatVersion},
              {"input", path},
              {"name", name},
              {"rank", sec.rank()},
              {"group_order", sec.gamma().order()},
              {"subgroup_orders", subgroup_orders(sec)},
              {"k_vector", k_vector(sec)},
              {"f_vector", built.complex().f_vector()},
              {"flag_count", built.complex().flags().size()}};
  report["timing_ms"] = timer.ms();
  emit(report, json_out);
  return 0;
}

int cmd_skeleton(const std::string& path, int n, const std::string& out_path,
                 const std::string& json_out) {
  Timer timer;
  GroupSpec spec = group_spec_from_json(load_json_file(path));
  SubgroupSystem sys = system_of(spec);
  SubgroupSystem skel = skeleton_system(sys, n);
  std::string name =
      (spec.name.empty() ? std::string(path) : spec.name) + " skeleton(" + std::to_string(n) + ")";
  if (!out_path.empty())
    write_file_atomic(out_path, group_spec_to_json(group_spec_of(skel, name)).dump(2) + "\n");

  BuiltComplex built = build_complex(skel);
  SkeletonKernelReport kr = verify_skeleton_kernel(skel);
  json report{{"format_version", kFormatVersion},
              {"input", path},
              {"name", name},
              {"rank", skel.rank()},
              {"f_vector", built.complex().f_vector()},
              {"flag_count", built.complex().flags().size()},
              {"k_vector", k_vector(skel)},
              {"action_kernel_order", action_kernel(skel).order()},
              {"facet_kernel",
               {{"holds", kr.holds},
                {"kernel_is_flag_stabilizer", kr.kernel_is_flag_stabilizer},
                {"kernel_order", kr.kernel_order},
                {"quotient_order", kr.quotient_order},
                {"facet_flag_count", kr.facet_flag_count},
                {"quotient_is_string_cgroup", kr.quotient_is_string_cgroup}}}};
  report["timing_ms"] = timer.ms();
  emit(report, json_out);
  return kr.holds ? 0 : kExitChecksFailed;
}

int cmd_extend_verify(const std::string& path, bool lattice, const std::string& json_out) {
  Timer timer;
  std::string dir;
  if (auto slash = path.find_last_of('/'); slash != std::string::npos)
    dir = path.substr(0, slash);
  ExtensionData data = extension_from_json(load_json_file(path), dir);
  ExtensionReport result = verify_extension(data, lattice);

  json conditions = json::array();
  for (const auto& item : result.conditions) {
    json c{{"name", item.name}, {"holds", item.holds}};
    if (!item.witness.empty()) c["witness"] = item.witness;
    conditions.push_back(std::move(c));
  }
  json report{{"format_version", kFormatVersion},
              {"input", path},
              {"certified", result.ok},
              {"conditions", std::move(conditions)},
              {"facets_checked", result.facets_checked}};
  if (!result.extension_f_vector.empty()) report["extension_f_vector"] = result.extension_f_vector;
  report["timing_ms"] = timer.ms();
  emit(report, json_out);
  return result.ok ? 0 : kExitChecksFailed;
}

int cmd_catalog_list() {
  for (const CatalogEntry& e : all_entries()) {
    std::cout << e.name << "  order=" << e.system.gamma().order() << " rank=" << e.system.rank();
    if (e.positive) {
      std::cout << " f=(";
      for (std::size_t i = 0; i < e.expected_f_vector.size(); ++i)
        std::cout << (i ? "," : "") << e.expected_f_vector[i];
      std::cout << ") flags=" << e.expected_flags << " k=(";
      for (std::size_t i = 0; i < e.expected_k.size(); ++i)
        std::cout << (i ? "," : "") << e.expected_k[i];
      std::cout << ")" << (e.polytope ? " polytope" : "") << (e.lattice ? " lattice" : "");
    } else {
      std::cout << " (negative control)";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_catalog_export(const std::string& name, const std::string& out_path) {
  const CatalogEntry* entry = find_entry(name);
  if (entry == nullptr) raise(ErrorKind::InvalidInput, "no catalog entry named " + name);
  json j = group_spec_to_json(group_spec_of(entry->system, entry->name));
  if (out_path.empty())
    std::cout << j.dump(2) << std::endl;
  else
    write_file_atomic(out_path, j.dump(2) + "\n");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular incidence complexes from generalized string C-groups"};
  app.require_subcommand(1);

  std::string spec_path, out_path, dot_path, flags_dot_path, json_out, group_path, name;
  int idx_i = -1, idx_j = 1, skel_rank = 1;
  bool lattice = false;

  CLI::App* verify = app.add_subcommand("verify", "check the C-group axioms of a group spec");
  verify->add_option("spec", spec_path, "group spec JSON")->required();
  verify->add_option("--json", json_out, "write the report to this file");

  CLI::App* build = app.add_subcommand("build", "build the coset complex of a verified spec");
  build->add_option("spec", spec_path, "group spec JSON")->required();
  build->add_option("--out", out_path, "write the complex JSON here");
  build->add_option("--dot", dot_path, "write the Hasse diagram (DOT)");
  build->add_option("--flags-dot", flags_dot_path, "write the flag adjacency graph (DOT)");
  build->add_option("--json", json_out, "write the report to this file");

  CLI::App* analyze = app.add_subcommand("analyze", "check the axioms of a complex file");
  analyze->add_option("complex", spec_path, "complex JSON")->required();
  analyze->add_option("--group", group_path, "group spec to compare the derived system against");
  analyze->add_option("--json", json_out, "write the report to this file");

  CLI::App* section = app.add_subcommand("section", "system of a section between base faces");
  section->add_option("spec", spec_path, "group spec JSON")->required();
  section->add_option("-i", idx_i, "lower rank")->required();
  section->add_option("-j", idx_j, "upper rank")->required();
  section->add_option("--out", out_path, "write the section group spec here");
  section->add_option("--json", json_out, "write the report to this file");

  CLI::App* skeleton = app.add_subcommand("skeleton", "skeleton system of a polytope spec");
  skeleton->add_option("spec", spec_path, "group spec JSON")->required();
  skeleton->add_option("-n", skel_rank, "rank of the skeleton complex")->required();
  skeleton->add_option("--out", out_path, "write the skeleton group spec here");
  skeleton->add_option("--json", json_out, "write the report to this file");

  CLI::App* extend = app.add_subcommand("extend-verify", "verify extension data");
  extend->add_option("data", spec_path, "extension JSON")->required();
  extend->add_flag("--lattice", lattice, "also evaluate the lattice condition");
  extend->add_option("--json", json_out, "write the report to this file");

  CLI::App* catalog = app.add_subcommand("catalog", "built-in verified examples");
  CLI::App* catalog_list = catalog->add_subcommand("list", "list entries");
  CLI::App* catalog_export = catalog->add_subcommand("export", "export an entry as a group spec");
  catalog_export->add_option("name", name, "entry name")->required();
  catalog_export->add_option("--out", out_path, "write the spec here");
  catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(spec_path, json_out);
    if (build->parsed()) return cmd_build(spec_path, out_path, dot_path, flags_dot_path, json_out);
    if (analyze->parsed()) return cmd_analyze(spec_path, group_path, json_out);
    if (section->parsed()) return cmd_section(spec_path, idx_i, idx_j, out_path, json_out);
    if (skeleton->parsed()) return cmd_skeleton(spec_path, skel_rank, out_path, json_out);
    if (extend->parsed()) return cmd_extend_verify(spec_path, lattice, json_out);
    if (catalog->parsed()) {
      if (catalog_list->parsed()) return cmd_catalog_list();
      if (catalog_export->parsed()) return cmd_catalog_export(name, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return 0;
}
