#include "icx/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "icx/error.hpp"

namespace icx {

using nlohmann::json;

namespace {

void expect_version(const json& j, const std::string& what) {
  if (!j.is_object()) raise(ErrorKind::ParseError, what + ": expected a JSON object");
  if (j.contains("format_version") && j.at("format_version").get<int>() != kFormatVersion)
    raise(ErrorKind::ParseError, what + ": unsupported format_version");
}

int get_int(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    raise(ErrorKind::ParseError, what + ": missing integer field '" + key + "'");
  return j.at(key).get<int>();
}

} // namespace

GroupSpec group_spec_from_json(const json& j) {
  expect_version(j, "group spec");
  GroupSpec spec;
  spec.name = j.value("name", "");
  spec.degree = get_int(j, "degree", "group spec");
  spec.rank = get_int(j, "rank", "group spec");
  if (!j.contains("subgroups") || !j.at("subgroups").is_array())
    raise(ErrorKind::ParseError, "group spec: missing 'subgroups' array");
  const json& subs = j.at("subgroups");
  if (static_cast<int>(subs.size()) != spec.rank + 2)
    raise(ErrorKind::ParseError, "group spec: need rank+2 generator lists (R_-1..R_n)");
  for (const json& list : subs) {
    if (!list.is_array()) raise(ErrorKind::ParseError, "group spec: generator list expected");
    std::vector<std::string> gens;
    for (const json& g : list) {
      if (!g.is_string()) raise(ErrorKind::ParseError, "group spec: generators are cycle strings");
      gens.push_back(g.get<std::string>());
    }
    spec.subgroup_generators.push_back(std::move(gens));
  }
  return spec;
}

json group_spec_to_json(const GroupSpec& spec) {
  json subs = json::array();
  for (const auto& list : spec.subgroup_generators) subs.push_back(list);
  json j{{"format_version", kFormatVersion},
         {"degree", spec.degree},
         {"rank", spec.rank},
         {"subgroups", std::move(subs)}};
  if (!spec.name.empty()) j["name"] = spec.name;
  return j;
}

GroupSpec group_spec_of(const SubgroupSystem& sys, const std::string& name) {
  GroupSpec spec;
  spec.name = name;
  spec.degree = sys.degree();
  spec.rank = sys.rank();
  for (int i = -1; i <= sys.rank(); ++i) {
    std::vector<std::string> gens;
    for (const Perm& g : sys.r(i).generators())
      if (!g.is_identity()) gens.push_back(g.cycles());
    spec.subgroup_generators.push_back(std::move(gens));
  }
  return spec;
}

SubgroupSystem system_of(const GroupSpec& spec) {
  if (spec.degree < 1) raise(ErrorKind::ParseError, "group spec: degree must be positive");
  if (static_cast<int>(spec.subgroup_generators.size()) != spec.rank + 2)
    raise(ErrorKind::ParseError, "group spec: need rank+2 generator lists");
  std::vector<PermGroup> subgroups;
  std::vector<Perm> all;
  for (const auto& list : spec.subgroup_generators) {
    std::vector<Perm> gens;
    for (const std::string& text : list) gens.push_back(Perm::from_cycles(text, spec.degree));
    all.insert(all.end(), gens.begin(), gens.end());
    subgroups.push_back(PermGroup::generated(spec.degree, std::move(gens)));
  }
  PermGroup gamma = PermGroup::generated(spec.degree, std::move(all));
  return SubgroupSystem::create(std::move(gamma), std::move(subgroups));
}

ComplexSpec complex_spec_from_json(const json& j) {
  expect_version(j, "complex spec");
  ComplexSpec spec;
  spec.name = j.value("name", "");
  spec.rank = get_int(j, "rank", "complex spec");
  if (!j.contains("faces") || !j.at("faces").is_array())
    raise(ErrorKind::ParseError, "complex spec: missing 'faces' array");

  // File ids may be arbitrary; everything is normalized to dense ids in
  // order of appearance, including cover endpoints and automorphism images.
  std::map<int, int> remap;
  for (const json& f : j.at("faces")) {
    Face face;
    int file_id = get_int(f, "id", "complex face");
    if (remap.count(file_id)) raise(ErrorKind::ParseError, "complex spec: duplicate face id");
    face.id = static_cast<int>(spec.faces.size());
    remap[file_id] = face.id;
    face.rank = get_int(f, "rank", "complex face");
    face.label = f.value("label", "");
    spec.faces.push_back(std::move(face));
  }
  auto mapped = [&](int file_id) {
    auto it = remap.find(file_id);
    if (it == remap.end())
      raise(ErrorKind::ParseError,
            "complex spec: unknown face id " + std::to_string(file_id));
    return it->second;
  };
  if (!j.contains("covers") || !j.at("covers").is_array())
    raise(ErrorKind::ParseError, "complex spec: missing 'covers' array");
  for (const json& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2)
      raise(ErrorKind::ParseError, "complex spec: covers are [below, above] pairs");
    spec.covers.push_back({mapped(c.at(0).get<int>()), mapped(c.at(1).get<int>())});
  }
  if (j.contains("automorphisms")) {
    for (const json& a : j.at("automorphisms")) {
      if (!a.is_array() || a.size() != spec.faces.size())
        raise(ErrorKind::ParseError, "complex spec: automorphisms map every face id");
      std::vector<int> images;
      for (const json& x : a) images.push_back(mapped(x.get<int>()));
      spec.automorphisms.push_back(std::move(images));
    }
  }
  return spec;
}

json complex_spec_to_json(const ComplexSpec& spec) {
  json faces = json::array();
  for (const Face& f : spec.faces) {
    json face{{"id", f.id}, {"rank", f.rank}};
    if (!f.label.empty()) face["label"] = f.label;
    faces.push_back(std::move(face));
  }
  json covers = json::array();
  for (auto [a, b] : spec.covers) covers.push_back(json::array({a, b}));
  json j{{"format_version", kFormatVersion},
         {"rank", spec.rank},
         {"faces", std::move(faces)},
         {"covers", std::move(covers)}};
  if (!spec.automorphisms.empty()) j["automorphisms"] = spec.automorphisms;
  if (!spec.name.empty()) j["name"] = spec.name;
  return j;
}

ComplexSpec complex_spec_of(const IncidenceComplex& k, const std::string& name,
                            const std::vector<std::vector<int>>& automorphisms) {
  ComplexSpec spec;
  spec.name = name;
  spec.rank = k.rank();
  spec.faces = k.faces();
  for (const Face& f : k.faces())
    for (int above : k.upper_covers(f.id)) spec.covers.push_back({f.id, above});
  spec.automorphisms = automorphisms;
  return spec;
}

IncidenceComplex complex_of(const ComplexSpec& spec) {
  return IncidenceComplex::from_covers(spec.rank, spec.faces, spec.covers);
}

ExtensionData extension_from_json(const json& j, const std::string& base_dir) {
  expect_version(j, "extension data");
  auto load_group = [&](const char* key) {
    if (!j.contains(key)) raise(ErrorKind::ParseError, std::string("extension data: missing '") + key + "'");
    const json& node = j.at(key);
    if (node.is_string()) {
      std::string path = node.get<std::string>();
      if (!path.empty() && path.front() != '/' && !base_dir.empty())
        path = base_dir + "/" + path;
      return group_spec_from_json(load_json_file(path));
    }
    return group_spec_from_json(node);
  };
  GroupSpec base_spec = load_group("base");
  GroupSpec cand_spec = load_group("candidate");
  if (cand_spec.rank != base_spec.rank + 1)
    raise(ErrorKind::ParseError, "extension data: candidate rank must be base rank + 1");

  ExtensionData data;
  data.base = system_of(base_spec);
  std::vector<PermGroup> subgroups;
  std::vector<Perm> all;
  for (const auto& list : cand_spec.subgroup_generators) {
    std::vector<Perm> gens;
    for (const std::string& text : list) gens.push_back(Perm::from_cycles(text, cand_spec.degree));
    all.insert(all.end(), gens.begin(), gens.end());
    subgroups.push_back(PermGroup::generated(cand_spec.degree, std::move(gens)));
  }
  data.lambda = PermGroup::generated(cand_spec.degree, std::move(all));
  data.candidate_subgroups = std::move(subgroups);

  if (!j.contains("pi") || !j.at("pi").is_array())
    raise(ErrorKind::ParseError, "extension data: missing 'pi' generator/image pairs");
  for (const json& pair : j.at("pi")) {
    if (!pair.is_array() || pair.size() != 2)
      raise(ErrorKind::ParseError, "extension data: pi entries are [generator, image] pairs");
    data.pi.push_back({Perm::from_cycles(pair.at(0).get<std::string>(), cand_spec.degree),
                       Perm::from_cycles(pair.at(1).get<std::string>(), base_spec.degree)});
  }
  return data;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    raise(ErrorKind::ParseError, path + ": " + e.what());
  }
  return j;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) raise(ErrorKind::IoError, "cannot write " + tmp);
    out << contents;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    raise(ErrorKind::IoError, "cannot move " + tmp + " into place");
}

void write_hasse_dot(std::ostream& out, const IncidenceComplex& k, const std::string& name) {
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int r = -1; r <= k.rank(); ++r) {
    out << "  { rank=same;";
    for (int id : k.faces_of_rank(r)) out << " n" << id << ";";
    out << " }\n";
  }
  for (const Face& f : k.faces()) {
    std::string label = f.label.empty() ? std::to_string(f.id) : f.label;
    out << "  n" << f.id << " [label=\"" << f.rank << ": " << label << "\"];\n";
  }
  for (const Face& f : k.faces())
    for (int above : k.upper_covers(f.id)) out << "  n" << f.id << " -> n" << above << ";\n";
  out << "}\n";
}

void write_flag_graph_dot(std::ostream& out, const IncidenceComplex& k, const std::string& name) {
  auto flags = k.flags();
  out << "graph \"" << name << "\" {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < flags.size(); ++i) out << "  f" << i << ";\n";
  for (std::size_t i = 0; i < flags.size(); ++i) {
    for (std::size_t j = i + 1; j < flags.size(); ++j) {
      int diff = -1, count = 0;
      for (std::size_t p = 0; p < flags[i].size(); ++p)
        if (flags[i][p] != flags[j][p]) {
          diff = static_cast<int>(p) - 1;
          ++count;
        }
      if (count == 1)
        out << "  f" << i << " -- f" << j << " [label=\"" << diff << "\"];\n";
    }
  }
  out << "}\n";
}

} // namespace icx
