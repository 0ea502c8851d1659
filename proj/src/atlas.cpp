#include "stairs/atlas.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "stairs/arrows.hpp"
#include "stairs/errors.hpp"
#include "stairs/family.hpp"
#include "stairs/parse.hpp"
#include "stairs/profile.hpp"

namespace stairs {

namespace {

std::string generator_text(const Staircase& s) {
  return to_text(minimal_generators(s));
}

// Bundled display names for the staircases of one Hilbert function.
std::map<Staircase, std::string> load_names(const std::string& data_dir,
                                            const Grading& g,
                                            const HilbertFunction& h) {
  std::map<Staircase, std::string> names;
  if (data_dir.empty()) return names;
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir, ec)) {
    std::string stem = entry.path().filename().string();
    if (stem.rfind("names_", 0) == 0 && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
      if (grading_from_json(j.at("grading")) != g) continue;
      std::vector<long long> values;
      for (const auto& v : j.at("hilbert")) values.push_back(v.get<long long>());
      if (!(HilbertFunction{values} == h)) continue;
      for (const auto& entry : j.at("names")) {
        Staircase s = staircase_from_text(entry.at("generators").get<std::string>());
        names[s] = entry.at("name").get<std::string>();
      }
    } catch (const std::exception&) {
      continue;  // a malformed names file only costs its annotations
    }
  }
  return names;
}

std::vector<std::filesystem::path> family_files(const std::string& data_dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir, ec)) {
    std::string stem = entry.path().filename().string();
    if (stem.rfind("family_", 0) == 0 && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream out;
  out << std::hex << v;
  return out.str();
}

std::string cache_path(const std::string& cache_dir, const Grading& g,
                       const HilbertFunction& h) {
  return cache_dir + "/atlas-" + atlas_cache_key(g, h) + ".json";
}

AtlasGraph atlas_from_json(const nlohmann::json& payload) {
  AtlasGraph graph;
  graph.grading = grading_from_json(payload.at("grading"));
  std::vector<long long> values;
  for (const auto& v : payload.at("hilbert")) values.push_back(v.get<long long>());
  graph.hilbert = HilbertFunction{std::move(values)};
  for (const auto& node : payload.at("nodes")) {
    graph.nodes.push_back(
        staircase_from_json(nlohmann::json{{"generators", node.at("generators")}}));
    graph.labels.push_back(node.at("label").get<std::string>());
  }
  for (const auto& edge : payload.at("edges")) {
    AtlasEdge e;
    e.from = edge.at("from").get<size_t>();
    e.to = edge.at("to").get<size_t>();
    if (e.from >= graph.nodes.size() || e.to >= graph.nodes.size()) {
      throw ParseError("edge endpoint out of range");
    }
    e.cond1 = edge.at("cond1").get<bool>();
    e.cond2 = edge.at("cond2").get<bool>();
    e.witness = edge.value("witness", std::string{});
    graph.edges.push_back(std::move(e));
  }
  return graph;
}

}  // namespace

AtlasGraph build_atlas(const Grading& g, const HilbertFunction& h,
                       const AtlasOptions& options) {
  AtlasGraph graph;
  graph.grading = g;
  graph.hilbert = h;
  graph.nodes = enumerate_staircases(g, h);
  std::map<Staircase, std::string> names = load_names(options.data_dir, g, h);
  for (const Staircase& node : graph.nodes) {
    std::string label = generator_text(node);
    auto it = names.find(node);
    if (it != names.end()) label = it->second + ": " + label;
    graph.labels.push_back(std::move(label));
  }
  std::map<std::pair<size_t, size_t>, size_t> edge_index;
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    for (size_t j = 0; j < graph.nodes.size(); ++j) {
      if (i == j) continue;
      NecessaryConditionReport report =
          necessary_condition(g, graph.nodes[i], graph.nodes[j]);
      if (report.holds() && !report.yameogo) {
        throw std::logic_error("both conditions hold on a non-dominating pair");
      }
      if (!report.yameogo) continue;
      edge_index[{i, j}] = graph.edges.size();
      graph.edges.push_back(AtlasEdge{i, j, report.cond1, report.cond2, {}});
    }
  }
  if (!options.data_dir.empty()) {
    std::map<Staircase, size_t> node_index;
    for (size_t i = 0; i < graph.nodes.size(); ++i) node_index[graph.nodes[i]] = i;
    for (const auto& path : family_files(options.data_dir)) {
      try {
        GradedFamily family = family_from_file(path.string());
        if (!(family.grading() == g)) continue;
        Staircase from = generic_initial_staircase(family);
        Staircase to = limit_staircase(family);
        auto from_it = node_index.find(from);
        auto to_it = node_index.find(to);
        if (from_it == node_index.end() || to_it == node_index.end()) continue;
        auto edge_it = edge_index.find({from_it->second, to_it->second});
        if (edge_it == edge_index.end()) continue;
        AtlasEdge& edge = graph.edges[edge_it->second];
        if (!edge.witness.empty()) continue;
        if (verify_witness(family, from, to).passed()) {
          edge.witness = family.name().empty() ? path.stem().string() : family.name();
        }
      } catch (const std::exception&) {
        continue;  // a malformed family file only costs its annotation
      }
    }
  }
  return graph;
}

std::string atlas_dot(const AtlasGraph& graph) {
  std::ostringstream out;
  out << "digraph atlas {\n";
  out << "  node [shape=box];\n";
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << graph.labels[i] << "\"];\n";
  }
  for (const AtlasEdge& e : graph.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [style="
        << (e.cond1 && e.cond2 ? "solid" : "dashed");
    if (!e.witness.empty()) out << ", tooltip=\"" << e.witness << "\"";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json atlas_json(const AtlasGraph& graph) {
  nlohmann::json j;
  j["grading"] = to_json(graph.grading);
  j["hilbert"] = nlohmann::json::array();
  for (size_t k = 0; k < graph.hilbert.length(); ++k) {
    j["hilbert"].push_back(graph.hilbert.at(k));
  }
  j["nodes"] = nlohmann::json::array();
  for (size_t i = 0; i < graph.nodes.size(); ++i) {
    nlohmann::json node;
    node["label"] = graph.labels[i];
    node["generators"] = to_json(graph.nodes[i]).at("generators");
    node["profile"] = profile(graph.grading, graph.nodes[i]).values;
    j["nodes"].push_back(std::move(node));
  }
  j["edges"] = nlohmann::json::array();
  for (const AtlasEdge& e : graph.edges) {
    nlohmann::json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["yameogo"] = true;
    edge["cond1"] = e.cond1;
    edge["cond2"] = e.cond2;
    if (!e.witness.empty()) edge["witness"] = e.witness;
    j["edges"].push_back(std::move(edge));
  }
  return j;
}

std::string atlas_cache_key(const Grading& g, const HilbertFunction& h) {
  std::string key = "g" + std::to_string(g.a()) + "," + std::to_string(g.b()) + "_h";
  for (size_t k = 0; k < h.length(); ++k) {
    if (k > 0) key += ",";
    key += std::to_string(h.at(k));
  }
  return key;
}

std::optional<AtlasGraph> load_cached_atlas(const std::string& cache_dir,
                                            const Grading& g,
                                            const HilbertFunction& h,
                                            std::ostream& warnings) {
  std::string path = cache_path(cache_dir, g, h);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    std::string stored = j.at("checksum").get<std::string>();
    std::string payload = j.at("payload").dump();
    if (stored != hex64(fnv1a(payload))) {
      throw ParseError("checksum mismatch");
    }
    AtlasGraph graph = atlas_from_json(j.at("payload"));
    if (!(graph.grading == g) || !(graph.hilbert == h)) {
      throw ParseError("cached key mismatch");
    }
    return graph;
  } catch (const std::exception& e) {
    warnings << "warning: ignoring corrupt atlas cache " << path << " (" << e.what()
             << "); recomputing\n";
    return std::nullopt;
  }
}

void store_atlas_cache(const std::string& cache_dir, const AtlasGraph& graph) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  nlohmann::json payload = atlas_json(graph);
  nlohmann::json j;
  j["checksum"] = hex64(fnv1a(payload.dump()));
  j["payload"] = std::move(payload);
  std::ofstream out(cache_path(cache_dir, graph.grading, graph.hilbert));
  out << j.dump(2) << "\n";
}

AtlasGraph atlas_with_cache(const Grading& g, const HilbertFunction& h,
                            const std::string& cache_dir,
                            const AtlasOptions& options, std::ostream& warnings) {
  if (cache_dir.empty()) return build_atlas(g, h, options);
  if (std::optional<AtlasGraph> cached = load_cached_atlas(cache_dir, g, h, warnings)) {
    return *cached;
  }
  AtlasGraph graph = build_atlas(g, h, options);
  store_atlas_cache(cache_dir, graph);
  return graph;
}

}  // namespace stairs
