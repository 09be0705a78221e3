#include "hfam/io.hpp"

#include <fstream>
#include <sstream>

namespace hfam {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

int read_ground(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw std::invalid_argument("missing integer field \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 0 || n > 64) throw std::invalid_argument("n out of [0, 64]");
  return n;
}

std::vector<GroundedSet> read_sets(const json& arr, int n) {
  if (!arr.is_array()) throw std::invalid_argument("expected an array of sets");
  std::vector<GroundedSet> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array()) throw std::invalid_argument("set must be an array");
    std::vector<int> labels;
    labels.reserve(item.size());
    for (const auto& v : item) {
      if (!v.is_number_integer()) throw std::invalid_argument("element must be an integer");
      const int e = v.get<int>();
      if (e < 1 || e > n) throw std::invalid_argument("element out of [1, n]");
      labels.push_back(e);
    }
    out.push_back(GroundedSet::of(n, labels));
  }
  return out;
}

}  // namespace

nlohmann::json set_to_json(const GroundedSet& s) {
  return nlohmann::json(s.elements());
}

GroundedSet set_from_json(const nlohmann::json& j, int n) {
  std::vector<int> labels;
  if (!j.is_array()) throw std::invalid_argument("set must be an array");
  for (const auto& v : j) labels.push_back(v.get<int>());
  return GroundedSet::of(n, labels);
}

nlohmann::json members_to_json(const SetFamily& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& m : f) arr.push_back(set_to_json(m));
  return arr;
}

nlohmann::json family_to_json(const HereditaryFamily& h) {
  return nlohmann::json{{"n", h.ground()}, {"bases", members_to_json(h.bases())}};
}

nlohmann::json set_family_to_json(const SetFamily& f) {
  return nlohmann::json{{"n", f.ground()}, {"members", members_to_json(f)}};
}

ParsedFamily parse_family(const std::string& text) {
  const json j = parse_text(text);
  const int n = read_ground(j);
  if (!j.contains("bases")) throw std::invalid_argument("missing field \"bases\"");
  std::vector<GroundedSet> raw = read_sets(j.at("bases"), n);
  if (raw.empty()) throw std::invalid_argument("no generators");
  SetFamily given = SetFamily::canonical(n, std::move(raw));
  HereditaryFamily h = downward_closure(given);
  ParsedFamily out;
  out.reduced = !(h.bases() == given);
  out.family = std::move(h);
  return out;
}

std::string serialize_family(const HereditaryFamily& h) {
  return family_to_json(h).dump(2) + "\n";
}

SetFamily parse_set_family(const std::string& text) {
  const json j = parse_text(text);
  const int n = read_ground(j);
  if (!j.contains("members")) throw std::invalid_argument("missing field \"members\"");
  return SetFamily::canonical(n, read_sets(j.at("members"), n));
}

std::string serialize_set_family(const SetFamily& f) {
  return set_family_to_json(f).dump(2) + "\n";
}

Graph parse_graph(const std::string& text) {
  const json j = parse_text(text);
  const int n = read_ground(j);
  Graph g = Graph::make(n);
  if (!j.contains("edges")) throw std::invalid_argument("missing field \"edges\"");
  const json& edges = j.at("edges");
  if (!edges.is_array()) throw std::invalid_argument("\"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("edge must be a pair [i, j]");
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

nlohmann::json report_to_json(const ExtremalReport& rep) {
  nlohmann::json j;
  j["context"] = {{"n", rep.context.f.ground()},
                  {"r", rep.context.r},
                  {"s", rep.context.s},
                  {"t", rep.context.t},
                  {"f_size", rep.context.f.size()},
                  {"g_size", rep.context.g.size()}};
  j["m"] = rep.m;
  nlohmann::json maxs = nlohmann::json::array();
  const bool classified = rep.classifications.size() == rep.maximizers.size();
  for (std::size_t i = 0; i < rep.maximizers.size(); ++i) {
    nlohmann::json entry;
    entry["A"] = members_to_json(rep.maximizers[i].a);
    entry["B"] = members_to_json(rep.maximizers[i].b);
    if (classified) {
      const MaximizerClass& c = rep.classifications[i];
      nlohmann::json cls;
      switch (c.shape) {
        case PairShape::star_pair:
          cls["kind"] = "star";
          cls["I"] = set_to_json(c.witness);
          break;
        case PairShape::swapped_star_pair:
          cls["kind"] = "swapped";
          cls["I"] = set_to_json(c.witness);
          break;
        case PairShape::unstructured:
          cls["kind"] = "unstructured";
          break;
      }
      if (c.matched_both) {
        cls["matched_both"] = true;
        cls["swapped_I"] = set_to_json(c.swapped_witness);
      }
      if (c.shape != PairShape::unstructured)
        cls["star_sum_is_m"] = c.star_sum_is_m;
      entry["classification"] = cls;
    }
    maxs.push_back(std::move(entry));
  }
  j["maximizers"] = std::move(maxs);
  j["stats"] = {{"closed_pairs_visited", rep.stats.closed_pairs_visited},
                {"elapsed_ms", rep.stats.elapsed_ms}};
  return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace hfam
