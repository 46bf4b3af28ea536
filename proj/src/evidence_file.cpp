#include "dspath/evidence_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <utility>

#include "dspath/error.hpp"

namespace dspath {
namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string_view source) : source_(source) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    throw InputError(source_ + ": " + field + ": " + message);
  }

  const json& member(const json& object, const std::string& field, const char* key) const {
    if (!object.is_object()) fail(field, "expected an object");
    auto it = object.find(key);
    if (it == object.end()) fail(field, std::string("missing \"") + key + "\"");
    return *it;
  }

  long long integer(const json& value, const std::string& field) const {
    if (!value.is_number_integer()) fail(field, "expected an integer");
    return value.get<long long>();
  }

  double unit(const json& value, const std::string& field) const {
    if (!value.is_number()) fail(field, "expected a number");
    const double x = value.get<double>();
    if (!(x >= 0.0 && x <= 1.0)) fail(field, "value " + value.dump() + " is outside [0, 1]");
    return x;
  }

 private:
  std::string source_;
};

std::string at(const char* array, std::size_t index) { return std::string(array) + "[" + std::to_string(index) + "]"; }

}  // namespace

EvidenceFile parse_evidence(std::string_view json_text, std::string_view source) {
  const Reader reader(source);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in the message.
    throw InputError(std::string(source) + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) reader.fail("<root>", "expected an object");

  const json& vertices = reader.member(doc, "<root>", "vertices");
  if (!vertices.is_array() || vertices.empty()) reader.fail("vertices", "expected a non-empty array");
  const std::size_t n = vertices.size();
  if (n > EvidenceGraph::kMaxVertices) {
    reader.fail("vertices", "at most " + std::to_string(EvidenceGraph::kMaxVertices) + " vertices are supported");
  }

  std::vector<double> p(n);
  std::vector<std::optional<std::string>> labels(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string field = at("vertices", k);
    const json& v = vertices[k];
    const long long id = reader.integer(reader.member(v, field, "id"), field + ".id");
    if (id != static_cast<long long>(k) + 1) {
      reader.fail(field + ".id", "non-consecutive ids: got " + std::to_string(id) + ", expected " + std::to_string(k + 1));
    }
    p[k] = reader.unit(reader.member(v, field, "p"), field + ".p");
    if (auto it = v.find("label"); it != v.end() && !it->is_null()) {
      if (!it->is_string()) reader.fail(field + ".label", "expected a string");
      labels[k] = it->get<std::string>();
    }
  }

  EvidenceGraph skeleton(n);
  std::vector<double> q(skeleton.edge_count(), 0.0);
  std::vector<bool> seen(q.size(), false);
  if (auto it = doc.find("edges"); it != doc.end()) {
    if (!it->is_array()) reader.fail("edges", "expected an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string field = at("edges", k);
      const json& e = (*it)[k];
      const long long from = reader.integer(reader.member(e, field, "from"), field + ".from");
      const long long to = reader.integer(reader.member(e, field, "to"), field + ".to");
      const auto in_range = [n](long long id) { return id >= 1 && id <= static_cast<long long>(n); };
      if (!in_range(from)) reader.fail(field + ".from", "unknown vertex id " + std::to_string(from));
      if (!in_range(to)) reader.fail(field + ".to", "unknown vertex id " + std::to_string(to));
      if (from >= to) {
        reader.fail(field, "from (" + std::to_string(from) + ") must be less than to (" + std::to_string(to) + ")");
      }
      const std::size_t slot = skeleton.edge_index(static_cast<std::size_t>(from - 1), static_cast<std::size_t>(to - 1));
      if (seen[slot]) {
        reader.fail(field, "duplicate edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
      }
      seen[slot] = true;
      q[slot] = reader.unit(reader.member(e, field, "q"), field + ".q");
    }
  }

  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!seen[skeleton.edge_index(i, j)]) {
        warnings.push_back("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") not listed; q defaulted to 0");
      }
    }
  }
  return {EvidenceGraph(std::move(p), std::move(q)), std::move(labels), std::move(warnings)};
}

EvidenceFile load_evidence(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_evidence(text.str(), file.string());
}

std::string emit_evidence(const EvidenceGraph& graph, const std::vector<std::optional<std::string>>& labels) {
  json vertices = json::array();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    json v{{"id", i + 1}, {"p", graph.p(i)}};
    if (i < labels.size() && labels[i]) v["label"] = *labels[i];
    vertices.push_back(std::move(v));
  }
  json edges = json::array();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    for (std::size_t j = i + 1; j < graph.size(); ++j) {
      edges.push_back({{"from", i + 1}, {"to", j + 1}, {"q", graph.q(i, j)}});
    }
  }
  return json{{"vertices", vertices}, {"edges", edges}}.dump(2) + "\n";
}

}  // namespace dspath
