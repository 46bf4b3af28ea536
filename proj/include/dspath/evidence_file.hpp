#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dspath/graph.hpp"

namespace dspath {

/// A graph read from the JSON input format:
///
///   {"vertices": [{"id": 1, "p": 0.8, "label": "obs-A"}, ...],
///    "edges":    [{"from": 1, "to": 2, "q": 0.3}, ...]}
///
/// Vertex ids are 1..n in order. Edges need from < to; unlisted edges get
/// q = 0 and a warning.
struct EvidenceFile {
  EvidenceGraph graph;
  std::vector<std::optional<std::string>> labels;
  std::vector<std::string> warnings;
};

/// Throws InputError with the source name and the offending field.
EvidenceFile parse_evidence(std::string_view json_text, std::string_view source = "<input>");
EvidenceFile load_evidence(const std::filesystem::path& file);

/// Writes every vertex and every edge, numbers at full precision.
std::string emit_evidence(const EvidenceGraph& graph, const std::vector<std::optional<std::string>>& labels = {});

}  // namespace dspath
