#include "dspath/path.hpp"

#include <bit>

#include "dspath/error.hpp"
#include "dspath/graph.hpp"

namespace dspath {

CompletePath::CompletePath(std::size_t n, VertexMask bits) : n_(n), bits_(bits) {
  if (n > EvidenceGraph::kMaxVertices) throw InputError("path longer than " + std::to_string(EvidenceGraph::kMaxVertices));
  if (n < 64 && (bits >> n) != 0) throw InputError("path mask has bits beyond vertex " + std::to_string(n));
}

CompletePath CompletePath::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty path string");
  if (text.size() > EvidenceGraph::kMaxVertices) throw InputError("path string too long");
  VertexMask bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= VertexMask{1} << i;
    } else if (text[i] != '0') {
      throw InputError("path string may only contain '0' and '1', got '" + std::string(1, text[i]) + "'");
    }
  }
  return CompletePath(text.size(), bits);
}

std::string CompletePath::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (contains(i)) out[i] = '1';
  }
  return out;
}

std::size_t CompletePath::vertex_count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::size_t CompletePath::first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

std::size_t CompletePath::last() const { return 63U - static_cast<std::size_t>(std::countl_zero(bits_)); }

std::vector<std::size_t> CompletePath::vertices() const {
  std::vector<std::size_t> out;
  for (VertexMask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

std::vector<std::size_t> CompletePath::internal_vertices() const {
  std::vector<std::size_t> out = vertices();
  if (out.size() <= 2) return {};
  return {out.begin() + 1, out.end() - 1};
}

TritPattern TritPattern::with(std::size_t i, Trit value) const {
  TritPattern copy = *this;
  copy.trits_.at(i) = value;
  return copy;
}

bool TritPattern::matches(const CompletePath& path) const {
  if (path.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (trits_[i] == Trit::kEither) continue;
    if ((trits_[i] == Trit::kIn) != path.contains(i)) return false;
  }
  return true;
}

std::optional<CompletePath> TritPattern::to_path() const {
  VertexMask bits = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (trits_[i] == Trit::kEither) return std::nullopt;
    if (trits_[i] == Trit::kIn) bits |= VertexMask{1} << i;
  }
  return CompletePath(size(), bits);
}

}  // namespace dspath
