#include "dspath/frame.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dspath/error.hpp"

namespace dspath {
namespace {

std::size_t word_count(std::size_t n) { return ((std::size_t{1} << n) + 63) / 64; }

void check_frame_size(std::size_t n) {
  if (n > FrameSubset::kMaxVertices) {
    throw InputError("an explicit frame is limited to " + std::to_string(FrameSubset::kMaxVertices) + " vertices");
  }
}

}  // namespace

FrameSubset FrameSubset::none(std::size_t n) {
  check_frame_size(n);
  return FrameSubset(n, std::vector<std::uint64_t>(word_count(n), 0));
}

FrameSubset FrameSubset::all(std::size_t n) {
  check_frame_size(n);
  FrameSubset s(n, std::vector<std::uint64_t>(word_count(n), ~std::uint64_t{0}));
  s.clear_padding();
  return s;
}

FrameSubset FrameSubset::of_pattern(const TritPattern& pattern) {
  const std::size_t n = pattern.size();
  FrameSubset s = none(n);
  VertexMask required = 0;
  VertexMask fixed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pattern[i] == Trit::kEither) continue;
    fixed |= VertexMask{1} << i;
    if (pattern[i] == Trit::kIn) required |= VertexMask{1} << i;
  }
  for (VertexMask path = 0; path < s.frame_size(); ++path) {
    if ((path & fixed) == required) s.insert(path);
  }
  return s;
}

FrameSubset FrameSubset::of_patterns(std::span<const TritPattern> patterns) {
  if (patterns.empty()) throw InputError("a disjunction needs at least one pattern");
  FrameSubset s = none(patterns.front().size());
  for (const auto& pattern : patterns) s |= of_pattern(pattern);
  return s;
}

bool FrameSubset::is_empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t FrameSubset::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool FrameSubset::is_subset_of(const FrameSubset& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

std::vector<VertexMask> FrameSubset::members() const {
  std::vector<VertexMask> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
      out.push_back(k * 64 + static_cast<VertexMask>(std::countr_zero(w)));
    }
  }
  return out;
}

FrameSubset& FrameSubset::operator&=(const FrameSubset& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

FrameSubset& FrameSubset::operator|=(const FrameSubset& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

FrameSubset FrameSubset::complement() const {
  FrameSubset s = *this;
  for (auto& w : s.words_) w = ~w;
  s.clear_padding();
  return s;
}

void FrameSubset::assign_intersection(const FrameSubset& a, const FrameSubset& b) {
  n_ = a.n_;
  words_.resize(a.words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = a.words_[k] & b.words_[k];
}

std::size_t FrameSubset::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL ^ n_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

void FrameSubset::clear_padding() {
  const std::size_t size = frame_size();
  if (size < 64) words_[0] &= (std::uint64_t{1} << size) - 1;
}

FrameSubset focus_of_vertex_evidence(const EvidenceGraph& g, std::size_t i) {
  if (i >= g.size()) throw InputError("vertex " + std::to_string(i + 1) + " out of range");
  return FrameSubset::of_pattern(TritPattern::any(g.size()).with(i, Trit::kIn));
}

FrameSubset focus_of_edge_evidence(const EvidenceGraph& g, std::size_t i, std::size_t j) {
  if (!(i < j && j < g.size())) {
    throw InputError("edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") needs 1 <= i < j <= n");
  }
  const TritPattern any = TritPattern::any(g.size());
  std::vector<TritPattern> disjuncts{any.with(i, Trit::kOut), any.with(j, Trit::kOut)};
  for (std::size_t k = i + 1; k < j; ++k) disjuncts.push_back(any.with(k, Trit::kIn));
  return FrameSubset::of_patterns(disjuncts);
}

}  // namespace dspath
