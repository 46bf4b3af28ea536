#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "dspath/graph.hpp"
#include "dspath/path.hpp"

namespace dspath {

/// An explicit subset of the frame of all 2^n complete paths, one bit per
/// path (bit `mask` stands for CompletePath(n, mask)).
class FrameSubset {
 public:
  /// Hard limit on n; the frame has 2^n elements.
  static constexpr std::size_t kMaxVertices = 20;

  static FrameSubset none(std::size_t n);
  static FrameSubset all(std::size_t n);
  static FrameSubset of_pattern(const TritPattern& pattern);
  /// Union of the match sets of a disjunction of patterns.
  static FrameSubset of_patterns(std::span<const TritPattern> patterns);

  std::size_t vertex_count() const { return n_; }
  std::size_t frame_size() const { return std::size_t{1} << n_; }

  bool contains(VertexMask path) const { return (words_[path >> 6] >> (path & 63U)) & 1U; }
  bool contains(const CompletePath& path) const { return contains(path.bits()); }
  void insert(VertexMask path) { words_[path >> 6] |= std::uint64_t{1} << (path & 63U); }

  bool is_empty() const;
  std::size_t count() const;
  bool is_subset_of(const FrameSubset& other) const;
  std::vector<VertexMask> members() const;

  FrameSubset& operator&=(const FrameSubset& other);
  FrameSubset& operator|=(const FrameSubset& other);
  friend FrameSubset operator&(FrameSubset a, const FrameSubset& b) { return a &= b; }
  friend FrameSubset operator|(FrameSubset a, const FrameSubset& b) { return a |= b; }
  FrameSubset complement() const;

  /// Writes a & b into *this without allocating when sizes already match.
  void assign_intersection(const FrameSubset& a, const FrameSubset& b);

  std::size_t hash() const;

  friend bool operator==(const FrameSubset&, const FrameSubset&) = default;
  friend auto operator<=>(const FrameSubset&, const FrameSubset&) = default;

 private:
  FrameSubset(std::size_t n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}
  void clear_padding();

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct FrameSubsetHash {
  std::size_t operator()(const FrameSubset& s) const { return s.hash(); }
};

/// Focus of the evidence e_i: every path that visits vertex i.
FrameSubset focus_of_vertex_evidence(const EvidenceGraph& g, std::size_t i);

/// Focus of the evidence e_ij against a direct transition i -> j: every path
/// that skips i, skips j, or visits some vertex strictly between them.
FrameSubset focus_of_edge_evidence(const EvidenceGraph& g, std::size_t i, std::size_t j);

}  // namespace dspath
