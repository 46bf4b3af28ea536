#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dspath {

using VertexMask = std::uint64_t;

/// One element of the frame: every vertex is either on the path or not.
/// Bit i of the mask is set when vertex i (v_{i+1}) is visited.
class CompletePath {
 public:
  CompletePath(std::size_t n, VertexMask bits);

  /// Parses a bit string such as "101"; the leftmost character is v_1 and
  /// '1' marks a visited vertex.
  static CompletePath parse(std::string_view text);

  std::string to_string() const;

  std::size_t size() const { return n_; }
  VertexMask bits() const { return bits_; }
  bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t vertex_count() const;

  /// First and last visited vertex. Require !empty().
  std::size_t first() const;
  std::size_t last() const;

  /// Visited vertices in increasing order.
  std::vector<std::size_t> vertices() const;
  /// Visited vertices strictly between first() and last().
  std::vector<std::size_t> internal_vertices() const;

  friend bool operator==(const CompletePath&, const CompletePath&) = default;
  friend auto operator<=>(const CompletePath&, const CompletePath&) = default;

 private:
  std::size_t n_;
  VertexMask bits_;
};

enum class Trit : std::uint8_t { kIn, kOut, kEither };

/// A partially specified path: each vertex is on it, off it, or either.
class TritPattern {
 public:
  explicit TritPattern(std::vector<Trit> trits) : trits_(std::move(trits)) {}
  /// All kEither.
  static TritPattern any(std::size_t n) { return TritPattern(std::vector<Trit>(n, Trit::kEither)); }

  std::size_t size() const { return trits_.size(); }
  Trit operator[](std::size_t i) const { return trits_[i]; }
  TritPattern with(std::size_t i, Trit value) const;

  bool matches(const CompletePath& path) const;
  /// The unique matching path when no entry is kEither.
  std::optional<CompletePath> to_path() const;

  friend bool operator==(const TritPattern&, const TritPattern&) = default;

 private:
  std::vector<Trit> trits_;
};

}  // namespace dspath
