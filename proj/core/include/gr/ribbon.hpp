#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gr/assembly_graph.hpp"

namespace gr {

/// One bit per vertex (by vertex index): 0 selects the graph's reference
/// connection at that vertex (AssemblyGraph::reference_reversed), 1 the other
/// one. Flipping a bit is a connection change at that vertex.
class EmbeddingChoice {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  EmbeddingChoice() = default;
  explicit EmbeddingChoice(std::size_t vertex_count, std::uint64_t bits = 0);

  /// Big-endian over vertices 1..n: "101" reverses the first and third vertex.
  static EmbeddingChoice from_bitstring(std::string_view bits);
  std::string to_bitstring() const;

  std::size_t size() const noexcept { return size_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool reversed(VertexIndex v) const noexcept { return (bits_ >> v) & 1u; }

  /// Reversing every rotation (the mirror-image surface).
  EmbeddingChoice complement() const;

  friend bool operator==(const EmbeddingChoice&, const EmbeddingChoice&) = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t size_ = 0;
};

EmbeddingChoice flip_vertex(const EmbeddingChoice& c, VertexIndex v);

/// Partition of the darts into boundary components.
struct BoundaryDecomposition {
  std::vector<std::uint32_t> orbit_of;  // dart -> component id
  std::size_t count = 0;
};

/// Orbits of the face successor d -> rotation_next(twin(d)).
BoundaryDecomposition trace(const AssemblyGraph& g, const EmbeddingChoice& c);

/// Number of boundary components b(F) of the ribbon graph for `c`.
std::size_t boundary_count(const AssemblyGraph& g, const EmbeddingChoice& c);

/// (n - b + 2) / 2. A parity violation is an internal error and aborts.
int genus(const AssemblyGraph& g, const EmbeddingChoice& c);

/// Closed interval [min, max] of genera.
struct GenusRange {
  int min = 0;
  int max = 0;

  bool contains(int g) const noexcept { return min <= g && g <= max; }
  std::string to_string() const;

  friend bool operator==(const GenusRange&, const GenusRange&) = default;
};

struct GenusRangeOptions {
  /// Largest vertex count accepted for exhaustive enumeration.
  std::size_t cap = 26;
  /// Check that the achieved genera are exactly {min..max}.
  bool verify_consecutive = true;
  /// Stop once the extreme boundary counts allowed by parity are both seen.
  /// Only honored when verify_consecutive is off; the histogram is then
  /// partial.
  bool early_exit = false;
  unsigned threads = 1;
};

/// Result of enumerating all 2^n embeddings.
struct EmbeddingSpectrum {
  GenusRange range;
  /// boundary_histogram[b] = number of choices with b boundary components.
  std::vector<std::uint64_t> boundary_histogram;
  std::uint64_t choices = 0;
};

EmbeddingSpectrum embedding_spectrum(const AssemblyGraph& g, const GenusRangeOptions& options = {});
GenusRange genus_range(const AssemblyGraph& g, const GenusRangeOptions& options = {});
GenusRange genus_range(const Dow& w, const GenusRangeOptions& options = {});

/// Component ids tracing 1-based edge `edge`: one or two ids, ascending.
std::vector<std::uint32_t> edge_trace_components(const AssemblyGraph& g, const EmbeddingChoice& c,
                                                 std::size_t edge);

/// A choice with at least two boundary components, built directly: walk a
/// cycle of the odd-indexed edges and set each vertex so that one boundary
/// curve follows the cycle and closes on itself.
EmbeddingChoice construct_multiboundary(const AssemblyGraph& g);

/// Reusable tracer for hot loops; holds scratch space, not thread-safe.
class BoundaryTracer {
 public:
  explicit BoundaryTracer(const AssemblyGraph& g);

  std::size_t count(std::uint64_t bits);

 private:
  std::size_t darts_;
  std::vector<DartId> next_;      // rotation successor, as built
  std::vector<DartId> prev_;      // rotation successor, reversed
  std::vector<VertexIndex> vertex_;
  std::vector<std::uint64_t> visited_;
};

}  // namespace gr
