#include "gr/ribbon.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "gr/error.hpp"

namespace gr {

namespace {

[[noreturn]] void internal_failure(const std::string& what, const AssemblyGraph& g,
                                   std::uint64_t bits) {
  std::fprintf(stderr, "internal error: %s\n  word: %s\n  choice bits: %s\n", what.c_str(),
               g.source().to_string().c_str(),
               EmbeddingChoice(g.vertex_count(), bits).to_bitstring().c_str());
  std::abort();
}

void check_choice(const AssemblyGraph& g, const EmbeddingChoice& c) {
  if (c.size() != g.vertex_count()) {
    throw Error(Errc::choice_size_mismatch, "choice has " + std::to_string(c.size()) +
                                                " bits but the graph has " +
                                                std::to_string(g.vertex_count()) + " vertices");
  }
}

void check_parity(const AssemblyGraph& g, std::uint64_t bits, std::size_t b) {
  const std::size_t n = g.vertex_count();
  if (b < 1 || b > n + 2 || (b % 2) != (n % 2)) {
    internal_failure("boundary count " + std::to_string(b) + " violates b = n (mod 2), 1 <= b <= n+2",
                     g, bits);
  }
}

}  // namespace

EmbeddingChoice::EmbeddingChoice(std::size_t vertex_count, std::uint64_t bits)
    : bits_(bits), size_(vertex_count) {
  if (vertex_count > kMaxVertices) {
    throw Error(Errc::size_over_cap, "embedding choices support at most " +
                                         std::to_string(kMaxVertices) + " vertices");
  }
  if (vertex_count < kMaxVertices && (bits >> vertex_count) != 0) {
    throw Error(Errc::choice_size_mismatch,
                "bits set beyond vertex " + std::to_string(vertex_count));
  }
}

EmbeddingChoice EmbeddingChoice::from_bitstring(std::string_view bits) {
  if (bits.size() > kMaxVertices) {
    throw Error(Errc::size_over_cap, "bit string longer than " + std::to_string(kMaxVertices));
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      value |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw Error(Errc::invalid_argument, "bit string may contain only '0' and '1'");
    }
  }
  return EmbeddingChoice(bits.size(), value);
}

std::string EmbeddingChoice::to_bitstring() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((bits_ >> i) & 1u) out[i] = '1';
  }
  return out;
}

EmbeddingChoice EmbeddingChoice::complement() const {
  const std::uint64_t mask = size_ == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1;
  return EmbeddingChoice(size_, ~bits_ & mask);
}

EmbeddingChoice flip_vertex(const EmbeddingChoice& c, VertexIndex v) {
  if (v >= c.size()) {
    throw Error(Errc::bad_vertex, "vertex index " + std::to_string(v) + " outside 0.." +
                                      std::to_string(c.size()) + ")");
  }
  return EmbeddingChoice(c.size(), c.bits() ^ (std::uint64_t{1} << v));
}

std::string GenusRange::to_string() const {
  return "[" + std::to_string(min) + "," + std::to_string(max) + "]";
}

BoundaryTracer::BoundaryTracer(const AssemblyGraph& g)
    : darts_(g.dart_count()),
      next_(darts_),
      prev_(darts_),
      vertex_(darts_),
      visited_((darts_ + 63) / 64) {
  for (DartId d = 0; d < darts_; ++d) {
    // Face successor of d, looked up at the vertex where twin(d) sits.
    // next_ is the successor for choice bit 0, prev_ for bit 1.
    const DartId t = AssemblyGraph::twin(d);
    const bool ref = g.reference_reversed(g.vertex_of(t));
    next_[d] = g.rotation_next(t, ref);
    prev_[d] = g.rotation_next(t, !ref);
    vertex_[d] = g.vertex_of(t);
  }
}

std::size_t BoundaryTracer::count(std::uint64_t bits) {
  if (darts_ == 0) return 2;  // trivial graph: a circle on the sphere
  std::fill(visited_.begin(), visited_.end(), 0);
  std::size_t orbits = 0;
  for (std::size_t w = 0; w < visited_.size(); ++w) {
    const std::size_t base = w * 64;
    const std::size_t width = std::min<std::size_t>(64, darts_ - base);
    const std::uint64_t full = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    while (visited_[w] != full) {
      const DartId start = static_cast<DartId>(base + std::countr_one(visited_[w]));
      DartId d = start;
      do {
        visited_[d >> 6] |= std::uint64_t{1} << (d & 63);
        d = ((bits >> vertex_[d]) & 1u) ? prev_[d] : next_[d];
      } while (d != start);
      ++orbits;
    }
  }
  return orbits;
}

BoundaryDecomposition trace(const AssemblyGraph& g, const EmbeddingChoice& c) {
  check_choice(g, c);
  BoundaryDecomposition out;
  if (g.trivial()) {
    out.count = 2;
    return out;
  }
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  out.orbit_of.assign(g.dart_count(), kUnset);
  for (DartId start = 0; start < g.dart_count(); ++start) {
    if (out.orbit_of[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.count++);
    DartId d = start;
    do {
      out.orbit_of[d] = id;
      const DartId t = AssemblyGraph::twin(d);
      const VertexIndex v = g.vertex_of(t);
      d = g.rotation_next(t, c.reversed(v) != g.reference_reversed(v));
    } while (d != start);
  }
  check_parity(g, c.bits(), out.count);
  return out;
}

std::size_t boundary_count(const AssemblyGraph& g, const EmbeddingChoice& c) {
  check_choice(g, c);
  BoundaryTracer tracer(g);
  const std::size_t b = tracer.count(c.bits());
  if (!g.trivial()) check_parity(g, c.bits(), b);
  return b;
}

int genus(const AssemblyGraph& g, const EmbeddingChoice& c) {
  const std::size_t b = boundary_count(g, c);
  return static_cast<int>((g.vertex_count() + 2 - b) / 2);
}

EmbeddingSpectrum embedding_spectrum(const AssemblyGraph& g, const GenusRangeOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n > options.cap || n >= EmbeddingChoice::kMaxVertices) {
    throw Error(Errc::size_over_cap,
                "graph has " + std::to_string(n) + " vertices; exhaustive enumeration of 2^" +
                    std::to_string(n) + " embeddings is refused above the cap of " +
                    std::to_string(options.cap));
  }

  EmbeddingSpectrum out;
  out.boundary_histogram.assign(n + 3, 0);
  if (g.trivial()) {
    out.boundary_histogram[2] = 1;
    out.choices = 1;
    out.range = {0, 0};
    return out;
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  const bool early = options.early_exit && !options.verify_consecutive;
  const std::size_t b_low = (n % 2 == 1) ? 1 : 2;
  const std::size_t b_high = n + 2;

  auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hist) {
    BoundaryTracer tracer(g);
    bool seen_low = false;
    bool seen_high = false;
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      const std::size_t b = tracer.count(bits);
      check_parity(g, bits, b);
      ++hist[b];
      if (early) {
        seen_low = seen_low || b == b_low;
        seen_high = seen_high || b == b_high;
        if (seen_low && seen_high) break;
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, total >= 4096 ? 64 : 1));
  if (threads == 1 || early) {
    scan(0, total, out.boundary_histogram);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n + 3, 0));
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = total * t / threads;
        const std::uint64_t hi = total * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] { scan(lo, hi, partial[t]); });
      }
    }
    for (const auto& h : partial) {
      for (std::size_t b = 0; b < h.size(); ++b) out.boundary_histogram[b] += h[b];
    }
  }

  std::size_t b_min = 0;
  std::size_t b_max = 0;
  for (std::size_t b = 0; b < out.boundary_histogram.size(); ++b) {
    if (out.boundary_histogram[b] == 0) continue;
    out.choices += out.boundary_histogram[b];
    if (b_min == 0) b_min = b;
    b_max = b;
  }
  out.range.min = static_cast<int>((n + 2 - b_max) / 2);
  out.range.max = static_cast<int>((n + 2 - b_min) / 2);

  if (options.verify_consecutive) {
    for (std::size_t b = b_min; b <= b_max; b += 2) {
      if (out.boundary_histogram[b] == 0) {
        internal_failure("genus " + std::to_string((n + 2 - b) / 2) +
                             " missing from a genus range that is not consecutive",
                         g, 0);
      }
    }
  }
  return out;
}

GenusRange genus_range(const AssemblyGraph& g, const GenusRangeOptions& options) {
  return embedding_spectrum(g, options).range;
}

GenusRange genus_range(const Dow& w, const GenusRangeOptions& options) {
  return genus_range(AssemblyGraph::build(w), options);
}

std::vector<std::uint32_t> edge_trace_components(const AssemblyGraph& g, const EmbeddingChoice& c,
                                                 std::size_t edge) {
  if (edge < 1 || edge > g.edge_count()) {
    throw Error(Errc::bad_edge, "edge index " + std::to_string(edge) + " outside 1.." +
                                    std::to_string(g.edge_count()));
  }
  const BoundaryDecomposition bd = trace(g, c);
  const auto forward = static_cast<DartId>(2 * (edge - 1));
  std::uint32_t a = bd.orbit_of[forward];
  std::uint32_t b = bd.orbit_of[AssemblyGraph::twin(forward)];
  if (a == b) return {a};
  if (a > b) std::swap(a, b);
  return {a, b};
}

EmbeddingChoice construct_multiboundary(const AssemblyGraph& g) {
  if (g.trivial()) {
    throw Error(Errc::empty_graph, "the trivial graph has no embedding choices");
  }
  auto is_odd_edge = [](DartId d) { return AssemblyGraph::edge_of(d) % 2 == 0; };  // e_1, e_3, ...

  // Every vertex meets exactly two odd-edge darts, and they are neighbors, so
  // the odd edges form disjoint cycles. Walk the cycle through e_1.
  std::uint64_t bits = 0;
  const DartId first = 0;
  const VertexIndex start_vertex = g.vertex_of(first);
  DartId leaving = first;
  for (std::size_t steps = 0; steps <= g.vertex_count(); ++steps) {
    const DartId arriving = AssemblyGraph::twin(leaving);
    const VertexIndex u = g.vertex_of(arriving);
    DartId other = arriving;
    for (DartId d : g.rotation(u)) {
      if (d != arriving && is_odd_edge(d)) other = d;
    }
    // Continue the curve from `arriving` onto `other`.
    const bool ref = g.reference_reversed(u);
    if (g.rotation_next(arriving, ref) == other) {
      bits &= ~(std::uint64_t{1} << u);
    } else if (g.rotation_next(arriving, !ref) == other) {
      bits |= std::uint64_t{1} << u;
    } else {
      internal_failure("odd edges at vertex " + std::to_string(g.symbol(u)) + " are not neighbors", g,
                       bits);
    }
    if (u == start_vertex) {
      if (other != first) internal_failure("odd-edge cycle did not close", g, bits);
      EmbeddingChoice choice(g.vertex_count(), bits);
      if (boundary_count(g, choice) < 2) {
        internal_failure("odd-edge cycle construction produced one boundary component", g, bits);
      }
      return choice;
    }
    leaving = other;
  }
  internal_failure("odd-edge cycle walk did not terminate", g, bits);
}

}  // namespace gr
