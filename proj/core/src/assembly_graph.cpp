#include "gr/assembly_graph.hpp"

#include <algorithm>

#include "gr/error.hpp"

namespace gr {

AssemblyGraph AssemblyGraph::build(const Dow& w) {
  AssemblyGraph g;
  g.source_ = w;
  g.symbols_ = w.symbols();
  const std::size_t len = w.length();
  const std::size_t n = g.symbols_.size();
  if (n == 0) return g;

  g.rotation_.resize(n);
  g.dart_vertex_.resize(2 * len);
  g.dart_slot_.resize(2 * len);
  g.reference_reversed_.assign(n, 0);

  std::vector<int> seen(n, 0);
  for (std::size_t pos = 0; pos < len; ++pos) {
    const VertexIndex v = g.vertex_of_symbol(w[pos]);
    const std::size_t incoming_edge = (pos + len - 1) % len;
    const DartId in = static_cast<DartId>(2 * incoming_edge + 1);
    const DartId out = static_cast<DartId>(2 * pos);
    const bool first = seen[v]++ == 0;
    if (first) g.reference_reversed_[v] = pos % 2;
    const Slot in_slot = first ? kIn1 : kIn2;
    const Slot out_slot = first ? kOut1 : kOut2;
    g.rotation_[v][in_slot] = in;
    g.rotation_[v][out_slot] = out;
    g.dart_vertex_[in] = v;
    g.dart_vertex_[out] = v;
    g.dart_slot_[in] = in_slot;
    g.dart_slot_[out] = out_slot;
  }
  return g;
}

VertexIndex AssemblyGraph::vertex_of_symbol(Symbol s) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
  if (it == symbols_.end() || *it != s) {
    throw Error(Errc::bad_vertex, "no vertex with symbol " + std::to_string(s));
  }
  return static_cast<VertexIndex>(it - symbols_.begin());
}

std::string AssemblyGraph::dump() const {
  std::string out;
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    out += 'v' + std::to_string(symbols_[v]) + ':';
    for (DartId d : rotation_[v]) out += ' ' + std::to_string(edge_of(d) + 1);
    out += '\n';
  }
  return out;
}

Dow transversal_readback(const AssemblyGraph& g) {
  if (g.trivial()) return Dow();
  std::vector<Symbol> letters;
  letters.reserve(g.edge_count());
  DartId d = 0;
  do {
    const VertexIndex v = g.vertex_of(d);
    letters.push_back(g.symbol(v));
    // Arrive through the twin, leave through the opposite slot.
    const DartId arrival = AssemblyGraph::twin(d);
    const auto& rot = g.rotation(g.vertex_of(arrival));
    d = rot[(g.slot_of(arrival) + 2) & 3u];
  } while (d != 0 && letters.size() <= g.edge_count());
  return Dow(std::move(letters));
}

}  // namespace gr
