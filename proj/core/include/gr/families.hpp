#pragma once

#include <cstddef>

#include "gr/dow.hpp"
#include "gr/ribbon.hpp"

namespace gr {

/// Singleton realizability bookkeeping: K is the largest k with
/// 7k + 3l - 1 <= n for some l >= 0, L the largest l for that K, psi = 3K + L.
struct PsiRecord {
  int n = 0;
  int K = 0;
  int L = 0;
  int psi = 0;

  friend bool operator==(const PsiRecord&, const PsiRecord&) = default;
};

/// 7k + 3l - 1: vertices used by a cross-sum chain of k six-vertex genus-3
/// blocks and l pretzels.
int chain_vertex_count(int k, int l);

PsiRecord psi(int n);

/// T_1 = 11; T_{n+1} replaces the final letter n of T_n by (n+1) n (n+1).
Dow tangled_cord(int n);

/// [(n-2)/2, n/2] for even n, [(n-1)/2, (n+1)/2] for odd n; n >= 2.
GenusRange tangled_cord_range(int n);

/// 1 2 ... n 1 2 ... n for odd n >= 3.
Dow repeat_word(int n);

/// Cross-sum chain of m pretzels (1212), joined at cut 0.
Dow gamma_chain(int m);

/// The six-vertex word with genus range {3}.
Dow gamma_hat();

/// The pretzel 1212.
Dow pretzel();

struct RealizeOptions {
  /// Verify the constructed word by exhaustive enumeration up to this size.
  std::size_t verify_cap = 26;
  unsigned threads = 1;
};

/// A word with exactly `vertices` symbols and genus range [h, h].
Dow realize_singleton(int h, int vertices, const RealizeOptions& options = {});

/// A word with exactly `vertices` symbols and genus range [a, b], a < b.
Dow realize_range(int a, int b, int vertices, const RealizeOptions& options = {});

/// Dispatches to realize_singleton or realize_range.
Dow realize(int a, int b, int vertices, const RealizeOptions& options = {});

}  // namespace gr
