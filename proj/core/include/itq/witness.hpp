#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itq/quiver.hpp"
#include "itq/syzygy.hpp"

namespace itq {

// A module certified to realize the phi-dimension of the algebra.
struct WitnessModule {
  FormalModule module;
  int achieved_phi = 0;
  bool minimal = false;           // summand count provably least
  std::string construction_note;  // which construction produced it
};

// Pairwise-phi graph on the summands of a formal module: one vertex per
// summand, an edge joining two summands whenever their direct sum has
// phi >= 1.  When every summand has infinite projective dimension the classes
// never vanish, eventual collinearity is an equivalence relation, and each
// connected component is complete.  A summand of finite projective dimension
// breaks this: its class dies, making it adjacent to every non-projective
// summand while its neighbours may stay independent of one another.
struct WitnessGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;  // index pairs, first < second

  bool has_edge(int i, int j) const;
  std::vector<std::vector<int>> components() const;
  bool connected() const;
  bool components_complete() const;
};

// One-summand module whose first syzygy is exactly S_v, built from the
// projective cover of the lowest-numbered predecessor of v.  Throws
// std::invalid_argument ("vertex is a source") when v has no predecessor.
FormalModule build_M_S(const Quiver& q, int v);

// A module realizing the phi-dimension, built constructively: the syzygy
// preimages of the inner simples plus the inner simples themselves when some
// preimage is non-simple; otherwise adjoin an injective simple outside the
// preimage family, an inner simple outside it, or the preimage of a
// projective simple.  Throws std::invalid_argument on selfinjective input.
WitnessModule build_witness(const Quiver& q);

// The pairwise-phi graph of the given module (summands must be pairwise
// distinct).
WitnessGraph gamma_graph(const Quiver& q, const FormalModule& m);

// Two-summand witness, available exactly when the phi-dimension is maximal:
// a pair of inner simples whose sum already has phi = phidim - 1 is lifted
// through syzygy preimages.  Throws std::invalid_argument otherwise.  Shrinks
// to one summand only where one indecomposable provably suffices.
WitnessModule minimal_witness(const Quiver& q);

// One-summand witness, available exactly when findim equals phidim: the
// syzygy preimage of the deepest finite-dimension simple (or any projective
// when the phi-dimension is zero).  nullopt when findim < phidim.
std::optional<WitnessModule> indecomposable_witness(const Quiver& q);

}  // namespace itq
