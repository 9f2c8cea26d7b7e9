#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itq/exact.hpp"
#include "itq/quiver.hpp"

namespace itq {

// A partition of the vertex set into disjoint nonempty blocks.  Block order
// matters (it fixes the quotient's vertex order); operations that create
// partitions order blocks by their smallest vertex.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int r() const { return static_cast<int>(blocks.size()); }
};

// All singleton blocks, in vertex order; always equitable.
Partition trivial_partition(const Quiver& q);

// Result of testing whether every vertex of a block sends the same number of
// arrows (with multiplicity) into each block.  When the test fails, two
// vertices of one block that disagree about one target block are reported.
struct EquitableCheck {
  bool equitable = false;
  IntMatrix b;              // r x r block arrow counts, valid when equitable
  int violating_v = -1;     // vertices of the same block with different
  int violating_w = -1;     // arrow counts into violating_block
  int violating_block = -1;
};

EquitableCheck is_equitable(const Quiver& q, const Partition& p);

// Quotient by an equitable partition: one vertex per block, b_ij arrows from
// block i to block j, plus the 0/1 characteristic matrix P (one column per
// block).  The defining identities M_Q P = P b and (P^t P) b = P^t M_Q P are
// re-verified on every call.
struct QuotientResult {
  Quiver quotient;
  IntMatrix b;
  IntMatrix characteristic_matrix;  // n x r
};

QuotientResult quotient(const Quiver& q, const Partition& p);

// The unique coarsest equitable partition, by iterated splitting on
// arrow-count signatures into the current blocks.
Partition coarsest_equitable(const Quiver& q);

// Every equitable partition, in restricted-growth order.  Bell-number
// growth: refuses quivers with more than max_n vertices.
std::vector<Partition> enumerate_equitable(const Quiver& q, int max_n = 8);

// Relations between a quiver and an equitable quotient: the quotient's
// characteristic polynomial always divides the quiver's; when the quiver has
// no member, the phi-dimension bounds and member preservation apply as well
// (otherwise those fields are absent and `notice` says why).
struct TransferReport {
  bool charpoly_divides = false;
  std::optional<bool> phidim_bound_ok;    // phidim(Q/p) <= min(r, phidim(Q))
  std::optional<bool> defect_bound_ok;    // r - phidim(Q/p) <= n - phidim(Q)
  std::optional<bool> no_member_preserved;
  std::string notice;
};

TransferReport verify_transfer(const Quiver& q, const Partition& p);

}  // namespace itq
