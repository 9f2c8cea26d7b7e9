#pragma once

// Finite connected quivers: parsing/serialization, simple-module
// classification, strongly connected components, heart/member decomposition,
// final/initial subhearts, and member order statistics.

#include "itq/exact.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace itq {

struct QuiverParseError : std::runtime_error {
  int line;  // 1-based input line, 0 when not line-specific
  QuiverParseError(int l, const std::string& message)
      : std::runtime_error(message), line(l) {}
};

// A finite connected quiver. Vertices are 0-indexed internally; all input
// and reporting uses 1-indexed vertices or the optional labels.
struct Quiver {
  int n = 0;
  IntMatrix arrows;                 // (i, j) = number of arrows i -> j
  std::vector<std::string> labels;  // size n; defaults to "1".."n"

  const std::string& label(int v) const { return labels[size_t(v)]; }
  bigint out_degree(int v) const;  // counts multiplicities
  bigint in_degree(int v) const;
  bigint loop_at(int v) const { return arrows.at(v, v); }
};

// Builds a quiver from an arrow-count matrix; validates squareness,
// nonnegativity, n >= 1, and connectivity of the underlying graph.
Quiver quiver_from_arrows(IntMatrix arrows, std::vector<std::string> labels = {});

// Text format: header "vertices <n>" followed by "arrow <i> <j>" lines
// (repeat for multiplicities), or header "matrix <n>" followed by n rows of
// n arrow counts. Optional "label <i> <name>" lines; "#" starts a comment.
Quiver parse_quiver(const std::string& text);

// Round-trippable serialization (arrow lines, or matrix form when some
// multiplicity exceeds 2).
std::string to_text(const Quiver& q);

// The opposite quiver: every arrow reversed.
Quiver opposite(const Quiver& q);

// Simple-module classification: S_v is projective iff v is a sink and
// injective iff v is a source.
struct SimpleClassification {
  std::vector<int> projective;  // sinks
  std::vector<int> injective;   // sources
  std::vector<int> neither;     // everything else
};
SimpleClassification classify_simples(const Quiver& q);

std::vector<int> sinks(const Quiver& q);
std::vector<int> sources(const Quiver& q);

bool is_strongly_connected(const Quiver& q);

// Z_n: a single directed cycle (every vertex has in- and out-degree exactly
// one); these are exactly the selfinjective radical-square-zero algebras.
bool is_cycle_zn(const Quiver& q);

// Selfinjective algebra: Z_n, or the arrowless single vertex (semisimple).
bool is_selfinjective(const Quiver& q);

bool is_acyclic(const Quiver& q);

// reach[i][j] = there is a directed path of length >= 1 from i to j.
std::vector<std::vector<bool>> reachability(const Quiver& q);

struct SCCResult {
  std::vector<int> component_of;            // vertex -> component id
  std::vector<std::vector<int>> components; // sorted vertex lists
  std::vector<bool> cyclic;                 // size >= 2 or carries a loop
  std::vector<std::vector<int>> successors; // condensation adjacency
};
SCCResult strongly_connected_components(const Quiver& q);

// Heart = vertices that both reach a cycle and are reachable from a cycle;
// member = the complement. Both lists sorted.
struct HeartMember {
  std::vector<int> heart;
  std::vector<int> member;
};

// Condensation-based computation (the normative path).
HeartMember heart_member(const Quiver& q);

// Literal bounded-power computation: support of the n-fold syzygy of the sum
// of all simples intersected with the n-fold cosyzygy support. Must agree
// with heart_member; kept as an independent cross-check.
HeartMember heart_member_support(const Quiver& q);

// Final subhearts = minimal successor-closed full subquivers = terminal
// strongly connected components; initial subhearts dually.
std::vector<std::vector<int>> final_subhearts(const Quiver& q);
std::vector<std::vector<int>> initial_subhearts(const Quiver& q);

// Member order data: whether path-reachability linearly orders the member,
// and the length d of the longest path inside the member ending at a sink of
// Q (absent exactly when Q has no sink).
struct MemberOrderStats {
  bool is_total_order = false;
  std::optional<int> d;
};
MemberOrderStats member_order_stats(const Quiver& q);

}  // namespace itq
