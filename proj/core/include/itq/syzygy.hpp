#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itq/exact.hpp"
#include "itq/quiver.hpp"

namespace itq {

// A finite direct sum of simple modules, recorded as one multiplicity per
// vertex.  Multiplicities grow like entries of powers of the arrow matrix
// under iterated syzygies, hence the exact integer type.
struct SemisimpleModule {
  std::vector<bigint> multiplicities;

  bool is_zero() const;
  bool operator==(const SemisimpleModule& o) const {
    return multiplicities == o.multiplicities;
  }
};

// All simple modules at once (multiplicity one everywhere): the top of the
// algebra viewed as a module over itself.
SemisimpleModule all_simples(const Quiver& q);

// Direct sum of one copy of each simple that is neither projective nor
// injective, i.e. whose vertex is neither a sink nor a source.
SemisimpleModule inner_simples(const Quiver& q);

// One indecomposable summand of a formal module.  Over a radical-square-zero
// algebra the first syzygy of any non-projective module is semisimple, so a
// summand is pinned down (for rank purposes) by that vector; a projective
// summand has zero class in the class group and contributes nothing.
struct ModuleSummand {
  std::string name;
  SemisimpleModule first_syzygy;
  bool projective = false;

  bool operator==(const ModuleSummand& o) const {
    return name == o.name && projective == o.projective &&
           first_syzygy == o.first_syzygy;
  }
};

struct FormalModule {
  std::vector<ModuleSummand> summands;
};

// View a semisimple module as a formal module: one summand per vertex with
// nonzero multiplicity, marked projective exactly at sinks.
FormalModule as_formal(const Quiver& q, const SemisimpleModule& m);

// A module with first syzygy exactly S_v, built as a quotient of the
// projective cover of the lowest-numbered predecessor of v.  Requires v to
// have a predecessor; never itself projective.
ModuleSummand simple_syzygy_preimage(const Quiver& q, int v);

// Module-level syzygy: each copy of S_v contributes one copy of S_j per
// arrow v -> j (projective simples contribute nothing).
SemisimpleModule syzygy(const Quiver& q, const SemisimpleModule& m);

// Vertices indexing the basis of the reduced class lattice: every vertex
// that is not a sink, in vertex order.  Projective simple classes vanish,
// so sinks carry no coordinate.
std::vector<int> syzygy_basis(const Quiver& q);

// Matrix of the syzygy operator on the basis above: the column for S_i
// lists the multiplicities of each non-projective S_j inside its syzygy.
// Coincides with the full arrow matrix when the quiver has no sinks.
IntMatrix syzygy_matrix(const Quiver& q);

struct PhiResult {
  int phi = 0;
  std::vector<int> rank_trace;  // lattice rank at each syzygy step
  int stabilized_at = 0;        // first step whose rank is the stable rank
};

// The rank-drop invariant of a formal module: the least step from which the
// lattice spanned by the summand classes keeps constant rank under the
// syzygy operator.
PhiResult phi(const Quiver& q, const FormalModule& m);
PhiResult phi(const Quiver& q, const SemisimpleModule& m);

// Supremum of phi over all modules.  Zero exactly for a single cycle (or a
// lone vertex without arrows); otherwise one more than phi of the direct
// sum of the inner simples.
int phidim(const Quiver& q);

// Projective dimension of the simple at v: 0 at a sink, infinite when v
// reaches a cycle, otherwise the longest path starting at v.
std::optional<int> pd_simple(const Quiver& q, int v);

// Projective dimension of a nonzero semisimple module (max over summands);
// nullopt when some summand has infinite dimension.
std::optional<int> pd_semisimple(const Quiver& q, const SemisimpleModule& m);

// Supremum of the finite projective dimensions.  Zero exactly when the
// quiver has no sink or is a lone vertex; otherwise one more than the
// largest finite pd among simples with a predecessor.
int findim(const Quiver& q);

// Global dimension: finite (and equal to the longest path) exactly when the
// quiver is acyclic; nullopt otherwise.
std::optional<int> gldim(const Quiver& q);

// phi, then add the largest finite pd among the summands present after that
// many syzygy steps (zero if none survive with finite pd).
int psi_semisimple(const Quiver& q, const SemisimpleModule& m);
int psi_formal(const Quiver& q, const FormalModule& m);

struct PsidimResult {
  int lo = 0;
  int hi = 0;
  bool exact = false;
  std::string method;  // which rule settled the value / produced the bounds
};

// Supremum of psi over all modules: exact where a closed form applies,
// otherwise best-known bounds.
PsidimResult psidim(const Quiver& q);

struct MaximalityAudit {
  bool strongly_connected = false;
  bool loops_at_two_or_more = false;  // trivially true for n == 1
  bool regular_out_degree = false;
  bool loops_match_out_degree = false;  // evaluated when out-degree regular
  bool no_proper_final_subheart = false;
  bool no_proper_initial_subheart = false;
};

struct MaximalityReport {
  bool phi_maximal = false;  // phidim == n (no member) / n-1 (member)
  bool psi_maximal = false;  // structural test, only attainable for n > 3
  bigint lambda;             // trace of the arrow matrix (= loop count)
  MaximalityAudit audit;     // necessary conditions for phi-maximality
};

MaximalityReport classify_maximality(const Quiver& q);

enum class LowPhidimClass { zero = 0, one = 1, two = 2, above = 3 };

// Classifies phidim in {0, 1, 2, >2} from the spectrum of the arrow matrix.
// Requires an empty member (throws std::invalid_argument otherwise).
LowPhidimClass classify_low_phidim(const Quiver& q);

struct OppositeCheck {
  int phidim = 0;
  int phidim_op = 0;
  bool equal = false;
};

// phidim is invariant under reversing all arrows; computes both sides.
OppositeCheck phidim_opposite_check(const Quiver& q);

}  // namespace itq
