#include "itq/syzygy.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "itq/check.hpp"

namespace itq {

namespace {

std::string simple_name(const Quiver& q, int v) { return "S(" + q.label(v) + ")"; }

SemisimpleModule simple_at(const Quiver& q, int v) {
  SemisimpleModule m;
  m.multiplicities.assign(static_cast<size_t>(q.n), bigint(0));
  m.multiplicities[static_cast<size_t>(v)] = 1;
  return m;
}

ModuleSummand simple_summand(const Quiver& q, int v) {
  ModuleSummand s;
  s.name = simple_name(q, v);
  s.first_syzygy = syzygy(q, simple_at(q, v));
  s.projective = (q.out_degree(v) == 0);
  return s;
}

// Class coordinates of a semisimple module on the reduced (non-sink) basis.
std::vector<bigint> class_column(const SemisimpleModule& m,
                                 const std::vector<int>& basis) {
  std::vector<bigint> col;
  col.reserve(basis.size());
  for (int v : basis) col.push_back(m.multiplicities[static_cast<size_t>(v)]);
  return col;
}

IntMatrix columns_to_matrix(int rows, const std::vector<std::vector<bigint>>& cols) {
  IntMatrix x(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < x.cols; ++c)
    for (int r = 0; r < rows; ++r)
      x.at(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
  return x;
}

// Arrow-count submatrix over a vertex subset (rows and columns alike).
IntMatrix arrow_submatrix(const Quiver& q, const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m.at(i, j) = q.arrows.at(verts[static_cast<size_t>(i)], verts[static_cast<size_t>(j)]);
  return m;
}

// Projective dimension of every simple at once: 0 at sinks, absent when the
// vertex reaches a cycle, otherwise the longest path starting there.
std::vector<std::optional<int>> pd_all(const Quiver& q) {
  const SCCResult scc = strongly_connected_components(q);
  std::vector<int> cycle_memo(static_cast<size_t>(q.n), -1);  // -1 unknown
  std::function<bool(int)> reaches = [&](int v) -> bool {
    int& slot = cycle_memo[static_cast<size_t>(v)];
    if (slot >= 0) return slot != 0;
    if (scc.cyclic[static_cast<size_t>(scc.component_of[static_cast<size_t>(v)])]) {
      slot = 1;
      return true;
    }
    slot = 0;
    for (int w = 0; w < q.n; ++w)
      if (q.arrows.at(v, w) != 0 && reaches(w)) { slot = 1; break; }
    return slot != 0;
  };

  std::vector<std::optional<int>> pd(static_cast<size_t>(q.n));
  // Longest path from v over the cycle-free region; memo -1 = unvisited.
  std::vector<int> memo(static_cast<size_t>(q.n), -1);
  std::function<int(int)> longest = [&](int v) -> int {
    int& slot = memo[static_cast<size_t>(v)];
    if (slot >= 0) return slot;
    int best = 0;
    for (int w = 0; w < q.n; ++w)
      if (q.arrows.at(v, w) != 0) best = std::max(best, longest(w) + 1);
    return slot = best;
  };

  for (int v = 0; v < q.n; ++v)
    pd[static_cast<size_t>(v)] = reaches(v) ? std::nullopt
                                            : std::optional<int>(longest(v));
  return pd;
}

// Structural shape that pins the maximal psi value for n > 3: a lone looped
// heart vertex feeding a totally ordered member through its source, with a
// sink present and no arrows back into the heart.
bool psi_maximal_shape(const Quiver& q) {
  if (q.n <= 3) return false;
  const HeartMember hm = heart_member(q);
  if (hm.heart.size() != 1 || hm.member.empty()) return false;
  if (sinks(q).empty()) return false;
  if (!member_order_stats(q).is_total_order) return false;

  const int c = hm.heart.front();
  std::vector<bool> in_member(static_cast<size_t>(q.n), false);
  for (int v : hm.member) in_member[static_cast<size_t>(v)] = true;

  for (int v = 0; v < q.n; ++v)
    for (int w = 0; w < q.n; ++w) {
      if (q.arrows.at(v, w) == 0) continue;
      const bool loop_at_heart = (v == c && w == c);
      const bool heart_to_member = (v == c && in_member[static_cast<size_t>(w)]);
      const bool inside_member =
          in_member[static_cast<size_t>(v)] && in_member[static_cast<size_t>(w)];
      if (!loop_at_heart && !heart_to_member && !inside_member) return false;
    }

  // The member's source: the unique member vertex with no predecessor inside
  // the member. Some arrow from the heart must reach it.
  for (int m0 : hm.member) {
    bool has_member_pred = false;
    for (int v : hm.member)
      if (q.arrows.at(v, m0) != 0) { has_member_pred = true; break; }
    if (!has_member_pred) return q.arrows.at(c, m0) != 0;
  }
  return false;  // unreachable for a nonempty acyclic member
}

}  // namespace

bool SemisimpleModule::is_zero() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [](const bigint& c) { return c == 0; });
}

SemisimpleModule all_simples(const Quiver& q) {
  SemisimpleModule m;
  m.multiplicities.assign(static_cast<size_t>(q.n), bigint(1));
  return m;
}

SemisimpleModule inner_simples(const Quiver& q) {
  SemisimpleModule m;
  m.multiplicities.assign(static_cast<size_t>(q.n), bigint(0));
  for (int v : classify_simples(q).neither)
    m.multiplicities[static_cast<size_t>(v)] = 1;
  return m;
}

FormalModule as_formal(const Quiver& q, const SemisimpleModule& m) {
  if (m.multiplicities.size() != static_cast<size_t>(q.n))
    throw std::invalid_argument("module length does not match vertex count");
  FormalModule f;
  for (int v = 0; v < q.n; ++v)
    if (m.multiplicities[static_cast<size_t>(v)] != 0)
      f.summands.push_back(simple_summand(q, v));
  return f;
}

ModuleSummand simple_syzygy_preimage(const Quiver& q, int v) {
  int w = -1;
  for (int u = 0; u < q.n; ++u)
    if (q.arrows.at(u, v) != 0) { w = u; break; }
  if (w < 0) throw std::invalid_argument("vertex is a source");

  // Quotient of the projective cover at w by one radical copy of S_v. When
  // the radical of that cover is exactly S_v the quotient is the simple S_w.
  if (q.out_degree(w) == 1 && q.arrows.at(w, v) == 1) return simple_summand(q, w);

  ModuleSummand s;
  s.name = "M(" + simple_name(q, v) + ")";
  s.first_syzygy = simple_at(q, v);
  s.projective = false;
  return s;
}

SemisimpleModule syzygy(const Quiver& q, const SemisimpleModule& m) {
  if (m.multiplicities.size() != static_cast<size_t>(q.n))
    throw std::invalid_argument("module length does not match vertex count");
  SemisimpleModule out;
  out.multiplicities.assign(static_cast<size_t>(q.n), bigint(0));
  for (int v = 0; v < q.n; ++v) {
    const bigint& c = m.multiplicities[static_cast<size_t>(v)];
    if (c == 0) continue;
    for (int j = 0; j < q.n; ++j)
      out.multiplicities[static_cast<size_t>(j)] += c * q.arrows.at(v, j);
  }
  return out;
}

std::vector<int> syzygy_basis(const Quiver& q) {
  std::vector<int> basis;
  for (int v = 0; v < q.n; ++v)
    if (q.out_degree(v) != 0) basis.push_back(v);
  return basis;
}

IntMatrix syzygy_matrix(const Quiver& q) {
  const std::vector<int> basis = syzygy_basis(q);
  const int k = static_cast<int>(basis.size());
  IntMatrix n(k, k);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < k; ++r)
      n.at(r, c) = q.arrows.at(basis[static_cast<size_t>(c)], basis[static_cast<size_t>(r)]);
  return n;
}

PhiResult phi(const Quiver& q, const FormalModule& m) {
  // Only distinct non-projective summands span the class lattice.
  std::vector<const ModuleSummand*> distinct;
  for (const ModuleSummand& s : m.summands) {
    if (s.projective) continue;
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const ModuleSummand* t) { return *t == s; });
    if (!seen) distinct.push_back(&s);
  }

  const std::vector<int> basis = syzygy_basis(q);
  const int k = static_cast<int>(basis.size());
  std::vector<std::vector<bigint>> cols;
  cols.reserve(distinct.size());
  for (const ModuleSummand* s : distinct)
    cols.push_back(class_column(s->first_syzygy, basis));

  const IntMatrix n = syzygy_matrix(q);
  // Ranks from the first syzygy step on are ranks of N^(l-1)X; they can
  // plateau before the last drop, but never past the nilpotency index of N,
  // so iterating that far certifies the stable rank.
  const int nu = (k > 0) ? zero_multiplicities(n).nilpotency_index : 0;

  PhiResult result;
  result.rank_trace.push_back(static_cast<int>(distinct.size()));
  IntMatrix x = columns_to_matrix(k, cols);
  for (int l = 1; l <= nu + 1; ++l) {
    result.rank_trace.push_back(rank(x));
    if (l <= nu) x = mat_mul(n, x);
  }

  const int stable = result.rank_trace.back();
  int first = 0;
  while (result.rank_trace[static_cast<size_t>(first)] != stable) ++first;
  result.phi = first;
  result.stabilized_at = first;
  for (size_t i = 1; i < result.rank_trace.size(); ++i)
    internal_check(result.rank_trace[i] <= result.rank_trace[i - 1],
                   "phi rank trace must be non-increasing");
  return result;
}

PhiResult phi(const Quiver& q, const SemisimpleModule& m) {
  return phi(q, as_formal(q, m));
}

int phidim(const Quiver& q) {
  if (is_selfinjective(q)) return 0;

  const int result = phi(q, inner_simples(q)).phi + 1;

  // Independent route: on the sublattice spanned by the inner simple classes
  // the syzygy operator acts by the inner arrow submatrix, so phi of their
  // sum is the first power-rank plateau of that submatrix.
  const std::vector<int> inner = classify_simples(q).neither;
  const int plateau =
      inner.empty() ? 0 : zero_multiplicities(arrow_submatrix(q, inner)).nilpotency_index;
  internal_check(result == plateau + 1,
                 "phi dimension must match the inner-submatrix power-rank plateau");

  // Without a member (n >= 2) a third route: one past the size of the
  // largest nilpotent Jordan block of the full arrow matrix.
  if (q.n >= 2 && heart_member(q).member.empty())
    internal_check(result == zero_multiplicities(q.arrows).nilpotency_index + 1,
                   "phi dimension must match the full-matrix power-rank plateau");

  return result;
}

std::optional<int> pd_simple(const Quiver& q, int v) {
  if (v < 0 || v >= q.n) throw std::invalid_argument("vertex out of range");
  return pd_all(q)[static_cast<size_t>(v)];
}

std::optional<int> pd_semisimple(const Quiver& q, const SemisimpleModule& m) {
  if (m.is_zero())
    throw std::invalid_argument("projective dimension of the zero module is undefined");
  const auto pd = pd_all(q);
  int best = 0;
  for (int v = 0; v < q.n; ++v) {
    if (m.multiplicities[static_cast<size_t>(v)] == 0) continue;
    if (!pd[static_cast<size_t>(v)]) return std::nullopt;
    best = std::max(best, *pd[static_cast<size_t>(v)]);
  }
  return best;
}

int findim(const Quiver& q) {
  if (q.n == 1) return 0;
  if (sinks(q).empty()) return 0;
  const auto pd = pd_all(q);
  int best = -1;
  for (int v = 0; v < q.n; ++v) {
    if (q.in_degree(v) == 0) continue;  // never a first syzygy
    if (pd[static_cast<size_t>(v)]) best = std::max(best, *pd[static_cast<size_t>(v)]);
  }
  internal_check(best >= 0, "a sink of a connected quiver has a predecessor");
  return best + 1;
}

std::optional<int> gldim(const Quiver& q) {
  if (!is_acyclic(q)) return std::nullopt;
  const auto pd = pd_all(q);
  int best = 0;
  for (int v = 0; v < q.n; ++v) best = std::max(best, *pd[static_cast<size_t>(v)]);
  internal_check(best <= q.n - 1, "an acyclic path visits each vertex at most once");
  return best;
}

int psi_formal(const Quiver& q, const FormalModule& m) {
  const int f = phi(q, m).phi;
  const auto pd = pd_all(q);

  int finite_part = 0;
  if (f == 0) {
    // The module itself: projective summands contribute 0; a non-projective
    // summand has pd one more than its (nonzero) first syzygy when finite.
    for (const ModuleSummand& s : m.summands) {
      if (s.projective) continue;
      const auto tail = pd_semisimple(q, s.first_syzygy);
      if (tail) finite_part = std::max(finite_part, *tail + 1);
    }
  } else {
    SemisimpleModule stage;
    stage.multiplicities.assign(static_cast<size_t>(q.n), bigint(0));
    for (const ModuleSummand& s : m.summands) {
      if (s.projective) continue;
      for (int v = 0; v < q.n; ++v)
        stage.multiplicities[static_cast<size_t>(v)] +=
            s.first_syzygy.multiplicities[static_cast<size_t>(v)];
    }
    for (int step = 1; step < f; ++step) stage = syzygy(q, stage);
    for (int v = 0; v < q.n; ++v)
      if (stage.multiplicities[static_cast<size_t>(v)] != 0 && pd[static_cast<size_t>(v)])
        finite_part = std::max(finite_part, *pd[static_cast<size_t>(v)]);
  }
  return f + finite_part;
}

int psi_semisimple(const Quiver& q, const SemisimpleModule& m) {
  return psi_formal(q, as_formal(q, m));
}

PsidimResult psidim(const Quiver& q) {
  PsidimResult r;
  const int pdim = phidim(q);

  if (pdim == q.n) {
    r.lo = r.hi = q.n;
    r.exact = true;
    r.method = "maximal phi forces psi";
    return r;
  }
  if (sinks(q).empty()) {
    r.lo = r.hi = pdim;
    r.exact = true;
    r.method = "no sink: finite dimensions vanish, psi equals phi";
    return r;
  }
  if (is_acyclic(q)) {
    const std::optional<int> g = gldim(q);
    internal_check(g && *g == pdim, "acyclic: phi dimension must equal global dimension");
    r.lo = r.hi = pdim;
    r.exact = true;
    r.method = "finite global dimension: phi, psi and gldim coincide";
    return r;
  }
  if (psi_maximal_shape(q)) {
    r.lo = r.hi = 2 * q.n - 3;
    r.exact = true;
    r.method = "looped heart feeding an ordered member: maximal psi";
    return r;
  }

  // Bounds: probe modules from below, the member path bound from above.
  const MemberOrderStats mos = member_order_stats(q);
  // A sink exists in this branch, and every sink lies in the member.
  internal_check(mos.d.has_value(), "member path bound needs a sink inside the member");
  r.hi = q.n - 1 + *mos.d;

  int lo = pdim;
  lo = std::max(lo, psi_semisimple(q, all_simples(q)));
  const SemisimpleModule inner = inner_simples(q);
  FormalModule preimages;
  for (int v : classify_simples(q).neither)
    preimages.summands.push_back(simple_syzygy_preimage(q, v));
  if (!preimages.summands.empty()) {
    lo = std::max(lo, psi_formal(q, preimages));
    FormalModule combined = preimages;
    for (const ModuleSummand& s : as_formal(q, inner).summands)
      combined.summands.push_back(s);
    lo = std::max(lo, psi_formal(q, combined));
  }
  if (!inner.is_zero()) lo = std::max(lo, psi_semisimple(q, inner));

  r.lo = lo;
  internal_check(r.lo <= r.hi, "psi lower bound must not exceed the upper bound");
  r.exact = (r.lo == r.hi);
  r.method = r.exact ? "probe meets the member path bound"
                     : "bounds only: best probe below, member path bound above";
  return r;
}

MaximalityReport classify_maximality(const Quiver& q) {
  MaximalityReport report;
  report.lambda = trace(q.arrows);

  const HeartMember hm = heart_member(q);
  const int pdim = phidim(q);

  if (hm.member.empty()) {
    // Rank pattern of a single nilpotent Jordan block of size n-1 plus one
    // nonzero eigenvalue; a plain cycle also matches at n = 1, so exclude it.
    const std::vector<int> seq = rank_sequence(q.arrows, q.n);
    bool pattern = true;
    for (int l = 0; l <= q.n - 1; ++l)
      if (seq[static_cast<size_t>(l)] != q.n - l) { pattern = false; break; }
    pattern = pattern && seq[static_cast<size_t>(q.n)] == 1;
    report.phi_maximal = pattern && !is_cycle_zn(q);
    internal_check(report.phi_maximal == (pdim == q.n),
                   "rank pattern and phi dimension must agree on maximality");
  } else {
    report.phi_maximal = (pdim == q.n - 1);
  }

  report.psi_maximal = psi_maximal_shape(q);

  MaximalityAudit& audit = report.audit;
  audit.strongly_connected = is_strongly_connected(q);

  int looped = 0;
  for (int v = 0; v < q.n; ++v)
    if (q.loop_at(v) != 0) ++looped;
  audit.loops_at_two_or_more = (q.n == 1) || looped >= 2;

  audit.regular_out_degree = true;
  for (int v = 1; v < q.n; ++v)
    if (q.out_degree(v) != q.out_degree(0)) { audit.regular_out_degree = false; break; }
  audit.loops_match_out_degree =
      !audit.regular_out_degree || trace(q.arrows) == q.out_degree(0);

  const auto proper = [&](const std::vector<std::vector<int>>& subhearts) {
    return std::any_of(subhearts.begin(), subhearts.end(),
                       [&](const std::vector<int>& s) {
                         return static_cast<int>(s.size()) < q.n;
                       });
  };
  audit.no_proper_final_subheart = !proper(final_subhearts(q));
  audit.no_proper_initial_subheart = !proper(initial_subhearts(q));
  return report;
}

LowPhidimClass classify_low_phidim(const Quiver& q) {
  if (!heart_member(q).member.empty())
    throw std::invalid_argument("classification by eigenvalue multiplicities requires a quiver without member");

  LowPhidimClass result = LowPhidimClass::above;
  if (is_cycle_zn(q)) {
    result = LowPhidimClass::zero;
  } else {
    const ZeroMultiplicities zm = zero_multiplicities(q.arrows);
    if (zm.algebraic == 0)
      result = LowPhidimClass::one;
    else if (zm.algebraic == zm.geometric)
      result = LowPhidimClass::two;
    else
      result = LowPhidimClass::above;
  }

  const int pdim = phidim(q);
  internal_check((result == LowPhidimClass::zero && pdim == 0) ||
                     (result == LowPhidimClass::one && pdim == 1) ||
                     (result == LowPhidimClass::two && pdim == 2) ||
                     (result == LowPhidimClass::above && pdim > 2),
                 "eigenvalue classification must agree with the phi dimension");
  return result;
}

OppositeCheck phidim_opposite_check(const Quiver& q) {
  OppositeCheck check;
  check.phidim = phidim(q);
  check.phidim_op = phidim(opposite(q));
  check.equal = (check.phidim == check.phidim_op);
  internal_check(check.equal, "phi dimension must be invariant under reversing arrows");
  return check;
}

}  // namespace itq
