#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "itq/syzygy.hpp"
#include "quiver_samples.hpp"

using namespace itq;
using namespace itq::samples;

namespace {

SemisimpleModule simples(const Quiver& q, std::vector<int> mults) {
  SemisimpleModule m;
  for (int c : mults) m.multiplicities.push_back(c);
  REQUIRE(m.multiplicities.size() == size_t(q.n));
  return m;
}

IntMatrix mat(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[size_t(i)][size_t(j)];
  return m;
}

}  // namespace

TEST_CASE("syzygy of simples follows the arrows") {
  const Quiver q = paired_cycle_4();
  CHECK(syzygy(q, simples(q, {1, 0, 0, 0})) == simples(q, {1, 1, 0, 0}));
  CHECK(syzygy(q, simples(q, {0, 1, 0, 0})) == simples(q, {0, 0, 1, 0}));
  CHECK(syzygy(q, simples(q, {0, 0, 1, 0})) == simples(q, {0, 0, 0, 1}));
  CHECK(syzygy(q, simples(q, {0, 0, 0, 1})) == simples(q, {0, 0, 1, 1}));

  const Quiver a3 = line(3);
  CHECK(syzygy(a3, simples(a3, {0, 0, 1})).is_zero());  // sink: projective
  SemisimpleModule m = simples(a3, {1, 0, 0});
  m = syzygy(a3, m);
  CHECK(m == simples(a3, {0, 1, 0}));
  m = syzygy(a3, m);
  CHECK(m == simples(a3, {0, 0, 1}));
  m = syzygy(a3, m);
  CHECK(m.is_zero());
}

TEST_CASE("syzygy respects multiplicities") {
  const Quiver q = loopline(3);
  // Two copies of S_1 and one of S_2: 2*(S_1+S_2) + S_3.
  CHECK(syzygy(q, simples(q, {2, 1, 0})) == simples(q, {2, 2, 1}));
}

TEST_CASE("syzygy matrix drops projective classes") {
  const Quiver a3 = line(3);
  CHECK(syzygy_basis(a3) == std::vector<int>{0, 1});
  CHECK(syzygy_matrix(a3) == mat({{0, 0}, {1, 0}}));

  const Quiver q3 = loopline(3);
  CHECK(syzygy_matrix(q3) == mat({{1, 0}, {1, 0}}));
}

TEST_CASE("syzygy matrix of a sink-free quiver is the transposed arrow matrix") {
  const Quiver q = looped_cycle_4();
  CHECK(syzygy_basis(q) == std::vector<int>{0, 1, 2, 3});
  CHECK(syzygy_matrix(q) == transpose(q.arrows));
  CHECK(syzygy_matrix(q) ==
        mat({{1, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}}));
}

TEST_CASE("simple summand encoding uses arrow rows as first syzygies") {
  const Quiver q = loopline(3);
  const FormalModule f = as_formal(q, all_simples(q));
  REQUIRE(f.summands.size() == 3);
  CHECK(f.summands[0].name == "S(1)");
  CHECK(f.summands[0].first_syzygy == simples(q, {1, 1, 0}));
  CHECK_FALSE(f.summands[0].projective);
  CHECK(f.summands[1].first_syzygy == simples(q, {0, 0, 1}));
  CHECK(f.summands[2].projective);  // sink
  CHECK(f.summands[2].first_syzygy.is_zero());
}

TEST_CASE("preimage summands: quotient collapses to a simple when forced") {
  const Quiver q = loopline(4);
  const ModuleSummand a = simple_syzygy_preimage(q, 0);
  CHECK(a.name == "M(S(1))");
  CHECK(a.first_syzygy == simples(q, {1, 0, 0, 0}));
  CHECK_FALSE(a.projective);

  // Predecessor of vertex 2 is vertex 1 whose only arrow is 1 -> 2, so the
  // preimage of S_3 is the simple S_2 itself.
  const ModuleSummand b = simple_syzygy_preimage(q, 2);
  CHECK(b.name == "S(2)");
  CHECK(b.first_syzygy == simples(q, {0, 0, 1, 0}));

  CHECK_THROWS_AS(simple_syzygy_preimage(line(3), 0), std::invalid_argument);
}

TEST_CASE("phi of the full simple sum drops rank once on the paired cycles") {
  const Quiver q = paired_cycle_4();
  const PhiResult r = phi(q, all_simples(q));
  CHECK(r.phi == 1);
  CHECK(r.stabilized_at == 1);
  REQUIRE(r.rank_trace.size() >= 3);
  CHECK(r.rank_trace[0] == 4);
  CHECK(r.rank_trace[1] == 3);
  CHECK(r.rank_trace[2] == 3);
}

TEST_CASE("phi is one on the looped four-cycle") {
  const Quiver q = looped_cycle_4();
  CHECK(phi(q, all_simples(q)).phi == 1);
}

TEST_CASE("phi vanishes on cycles") {
  const Quiver q = cycle(5);
  CHECK(phi(q, simples(q, {1, 0, 0, 0, 0})).phi == 0);
  CHECK(phi(q, all_simples(q)).phi == 0);
}

TEST_CASE("phi ignores projective and duplicate summands") {
  const Quiver a3 = line(3);
  FormalModule f = as_formal(a3, simples(a3, {1, 0, 1}));
  const int base = phi(a3, f).phi;
  FormalModule doubled = f;
  for (const ModuleSummand& s : f.summands) doubled.summands.push_back(s);
  CHECK(phi(a3, doubled).phi == base);
  CHECK(phi(a3, doubled).rank_trace == phi(a3, f).rank_trace);
  CHECK(phi(a3, as_formal(a3, simples(a3, {1, 0, 0}))).phi == base);
}

TEST_CASE("phidim closed forms") {
  CHECK(phidim(line(2)) == 1);
  CHECK(phidim(line(4)) == 3);  // linear quiver: n - 1
  CHECK(phidim(cycle(5)) == 0);
  CHECK(phidim(cycle(1)) == 0);           // single loop
  CHECK(phidim(from_rows({{0}})) == 0);   // lone vertex
  CHECK(phidim(from_rows({{2}})) == 1);   // two loops at one vertex
  CHECK(phidim(loopline(3)) == 2);
  CHECK(phidim(loopline(5)) == 4);
  CHECK(phidim(looped_cycle_4()) == 2);
  CHECK(phidim(paired_cycle_4()) == 2);
  CHECK(phidim(phimax3()) == 3);  // maximal: equals the vertex count
}

TEST_CASE("projective dimensions of simples") {
  const Quiver a3 = line(3);
  CHECK(pd_simple(a3, 0) == 2);
  CHECK(pd_simple(a3, 1) == 1);
  CHECK(pd_simple(a3, 2) == 0);

  const Quiver q3 = loopline(3);
  CHECK_FALSE(pd_simple(q3, 0).has_value());
  CHECK(pd_simple(q3, 1) == 1);
  CHECK(pd_simple(q3, 2) == 0);

  const Quiver z4 = cycle(4);
  for (int v = 0; v < 4; ++v) CHECK_FALSE(pd_simple(z4, v).has_value());
}

TEST_CASE("finitistic dimension") {
  CHECK(findim(cycle(4)) == 0);   // no sink
  CHECK(findim(line(3)) == 2);
  CHECK(findim(loopline(3)) == 2);
  CHECK(findim(from_rows({{0}})) == 0);
  CHECK(findim(from_rows({{1}})) == 0);
  CHECK(findim(from_rows({{3}})) == 0);
  CHECK(findim(line(2)) == 1);
}

TEST_CASE("global dimension is the longest path on acyclic quivers") {
  CHECK(gldim(line(3)) == 2);
  CHECK(gldim(from_rows({{0}})) == 0);
  CHECK_FALSE(gldim(cycle(3)).has_value());
  CHECK_FALSE(gldim(loopline(4)).has_value());
}

TEST_CASE("psi adds the finite tail after phi stabilizes") {
  const Quiver a3 = line(3);
  CHECK(psi_semisimple(a3, simples(a3, {1, 0, 0})) == 2);  // = pd(S_1)

  // All summands of infinite dimension and phi zero: psi is zero.
  const Quiver z4 = cycle(4);
  CHECK(psi_semisimple(z4, all_simples(z4)) == 0);
}

TEST_CASE("psi of the witness sum on the looped line reaches 2n-3") {
  const Quiver q = loopline(4);
  FormalModule probe;
  for (int v : classify_simples(q).neither)
    probe.summands.push_back(simple_syzygy_preimage(q, v));
  CHECK(phi(q, probe).phi == 3);  // n - 1
  CHECK(psi_formal(q, probe) == 5);  // (n-1) + (n-2)
}

TEST_CASE("psidim closed forms and bounds") {
  const PsidimResult maximal = psidim(phimax3());
  CHECK(maximal.exact);
  CHECK(maximal.lo == 3);
  CHECK(maximal.hi == 3);

  const PsidimResult nosink = psidim(cycle(4));
  CHECK(nosink.exact);
  CHECK(nosink.lo == 0);

  const PsidimResult acyclic = psidim(line(3));
  CHECK(acyclic.exact);
  CHECK(acyclic.lo == 2);

  const PsidimResult shape4 = psidim(loopline(4));
  CHECK(shape4.exact);
  CHECK(shape4.lo == 5);  // 2n - 3

  // n = 3 escapes the structural rule yet the probe meets the upper bound.
  const PsidimResult shape3 = psidim(loopline(3));
  CHECK(shape3.exact);
  CHECK(shape3.lo == 3);

  const PsidimResult paired = psidim(paired_cycle_4());
  CHECK(paired.exact);       // no sink
  CHECK(paired.lo == 2);
}

TEST_CASE("maximality classification") {
  const MaximalityReport maximal = classify_maximality(phimax3());
  CHECK(maximal.phi_maximal);
  CHECK(maximal.lambda == 3);
  CHECK(maximal.audit.strongly_connected);
  CHECK(maximal.audit.loops_at_two_or_more);
  CHECK(maximal.audit.loops_match_out_degree);
  CHECK(maximal.audit.no_proper_final_subheart);
  CHECK(maximal.audit.no_proper_initial_subheart);

  // Strongly connected but far from maximal: the converse fails.
  const MaximalityReport looped = classify_maximality(looped_cycle_4());
  CHECK_FALSE(looped.phi_maximal);
  CHECK(looped.audit.strongly_connected);

  const MaximalityReport z4 = classify_maximality(cycle(4));
  CHECK_FALSE(z4.phi_maximal);
  CHECK_FALSE(z4.psi_maximal);

  // Two loops on one vertex: maximal at n = 1.
  CHECK(classify_maximality(from_rows({{2}})).phi_maximal);
  CHECK_FALSE(classify_maximality(cycle(1)).phi_maximal);

  // With a member, maximality means phidim = n - 1.
  const MaximalityReport ll4 = classify_maximality(loopline(4));
  CHECK(ll4.phi_maximal);
  CHECK(ll4.psi_maximal);
  CHECK_FALSE(classify_maximality(loopline(3)).psi_maximal);  // needs n > 3
  CHECK(classify_maximality(loopline(3)).phi_maximal);
}

TEST_CASE("low phidim classes from eigenvalue multiplicities") {
  CHECK(classify_low_phidim(cycle(4)) == LowPhidimClass::zero);
  CHECK(classify_low_phidim(from_rows({{0, 1}, {1, 1}})) == LowPhidimClass::one);
  CHECK(classify_low_phidim(from_rows({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})) ==
        LowPhidimClass::two);
  CHECK(classify_low_phidim(looped_cycle_4()) == LowPhidimClass::two);
  CHECK(classify_low_phidim(phimax3()) == LowPhidimClass::above);
  CHECK_THROWS_AS(classify_low_phidim(line(3)), std::invalid_argument);
}

TEST_CASE("phidim agrees with the reversed quiver") {
  for (const Quiver& q : {line(3), cycle(4), loopline(4), paired_cycle_4(),
                          looped_cycle_4(), phimax3()}) {
    const OppositeCheck check = phidim_opposite_check(q);
    CHECK(check.equal);
    CHECK(check.phidim == check.phidim_op);
  }
  CHECK(phidim_opposite_check(line(3)).phidim == 2);
}
