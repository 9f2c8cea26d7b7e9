#include "itq/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "itq/witness.hpp"

namespace itq {

namespace {

using rational = boost::multiprecision::cpp_rational;

// Row-echelon rank by plain rational Gaussian elimination: independent of
// the fraction-free elimination the engine uses.
int fresh_rank(std::vector<std::vector<rational>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  int r = 0;
  for (size_t c = 0; c < cols && size_t(r) < rows.size(); ++c) {
    size_t pivot = size_t(r);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[size_t(r)], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == size_t(r) || rows[i][c] == 0) continue;
      const rational f = rows[i][c] / rows[size_t(r)][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[size_t(r)][j];
    }
    ++r;
  }
  return r;
}

// One syzygy step on a class vector over all vertices: each copy of S_v
// contributes arrows(v, j) copies of S_j, and classes of projective simples
// (sinks) are dropped on the spot.
std::vector<bigint> class_step(const Quiver& q, const std::vector<bigint>& vec) {
  std::vector<bigint> next(size_t(q.n));
  for (int v = 0; v < q.n; ++v) {
    if (vec[size_t(v)] == 0) continue;
    for (int j = 0; j < q.n; ++j) {
      if (q.out_degree(j) == 0) continue;  // [S_j] projective: class vanishes
      next[size_t(j)] += vec[size_t(v)] * q.arrows.at(v, j);
    }
  }
  return next;
}

std::vector<std::vector<rational>> to_rational(const std::vector<std::vector<bigint>>& vecs) {
  std::vector<std::vector<rational>> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) {
    std::vector<rational> row;
    row.reserve(v.size());
    for (const auto& x : v) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

bool projective_semisimple(const Quiver& q, const std::vector<bigint>& mult) {
  for (int v = 0; v < q.n; ++v)
    if (mult[size_t(v)] != 0 && q.out_degree(v) != 0) return false;
  return true;
}

std::string show(int value) { return std::to_string(value); }

std::string show(const std::optional<int>& value) {
  return value ? std::to_string(*value) : std::string("infinity");
}

}  // namespace

int oracle_phi(const Quiver& q, const FormalModule& m) {
  // Generators of the class lattice: one per distinct non-projective
  // summand. A projective summand has zero class and contributes nothing.
  std::vector<ModuleSummand> distinct;
  for (const auto& s : m.summands) {
    if (s.projective) continue;
    if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
  }

  // rank at step 0 is the number of generators; from step 1 on the lattice
  // is spanned by the iterated syzygy class vectors.
  std::vector<int> ranks;
  ranks.push_back(int(distinct.size()));

  std::vector<std::vector<bigint>> span;
  for (const auto& s : distinct) {
    std::vector<bigint> vec(size_t(q.n));
    for (int v = 0; v < q.n; ++v) {
      if (q.out_degree(v) == 0) continue;
      vec[size_t(v)] = s.first_syzygy.multiplicities[size_t(v)];
    }
    span.push_back(std::move(vec));
  }

  const int steps = 2 * q.n;
  for (int step = 1; step <= steps; ++step) {
    ranks.push_back(fresh_rank(to_rational(span)));
    for (auto& vec : span) vec = class_step(q, vec);
  }

  // Least step from which the rank never changes again.
  int l = int(ranks.size()) - 1;
  while (l > 0 && ranks[size_t(l) - 1] == ranks.back()) --l;
  return l;
}

int oracle_phi(const Quiver& q, const SemisimpleModule& m) {
  return oracle_phi(q, as_formal(q, m));
}

std::optional<int> oracle_pd_simple(const Quiver& q, int v) {
  if (v < 0 || v >= q.n) throw std::invalid_argument("vertex out of range");
  // Simulate the minimal resolution: a semisimple module is projective
  // exactly when its support lies in sinks. Any finite projective dimension
  // is below n, so n steps without reaching a projective mean infinity.
  std::vector<bigint> cur(size_t(q.n));
  cur[size_t(v)] = 1;
  for (int t = 0; t <= q.n; ++t) {
    if (projective_semisimple(q, cur)) return t;
    std::vector<bigint> next(size_t(q.n));
    for (int i = 0; i < q.n; ++i) {
      if (cur[size_t(i)] == 0 || q.out_degree(i) == 0) continue;
      for (int j = 0; j < q.n; ++j) next[size_t(j)] += cur[size_t(i)] * q.arrows.at(i, j);
    }
    cur = std::move(next);
  }
  return std::nullopt;
}

int oracle_findim(const Quiver& q) {
  // Non-projective modules of finite projective dimension are exactly those
  // whose first syzygy is a finite-pd semisimple supported on vertices with
  // a predecessor; projectives contribute dimension zero.
  int best = 0;
  for (int v = 0; v < q.n; ++v) {
    if (q.in_degree(v) == 0) continue;
    const auto pd = oracle_pd_simple(q, v);
    if (pd) best = std::max(best, 1 + *pd);
  }
  return best;
}

int oracle_psi(const Quiver& q, const SemisimpleModule& m) {
  const int f = oracle_phi(q, m);
  // Iterate the module itself f steps, then add the largest finite pd among
  // the surviving summands.
  std::vector<bigint> cur = m.multiplicities;
  for (int t = 0; t < f; ++t) {
    std::vector<bigint> next(size_t(q.n));
    for (int i = 0; i < q.n; ++i) {
      if (cur[size_t(i)] == 0 || q.out_degree(i) == 0) continue;
      for (int j = 0; j < q.n; ++j) next[size_t(j)] += cur[size_t(i)] * q.arrows.at(i, j);
    }
    cur = std::move(next);
  }
  int tail = 0;
  for (int v = 0; v < q.n; ++v) {
    if (cur[size_t(v)] == 0) continue;
    const auto pd = oracle_pd_simple(q, v);
    if (pd) tail = std::max(tail, *pd);
  }
  return f + tail;
}

OracleReport oracle_check(const Quiver& q, int cap, std::uint64_t seed, int probes) {
  if (cap < 1) throw std::invalid_argument("oracle cap must be positive");
  if (q.n > cap)
    throw std::invalid_argument("quiver too large for oracle cross-check (cap " +
                                std::to_string(cap) + " vertices)");

  OracleReport report;
  report.seed = seed;
  report.probes = probes;
  const auto add = [&report](std::string name, std::string engine, std::string oracle) {
    OracleItem item;
    item.name = std::move(name);
    item.engine = std::move(engine);
    item.oracle = std::move(oracle);
    item.ok = item.engine == item.oracle;
    report.passed = report.passed && item.ok;
    report.items.push_back(std::move(item));
  };

  add("phi(sum of all simples)", show(phi(q, all_simples(q)).phi),
      show(oracle_phi(q, all_simples(q))));
  add("phi(sum of inner simples)", show(phi(q, inner_simples(q)).phi),
      show(oracle_phi(q, inner_simples(q))));

  const int oracle_phidim =
      is_selfinjective(q) ? 0 : oracle_phi(q, inner_simples(q)) + 1;
  add("phi-dimension", show(phidim(q)), show(oracle_phidim));

  if (!is_selfinjective(q)) {
    const WitnessModule w = build_witness(q);
    add("phi(witness module)", show(w.achieved_phi), show(oracle_phi(q, w.module)));
  }

  for (int v = 0; v < q.n; ++v)
    add("pd(S_" + q.label(v) + ")", show(pd_simple(q, v)), show(oracle_pd_simple(q, v)));

  add("finitistic dimension", show(findim(q)), show(oracle_findim(q)));
  add("psi(sum of all simples)", show(psi_semisimple(q, all_simples(q))),
      show(oracle_psi(q, all_simples(q))));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int p = 0; p < probes; ++p) {
    SemisimpleModule m;
    m.multiplicities.resize(size_t(q.n));
    bool any = false;
    for (int v = 0; v < q.n; ++v) {
      const int c = mult(rng);
      m.multiplicities[size_t(v)] = c;
      any = any || c > 0;
    }
    if (!any) m.multiplicities[size_t(p % q.n)] = 1;
    std::string desc = "probe " + std::to_string(p + 1) + " [";
    for (int v = 0; v < q.n; ++v) {
      if (v) desc += ' ';
      desc += m.multiplicities[size_t(v)].str();
    }
    desc += ']';
    add(desc + " phi", show(phi(q, m).phi), show(oracle_phi(q, m)));
    add(desc + " psi", show(psi_semisimple(q, m)), show(oracle_psi(q, m)));
  }

  return report;
}

}  // namespace itq
