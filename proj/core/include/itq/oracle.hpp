#pragma once

// Brute-force cross-check engine. Recomputes the rank-drop invariant by
// literal lattice iteration (explicit spanning-vector sets, a fresh
// rational-elimination rank at every step, 2n steps) and projective
// dimensions by explicit resolution simulation, then compares the results
// with the closed-form engine. Deliberately shares no linear algebra with
// the main implementation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itq/quiver.hpp"
#include "itq/syzygy.hpp"

namespace itq {

// phi by literal iteration over the full class lattice.
int oracle_phi(const Quiver& q, const FormalModule& m);
int oracle_phi(const Quiver& q, const SemisimpleModule& m);

// psi of a semisimple module: phi steps, then the largest finite projective
// dimension among the surviving summands.
int oracle_psi(const Quiver& q, const SemisimpleModule& m);

// Projective dimension of S_v by repeated syzygy until the module is
// projective (supported only on sinks); nullopt when that never happens.
std::optional<int> oracle_pd_simple(const Quiver& q, int v);

// Largest finite projective dimension over all modules, assembled from the
// simulated resolutions of the simples that occur as first syzygies.
int oracle_findim(const Quiver& q);

struct OracleItem {
  std::string name;
  std::string engine;  // closed-form value
  std::string oracle;  // brute-force value
  bool ok = false;
};

struct OracleReport {
  bool passed = true;
  std::uint64_t seed = 0;
  int probes = 0;
  std::vector<OracleItem> items;
};

// Compares engine and oracle on: phi of the full simple sum, phi of the
// inner simples, phidim, phi of the constructed witness, pd of every simple,
// findim, psi of the full simple sum, and `probes` seeded random semisimple
// modules. Throws std::invalid_argument when q has more than `cap` vertices.
OracleReport oracle_check(const Quiver& q, int cap = 8, std::uint64_t seed = 0,
                          int probes = 0);

}  // namespace itq
