#pragma once

// Aggregated analysis of the radical-square-zero algebra of a quiver: one
// call assembles the full numeric profile, with optional witness-module,
// equitable-partition, and brute-force cross-check sections; renderers emit
// a human-readable text form and a versioned JSON form.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "itq/equitable.hpp"
#include "itq/oracle.hpp"
#include "itq/quiver.hpp"
#include "itq/syzygy.hpp"
#include "itq/witness.hpp"

namespace itq {

struct AlgebraProfile {
  SimpleClassification classification;
  HeartMember heart_member;
  bool selfinjective = false;
  PhiResult phi_a0;       // phi of the sum of all simples
  int phidim_value = 0;
  int phidim_opposite = 0;  // phidim of the reversed quiver; always equal
  bool findim_zero = false;
  int findim_value = 0;
  std::optional<int> gldim_value;  // finite exactly when the quiver is acyclic
  PsidimResult psidim_value;
  MaximalityReport maximality;
  std::optional<LowPhidimClass> low_class;  // only when the member is empty
  ZeroMultiplicities zero_mult;             // of the syzygy operator matrix
  std::vector<std::string> kernel_relations;  // e.g. "[S_2]+[S_3]-[S_4]"
  std::vector<std::string> warnings;
};

AlgebraProfile analyze(const Quiver& q);

struct PartitionEntry {
  Partition partition;
  IntMatrix quotient_matrix;
  int quotient_phidim = 0;
  TransferReport transfer;
};

struct PartitionSummary {
  Partition coarsest;
  std::vector<PartitionEntry> partitions;
  bool enumerated = false;  // false: too many vertices, only coarsest listed
  std::string note;
};

struct WitnessSummary {
  std::optional<WitnessModule> two_summand;     // when phi-maximal
  std::optional<WitnessModule> indecomposable;  // when findim == phidim
  WitnessGraph gamma_inner;                     // graph on the inner simples
};

struct ReportOptions {
  bool with_witness_detail = false;
  bool with_partitions = false;
  bool with_oracle = false;
  int oracle_cap = 8;
  std::uint64_t oracle_seed = 0;
  int oracle_probes = 0;
  int partition_enumeration_cap = 8;
};

struct Report {
  Quiver quiver;
  AlgebraProfile profile;
  std::optional<WitnessModule> witness;  // absent when selfinjective
  std::optional<WitnessSummary> witness_detail;
  std::optional<PartitionSummary> partitions;
  std::optional<OracleReport> oracle;
};

Report analyze_report(const Quiver& q, const ReportOptions& opt = {});

std::string render_text(const Report& r);

// Stable, versioned schema; infinite dimensions serialize as the string
// "infinity" and psi intervals as {"lo": x, "hi": y, "exact": false}.
std::string render_json(const Report& r);

}  // namespace itq
