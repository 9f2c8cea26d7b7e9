#include "itq/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "itq/check.hpp"
#include "json.hpp"

namespace itq {

namespace {

using nlohmann::json;

std::string kernel_relation_string(const Quiver& q, const std::vector<int>& basis,
                                   const std::vector<bigint>& vec) {
  std::string out;
  for (size_t i = 0; i < vec.size(); ++i) {
    const bigint& c = vec[i];
    if (c == 0) continue;
    const bigint mag = c < 0 ? bigint(-c) : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (mag != 1) out += mag.str();
    out += "[S_" + q.label(basis[i]) + "]";
  }
  return out.empty() ? "0" : out;
}

std::string join_labels(const Quiver& q, const std::vector<int>& vertices) {
  if (vertices.empty()) return "none";
  std::string out;
  for (int v : vertices) {
    if (!out.empty()) out += ", ";
    out += q.label(v);
  }
  return out;
}

std::string join_simple_labels(const Quiver& q, const std::vector<int>& vertices) {
  if (vertices.empty()) return "none";
  std::string out;
  for (int v : vertices) {
    if (!out.empty()) out += ", ";
    out += "S_" + q.label(v);
  }
  return out;
}

std::string module_string(const FormalModule& m) {
  std::string out;
  for (const auto& s : m.summands) {
    if (!out.empty()) out += " (+) ";
    out += s.name;
  }
  return out.empty() ? "0" : out;
}

std::string opt_dim(const std::optional<int>& value) {
  return value ? std::to_string(*value) : std::string("infinity");
}

std::string low_class_string(LowPhidimClass c) {
  switch (c) {
    case LowPhidimClass::zero: return "0";
    case LowPhidimClass::one: return "1";
    case LowPhidimClass::two: return "2";
    case LowPhidimClass::above: return ">2";
  }
  return "?";
}

std::string partition_string(const Quiver& q, const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks) {
    if (!out.empty()) out += " ";
    out += "{";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += q.label(block[i]);
    }
    out += "}";
  }
  return out;
}

// bigints enter JSON as plain numbers while they fit 64 bits, as decimal
// strings beyond that (JSON numbers would silently lose precision).
json json_bigint(const bigint& x) {
  static const bigint lo = std::numeric_limits<long long>::min();
  static const bigint hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return json(static_cast<long long>(x));
  return json(x.str());
}

json json_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(json_bigint(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json json_labels(const Quiver& q, const std::vector<int>& vertices) {
  json out = json::array();
  for (int v : vertices) out.push_back(q.label(v));
  return out;
}

json json_dim(const std::optional<int>& value) {
  if (value) return json(*value);
  return json("infinity");
}

json json_psidim(const PsidimResult& p) {
  return json{{"lo", p.lo}, {"hi", p.hi}, {"exact", p.exact}, {"method", p.method}};
}

json json_witness(const WitnessModule& w) {
  json summands = json::array();
  for (const auto& s : w.module.summands) summands.push_back(s.name);
  return json{{"summands", std::move(summands)},
              {"phi", w.achieved_phi},
              {"minimal", w.minimal},
              {"construction", w.construction_note}};
}

json json_partition(const Quiver& q, const Partition& p) {
  json blocks = json::array();
  for (const auto& block : p.blocks) blocks.push_back(json_labels(q, block));
  return blocks;
}

}  // namespace

AlgebraProfile analyze(const Quiver& q) {
  AlgebraProfile out;
  out.classification = classify_simples(q);
  out.heart_member = heart_member(q);
  out.selfinjective = is_selfinjective(q);
  out.phi_a0 = phi(q, all_simples(q));
  out.phidim_value = phidim(q);

  const OppositeCheck opposite = phidim_opposite_check(q);
  out.phidim_opposite = opposite.phidim_op;
  internal_check(opposite.equal, "phi dimension must be invariant under reversing arrows");

  out.findim_value = findim(q);
  out.findim_zero = out.findim_value == 0;
  out.gldim_value = gldim(q);
  out.psidim_value = psidim(q);
  out.maximality = classify_maximality(q);
  if (out.heart_member.member.empty()) out.low_class = classify_low_phidim(q);

  const IntMatrix n = syzygy_matrix(q);
  out.zero_mult = zero_multiplicities(n);
  const std::vector<int> basis = syzygy_basis(q);
  for (const auto& vec : kernel_basis(n))
    out.kernel_relations.push_back(kernel_relation_string(q, basis, vec));

  if (out.findim_value > 0)
    out.warnings.push_back(
        "finitistic dimension beyond the no-sink case uses a derived formula, "
        "validated against the resolution-simulation oracle");
  if (!out.psidim_value.exact)
    out.warnings.push_back("psi-dimension is an interval, not an exact value");

  internal_check(out.findim_value <= out.phidim_value,
                 "finitistic dimension must not exceed the phi dimension");
  internal_check(out.phidim_value <= out.psidim_value.hi &&
                     out.psidim_value.lo <= out.psidim_value.hi,
                 "phi dimension must respect the psi bounds");
  return out;
}

Report analyze_report(const Quiver& q, const ReportOptions& opt) {
  Report r;
  r.quiver = q;
  r.profile = analyze(q);

  if (!r.profile.selfinjective) {
    r.witness = build_witness(q);
    internal_check(r.witness->achieved_phi == r.profile.phidim_value,
                   "witness must realize the phi-dimension");
  }

  if (opt.with_witness_detail && !r.profile.selfinjective) {
    WitnessSummary detail;
    detail.gamma_inner = gamma_graph(q, as_formal(q, inner_simples(q)));
    if (r.profile.maximality.phi_maximal) detail.two_summand = minimal_witness(q);
    detail.indecomposable = indecomposable_witness(q);
    r.witness_detail = std::move(detail);
  }

  if (opt.with_partitions) {
    PartitionSummary summary;
    summary.coarsest = coarsest_equitable(q);
    std::vector<Partition> all;
    if (q.n <= opt.partition_enumeration_cap) {
      all = enumerate_equitable(q, opt.partition_enumeration_cap);
      summary.enumerated = true;
    } else {
      all.push_back(summary.coarsest);
      summary.note = "too many vertices for exhaustive enumeration; only the "
                     "coarsest equitable partition is listed";
    }
    for (const auto& p : all) {
      PartitionEntry entry;
      entry.partition = p;
      const QuotientResult qr = quotient(q, p);
      entry.quotient_matrix = qr.b;
      entry.quotient_phidim = phidim(qr.quotient);
      entry.transfer = verify_transfer(q, p);
      summary.partitions.push_back(std::move(entry));
    }
    r.partitions = std::move(summary);
  }

  if (opt.with_oracle)
    r.oracle = oracle_check(q, opt.oracle_cap, opt.oracle_seed, opt.oracle_probes);

  return r;
}

std::string render_text(const Report& r) {
  const Quiver& q = r.quiver;
  const AlgebraProfile& p = r.profile;
  std::ostringstream out;

  out << "quiver: " << q.n << (q.n == 1 ? " vertex\n" : " vertices\n");
  {
    std::string arrows;
    for (int i = 0; i < q.n; ++i)
      for (int j = 0; j < q.n; ++j) {
        if (q.arrows.at(i, j) == 0) continue;
        if (!arrows.empty()) arrows += ", ";
        arrows += q.label(i) + "->" + q.label(j);
        if (q.arrows.at(i, j) != 1) arrows += " (x" + q.arrows.at(i, j).str() + ")";
      }
    out << "  arrows: " << (arrows.empty() ? "none" : arrows) << "\n";
  }

  out << "simples:\n";
  out << "  projective (sinks): " << join_simple_labels(q, p.classification.projective) << "\n";
  out << "  injective (sources): " << join_simple_labels(q, p.classification.injective) << "\n";
  out << "  inner: " << join_simple_labels(q, p.classification.neither) << "\n";
  out << "heart: {" << join_labels(q, p.heart_member.heart) << "}  member: {"
      << join_labels(q, p.heart_member.member) << "}\n";
  out << "selfinjective: " << (p.selfinjective ? "yes" : "no") << "\n";

  out << "phi(sum of all simples): " << p.phi_a0.phi << "  (rank trace:";
  for (int rk : p.phi_a0.rank_trace) out << ' ' << rk;
  out << ")\n";
  out << "phi-dimension: " << p.phidim_value << "  (opposite quiver: " << p.phidim_opposite
      << ")\n";
  out << "finitistic dimension: " << p.findim_value << "\n";
  out << "global dimension: " << opt_dim(p.gldim_value) << "\n";
  if (p.psidim_value.exact)
    out << "psi-dimension: " << p.psidim_value.lo;
  else
    out << "psi-dimension: in [" << p.psidim_value.lo << ", " << p.psidim_value.hi << "]";
  out << "  (" << p.psidim_value.method << ")\n";

  out << "maximality: phi " << (p.maximality.phi_maximal ? "maximal" : "not maximal")
      << ", psi " << (p.maximality.psi_maximal ? "maximal" : "not maximal")
      << ", loop count " << p.maximality.lambda.str() << "\n";
  if (p.low_class)
    out << "no member: phi-dimension class " << low_class_string(*p.low_class) << "\n";

  out << "syzygy operator: algebraic multiplicity of 0 = " << p.zero_mult.algebraic
      << ", geometric = " << p.zero_mult.geometric
      << ", nilpotency index = " << p.zero_mult.nilpotency_index << "\n";
  if (!p.kernel_relations.empty()) {
    out << "kernel relations:\n";
    for (const auto& rel : p.kernel_relations) out << "  " << rel << " -> 0\n";
  }

  if (r.witness) {
    out << "witness: " << module_string(r.witness->module) << "\n";
    out << "  phi = " << r.witness->achieved_phi << " (" << r.witness->construction_note
        << ")\n";
  } else {
    out << "witness: none needed (selfinjective, phi-dimension 0)\n";
  }

  if (r.witness_detail) {
    const WitnessSummary& w = *r.witness_detail;
    out << "witness detail:\n";
    out << "  graph on inner simples: " << w.gamma_inner.vertices.size() << " vertices, "
        << w.gamma_inner.edges.size() << " edges, "
        << (w.gamma_inner.connected() ? "connected" : "disconnected") << "\n";
    if (w.two_summand)
      out << "  two-summand witness: " << module_string(w.two_summand->module) << " (phi = "
          << w.two_summand->achieved_phi << ")\n";
    if (w.indecomposable)
      out << "  indecomposable witness: " << module_string(w.indecomposable->module)
          << " (phi = " << w.indecomposable->achieved_phi << ")\n";
    else
      out << "  indecomposable witness: none (finitistic dimension "
          << p.findim_value << " < phi-dimension " << p.phidim_value << ")\n";
  }

  if (r.partitions) {
    const PartitionSummary& s = *r.partitions;
    out << "equitable partitions:\n";
    out << "  coarsest: " << partition_string(q, s.coarsest) << "\n";
    if (!s.note.empty()) out << "  note: " << s.note << "\n";
    for (const auto& entry : s.partitions) {
      out << "  " << partition_string(q, entry.partition) << ": quotient phi-dimension "
          << entry.quotient_phidim;
      out << ", characteristic polynomial divides: "
          << (entry.transfer.charpoly_divides ? "yes" : "NO");
      if (!entry.transfer.notice.empty()) out << " (" << entry.transfer.notice << ")";
      out << "\n";
    }
  }

  if (r.oracle) {
    out << "oracle cross-check: " << (r.oracle->passed ? "pass" : "FAIL") << " ("
        << r.oracle->items.size() << " comparisons, seed " << r.oracle->seed << ")\n";
    for (const auto& item : r.oracle->items)
      if (!item.ok)
        out << "  MISMATCH " << item.name << ": engine " << item.engine << ", oracle "
            << item.oracle << "\n";
  }

  for (const auto& w : p.warnings) out << "note: " << w << "\n";
  return out.str();
}

std::string render_json(const Report& r) {
  const Quiver& q = r.quiver;
  const AlgebraProfile& p = r.profile;

  json j;
  j["schema_version"] = 1;
  j["quiver"] = {{"vertices", q.n},
                 {"labels", q.labels},
                 {"arrows", json_matrix(q.arrows)},
                 {"text", to_text(q)}};
  j["simples"] = {{"projective", json_labels(q, p.classification.projective)},
                  {"injective", json_labels(q, p.classification.injective)},
                  {"inner", json_labels(q, p.classification.neither)}};
  j["heart"] = json_labels(q, p.heart_member.heart);
  j["member"] = json_labels(q, p.heart_member.member);
  j["selfinjective"] = p.selfinjective;
  j["phi_a0"] = {{"phi", p.phi_a0.phi}, {"rank_trace", p.phi_a0.rank_trace}};
  j["phidim"] = p.phidim_value;
  j["phidim_opposite"] = p.phidim_opposite;
  j["findim"] = p.findim_value;
  j["findim_zero"] = p.findim_zero;
  j["findim_note"] = p.findim_zero ? "no-sink closed form" : "derived, oracle-validated";
  j["gldim"] = json_dim(p.gldim_value);
  j["psidim"] = json_psidim(p.psidim_value);
  j["maximality"] = {{"phi_maximal", p.maximality.phi_maximal},
                     {"psi_maximal", p.maximality.psi_maximal},
                     {"loop_count", json_bigint(p.maximality.lambda)},
                     {"audit",
                      {{"strongly_connected", p.maximality.audit.strongly_connected},
                       {"loops_at_two_or_more", p.maximality.audit.loops_at_two_or_more},
                       {"regular_out_degree", p.maximality.audit.regular_out_degree},
                       {"loops_match_out_degree", p.maximality.audit.loops_match_out_degree},
                       {"no_proper_final_subheart", p.maximality.audit.no_proper_final_subheart},
                       {"no_proper_initial_subheart",
                        p.maximality.audit.no_proper_initial_subheart}}}};
  if (p.low_class) j["low_phidim_class"] = low_class_string(*p.low_class);
  j["zero_multiplicities"] = {{"algebraic", p.zero_mult.algebraic},
                              {"geometric", p.zero_mult.geometric},
                              {"nilpotency_index", p.zero_mult.nilpotency_index},
                              {"rank_sequence", p.zero_mult.rank_sequence}};
  j["kernel_relations"] = p.kernel_relations;
  j["warnings"] = p.warnings;

  if (r.witness) j["witness"] = json_witness(*r.witness);

  if (r.witness_detail) {
    const WitnessSummary& w = *r.witness_detail;
    json edges = json::array();
    for (const auto& [a, b] : w.gamma_inner.edges) edges.push_back(json::array({a, b}));
    json detail;
    detail["gamma_inner"] = {{"vertices", w.gamma_inner.vertices},
                             {"edges", std::move(edges)},
                             {"connected", w.gamma_inner.connected()}};
    if (w.two_summand) detail["two_summand"] = json_witness(*w.two_summand);
    if (w.indecomposable) detail["indecomposable"] = json_witness(*w.indecomposable);
    j["witness_detail"] = std::move(detail);
  }

  if (r.partitions) {
    const PartitionSummary& s = *r.partitions;
    json list = json::array();
    for (const auto& entry : s.partitions) {
      json e;
      e["blocks"] = json_partition(q, entry.partition);
      e["quotient_matrix"] = json_matrix(entry.quotient_matrix);
      e["quotient_phidim"] = entry.quotient_phidim;
      e["charpoly_divides"] = entry.transfer.charpoly_divides;
      if (entry.transfer.phidim_bound_ok) e["phidim_bound_ok"] = *entry.transfer.phidim_bound_ok;
      if (entry.transfer.defect_bound_ok) e["defect_bound_ok"] = *entry.transfer.defect_bound_ok;
      if (entry.transfer.no_member_preserved)
        e["no_member_preserved"] = *entry.transfer.no_member_preserved;
      if (!entry.transfer.notice.empty()) e["notice"] = entry.transfer.notice;
      list.push_back(std::move(e));
    }
    j["partitions"] = {{"coarsest", json_partition(q, s.coarsest)},
                       {"enumerated", s.enumerated},
                       {"list", std::move(list)}};
    if (!s.note.empty()) j["partitions"]["note"] = s.note;
  }

  if (r.oracle) {
    json items = json::array();
    for (const auto& item : r.oracle->items)
      items.push_back({{"name", item.name},
                       {"engine", item.engine},
                       {"oracle", item.oracle},
                       {"ok", item.ok}});
    j["oracle"] = {{"passed", r.oracle->passed},
                   {"seed", r.oracle->seed},
                   {"probes", r.oracle->probes},
                   {"items", std::move(items)}};
  }

  return j.dump(2) + "\n";
}

}  // namespace itq
