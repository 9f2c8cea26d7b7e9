#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "itq/report.hpp"
#include "json.hpp"
#include "quiver_samples.hpp"

using namespace itq;
using namespace itq::samples;
using nlohmann::json;

namespace {

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Two-cycle 1 <-> 2 with a pendant tail 1 -> 3 -> 4; the smallest quiver on
// which the psi-dimension is only bracketed, not determined.
Quiver two_cycle_tail() {
  return from_rows({{0, 1, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}});
}

}  // namespace

TEST_CASE("analyze: profile of a memberless quiver with a kernel relation") {
  const Quiver q = paired_cycle_4();
  const AlgebraProfile p = analyze(q);

  CHECK_FALSE(p.selfinjective);
  CHECK(p.heart_member.heart.size() == 4);
  CHECK(p.heart_member.member.empty());
  CHECK(p.phi_a0.phi == 1);

  // Memberless on at least two vertices: phi-dimension is the nilpotency
  // index of zero plus one.
  CHECK(p.phidim_value == p.zero_mult.nilpotency_index + 1);
  CHECK(p.phidim_opposite == p.phidim_value);

  CHECK(p.findim_value == 0);
  CHECK(p.findim_zero);
  CHECK_FALSE(p.gldim_value.has_value());
  CHECK(p.psidim_value.exact);
  CHECK(p.psidim_value.lo == p.phidim_value);

  REQUIRE(p.low_class.has_value());
  CHECK(*p.low_class == LowPhidimClass::two);

  // The syzygy-operator kernel is one-dimensional: S_2 + S_3 - S_4 -> 0.
  CHECK(p.zero_mult.geometric == 1);
  REQUIRE(p.kernel_relations.size() == 1);
  CHECK(p.kernel_relations[0] == "[S_2]+[S_3]-[S_4]");

  CHECK(p.warnings.empty());
}

TEST_CASE("analyze: selfinjective cycle has the all-zero profile") {
  const Quiver q = cycle(5);
  const AlgebraProfile p = analyze(q);

  CHECK(p.selfinjective);
  CHECK(p.phidim_value == 0);
  CHECK(p.findim_value == 0);
  CHECK(p.psidim_value.exact);
  CHECK(p.psidim_value.lo == 0);
  CHECK_FALSE(p.gldim_value.has_value());
  REQUIRE(p.low_class.has_value());
  CHECK(*p.low_class == LowPhidimClass::zero);
  CHECK_FALSE(p.maximality.phi_maximal);
  CHECK(p.kernel_relations.empty());  // the cycle matrix is invertible

  const Report r = analyze_report(q);
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(r.witness_detail.has_value());
  CHECK_FALSE(r.partitions.has_value());
  CHECK_FALSE(r.oracle.has_value());
}

TEST_CASE("analyze: interval psi-dimension carries a warning") {
  const Quiver q = two_cycle_tail();
  const AlgebraProfile p = analyze(q);

  CHECK_FALSE(p.psidim_value.exact);
  CHECK(p.psidim_value.lo == 3);
  CHECK(p.psidim_value.hi == 4);
  CHECK(p.findim_value == 2);
  CHECK_FALSE(p.low_class.has_value());  // member {3, 4} is nonempty

  REQUIRE(p.warnings.size() == 2);
  CHECK(contains(p.warnings[0], "oracle"));
  CHECK(contains(p.warnings[1], "interval"));

  const Report r = analyze_report(q);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->achieved_phi == p.phidim_value);
}

TEST_CASE("render_text: headline numbers and optional sections") {
  ReportOptions opt;
  opt.with_witness_detail = true;

  const std::string text = render_text(analyze_report(loopline(4), opt));
  CHECK(contains(text, "quiver: 4 vertices"));
  CHECK(contains(text, "selfinjective: no"));
  CHECK(contains(text, "phi-dimension: 3"));
  CHECK(contains(text, "psi-dimension: 5"));
  CHECK(contains(text, "finitistic dimension: 3"));
  CHECK(contains(text, "global dimension: infinity"));
  CHECK(contains(text, "witness:"));
  CHECK(contains(text, "two-summand witness:"));
  CHECK(contains(text, "indecomposable witness:"));

  const std::string plain = render_text(analyze_report(cycle(3)));
  CHECK(contains(plain, "selfinjective: yes"));
  CHECK(contains(plain, "phi-dimension: 0"));
  CHECK(contains(plain, "witness: none needed"));
  CHECK_FALSE(contains(plain, "witness detail"));

  const std::string interval = render_text(analyze_report(two_cycle_tail()));
  CHECK(contains(interval, "psi-dimension: in [3, 4]"));
  CHECK(contains(interval, "[S_3] -> 0"));
}

TEST_CASE("render_text: partition section lists blocks by label") {
  ReportOptions opt;
  opt.with_partitions = true;
  const std::string text = render_text(analyze_report(mirror_cycle_4(), opt));
  CHECK(contains(text, "equitable partitions:"));
  CHECK(contains(text, "coarsest:"));
  CHECK(contains(text, "{1,4}"));
  CHECK(contains(text, "{2,3}"));
  CHECK(contains(text, "quotient phi-dimension"));
}

TEST_CASE("render_json: schema, infinities, intervals, round-trip") {
  ReportOptions opt;
  opt.with_witness_detail = true;
  opt.with_partitions = true;
  opt.with_oracle = true;
  opt.oracle_seed = 7;
  opt.oracle_probes = 2;

  const Quiver q = loopline(4);
  const json j = json::parse(render_json(analyze_report(q, opt)));

  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("quiver").at("vertices") == 4);
  CHECK(j.at("phidim") == 3);
  CHECK(j.at("phidim_opposite") == 3);
  CHECK(j.at("findim") == 3);
  CHECK(j.at("findim_note") == "derived, oracle-validated");
  CHECK(j.at("gldim") == "infinity");  // the loop makes resolutions unbounded

  const json& psi = j.at("psidim");
  CHECK(psi.at("lo") == 5);
  CHECK(psi.at("hi") == 5);
  CHECK(psi.at("exact") == true);

  CHECK(j.at("maximality").at("phi_maximal") == true);
  CHECK(j.at("maximality").at("psi_maximal") == true);
  CHECK(j.at("maximality").at("loop_count") == 1);

  CHECK(j.at("witness").at("phi") == 3);
  CHECK(j.at("witness").at("summands").size() >= 1);
  CHECK(j.at("witness_detail").at("two_summand").at("summands").size() == 2);
  CHECK(j.at("witness_detail").at("indecomposable").at("summands").size() == 1);

  CHECK(j.at("partitions").at("enumerated") == true);
  for (const json& entry : j.at("partitions").at("list"))
    CHECK(entry.at("charpoly_divides") == true);

  CHECK(j.at("oracle").at("passed") == true);
  CHECK(j.at("oracle").at("seed") == 7);
  for (const json& item : j.at("oracle").at("items")) CHECK(item.at("ok") == true);

  // The embedded text form parses back to the same quiver.
  const Quiver back = parse_quiver(j.at("quiver").at("text").get<std::string>());
  CHECK(back.n == q.n);
  CHECK(back.arrows == q.arrows);
}

TEST_CASE("render_json: interval psi and absent witness serialize cleanly") {
  const json interval = json::parse(render_json(analyze_report(two_cycle_tail())));
  CHECK(interval.at("psidim").at("exact") == false);
  CHECK(interval.at("psidim").at("lo") == 3);
  CHECK(interval.at("psidim").at("hi") == 4);
  CHECK(interval.at("kernel_relations") == json::array({"[S_3]"}));
  CHECK(interval.at("warnings").size() == 2);
  CHECK_FALSE(interval.contains("low_phidim_class"));

  const json cyc = json::parse(render_json(analyze_report(cycle(4))));
  CHECK_FALSE(cyc.contains("witness"));
  CHECK_FALSE(cyc.contains("witness_detail"));
  CHECK_FALSE(cyc.contains("partitions"));
  CHECK_FALSE(cyc.contains("oracle"));
  CHECK(cyc.at("selfinjective") == true);
  CHECK(cyc.at("low_phidim_class") == "0");
  CHECK(cyc.at("findim_note") == "no-sink closed form");
  CHECK(cyc.at("kernel_relations").empty());
  CHECK(cyc.at("zero_multiplicities").at("algebraic") == 0);
}

TEST_CASE("render_json: partition entries carry transfer verdicts") {
  ReportOptions opt;
  opt.with_partitions = true;
  const json j = json::parse(render_json(analyze_report(looped_cycle_4(), opt)));
  const json& parts = j.at("partitions");
  CHECK(parts.at("enumerated") == true);
  CHECK(parts.at("list").size() == 3);  // one-block, alternating pairs, trivial
  for (const json& entry : parts.at("list")) {
    CHECK(entry.at("charpoly_divides") == true);
    // looped_cycle_4 is memberless, so the numeric transfer bounds apply.
    CHECK(entry.at("phidim_bound_ok") == true);
    CHECK(entry.at("defect_bound_ok") == true);
    CHECK(entry.at("no_member_preserved") == true);
  }
}

TEST_CASE("analyze_report: partition cap falls back to the coarsest partition") {
  ReportOptions opt;
  opt.with_partitions = true;
  opt.partition_enumeration_cap = 3;  // below the 4 vertices of the sample
  const Report r = analyze_report(mirror_cycle_4(), opt);
  REQUIRE(r.partitions.has_value());
  CHECK_FALSE(r.partitions->enumerated);
  CHECK(r.partitions->partitions.size() == 1);
  CHECK_FALSE(r.partitions->note.empty());
  CHECK(r.partitions->partitions[0].partition.blocks ==
        r.partitions->coarsest.blocks);
}

TEST_CASE("single arrowless vertex: the degenerate report stays coherent") {
  const Report r = analyze_report(line(1));
  const AlgebraProfile& p = r.profile;
  CHECK(p.selfinjective);
  CHECK(p.phidim_value == 0);
  CHECK(p.gldim_value == 0);
  CHECK(p.zero_mult.algebraic == 0);  // empty syzygy basis, 0 x 0 operator
  CHECK(p.kernel_relations.empty());
  CHECK_FALSE(r.witness.has_value());

  const json j = json::parse(render_json(r));
  CHECK(j.at("gldim") == 0);
  CHECK(j.at("quiver").at("vertices") == 1);
}
