#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "itq/exact.hpp"
#include "itq/generate.hpp"
#include "itq/syzygy.hpp"
#include "quiver_samples.hpp"

using namespace itq;

namespace {

IntMatrix make(std::vector<std::vector<long long>> rows) {
  IntMatrix m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[size_t(i)][size_t(j)];
  return m;
}

}  // namespace

TEST_CASE("generators reproduce the hand-written shapes") {
  CHECK(generate_cycle(4).arrows == samples::cycle(4).arrows);
  CHECK(generate_cycle(1).arrows == make({{1}}));
  CHECK(generate_line(3).arrows == samples::line(3).arrows);
  CHECK(generate_line(1).arrows == make({{0}}));
  CHECK(generate_loopline(4).arrows == samples::loopline(4).arrows);
  CHECK(generate_loopline(1).arrows == make({{1}}));
  CHECK(generate_phimax(3, 2).arrows == samples::phimax3().arrows);
}

TEST_CASE("cycle family is selfinjective with phi-dimension zero") {
  for (int n : {1, 2, 3, 6}) {
    const Quiver q = generate_cycle(n);
    CHECK(is_selfinjective(q));
    CHECK(phidim(q) == 0);
  }
}

TEST_CASE("line family has phi-dimension n-1 and finite global dimension") {
  for (int n : {2, 3, 5}) {
    const Quiver q = generate_line(n);
    CHECK(phidim(q) == n - 1);
    const auto g = gldim(q);
    REQUIRE(g.has_value());
    CHECK(*g == n - 1);
  }
}

TEST_CASE("loopline family pairs phi-dimension n-1 with psi-dimension 2n-3") {
  for (int n : {4, 5, 6}) {
    const Quiver q = generate_loopline(n);
    CHECK(phidim(q) == n - 1);
    const auto psi = psidim(q);
    REQUIRE(psi.exact);
    CHECK(psi.lo == 2 * n - 3);
    CHECK(classify_maximality(q).psi_maximal);
  }
}

TEST_CASE("phimax family attains the maximal phi-dimension") {
  SUBCASE("documented three-vertex instance") {
    CHECK(generate_phimax(3, 2).arrows == make({{1, 0, 2}, {1, 1, 3}, {0, 1, 1}}));
  }

  SUBCASE("phi-dimension n, strong connectivity, and the stepwise rank pattern") {
    for (int n = 3; n <= 6; ++n) {
      const Quiver q = generate_phimax(n, n - 1);
      CHECK(phidim(q) == n);
      CHECK(heart_member(q).member.empty());
      CHECK(is_strongly_connected(q));
      // rank(M^l) = n - l while l < n - 1, then stable at 1.
      IntMatrix power = IntMatrix::identity(n);
      for (int l = 0; l <= n; ++l) {
        const int expected = l < n - 1 ? n - l : 1;
        CHECK(rank(power) == expected);
        power = mat_mul(power, q.arrows);
      }
      // Loops sit at vertices 1..n-1 plus the hub column's diagonal entry.
      int looped = 0;
      for (int v = 0; v < n; ++v)
        if (q.arrows.at(v, v) > 0) ++looped;
      CHECK(looped >= 2);
    }
  }

  SUBCASE("larger head multiplicities still give phi-dimension n") {
    CHECK(phidim(generate_phimax(3, 5)) == 3);
    CHECK(phidim(generate_phimax(4, 7)) == 4);
    CHECK(phidim(generate_phimax(2, 1)) == 2);
  }

  SUBCASE("a1 <= n-2 is rejected") {
    CHECK_THROWS_AS(generate_phimax(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(generate_phimax(3, 1), std::invalid_argument);
  }
}

TEST_CASE("midk family realizes every intermediate phi-dimension") {
  SUBCASE("documented five-vertex instance") {
    const Quiver q = generate_midk(5, 3);
    CHECK(q.arrows == make({{0, 1, 0, 0, 0},
                            {0, 0, 1, 0, 0},
                            {0, 0, 0, 1, 0},
                            {0, 0, 0, 1, 0},
                            {0, 0, 0, 1, 0}}));
    CHECK(phidim(q) == 3);
  }

  SUBCASE("with k = n-1 the family degenerates to a chain with a looped tail") {
    const Quiver q = generate_midk(4, 3);
    CHECK(q.arrows == make({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}}));
    CHECK(phidim(q) == 3);
    CHECK(findim(q) == 0);  // no sink: finitistic dimension zero
  }

  SUBCASE("phi-dimension equals k across the range") {
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n; ++k) CHECK(phidim(generate_midk(n, k)) == k);
  }

  SUBCASE("the endpoints come from the other families") {
    for (int n = 2; n <= 6; ++n) {
      CHECK(phidim(generate_cycle(n)) == 0);
      CHECK(phidim(generate_phimax(n, n - 1)) == n);
    }
  }

  SUBCASE("out-of-range k is rejected") {
    CHECK_THROWS_AS(generate_midk(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_midk(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(generate_midk(1, 1), std::invalid_argument);
  }
}

TEST_CASE("generate_family dispatches and validates parameters") {
  CHECK(generate_family("cycle", {bigint(4)}).arrows == samples::cycle(4).arrows);
  CHECK(generate_family("phimax", {bigint(3), bigint(2)}).arrows == samples::phimax3().arrows);
  CHECK(generate_family("midk", {bigint(5), bigint(3)}).n == 5);

  CHECK_THROWS_AS(generate_family("cycle", {}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("cycle", {bigint(3), bigint(3)}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("phimax", {bigint(3)}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("spiral", {bigint(3)}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("cycle", {bigint(0)}), std::invalid_argument);
  CHECK_THROWS_AS(generate_family("cycle", {bigint("99999999999")}), std::invalid_argument);

  CHECK(generate_family_names().size() == 5);
}

TEST_CASE("generated quivers round-trip through the text format") {
  for (const Quiver& q : {generate_phimax(4, 3), generate_midk(5, 2), generate_loopline(3)}) {
    const Quiver back = parse_quiver(to_text(q));
    CHECK(back.arrows == q.arrows);
    CHECK(back.labels == q.labels);
  }
}
