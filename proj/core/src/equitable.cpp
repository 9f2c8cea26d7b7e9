#include "itq/equitable.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "itq/check.hpp"
#include "itq/syzygy.hpp"

namespace itq {

namespace {

void validate_partition(const Quiver& q, const Partition& p) {
  std::vector<bool> seen(static_cast<size_t>(q.n), false);
  int covered = 0;
  for (const std::vector<int>& block : p.blocks) {
    if (block.empty()) throw std::invalid_argument("empty block in partition");
    for (int v : block) {
      if (v < 0 || v >= q.n || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("blocks must form a partition of the vertex set");
      seen[static_cast<size_t>(v)] = true;
      ++covered;
    }
  }
  if (covered != q.n)
    throw std::invalid_argument("blocks must form a partition of the vertex set");
}

bigint arrows_into_block(const Quiver& q, int v, const std::vector<int>& block) {
  bigint total = 0;
  for (int w : block) total += q.arrows.at(v, w);
  return total;
}

Partition from_block_ids(const std::vector<int>& block_of, int blocks) {
  Partition p;
  p.blocks.assign(static_cast<size_t>(blocks), {});
  for (int v = 0; v < static_cast<int>(block_of.size()); ++v)
    p.blocks[static_cast<size_t>(block_of[static_cast<size_t>(v)])].push_back(v);
  return p;
}

}  // namespace

Partition trivial_partition(const Quiver& q) {
  Partition p;
  for (int v = 0; v < q.n; ++v) p.blocks.push_back({v});
  return p;
}

EquitableCheck is_equitable(const Quiver& q, const Partition& p) {
  validate_partition(q, p);
  const int r = p.r();
  EquitableCheck check;
  check.b = IntMatrix(r, r);
  for (int i = 0; i < r; ++i) {
    const std::vector<int>& source = p.blocks[static_cast<size_t>(i)];
    for (int j = 0; j < r; ++j) {
      const bigint count = arrows_into_block(q, source[0], p.blocks[static_cast<size_t>(j)]);
      for (size_t k = 1; k < source.size(); ++k) {
        if (arrows_into_block(q, source[k], p.blocks[static_cast<size_t>(j)]) == count)
          continue;
        check.equitable = false;
        check.violating_v = source[0];
        check.violating_w = source[k];
        check.violating_block = j;
        return check;
      }
      check.b.at(i, j) = count;
    }
  }
  check.equitable = true;
  return check;
}

QuotientResult quotient(const Quiver& q, const Partition& p) {
  const EquitableCheck check = is_equitable(q, p);
  if (!check.equitable) throw std::invalid_argument("partition not equitable");

  const int r = p.r();
  QuotientResult result;
  result.b = check.b;

  std::vector<std::string> labels;
  for (const std::vector<int>& block : p.blocks) {
    std::string name = "{";
    for (size_t k = 0; k < block.size(); ++k) {
      if (k > 0) name += ",";
      name += q.label(block[static_cast<size_t>(k)]);
    }
    name += "}";
    labels.push_back(std::move(name));
  }
  result.quotient = quiver_from_arrows(check.b, std::move(labels));

  IntMatrix P(q.n, r);
  for (int i = 0; i < r; ++i)
    for (int v : p.blocks[static_cast<size_t>(i)]) P.at(v, i) = 1;
  result.characteristic_matrix = P;

  // Defining identities of the characteristic matrix.
  const IntMatrix ptp = mat_mul(transpose(P), P);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const bigint expected =
          (i == j) ? bigint(p.blocks[static_cast<size_t>(i)].size()) : bigint(0);
      internal_check(ptp.at(i, j) == expected, "P^t P must be the diagonal of block sizes");
    }
  internal_check(mat_mul(q.arrows, P) == mat_mul(P, result.b),
                 "arrow matrix must intertwine with the quotient through P");
  internal_check(mat_mul(ptp, result.b) == mat_mul(transpose(P), mat_mul(q.arrows, P)),
                 "quotient matrix must equal the compressed arrow matrix");
  return result;
}

Partition coarsest_equitable(const Quiver& q) {
  std::vector<int> block_of(static_cast<size_t>(q.n), 0);
  int blocks = 1;
  for (;;) {
    Partition current = from_block_ids(block_of, blocks);
    // Signature: current block plus the arrow counts into every block.
    std::map<std::vector<bigint>, int> ids;
    std::vector<int> next(static_cast<size_t>(q.n));
    for (int v = 0; v < q.n; ++v) {
      std::vector<bigint> sig;
      sig.push_back(block_of[static_cast<size_t>(v)]);
      for (const std::vector<int>& block : current.blocks)
        sig.push_back(arrows_into_block(q, v, block));
      const auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
      next[static_cast<size_t>(v)] = it->second;
    }
    const int refined = static_cast<int>(ids.size());
    // Renumber by first occurrence so blocks stay ordered by smallest vertex.
    std::vector<int> rename(static_cast<size_t>(refined), -1);
    int fresh = 0;
    for (int v = 0; v < q.n; ++v) {
      int& slot = rename[static_cast<size_t>(next[static_cast<size_t>(v)])];
      if (slot == -1) slot = fresh++;
      next[static_cast<size_t>(v)] = slot;
    }
    if (refined == blocks) {
      internal_check(is_equitable(q, current).equitable,
                     "refinement must stop at an equitable partition");
      return current;
    }
    block_of = std::move(next);
    blocks = refined;
  }
}

std::vector<Partition> enumerate_equitable(const Quiver& q, int max_n) {
  if (q.n > max_n) throw std::invalid_argument("too many vertices for exhaustive enumeration");

  std::vector<Partition> found;
  std::vector<int> assign(static_cast<size_t>(q.n), 0);
  std::vector<int> first_member;  // first vertex of each open block

  // Restricted growth: vertex v may join an existing block or open the next
  // one.  Same-block vertices must agree on every block count, so equal total
  // out-degree is a sound pruning condition while the blocks are still open.
  const auto recurse = [&](auto&& self, int v) -> void {
    if (v == q.n) {
      Partition p = from_block_ids(assign, static_cast<int>(first_member.size()));
      if (is_equitable(q, p).equitable) found.push_back(std::move(p));
      return;
    }
    for (int k = 0; k <= static_cast<int>(first_member.size()); ++k) {
      if (k < static_cast<int>(first_member.size()) &&
          q.out_degree(first_member[static_cast<size_t>(k)]) != q.out_degree(v))
        continue;
      assign[static_cast<size_t>(v)] = k;
      if (k == static_cast<int>(first_member.size())) {
        first_member.push_back(v);
        self(self, v + 1);
        first_member.pop_back();
      } else {
        self(self, v + 1);
      }
    }
  };
  recurse(recurse, 0);
  return found;
}

TransferReport verify_transfer(const Quiver& q, const Partition& p) {
  const QuotientResult qr = quotient(q, p);  // throws when not equitable
  TransferReport report;

  report.charpoly_divides = poly_divides(char_poly(qr.b), char_poly(q.arrows));
  internal_check(report.charpoly_divides,
                 "quotient characteristic polynomial must divide the quiver's");

  if (!heart_member(q).member.empty()) {
    report.notice =
        "member nonempty: quotient phi-dimension bounds are only stated for "
        "quivers without member";
    return report;
  }

  const int pdim = phidim(q);
  const int pdim_q = phidim(qr.quotient);
  report.phidim_bound_ok = pdim_q <= std::min(p.r(), pdim);
  report.defect_bound_ok = (p.r() - pdim_q) <= (q.n - pdim);
  report.no_member_preserved = heart_member(qr.quotient).member.empty();
  internal_check(*report.phidim_bound_ok, "quotient phi-dimension must respect the minimum bound");
  internal_check(*report.defect_bound_ok, "quotient defect must not exceed the quiver's defect");
  internal_check(*report.no_member_preserved, "quotient of a memberless quiver has no member");
  return report;
}

}  // namespace itq
