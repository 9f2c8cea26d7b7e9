#include "itq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

#include "itq/check.hpp"

namespace itq {

bigint Quiver::out_degree(int v) const {
  bigint d = 0;
  for (int j = 0; j < n; ++j) d += arrows.at(v, j);
  return d;
}

bigint Quiver::in_degree(int v) const {
  bigint d = 0;
  for (int i = 0; i < n; ++i) d += arrows.at(i, v);
  return d;
}

namespace {

bool underlying_connected(const IntMatrix& arrows) {
  const int n = arrows.rows;
  if (n == 0) return false;
  std::vector<bool> seen(size_t(n), false);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  int count = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w = 0; w < n; ++w) {
      if (seen[size_t(w)]) continue;
      if (arrows.at(v, w) != 0 || arrows.at(w, v) != 0) {
        seen[size_t(w)] = true;
        ++count;
        bfs.push(w);
      }
    }
  }
  return count == n;
}

}  // namespace

Quiver quiver_from_arrows(IntMatrix arrows, std::vector<std::string> labels) {
  if (!arrows.is_square()) throw QuiverParseError(0, "arrow matrix must be square");
  if (arrows.rows == 0) throw QuiverParseError(0, "no vertices");
  for (const bigint& e : arrows.entries)
    if (e < 0) throw QuiverParseError(0, "negative arrow count");
  if (!underlying_connected(arrows)) throw QuiverParseError(0, "disconnected quiver");
  Quiver q;
  q.n = arrows.rows;
  q.arrows = std::move(arrows);
  if (labels.empty()) {
    q.labels.reserve(size_t(q.n));
    for (int v = 1; v <= q.n; ++v) q.labels.push_back(std::to_string(v));
  } else {
    if (int(labels.size()) != q.n) throw QuiverParseError(0, "label count mismatch");
    q.labels = std::move(labels);
  }
  return q;
}

Quiver parse_quiver(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n = -1;
  bool matrix_mode = false;
  int matrix_rows_read = 0;
  IntMatrix arrows;
  std::vector<std::string> labels;

  auto fail = [&](const std::string& message) -> void {
    throw QuiverParseError(line_no, "line " + std::to_string(line_no) + ": " + message);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string stripped = raw.substr(0, raw.find('#'));
    std::istringstream tokens(stripped);
    std::string word;
    if (!(tokens >> word)) continue;  // blank or comment-only line

    if (n < 0) {
      if (word != "vertices" && word != "matrix")
        fail("expected header 'vertices <n>' or 'matrix <n>'");
      long long count = -1;
      if (!(tokens >> count)) fail("expected a vertex count after '" + word + "'");
      if (count <= 0) throw QuiverParseError(line_no, "no vertices");
      std::string extra;
      if (tokens >> extra) fail("unexpected token '" + extra + "'");
      n = int(count);
      matrix_mode = (word == "matrix");
      arrows = IntMatrix(n, n);
      labels.assign(size_t(n), std::string());
      continue;
    }

    if (matrix_mode && matrix_rows_read < n) {
      if (word == "label") {
        // labels may only follow the complete matrix block
        fail("expected a matrix row (" + std::to_string(n - matrix_rows_read) +
             " more needed)");
      }
      std::istringstream row(stripped);
      for (int j = 0; j < n; ++j) {
        std::string cell;
        if (!(row >> cell)) fail("matrix row has fewer than n entries");
        try {
          bigint value(cell);
          if (value < 0) fail("negative arrow count");
          arrows.at(matrix_rows_read, j) = value;
        } catch (const std::runtime_error&) {
          fail("invalid arrow count '" + cell + "'");
        }
      }
      std::string extra;
      if (row >> extra) fail("matrix row has more than n entries");
      ++matrix_rows_read;
      continue;
    }

    if (word == "arrow") {
      if (matrix_mode) fail("'arrow' lines are not allowed after a matrix header");
      long long i = 0, j = 0;
      if (!(tokens >> i >> j)) fail("expected 'arrow <i> <j>'");
      std::string extra;
      if (tokens >> extra) fail("unexpected token '" + extra + "'");
      if (i < 1 || i > n || j < 1 || j > n) fail("arrow endpoint out of range");
      arrows.at(int(i) - 1, int(j) - 1) += 1;
    } else if (word == "label") {
      long long i = 0;
      std::string name;
      if (!(tokens >> i >> name)) fail("expected 'label <i> <name>'");
      std::string extra;
      if (tokens >> extra) fail("unexpected token '" + extra + "'");
      if (i < 1 || i > n) fail("label vertex out of range");
      labels[size_t(i - 1)] = name;
    } else {
      fail("unknown directive '" + word + "'");
    }
  }

  if (n < 0) throw QuiverParseError(0, "no vertices");
  if (matrix_mode && matrix_rows_read < n)
    throw QuiverParseError(line_no, "matrix block ended after " +
                                        std::to_string(matrix_rows_read) + " of " +
                                        std::to_string(n) + " rows");

  bool any_label = false;
  for (int v = 0; v < n; ++v) {
    if (labels[size_t(v)].empty())
      labels[size_t(v)] = std::to_string(v + 1);
    else
      any_label = true;
  }
  (void)any_label;
  return quiver_from_arrows(std::move(arrows), std::move(labels));
}

std::string to_text(const Quiver& q) {
  bool wide = false;
  for (const bigint& e : q.arrows.entries)
    if (e > 2) wide = true;
  std::ostringstream out;
  if (wide) {
    out << "matrix " << q.n << "\n";
    for (int i = 0; i < q.n; ++i) {
      for (int j = 0; j < q.n; ++j) out << (j ? " " : "") << q.arrows.at(i, j).str();
      out << "\n";
    }
  } else {
    out << "vertices " << q.n << "\n";
    for (int i = 0; i < q.n; ++i)
      for (int j = 0; j < q.n; ++j)
        for (bigint c = 0; c < q.arrows.at(i, j); ++c)
          out << "arrow " << (i + 1) << " " << (j + 1) << "\n";
  }
  for (int v = 0; v < q.n; ++v)
    if (q.labels[size_t(v)] != std::to_string(v + 1))
      out << "label " << (v + 1) << " " << q.labels[size_t(v)] << "\n";
  return out.str();
}

Quiver opposite(const Quiver& q) {
  Quiver op;
  op.n = q.n;
  op.arrows = transpose(q.arrows);
  op.labels = q.labels;
  return op;
}

std::vector<int> sinks(const Quiver& q) {
  std::vector<int> out;
  for (int v = 0; v < q.n; ++v)
    if (q.out_degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<int> sources(const Quiver& q) {
  std::vector<int> out;
  for (int v = 0; v < q.n; ++v)
    if (q.in_degree(v) == 0) out.push_back(v);
  return out;
}

SimpleClassification classify_simples(const Quiver& q) {
  SimpleClassification c;
  for (int v = 0; v < q.n; ++v) {
    const bool sink = q.out_degree(v) == 0;
    const bool source = q.in_degree(v) == 0;
    if (sink) c.projective.push_back(v);
    if (source) c.injective.push_back(v);
    if (!sink && !source) c.neither.push_back(v);
  }
  return c;
}

SCCResult strongly_connected_components(const Quiver& q) {
  // Iterative Tarjan.
  const int n = q.n;
  SCCResult result;
  result.component_of.assign(size_t(n), -1);
  std::vector<int> index(size_t(n), -1), lowlink(size_t(n), 0);
  std::vector<bool> on_stack(size_t(n), false);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    int next_w;
  };

  for (int root = 0; root < n; ++root) {
    if (index[size_t(root)] != -1) continue;
    std::vector<Frame> call_stack{{root, 0}};
    index[size_t(root)] = lowlink[size_t(root)] = next_index++;
    stack.push_back(root);
    on_stack[size_t(root)] = true;
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const int v = frame.v;
      bool descended = false;
      while (frame.next_w < n) {
        const int w = frame.next_w++;
        if (q.arrows.at(v, w) == 0 || v == w) continue;
        if (index[size_t(w)] == -1) {
          index[size_t(w)] = lowlink[size_t(w)] = next_index++;
          stack.push_back(w);
          on_stack[size_t(w)] = true;
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[size_t(w)])
          lowlink[size_t(v)] = std::min(lowlink[size_t(v)], index[size_t(w)]);
      }
      if (descended) continue;
      if (lowlink[size_t(v)] == index[size_t(v)]) {
        std::vector<int> component;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[size_t(w)] = false;
          component.push_back(w);
          result.component_of[size_t(w)] = int(result.components.size());
          if (w == v) break;
        }
        std::sort(component.begin(), component.end());
        result.components.push_back(std::move(component));
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        int parent = call_stack.back().v;
        lowlink[size_t(parent)] = std::min(lowlink[size_t(parent)], lowlink[size_t(v)]);
      }
    }
  }

  const int k = int(result.components.size());
  result.cyclic.assign(size_t(k), false);
  for (int c = 0; c < k; ++c) {
    const auto& comp = result.components[size_t(c)];
    if (comp.size() >= 2) {
      result.cyclic[size_t(c)] = true;
    } else {
      result.cyclic[size_t(c)] = q.loop_at(comp[0]) != 0;
    }
  }
  result.successors.assign(size_t(k), {});
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (q.arrows.at(v, w) == 0) continue;
      int cv = result.component_of[size_t(v)], cw = result.component_of[size_t(w)];
      if (cv == cw) continue;
      auto& succ = result.successors[size_t(cv)];
      if (std::find(succ.begin(), succ.end(), cw) == succ.end()) succ.push_back(cw);
    }
  return result;
}

bool is_strongly_connected(const Quiver& q) {
  return strongly_connected_components(q).components.size() == 1;
}

bool is_cycle_zn(const Quiver& q) {
  for (int v = 0; v < q.n; ++v)
    if (q.out_degree(v) != 1 || q.in_degree(v) != 1) return false;
  return is_strongly_connected(q);
}

bool is_selfinjective(const Quiver& q) {
  if (is_cycle_zn(q)) return true;
  return q.n == 1 && q.loop_at(0) == 0;  // arrowless vertex: semisimple algebra
}

bool is_acyclic(const Quiver& q) {
  const SCCResult scc = strongly_connected_components(q);
  return std::none_of(scc.cyclic.begin(), scc.cyclic.end(), [](bool c) { return c; });
}

std::vector<std::vector<bool>> reachability(const Quiver& q) {
  const int n = q.n;
  std::vector<std::vector<bool>> reach(size_t(n), std::vector<bool>(size_t(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) reach[size_t(i)][size_t(j)] = q.arrows.at(i, j) != 0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!reach[size_t(i)][size_t(k)]) continue;
      for (int j = 0; j < n; ++j)
        if (reach[size_t(k)][size_t(j)]) reach[size_t(i)][size_t(j)] = true;
    }
  return reach;
}

HeartMember heart_member(const Quiver& q) {
  const SCCResult scc = strongly_connected_components(q);
  const int k = int(scc.components.size());

  // Forward closure: components reachable from a cyclic component.
  std::vector<bool> from_cycle(size_t(k), false), to_cycle(size_t(k), false);
  std::vector<std::vector<int>> predecessors(static_cast<size_t>(k));
  for (int c = 0; c < k; ++c)
    for (int s : scc.successors[size_t(c)]) predecessors[size_t(s)].push_back(c);

  std::function<void(int, std::vector<bool>&, const std::vector<std::vector<int>>&)> mark =
      [&](int c, std::vector<bool>& seen, const std::vector<std::vector<int>>& adj) {
        if (seen[size_t(c)]) return;
        seen[size_t(c)] = true;
        for (int next : adj[size_t(c)]) mark(next, seen, adj);
      };
  for (int c = 0; c < k; ++c)
    if (scc.cyclic[size_t(c)]) {
      mark(c, from_cycle, scc.successors);
      mark(c, to_cycle, predecessors);
    }

  HeartMember hm;
  for (int v = 0; v < q.n; ++v) {
    const int c = scc.component_of[size_t(v)];
    if (from_cycle[size_t(c)] && to_cycle[size_t(c)])
      hm.heart.push_back(v);
    else
      hm.member.push_back(v);
  }
  return hm;
}

HeartMember heart_member_support(const Quiver& q) {
  const int n = q.n;
  // Support of the n-th syzygy of the sum of all simples: n-step successor
  // supports. Dually for the cosyzygy side.
  std::vector<bool> fwd(size_t(n), true), bwd(size_t(n), true);
  for (int step = 0; step < n; ++step) {
    std::vector<bool> next_fwd(size_t(n), false), next_bwd(size_t(n), false);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (q.arrows.at(i, j) == 0) continue;
        if (fwd[size_t(i)]) next_fwd[size_t(j)] = true;
        if (bwd[size_t(j)]) next_bwd[size_t(i)] = true;
      }
    fwd = std::move(next_fwd);
    bwd = std::move(next_bwd);
  }
  HeartMember hm;
  for (int v = 0; v < n; ++v) {
    if (fwd[size_t(v)] && bwd[size_t(v)])
      hm.heart.push_back(v);
    else
      hm.member.push_back(v);
  }
  return hm;
}

std::vector<std::vector<int>> final_subhearts(const Quiver& q) {
  const SCCResult scc = strongly_connected_components(q);
  std::vector<std::vector<int>> out;
  for (size_t c = 0; c < scc.components.size(); ++c)
    if (scc.successors[c].empty()) out.push_back(scc.components[c]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> initial_subhearts(const Quiver& q) {
  const SCCResult scc = strongly_connected_components(q);
  const int k = int(scc.components.size());
  std::vector<bool> has_pred(size_t(k), false);
  for (int c = 0; c < k; ++c)
    for (int s : scc.successors[size_t(c)]) has_pred[size_t(s)] = true;
  std::vector<std::vector<int>> out;
  for (int c = 0; c < k; ++c)
    if (!has_pred[size_t(c)]) out.push_back(scc.components[size_t(c)]);
  std::sort(out.begin(), out.end());
  return out;
}

MemberOrderStats member_order_stats(const Quiver& q) {
  MemberOrderStats stats;
  const HeartMember hm = heart_member(q);
  const auto reach = reachability(q);

  stats.is_total_order = true;
  for (size_t a = 0; a < hm.member.size() && stats.is_total_order; ++a)
    for (size_t b = a + 1; b < hm.member.size(); ++b) {
      const int x = hm.member[a], y = hm.member[b];
      if (!reach[size_t(x)][size_t(y)] && !reach[size_t(y)][size_t(x)]) {
        stats.is_total_order = false;
        break;
      }
    }

  // d: longest path through member vertices only, ending at a sink of Q.
  // The member-induced subquiver is acyclic, so a depth-first longest-path
  // scan with memoization terminates.
  const std::vector<int> sink_list = sinks(q);
  if (sink_list.empty()) return stats;  // d absent

  std::vector<bool> in_member(size_t(q.n), false);
  for (int v : hm.member) in_member[size_t(v)] = true;
  std::vector<bool> is_sink(size_t(q.n), false);
  for (int v : sink_list) is_sink[size_t(v)] = true;

  constexpr int kUnreachable = -1;
  std::vector<int> memo(size_t(q.n), -2);  // -2 = unvisited
  std::function<int(int)> longest = [&](int v) -> int {
    int& slot = memo[size_t(v)];
    if (slot != -2) return slot;
    int best = is_sink[size_t(v)] ? 0 : kUnreachable;
    for (int w = 0; w < q.n; ++w) {
      if (q.arrows.at(v, w) == 0 || !in_member[size_t(w)]) continue;
      int tail = longest(w);
      if (tail != kUnreachable) best = std::max(best, tail + 1);
    }
    slot = best;
    return best;
  };
  int d = kUnreachable;
  for (int v : hm.member) d = std::max(d, longest(v));
  internal_check(d >= 0, "a sink exists and every sink lies in the member");
  stats.d = d;
  return stats;
}

}  // namespace itq
