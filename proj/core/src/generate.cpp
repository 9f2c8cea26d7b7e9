#include "itq/generate.hpp"

#include <stdexcept>

#include "itq/check.hpp"

namespace itq {

namespace {

IntMatrix zeros(int n) { return IntMatrix(n, n); }

bigint binom(int m, int k) {
  if (k < 0 || k > m) return 0;
  bigint out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= m - k + i;
    out /= i;
  }
  return out;
}

int small_int(const bigint& value, const char* what) {
  if (value < 1 || value > 4096)
    throw std::invalid_argument(std::string(what) + " must be between 1 and 4096");
  return int(value);
}

}  // namespace

Quiver generate_cycle(int n) {
  if (n < 1) throw std::invalid_argument("cycle needs at least one vertex");
  IntMatrix m = zeros(n);
  for (int v = 0; v < n; ++v) m.at(v, (v + 1) % n) = 1;
  return quiver_from_arrows(std::move(m));
}

Quiver generate_line(int n) {
  if (n < 1) throw std::invalid_argument("line needs at least one vertex");
  IntMatrix m = zeros(n);
  for (int v = 0; v + 1 < n; ++v) m.at(v, v + 1) = 1;
  return quiver_from_arrows(std::move(m));
}

Quiver generate_loopline(int n) {
  if (n < 1) throw std::invalid_argument("loopline needs at least one vertex");
  IntMatrix m = zeros(n);
  m.at(0, 0) = 1;
  for (int v = 0; v + 1 < n; ++v) m.at(v, v + 1) = 1;
  return quiver_from_arrows(std::move(m));
}

Quiver generate_phimax(int n, const bigint& a1) {
  if (n < 2) throw std::invalid_argument("phimax needs at least two vertices");
  if (a1 <= n - 2)
    throw std::invalid_argument("phimax requires a1 > n - 2 to keep every arrow count positive");

  // Last-column entries a_1..a_n: a_1 free, a_n = a_1 - (n - 2), and in
  // between a_j = a1*(C(n-2, j-1) + C(n-2, j-2)) - (C(n-2, j-2) + C(n-2, j-3)).
  // These force the kernel of the arrow matrix into the image of its
  // (n-2)-nd power, producing a single 0-Jordan block of size n - 1 and with
  // it the maximal phi-dimension n.
  std::vector<bigint> a(size_t(n) + 1);
  a[1] = a1;
  for (int j = 2; j < n; ++j)
    a[size_t(j)] = a1 * (binom(n - 2, j - 1) + binom(n - 2, j - 2)) -
                   (binom(n - 2, j - 2) + binom(n - 2, j - 3));
  a[size_t(n)] = a1 - (n - 2);
  for (int j = 1; j <= n; ++j)
    internal_check(a[size_t(j)] > 0, "phimax arrow counts must be positive");

  IntMatrix m = zeros(n);
  for (int v = 0; v + 1 < n; ++v) m.at(v, v) = 1;
  for (int v = 1; v < n; ++v) m.at(v, v - 1) = 1;
  for (int v = 0; v < n; ++v) m.at(v, n - 1) = a[size_t(v) + 1];
  return quiver_from_arrows(std::move(m));
}

Quiver generate_midk(int n, int k) {
  if (n < 2) throw std::invalid_argument("midk needs at least two vertices");
  if (k <= 0 || k >= n)
    throw std::invalid_argument("midk requires 0 < k < n (use cycle for 0, phimax for n)");
  // Chain 1 -> 2 -> ... -> k+1 with a loop at vertex k+1; any remaining
  // vertices feed the looped hub. The inner simples are S_2..S_{k+1} and
  // their classes shift k-1 times before reaching the loop's fixed class, so
  // phi(sum of inner simples) = k-1 and the phi-dimension is exactly k.
  IntMatrix m = zeros(n);
  for (int v = 0; v < k; ++v) m.at(v, v + 1) = 1;
  m.at(k, k) = 1;
  for (int v = k + 1; v < n; ++v) m.at(v, k) = 1;
  return quiver_from_arrows(std::move(m));
}

Quiver generate_family(const std::string& family, const std::vector<bigint>& params) {
  const auto want = [&](size_t count, const char* usage) {
    if (params.size() != count)
      throw std::invalid_argument("family '" + family + "' expects parameters: " + usage);
  };
  if (family == "cycle") {
    want(1, "n");
    return generate_cycle(small_int(params[0], "n"));
  }
  if (family == "line") {
    want(1, "n");
    return generate_line(small_int(params[0], "n"));
  }
  if (family == "loopline") {
    want(1, "n");
    return generate_loopline(small_int(params[0], "n"));
  }
  if (family == "phimax") {
    want(2, "n a1");
    return generate_phimax(small_int(params[0], "n"), params[1]);
  }
  if (family == "midk") {
    want(2, "n k");
    return generate_midk(small_int(params[0], "n"), small_int(params[1], "k"));
  }
  std::string known;
  for (const auto& name : generate_family_names()) {
    if (!known.empty()) known += ", ";
    known += name;
  }
  throw std::invalid_argument("unknown family '" + family + "' (known: " + known + ")");
}

const std::vector<std::string>& generate_family_names() {
  static const std::vector<std::string> names = {"cycle", "line", "loopline", "phimax", "midk"};
  return names;
}

}  // namespace itq
