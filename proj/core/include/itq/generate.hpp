#pragma once

// Named quiver families with closed-form invariants. Used by the CLI
// `generate` subcommand, by fixtures, and by stress tests.
//
//   cycle n      single directed n-cycle Z_n: selfinjective, phi-dimension 0.
//   line n       linear quiver A_n: phi-dimension n-1, finite global dimension.
//   loopline n   loop at the head of a linear quiver: phi-dimension n-1 and,
//                for n > 3, the largest possible psi-dimension 2n-3.
//   phimax n a1  dense strongly connected family with phi-dimension n, the
//                maximum on n vertices; requires a1 > n-2 so that every
//                arrow count stays positive.
//   midk n k     chain of k arrows into a looped hub that the remaining
//                vertices feed: phi-dimension exactly k; requires 0 < k < n.
//                Together with cycle (k = 0) and phimax (k = n) this
//                realizes every phi-dimension from 0 to n.

#include "itq/quiver.hpp"

#include <string>
#include <vector>

namespace itq {

Quiver generate_cycle(int n);
Quiver generate_line(int n);
Quiver generate_loopline(int n);
Quiver generate_phimax(int n, const bigint& a1);
Quiver generate_midk(int n, int k);

// Dispatch by family name with positional integer parameters, exactly as the
// CLI `generate` subcommand accepts them. Throws std::invalid_argument on an
// unknown family, wrong parameter count, or out-of-range values.
Quiver generate_family(const std::string& family, const std::vector<bigint>& params);

// The accepted family names, in documentation order.
const std::vector<std::string>& generate_family_names();

}  // namespace itq
