#pragma once

#include "augur/rational.hpp"

namespace augur {

/// H(n) = 1 + 1/2 + ... + 1/n as an exact rational. Throws std::domain_error
/// for n == 0. Values are memoized in a process-wide, thread-safe table.
Rational harmonic(int n);

/// Float projection of harmonic(n).
double harmonic_value(int n);

/// psi(p) = 2 H(p+1) - (p-1)(1/3 + delta) - H(2), the per-node slack term of
/// the witness invariant.
Rational witness_psi(int p, const Rational& delta);

}  // namespace augur
