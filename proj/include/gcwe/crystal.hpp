#pragma once

#include <optional>
#include <string>

#include "gcwe/half_int.hpp"

namespace gcwe {

/// One basis vector |j,m> of a single crystal irrep.
/// Invariants: j >= 0, -j <= m <= j, and j - m is a non-negative integer.
struct CrystalState {
  HalfInt j;
  HalfInt m;

  CrystalState(HalfInt j_, HalfInt m_);

  std::string str() const;
  friend constexpr bool operator==(const CrystalState&, const CrystalState&) = default;
};

/// Number of times raising applies before annihilation: j - m.
constexpr int epsilon(HalfInt j, HalfInt m) { return (j - m).twice() / 2; }
/// Number of times lowering applies before annihilation: j + m.
constexpr int phi(HalfInt j, HalfInt m) { return (j + m).twice() / 2; }

inline int epsilon(const CrystalState& s) { return epsilon(s.j, s.m); }
inline int phi(const CrystalState& s) { return phi(s.j, s.m); }

/// Crystal raising: |j,m+1> for m < j, absent at the highest weight.
std::optional<CrystalState> raised(const CrystalState& s);

/// Crystal lowering: |j,m-1> for m > -j, absent at the lowest weight.
std::optional<CrystalState> lowered(const CrystalState& s);

/// Crystal Casimir eigenvalue j(j+1), exact.
Rational casimir_eigenvalue(const CrystalState& s);

}  // namespace gcwe
