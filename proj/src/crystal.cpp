#include "gcwe/crystal.hpp"

#include <stdexcept>

namespace gcwe {

CrystalState::CrystalState(HalfInt j_, HalfInt m_) : j(j_), m(m_) {
  if (j < HalfInt(0)) {
    throw std::invalid_argument("CrystalState: j must be non-negative, got " + j_.str());
  }
  if (m.abs() > j || !j.same_parity(m)) {
    throw std::invalid_argument("CrystalState: invalid m = " + m_.str() +
                                " for j = " + j_.str());
  }
}

std::string CrystalState::str() const {
  return "|" + j.str() + "," + m.str() + ">";
}

std::optional<CrystalState> raised(const CrystalState& s) {
  if (s.m >= s.j) return std::nullopt;
  return CrystalState(s.j, s.m + HalfInt(1));
}

std::optional<CrystalState> lowered(const CrystalState& s) {
  if (s.m <= -s.j) return std::nullopt;
  return CrystalState(s.j, s.m - HalfInt(1));
}

Rational casimir_eigenvalue(const CrystalState& s) {
  // j(j+1) = t(t+2)/4 with t = 2j
  const long long t = s.j.twice();
  return Rational::reduced(t * (t + 2), 4);
}

}  // namespace gcwe
