#include "gcwe/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcwe {

SignPath::SignPath(std::vector<CrystalState> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw std::invalid_argument("SignPath: needs at least one factor");
  }
}

SignPath SignPath::spin_half(std::initializer_list<int> twice_ms) {
  return spin_half(std::vector<int>(twice_ms));
}

SignPath SignPath::spin_half(const std::vector<int>& twice_ms) {
  std::vector<CrystalState> f;
  f.reserve(twice_ms.size());
  for (int tm : twice_ms) {
    f.emplace_back(HalfInt::from_twice(1), HalfInt::from_twice(tm));
  }
  return SignPath(std::move(f));
}

HalfInt SignPath::weight() const {
  HalfInt total;
  for (const auto& f : factors_) total += f.m;
  return total;
}

std::string SignPath::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    out += factors_[i].m.str();
    if (factors_[i].j != HalfInt::from_twice(1)) {
      out += "(j=" + factors_[i].j.str() + ")";
    }
  }
  return out + "]";
}

bool operator<(const SignPath& a, const SignPath& b) {
  auto key = [](const CrystalState& s) {
    return std::pair<int, int>(s.j.twice(), s.m.twice());
  };
  return std::lexicographical_compare(
      a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
      [&](const CrystalState& x, const CrystalState& y) { return key(x) < key(y); });
}

namespace {

// eps/phi of the left-associated prefix path[0..n), via the product formulas
//   eps(u@v) = max(eps(u), eps(v) - phi(u) + eps(u))
//   phi(u@v) = max(phi(v), phi(u) + phi(v) - eps(v))
std::pair<int, int> prefix_eps_phi(const SignPath& path, std::size_t n) {
  int e = epsilon(path.factor(0));
  int f = phi(path.factor(0));
  for (std::size_t i = 1; i < n; ++i) {
    const int ev = epsilon(path.factor(i));
    const int fv = phi(path.factor(i));
    const int e2 = std::max(e, ev - f + e);
    const int f2 = std::max(fv, f + fv - ev);
    e = e2;
    f = f2;
  }
  return {e, f};
}

std::optional<SignPath> apply_at(const SignPath& path, std::size_t i, bool up) {
  const auto moved = up ? raised(path.factor(i)) : lowered(path.factor(i));
  if (!moved) return std::nullopt;
  auto factors = path.factors();
  factors[i] = *moved;
  return SignPath(std::move(factors));
}

// Selects the factor the product action touches. The two-factor branch rule
// compares phi(prefix) against eps(last): raising acts on the last factor
// when phi(prefix) < eps(last), on the prefix otherwise; lowering acts on the
// prefix when phi(prefix) > eps(last), on the last factor otherwise.
std::size_t acting_factor(const SignPath& path, bool up) {
  std::size_t hi = path.size();
  while (hi > 1) {
    const auto [pe, pf] = prefix_eps_phi(path, hi - 1);
    const int ev = epsilon(path.factor(hi - 1));
    const bool on_last = up ? (pf < ev) : !(pf > ev);
    if (on_last) return hi - 1;
    --hi;
  }
  return 0;
}

}  // namespace

int path_epsilon(const SignPath& path) {
  return prefix_eps_phi(path, path.size()).first;
}

int path_phi(const SignPath& path) {
  return prefix_eps_phi(path, path.size()).second;
}

std::optional<SignPath> tensor_raise(const SignPath& path) {
  return apply_at(path, acting_factor(path, true), true);
}

std::optional<SignPath> tensor_lower(const SignPath& path) {
  return apply_at(path, acting_factor(path, false), false);
}

ComponentResult component_of(const SignPath& path) {
  const HalfInt m = path.weight();
  SignPath cur = path;
  while (auto next = tensor_raise(cur)) {
    cur = std::move(*next);
  }
  HalfInt J = cur.weight();
  return ComponentResult{Component{std::move(cur), J}, m};
}

Coupled couple(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, CoupleOrder order) {
  const CrystalState a(j1, m1);  // validates labels
  const CrystalState b(j2, m2);
  std::vector<CrystalState> factors =
      order == CoupleOrder::state_first ? std::vector<CrystalState>{a, b}
                                        : std::vector<CrystalState>{b, a};
  const auto res = component_of(SignPath(std::move(factors)));
  return Coupled{res.component.J, res.m};
}

const char* to_string(CoupleOrder order) {
  return order == CoupleOrder::state_first ? "state_first" : "operator_first";
}

std::optional<CoupleOrder> couple_order_from(std::string_view name) {
  if (name == "state_first" || name == "state-first") return CoupleOrder::state_first;
  if (name == "operator_first" || name == "operator-first") return CoupleOrder::operator_first;
  return std::nullopt;
}

}  // namespace gcwe
