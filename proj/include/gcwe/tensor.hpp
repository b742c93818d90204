#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gcwe/crystal.hpp"

namespace gcwe {

/// A basis vector of a multi-factor tensor crystal: one CrystalState per
/// factor. Codons use two of these (H and V), each three spin-1/2 factors,
/// but any factor spins are supported.
class SignPath {
 public:
  explicit SignPath(std::vector<CrystalState> factors);

  /// All factors spin 1/2; `twice_ms` holds +1/-1 per letter.
  static SignPath spin_half(std::initializer_list<int> twice_ms);
  static SignPath spin_half(const std::vector<int>& twice_ms);

  std::size_t size() const { return factors_.size(); }
  const CrystalState& factor(std::size_t i) const { return factors_[i]; }
  const std::vector<CrystalState>& factors() const { return factors_; }

  /// Total weight: sum of the factor m's.
  HalfInt weight() const;

  std::string str() const;

  friend bool operator==(const SignPath&, const SignPath&) = default;
  friend bool operator<(const SignPath& a, const SignPath& b);

 private:
  std::vector<CrystalState> factors_;
};

/// Raise/lower counts of a whole path under the product-crystal action.
int path_epsilon(const SignPath& path);
int path_phi(const SignPath& path);

/// Product-crystal raising per the two-factor branch rule, extended to n
/// factors by left-associated iteration ((...(f1 x f2) x ...) x fn).
/// Absent exactly on highest-weight paths.
std::optional<SignPath> tensor_raise(const SignPath& path);

/// Dual rule; absent exactly on lowest-weight paths.
std::optional<SignPath> tensor_lower(const SignPath& path);

/// Identifies one connected component (irrep copy) of a product crystal by
/// its highest-weight path; J is that path's total weight.
struct Component {
  SignPath highest_weight_path;
  HalfInt J;

  friend bool operator==(const Component&, const Component&) = default;
  friend bool operator<(const Component& a, const Component& b) {
    return a.highest_weight_path < b.highest_weight_path;
  }
};

struct ComponentResult {
  Component component;
  HalfInt m;
};

/// Climbs `path` with tensor_raise until annihilation; the terminal path is
/// the canonical copy identifier.
ComponentResult component_of(const SignPath& path);

/// Factor order for two-factor coupling. state_first puts (j1,m1) in the
/// first slot; operator_first swaps the slots.
enum class CoupleOrder { state_first, operator_first };

struct Coupled {
  HalfInt J;
  HalfInt m;

  friend constexpr bool operator==(const Coupled&, const Coupled&) = default;
};

/// Component labels of |j1,m1> x |j2,m2| in the two-factor product crystal:
/// J from the connected component, m = m1 + m2.
Coupled couple(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
               CoupleOrder order = CoupleOrder::state_first);

const char* to_string(CoupleOrder order);
std::optional<CoupleOrder> couple_order_from(std::string_view name);

}  // namespace gcwe
