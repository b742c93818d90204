#pragma once

#include <string>
#include <vector>

#include "gcwe/half_int.hpp"

namespace gcwe {
namespace qlimit {

/// Deformation parameter, strictly inside (0,1).
class QValue {
 public:
  explicit QValue(double q);
  double get() const { return q_; }

 private:
  double q_;
};

/// The q-bracket (q^x - q^-x) / (q - q^-1); 0 at x = 0.
double q_number(double x, QValue q);

enum class Direction { raising, lowering };

/// sqrt([j -+ m] [j +- m + 1]); 0 at the annihilation boundary.
/// Throws std::domain_error when |m| > j.
double f_coefficient(HalfInt j, HalfInt m, Direction dir, QValue q);

/// One checked ratio against its small-q power law.
struct LimitEntry {
  std::string quantity;   // e.g. "[3]_q / q^-2"
  double ratio;           // measured value
  double deviation;       // |ratio - 1|
};

struct LimitReport {
  double q;
  std::vector<LimitEntry> entries;

  double max_deviation() const;
};

/// Compares [x]_q against q^(-x+1) for integer x in 1..max_x, F+- against
/// q^(-j+1/2) and [j][j+1] against q^(-2j+1) for j in half-steps up to max_j.
LimitReport limit_checks(QValue q, int max_x, HalfInt max_j);

}  // namespace qlimit
}  // namespace gcwe
