#include "gcwe/qlimit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcwe {
namespace qlimit {

QValue::QValue(double q) : q_(q) {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw std::invalid_argument("QValue: q must lie strictly inside (0,1)");
  }
}

double q_number(double x, QValue q) {
  if (x == 0.0) return 0.0;
  const double qq = q.get();
  return (std::pow(qq, x) - std::pow(qq, -x)) / (qq - 1.0 / qq);
}

double f_coefficient(HalfInt j, HalfInt m, Direction dir, QValue q) {
  if (m.abs() > j) {
    throw std::domain_error("f_coefficient: |m| > j");
  }
  const double jm = (dir == Direction::raising) ? (j - m).value() : (j + m).value();
  const double jm1 = (dir == Direction::raising) ? (j + m).value() + 1.0
                                                 : (j - m).value() + 1.0;
  return std::sqrt(q_number(jm, q) * q_number(jm1, q));
}

double LimitReport::max_deviation() const {
  double worst = 0.0;
  for (const auto& e : entries) worst = std::max(worst, e.deviation);
  return worst;
}

LimitReport limit_checks(QValue q, int max_x, HalfInt max_j) {
  LimitReport report{q.get(), {}};
  const double qq = q.get();

  for (int x = 1; x <= max_x; ++x) {
    const double ratio = q_number(x, q) / std::pow(qq, -x + 1);
    report.entries.push_back({"[" + std::to_string(x) + "]_q / q^-(x-1), x=" +
                                  std::to_string(x),
                              ratio, std::abs(ratio - 1.0)});
  }

  for (int tj = 1; tj <= max_j.twice(); ++tj) {
    const HalfInt j = HalfInt::from_twice(tj);
    const double scale = std::pow(qq, -j.value() + 0.5);
    for (int tm = -tj; tm <= tj; tm += 2) {
      const HalfInt m = HalfInt::from_twice(tm);
      if (m < j) {
        const double ratio = f_coefficient(j, m, Direction::raising, q) / scale;
        report.entries.push_back({"F+(" + j.str() + "," + m.str() + ") / q^-(j-1/2)",
                                  ratio, std::abs(ratio - 1.0)});
      }
      if (m > -j) {
        const double ratio = f_coefficient(j, m, Direction::lowering, q) / scale;
        report.entries.push_back({"F-(" + j.str() + "," + m.str() + ") / q^-(j-1/2)",
                                  ratio, std::abs(ratio - 1.0)});
      }
    }
    const double cas = q_number(j.value(), q) * q_number(j.value() + 1.0, q);
    const double ratio = cas / std::pow(qq, -2.0 * j.value() + 1.0);
    report.entries.push_back({"[j][j+1] / q^-(2j-1), j=" + j.str(), ratio,
                              std::abs(ratio - 1.0)});
  }
  return report;
}

}  // namespace qlimit
}  // namespace gcwe
