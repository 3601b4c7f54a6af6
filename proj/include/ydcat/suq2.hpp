#pragma once

#include <memory>

#include "ydcat/tensorcat.hpp"

namespace ydcat {

/// Truncated representation category of the q-deformed SU(2), 0 < q < 1.
/// Labels are the spins j = 0, 1/2, ..., jmax; carriers are the standard
/// weight modules with generator matrices E, F, K. Fusion past jmax raises
/// TruncationOverflow.
class SuqCategory final : public TensorCategory {
 public:
  SuqCategory(double q, int twojmax);

  double q() const { return q_; }
  int twojmax() const { return twojmax_; }

  std::string name() const override;
  Rep irrep_rep(int label) const override;  // label = 2j
  Rep tensor_rep(const Rep& a, const Rep& b) const override;
  Rep trivial_rep() const override;
  std::vector<std::pair<CMatrix, CMatrix>> hom_constraints(
      const Rep& a, const Rep& b) const override;
  void check_fusion(int label_a, int label_b) const override;

  double qint(int n) const;  // [n]_q

 private:
  double q_;
  int twojmax_;
};

/// jmax is a half-integer >= 1/2; q in (0,1). Throws BadParameter otherwise.
std::unique_ptr<SuqCategory> suq2_category(double q, double jmax);

}  // namespace ydcat
