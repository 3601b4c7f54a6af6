#include "ydcat/suq2.hpp"

#include <cmath>
#include <sstream>

namespace ydcat {

namespace {
std::string spin_name(int twoj) {
  std::ostringstream os;
  if (twoj % 2 == 0)
    os << "j=" << twoj / 2;
  else
    os << "j=" << twoj << "/2";
  return os.str();
}
}  // namespace

SuqCategory::SuqCategory(double q, int twojmax) : q_(q), twojmax_(twojmax) {
  if (!(q > 0.0 && q < 1.0)) throw BadParameter("suq2: q must lie in (0,1)");
  if (twojmax < 1) throw BadParameter("suq2: jmax must be >= 1/2");
  labels_.resize(twojmax + 1);
  for (int t = 0; t <= twojmax; ++t) {
    labels_[t].index = t;
    labels_[t].name = spin_name(t);
    labels_[t].dim = t + 1;
    labels_[t].conj = t;  // every spin is self-conjugate
  }
  trivial_ = 0;
}

std::string SuqCategory::name() const {
  std::ostringstream os;
  os << "suq2(q=" << q_ << ",jmax=" << spin_name(twojmax_).substr(2) << ")";
  return os.str();
}

double SuqCategory::qint(int n) const {
  return (std::pow(q_, n) - std::pow(q_, -n)) / (q_ - 1.0 / q_);
}

Rep SuqCategory::irrep_rep(int twoj) const {
  const int d = twoj + 1;
  CMatrix E = CMatrix::Zero(d, d), F = CMatrix::Zero(d, d), K = CMatrix::Zero(d, d);
  // basis index a holds weight m with 2m = twoj - 2a
  for (int a = 0; a < d; ++a) {
    const int twom = twoj - 2 * a;
    K(a, a) = std::pow(q_, twom);
    if (a > 0) {
      // E raises m: coefficient sqrt([j-m][j+m+1]) at the source weight
      const int jm = (twoj - twom) / 2, jm1 = (twoj + twom) / 2 + 1;
      E(a - 1, a) = std::sqrt(qint(jm) * qint(jm1));
    }
    if (a < d - 1) {
      const int jp = (twoj + twom) / 2, jp1 = (twoj - twom) / 2 + 1;
      F(a + 1, a) = std::sqrt(qint(jp) * qint(jp1));
    }
  }
  return Rep{d, {E, F, K}};
}

Rep SuqCategory::tensor_rep(const Rep& a, const Rep& b) const {
  // coproduct: E -> E(x)1 + K(x)E, F -> F(x)K^{-1} + 1(x)F, K -> K(x)K
  const CMatrix Ia = identity(a.dim), Ib = identity(b.dim);
  Rep out;
  out.dim = a.dim * b.dim;
  out.mats = {
      tensor_product(a.mats[0], Ib) + tensor_product(a.mats[2], b.mats[0]),
      tensor_product(a.mats[1], b.mats[2].inverse()) + tensor_product(Ia, b.mats[1]),
      tensor_product(a.mats[2], b.mats[2]),
  };
  return out;
}

Rep SuqCategory::trivial_rep() const {
  return Rep{1, {CMatrix::Zero(1, 1), CMatrix::Zero(1, 1), CMatrix::Ones(1, 1)}};
}

std::vector<std::pair<CMatrix, CMatrix>> SuqCategory::hom_constraints(
    const Rep& a, const Rep& b) const {
  return {{a.mats[0], b.mats[0]}, {a.mats[1], b.mats[1]}, {a.mats[2], b.mats[2]}};
}

void SuqCategory::check_fusion(int label_a, int label_b) const {
  if (label_a + label_b > twojmax_)
    throw TruncationOverflow("suq2: fusion " + spin_name(label_a) + " x " +
                             spin_name(label_b) + " exceeds jmax");
}

std::unique_ptr<SuqCategory> suq2_category(double q, double jmax) {
  const double t = 2.0 * jmax;
  const int twojmax = static_cast<int>(std::lround(t));
  if (std::abs(t - twojmax) > 1e-12) throw BadParameter("suq2: jmax must be a half-integer");
  return std::make_unique<SuqCategory>(q, twojmax);
}

}  // namespace ydcat
