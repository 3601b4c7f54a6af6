#include "ydcat/numkernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace ydcat {

CMatrix tensor_product(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double operator_norm(const CMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(0);
}

double residual(const CMatrix& a, const CMatrix& b) { return operator_norm(a - b); }

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

CMatrix orthonormal_range(const CMatrix& p, Tolerance tol) {
  if (p.rows() != p.cols()) throw NotAProjection("orthonormal_range: matrix not square");
  const double scale = std::max(1.0, operator_norm(p));
  if (residual(p, p.adjoint()) > tol.eps * scale || residual(p, p * p) > tol.eps * scale)
    throw NotAProjection("orthonormal_range: input is not a projection within tolerance");
  Eigen::SelfAdjointEigenSolver<CMatrix> es((p + p.adjoint().eval()) / 2.0);
  const auto& vals = es.eigenvalues();
  int rank = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > 0.5) ++rank;
  CMatrix v(p.rows(), rank);
  int c = 0;
  for (Eigen::Index i = 0; i < vals.size(); ++i)
    if (vals(i) > 0.5) v.col(c++) = es.eigenvectors().col(i);
  return v;
}

std::vector<CVector> null_space(const CMatrix& a, Tolerance tol) {
  const int n = static_cast<int>(a.cols());
  if (a.rows() == 0) {
    std::vector<CVector> basis;
    for (int i = 0; i < n; ++i) basis.push_back(CVector::Unit(n, i));
    return basis;
  }
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff =
      tol.eps * (sv.size() ? sv(0) : 0.0) * std::max(a.rows(), a.cols());
  std::vector<CVector> basis;
  for (int i = 0; i < n; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= cutoff) basis.push_back(svd.matrixV().col(i));
  }
  return basis;
}

std::vector<CMatrix> solve_linear_space(
    int out_dim, int in_dim,
    const std::vector<std::pair<CMatrix, CMatrix>>& constraints, Tolerance tol) {
  const int n = out_dim * in_dim;
  // Row-major flattening X[(i,j)] -> i*in_dim + j; X A - B X is linear in X.
  CMatrix stacked(static_cast<int>(constraints.size()) * n, n);
  int row0 = 0;
  for (const auto& [a, b] : constraints) {
    if (a.rows() != in_dim || a.cols() != in_dim || b.rows() != out_dim || b.cols() != out_dim)
      throw std::invalid_argument("solve_linear_space: constraint dimension mismatch");
    CMatrix block = CMatrix::Zero(n, n);
    for (int i = 0; i < out_dim; ++i)
      for (int j = 0; j < in_dim; ++j)
        for (int k = 0; k < in_dim; ++k)
          block(i * in_dim + j, i * in_dim + k) += a(k, j);
    for (int i = 0; i < out_dim; ++i)
      for (int k = 0; k < out_dim; ++k)
        for (int j = 0; j < in_dim; ++j)
          block(i * in_dim + j, k * in_dim + j) -= b(i, k);
    stacked.block(row0, 0, n, n) = block;
    row0 += n;
  }
  std::vector<CMatrix> basis;
  const auto vecs = null_space(stacked, tol);
  basis.reserve(vecs.size());
  for (const auto& v : vecs) {
    CMatrix x(out_dim, in_dim);
    for (int i = 0; i < out_dim; ++i)
      for (int j = 0; j < in_dim; ++j) x(i, j) = v(i * in_dim + j);
    basis.push_back(std::move(x));
  }
  return basis;
}

int numerical_rank(const CMatrix& a, Tolerance tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& sv = svd.singularValues();
  const double cutoff = tol.eps * sv(0) * std::max(a.rows(), a.cols());
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

CMatrix sqrt_positive(const CMatrix& p) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es((p + p.adjoint().eval()) / 2.0);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * vals.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

bool all_finite(const CMatrix& a) { return a.allFinite(); }

}  // namespace ydcat
