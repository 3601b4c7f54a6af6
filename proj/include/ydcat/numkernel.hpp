#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ydcat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Numerical tolerance used by all verification routines.
struct Tolerance {
  double eps = 1e-9;
  explicit Tolerance(double e = 1e-9) : eps(e) {
    if (!(e > 0.0)) throw std::invalid_argument("Tolerance: eps must be > 0");
  }
};

struct NotAProjection : std::runtime_error {
  explicit NotAProjection(const std::string& what) : std::runtime_error(what) {}
};

/// Kronecker product; realizes the tensor product on morphism matrices.
CMatrix tensor_product(const CMatrix& a, const CMatrix& b);

/// Largest singular value.
double operator_norm(const CMatrix& a);

/// ||a - b|| in operator norm; the residual reported by the check suites.
double residual(const CMatrix& a, const CMatrix& b);

CMatrix identity(int n);

/// Given a projection p (p = p* = p^2 within tol), returns an isometry v
/// with v v* = p and v* v = id on the range dimension.
CMatrix orthonormal_range(const CMatrix& p, Tolerance tol = Tolerance{});

/// Orthonormal basis (Frobenius inner product) of
///   { X : out_dim x in_dim | X A_k = B_k X for all k }.
/// Constraints may be empty, in which case the full matrix space is returned.
std::vector<CMatrix> solve_linear_space(
    int out_dim, int in_dim,
    const std::vector<std::pair<CMatrix, CMatrix>>& constraints,
    Tolerance tol = Tolerance{});

/// Orthonormal basis of the null space of a (stacked-constraint form).
std::vector<CVector> null_space(const CMatrix& a, Tolerance tol = Tolerance{});

int numerical_rank(const CMatrix& a, Tolerance tol = Tolerance{});

/// Positive square root of a positive semidefinite Hermitian matrix.
CMatrix sqrt_positive(const CMatrix& p);

bool all_finite(const CMatrix& a);

}  // namespace ydcat
