#include "ydcat/tensorcat.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace ydcat {

namespace {

std::string object_key(const CatObject& u) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < u.summands().size(); ++i) {
    if (i) os << ',';
    os << u.summands()[i];
  }
  os << ']';
  return os.str();
}

// Loewdin orthonormalization of a family of intertwiners H_c -> V so that
// w_a^* w_b = delta_{ab} id.
std::vector<CMatrix> isometrize(const std::vector<CMatrix>& ts, int d) {
  const int m = static_cast<int>(ts.size());
  CMatrix gram(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      gram(a, b) = (ts[a].adjoint() * ts[b]).trace() / static_cast<double>(d);
  Eigen::SelfAdjointEigenSolver<CMatrix> es((gram + gram.adjoint().eval()) / 2.0);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(1e-300);
  CMatrix inv_sqrt = es.eigenvectors() *
                     vals.cwiseSqrt().cwiseInverse().asDiagonal() *
                     es.eigenvectors().adjoint();
  std::vector<CMatrix> out(m);
  for (int a = 0; a < m; ++a) {
    CMatrix w = CMatrix::Zero(ts[0].rows(), ts[0].cols());
    for (int b = 0; b < m; ++b) w += ts[b] * inv_sqrt(b, a);
    out[a] = std::move(w);
  }
  return out;
}

}  // namespace

int TensorCategory::total_dim(const CatObject& u) const {
  int d = 0;
  for (int s : u.summands()) d += labels_.at(s).dim;
  return d;
}

Rep TensorCategory::direct_sum(const Rep& a, const Rep& b) const {
  Rep out;
  out.dim = a.dim + b.dim;
  out.mats.resize(a.mats.size());
  for (size_t k = 0; k < a.mats.size(); ++k) {
    CMatrix m = CMatrix::Zero(out.dim, out.dim);
    m.topLeftCorner(a.dim, a.dim) = a.mats[k];
    m.bottomRightCorner(b.dim, b.dim) = b.mats[k];
    out.mats[k] = std::move(m);
  }
  return out;
}

Rep TensorCategory::rep_of(const CatObject& u) const {
  if (u.empty()) {
    Rep z;
    z.dim = 0;
    z.mats.assign(trivial_rep().mats.size(), CMatrix(0, 0));
    return z;
  }
  Rep acc = irrep_rep(u.summands()[0]);
  for (size_t i = 1; i < u.summands().size(); ++i)
    acc = direct_sum(acc, irrep_rep(u.summands()[i]));
  return acc;
}

std::vector<CMatrix> TensorCategory::hom_basis(const Rep& a, const Rep& b,
                                               Tolerance tol) const {
  return solve_linear_space(b.dim, a.dim, hom_constraints(a, b), tol);
}

std::vector<Decomposition> TensorCategory::decompose_rep(const Rep& r,
                                                         const std::string& key,
                                                         Tolerance tol) const {
  if (!key.empty()) {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = decomp_cache_.find(key);
    if (it != decomp_cache_.end()) return it->second;
  }
  std::vector<Decomposition> out;
  CMatrix completeness = CMatrix::Zero(r.dim, r.dim);
  for (int label = 0; label < irrep_count(); ++label) {
    const Rep ir = irrep_rep(label);
    if (ir.dim > r.dim) continue;
    auto basis = hom_basis(ir, r, tol);
    if (basis.empty()) continue;
    for (auto& w : isometrize(basis, ir.dim)) {
      completeness += w * w.adjoint();
      out.push_back({label, std::move(w)});
    }
  }
  if (residual(completeness, identity(r.dim)) > 1e-6)
    throw TruncationOverflow(
        "decompose: carrier does not decompose over the category's labels "
        "(truncated label set exceeded)");
  if (!key.empty()) {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    decomp_cache_[key] = out;
  }
  return out;
}

std::vector<Decomposition> TensorCategory::decompose(const CatObject& u,
                                                     const CatObject& v,
                                                     Tolerance tol) const {
  for (int a : u.summands())
    for (int b : v.summands()) check_fusion(a, b);
  const Rep t = tensor_rep(rep_of(u), rep_of(v));
  return decompose_rep(t, "tensor:" + object_key(u) + "x" + object_key(v), tol);
}

DualityData TensorCategory::irrep_duality(int label, Tolerance tol) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = duality_cache_.find(label);
    if (it != duality_cache_.end()) return it->second;
  }
  const int cl = labels_.at(label).conj;
  const Rep ui = irrep_rep(label);
  const Rep uc = irrep_rep(cl);
  const int d = ui.dim;
  auto rb = hom_basis(trivial_rep(), tensor_rep(uc, ui), tol);
  auto sb = hom_basis(trivial_rep(), tensor_rep(ui, uc), tol);
  if (rb.size() != 1 || sb.size() != 1)
    throw BadParameter("conjugate_data: duality morphism space is not one-dimensional");
  CVector r = rb[0].col(0);
  CVector s = sb[0].col(0);
  // Reshape the solutions as matrices; the pairing scalar fixes the
  // normalization making both conjugate equations hold with equal norms.
  CMatrix rm(uc.dim, d), sm(d, uc.dim);
  for (int al = 0; al < uc.dim; ++al)
    for (int a = 0; a < d; ++a) rm(al, a) = r(al * d + a);
  for (int a = 0; a < d; ++a)
    for (int al = 0; al < uc.dim; ++al) sm(a, al) = s(a * uc.dim + al);
  const Complex c = (sm.conjugate() * rm).trace() / static_cast<double>(d);
  if (std::abs(c) < 1e-14)
    throw BadParameter("conjugate_data: degenerate duality pairing");
  const Complex lambda = std::exp(Complex(0, -std::arg(c))) / std::sqrt(std::abs(c));
  const double mu = 1.0 / std::sqrt(std::abs(c));
  DualityData dd;
  dd.object = CatObject::irrep(label);
  dd.conjugate = CatObject::irrep(cl);
  dd.R = {trivial_object(), CatObject({cl, label}), lambda * r};
  dd.Rbar = {trivial_object(), CatObject({label, cl}), mu * s};
  CMatrix sm_scaled = mu * sm;
  dd.rho = sm_scaled * sm_scaled.adjoint();
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    duality_cache_[label] = dd;
  }
  return dd;
}

DualityData TensorCategory::conjugate_data(const CatObject& u, Tolerance tol) const {
  if (u.empty()) throw BadParameter("conjugate_data: zero object");
  const int n = static_cast<int>(u.summands().size());
  std::vector<DualityData> parts;
  parts.reserve(n);
  std::vector<int> conj_labels;
  int du = 0, dc = 0;
  std::vector<int> off_u(n), off_c(n);
  for (int k = 0; k < n; ++k) {
    parts.push_back(irrep_duality(u.summands()[k], tol));
    conj_labels.push_back(labels_.at(u.summands()[k]).conj);
    off_u[k] = du;
    off_c[k] = dc;
    du += labels_.at(u.summands()[k]).dim;
    dc += labels_.at(conj_labels.back()).dim;
  }
  DualityData dd;
  dd.object = u;
  dd.conjugate = CatObject(conj_labels);
  CMatrix rvec = CMatrix::Zero(dc * du, 1);
  CMatrix svec = CMatrix::Zero(du * dc, 1);
  dd.rho = CMatrix::Zero(du, du);
  for (int k = 0; k < n; ++k) {
    const int d = labels_.at(u.summands()[k]).dim;
    const int dck = labels_.at(conj_labels[k]).dim;
    const auto& rk = parts[k].R.matrix;
    const auto& sk = parts[k].Rbar.matrix;
    for (int al = 0; al < dck; ++al)
      for (int a = 0; a < d; ++a)
        rvec((off_c[k] + al) * du + off_u[k] + a, 0) = rk(al * d + a, 0);
    for (int a = 0; a < d; ++a)
      for (int al = 0; al < dck; ++al)
        svec((off_u[k] + a) * dc + off_c[k] + al, 0) = sk(a * dck + al, 0);
    dd.rho.block(off_u[k], off_u[k], d, d) = parts[k].rho;
  }
  dd.R = {trivial_object(), CatObject(), std::move(rvec)};
  dd.Rbar = {trivial_object(), CatObject(), std::move(svec)};
  std::vector<int> rt = conj_labels;
  rt.insert(rt.end(), u.summands().begin(), u.summands().end());
  dd.R.target = CatObject(rt);
  std::vector<int> st = u.summands();
  st.insert(st.end(), conj_labels.begin(), conj_labels.end());
  dd.Rbar.target = CatObject(st);
  return dd;
}

double TensorCategory::frobenius_dim(const CatObject& u, Tolerance tol) const {
  return conjugate_data(u, tol).rho.trace().real();
}

ResidualReport TensorCategory::verify_conjugate_equations(const DualityData& d,
                                                          Tolerance) const {
  const int du = total_dim(d.object);
  const int dc = total_dim(d.conjugate);
  const CMatrix& r = d.R.matrix;
  const CMatrix& s = d.Rbar.matrix;
  ResidualReport rep;
  rep.left = residual(tensor_product(s.adjoint(), identity(du)) *
                          tensor_product(identity(du), r),
                      identity(du));
  rep.right = residual(tensor_product(r.adjoint(), identity(dc)) *
                           tensor_product(identity(dc), s),
                       identity(dc));
  return rep;
}

int TensorCategory::hom_dim(const CatObject& u, const CatObject& v, Tolerance tol) const {
  return static_cast<int>(hom_basis(rep_of(u), rep_of(v), tol).size());
}

}  // namespace ydcat
