#include "ydcat/cqg.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ydcat {

namespace {

CVector character(const FiniteGroupData::Irrep& irr) {
  CVector chi(irr.mats.size());
  for (size_t g = 0; g < irr.mats.size(); ++g) chi(g) = irr.mats[g].trace();
  return chi;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroupCategory

FiniteGroupCategory::FiniteGroupCategory(FiniteGroupData data) : data_(std::move(data)) {
  const int n = data_.order;
  std::vector<CVector> chars;
  for (const auto& irr : data_.irreps) chars.push_back(character(irr));
  labels_.resize(data_.irreps.size());
  trivial_ = -1;
  for (size_t i = 0; i < data_.irreps.size(); ++i) {
    labels_[i].index = static_cast<int>(i);
    labels_[i].name = data_.irreps[i].label;
    labels_[i].dim = data_.irreps[i].dim;
    if (data_.irreps[i].dim == 1) {
      bool is_triv = true;
      for (int g = 0; g < n; ++g)
        if (std::abs(data_.irreps[i].mats[g](0, 0) - 1.0) > 1e-9) is_triv = false;
      if (is_triv) trivial_ = static_cast<int>(i);
    }
    labels_[i].conj = -1;
    for (size_t j = 0; j < chars.size(); ++j) {
      if ((chars[i].conjugate() - chars[j]).norm() < 1e-6 * n) {
        labels_[i].conj = static_cast<int>(j);
        break;
      }
    }
    if (labels_[i].conj < 0)
      throw BadFixture("irreps: no conjugate partner for '" + data_.irreps[i].label + "'");
  }
  if (trivial_ < 0) throw BadFixture("irreps: missing trivial representation");
}

Rep FiniteGroupCategory::irrep_rep(int label) const {
  const auto& irr = data_.irreps.at(label);
  return Rep{irr.dim, irr.mats};
}

Rep FiniteGroupCategory::tensor_rep(const Rep& a, const Rep& b) const {
  Rep out;
  out.dim = a.dim * b.dim;
  out.mats.reserve(a.mats.size());
  for (size_t g = 0; g < a.mats.size(); ++g)
    out.mats.push_back(tensor_product(a.mats[g], b.mats[g]));
  return out;
}

Rep FiniteGroupCategory::trivial_rep() const {
  Rep out;
  out.dim = 1;
  out.mats.assign(data_.order, CMatrix::Ones(1, 1));
  return out;
}

std::vector<std::pair<CMatrix, CMatrix>> FiniteGroupCategory::hom_constraints(
    const Rep& a, const Rep& b) const {
  std::vector<std::pair<CMatrix, CMatrix>> out;
  out.reserve(a.mats.size() - 1);
  for (size_t g = 1; g < a.mats.size(); ++g) out.emplace_back(a.mats[g], b.mats[g]);
  return out;
}

Rep FiniteGroupCategory::conj_rep(const Rep& r) {
  Rep out;
  out.dim = r.dim;
  out.mats.reserve(r.mats.size());
  for (const auto& m : r.mats) out.mats.push_back(m.conjugate());
  return out;
}

// ---------------------------------------------------------------------------
// FiniteCQG

FiniteCQG::FiniteCQG(FiniteGroupData data)
    : cat_(std::make_unique<FiniteGroupCategory>(std::move(data))) {
  const auto& g = group();
  const int n = g.order;
  mc_offsets_.resize(g.irreps.size());
  int off = 0;
  for (size_t i = 0; i < g.irreps.size(); ++i) {
    mc_offsets_[i] = off;
    off += g.irreps[i].dim * g.irreps[i].dim;
  }
  group_to_mc_ = CMatrix::Zero(n, n);
  mc_to_group_ = CMatrix::Zero(n, n);
  for (int gg = 0; gg < n; ++gg) {
    for (size_t i = 0; i < g.irreps.size(); ++i) {
      const int d = g.irreps[i].dim;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const int idx = mc_offsets_[i] + k * d + l;
          group_to_mc_(idx, gg) = g.irreps[i].mats[gg](k, l);
          mc_to_group_(gg, idx) =
              double(d) / double(n) * std::conj(g.irreps[i].mats[gg](k, l));
        }
    }
  }
}

CVector FiniteCQG::og_delta(int g) const {
  CVector f = CVector::Zero(order());
  f(g) = 1.0;
  return f;
}

CVector FiniteCQG::og_unit() const { return CVector::Ones(order()); }

CVector FiniteCQG::og_product(const CVector& f1, const CVector& f2) const {
  return f1.cwiseProduct(f2);
}

CMatrix FiniteCQG::og_coproduct(const CVector& f) const {
  const int n = order();
  CMatrix out(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out(a, b) = f(mul(a, b));
  return out;
}

CVector FiniteCQG::og_antipode(const CVector& f) const {
  const int n = order();
  CVector out(n);
  for (int g = 0; g < n; ++g) out(g) = f(inv(g));
  return out;
}

int FiniteCQG::mc_index(int irrep, int k, int l) const {
  const int d = group().irreps.at(irrep).dim;
  return mc_offsets_.at(irrep) + k * d + l;
}

void FiniteCQG::mc_unindex(int idx, int& irrep, int& k, int& l) const {
  for (size_t i = 0; i < group().irreps.size(); ++i) {
    const int d = group().irreps[i].dim;
    if (idx < mc_offsets_[i] + d * d) {
      irrep = static_cast<int>(i);
      k = (idx - mc_offsets_[i]) / d;
      l = (idx - mc_offsets_[i]) % d;
      return;
    }
  }
  throw BadParameter("mc_unindex: index out of range");
}

CVector FiniteCQG::u_coeff(int irrep, int k, int l) const {
  const int n = order();
  CVector f(n);
  for (int g = 0; g < n; ++g) f(g) = group().irreps.at(irrep).mats[g](k, l);
  return f;
}

CVector FiniteCQG::delta_to_mc(const CVector& f) const {
  // u^{(i)}_{kl} coordinates; inverse of mc_to_delta.
  CVector c(order());
  for (int idx = 0; idx < order(); ++idx) {
    Complex acc = 0.0;
    for (int g = 0; g < order(); ++g) acc += mc_to_group_(g, idx) * f(g);
    c(idx) = acc;
  }
  return c;
}

CVector FiniteCQG::mc_to_delta(const CVector& c) const {
  CVector f = CVector::Zero(order());
  for (int idx = 0; idx < order(); ++idx) {
    int i, k, l;
    mc_unindex(idx, i, k, l);
    f += c(idx) * u_coeff(i, k, l);
  }
  return f;
}

CVector FiniteCQG::cc_unit() const {
  CVector u = CVector::Zero(order());
  for (size_t i = 0; i < group().irreps.size(); ++i) {
    const int d = group().irreps[i].dim;
    for (int k = 0; k < d; ++k) u(mc_offsets_[i] + k * d + k) = 1.0;
  }
  return u;
}

CVector FiniteCQG::cc_product(const CVector& a, const CVector& b) const {
  CVector out = CVector::Zero(order());
  for (size_t i = 0; i < group().irreps.size(); ++i) {
    const int d = group().irreps[i].dim;
    const int off = mc_offsets_[i];
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        for (int m = 0; m < d; ++m)
          out(off + k * d + l) += a(off + k * d + m) * b(off + m * d + l);
  }
  return out;
}

CVector FiniteCQG::cc_star(const CVector& a) const {
  CVector out = CVector::Zero(order());
  for (size_t i = 0; i < group().irreps.size(); ++i) {
    const int d = group().irreps[i].dim;
    const int off = mc_offsets_[i];
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l)
        out(off + k * d + l) = std::conj(a(off + l * d + k));
  }
  return out;
}

CVector FiniteCQG::cc_from_group(int g) const { return group_to_mc_.col(g); }

CVector FiniteCQG::cc_to_group(const CVector& omega) const { return mc_to_group_ * omega; }

CMatrix FiniteCQG::cc_coproduct(const CVector& omega) const {
  const int n = order();
  const CVector c = cc_to_group(omega);
  CMatrix out = CMatrix::Zero(n, n);
  for (int g = 0; g < n; ++g) {
    if (std::abs(c(g)) < 1e-300) continue;
    const CVector col = group_to_mc_.col(g);
    out += c(g) * (col * col.transpose());
  }
  return out;
}

Complex FiniteCQG::pairing(const CVector& omega, const CVector& f) const {
  return cc_to_group(omega).transpose() * f;
}

CVector FiniteCQG::act_on_cc_left(const CVector& f, const CVector& omega) const {
  // (f |> w)(b) = w(b f): diagonal in the group basis.
  CVector c = cc_to_group(omega);
  for (int g = 0; g < order(); ++g) c(g) *= f(g);
  return group_to_mc_ * c;
}

CVector FiniteCQG::act_on_cc_right(const CVector& omega, const CVector& f) const {
  CVector c = cc_to_group(omega);
  for (int g = 0; g < order(); ++g) c(g) *= f(g);
  return group_to_mc_ * c;
}

// ---------------------------------------------------------------------------
// DoubleAlgebra

DoubleAlgebra::DoubleAlgebra(const FiniteCQG& cqg) : cqg_(&cqg), n_(cqg.order()) {}

CVector DoubleAlgebra::to_group_basis(const CVector& x) const {
  CVector out = CVector::Zero(n_ * n_);
  for (int idx = 0; idx < n_; ++idx) {
    for (int g = 0; g < n_; ++g) {
      const Complex v = x(index(idx, g));
      if (std::abs(v) < 1e-300) continue;
      for (int h = 0; h < n_; ++h) {
        // column of mc_to_group_: coefficient of group element h in m-unit idx
        out(h * n_ + g) += v * cqg_->cc_to_group(CVector::Unit(n_, idx))(h);
      }
    }
  }
  return out;
}

CVector DoubleAlgebra::from_group_basis(const CVector& x) const {
  CVector out = CVector::Zero(n_ * n_);
  for (int h = 0; h < n_; ++h) {
    const CVector col = cqg_->cc_from_group(h);
    for (int g = 0; g < n_; ++g) {
      const Complex v = x(h * n_ + g);
      if (std::abs(v) < 1e-300) continue;
      for (int idx = 0; idx < n_; ++idx) out(index(idx, g)) += v * col(idx);
    }
  }
  return out;
}

CVector DoubleAlgebra::unit() const {
  CVector x = CVector::Zero(n_ * n_);
  // group identity (x) sum of all deltas
  CVector grp = CVector::Zero(n_ * n_);
  for (int g = 0; g < n_; ++g) grp(0 * n_ + g) = 1.0;
  return from_group_basis(grp);
}

CVector DoubleAlgebra::product(const CVector& x, const CVector& y) const {
  const CVector a = to_group_basis(x);
  const CVector b = to_group_basis(y);
  CVector out = CVector::Zero(n_ * n_);
  for (int h1 = 0; h1 < n_; ++h1)
    for (int g1 = 0; g1 < n_; ++g1) {
      const Complex va = a(h1 * n_ + g1);
      if (std::abs(va) < 1e-300) continue;
      for (int h2 = 0; h2 < n_; ++h2) {
        // delta_{g1} h2 = h2 delta_{h2^{-1} g1 h2}
        const int g1c = cqg_->mul(cqg_->mul(cqg_->inv(h2), g1), h2);
        const Complex vb = b(h2 * n_ + g1c);
        if (std::abs(vb) < 1e-300) continue;
        out(cqg_->mul(h1, h2) * n_ + g1c) += va * vb;
      }
    }
  return from_group_basis(out);
}

CVector DoubleAlgebra::star(const CVector& x) const {
  const CVector a = to_group_basis(x);
  CVector out = CVector::Zero(n_ * n_);
  for (int h = 0; h < n_; ++h)
    for (int g = 0; g < n_; ++g) {
      const Complex v = std::conj(a(h * n_ + g));
      if (std::abs(v) < 1e-300) continue;
      // (h delta_g)^* = h^{-1} delta_{h g h^{-1}}
      out(cqg_->inv(h) * n_ + cqg_->mul(cqg_->mul(h, g), cqg_->inv(h))) += v;
    }
  return from_group_basis(out);
}

CVector DoubleAlgebra::embed_cc(const CVector& omega) const {
  CVector x = CVector::Zero(n_ * n_);
  for (int idx = 0; idx < n_; ++idx)
    for (int g = 0; g < n_; ++g) x(index(idx, g)) = omega(idx);
  return x;
}

CVector DoubleAlgebra::embed_og(const CVector& f) const {
  const CVector u = cqg_->cc_unit();
  CVector x = CVector::Zero(n_ * n_);
  for (int idx = 0; idx < n_; ++idx)
    for (int g = 0; g < n_; ++g) x(index(idx, g)) = u(idx) * f(g);
  return x;
}

// ---------------------------------------------------------------------------
// Fixture loading

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& origin, const std::string& path,
                      const std::string& msg) {
  throw BadFixture(origin + ": " + path + ": " + msg);
}

}  // namespace

FiniteGroupData parse_group_fixture(const std::string& json_text,
                                    const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw BadFixture(origin + ": invalid JSON: " + e.what());
  }
  FiniteGroupData d;
  if (!j.contains("name") || !j["name"].is_string()) bad(origin, "name", "missing string");
  d.name = j["name"].get<std::string>();
  if (!j.contains("order") || !j["order"].is_number_integer())
    bad(origin, "order", "missing integer");
  d.order = j["order"].get<int>();
  if (d.order < 1) bad(origin, "order", "must be >= 1");
  const int n = d.order;

  if (!j.contains("mult_table") || !j["mult_table"].is_array() ||
      static_cast<int>(j["mult_table"].size()) != n)
    bad(origin, "mult_table", "must be an order x order array");
  d.mult.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const auto& row = j["mult_table"][a];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad(origin, "mult_table[" + std::to_string(a) + "]", "wrong row length");
    for (int b = 0; b < n; ++b) {
      const int v = row[b].get<int>();
      if (v < 0 || v >= n)
        bad(origin, "mult_table[" + std::to_string(a) + "][" + std::to_string(b) + "]",
            "entry out of range");
      d.mult[a][b] = v;
    }
  }
  for (int g = 0; g < n; ++g) {
    if (d.mult[0][g] != g || d.mult[g][0] != g)
      bad(origin, "mult_table", "element 0 is not the identity");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (d.mult[d.mult[a][b]][c] != d.mult[a][d.mult[b][c]])
          bad(origin, "mult_table", "not associative at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
  d.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (d.mult[a][b] == 0 && d.mult[b][a] == 0) d.inverse[a] = b;
    if (d.inverse[a] < 0)
      bad(origin, "mult_table", "element " + std::to_string(a) + " has no inverse");
  }

  if (!j.contains("irreps") || !j["irreps"].is_array() || j["irreps"].empty())
    bad(origin, "irreps", "missing nonempty array");
  int dimsq = 0;
  for (size_t i = 0; i < j["irreps"].size(); ++i) {
    const std::string p = "irreps[" + std::to_string(i) + "]";
    const auto& ji = j["irreps"][i];
    FiniteGroupData::Irrep irr;
    irr.label = ji.value("label", std::string("irrep") + std::to_string(i));
    if (!ji.contains("dim") || !ji["dim"].is_number_integer()) bad(origin, p + ".dim", "missing");
    irr.dim = ji["dim"].get<int>();
    if (irr.dim < 1) bad(origin, p + ".dim", "must be >= 1");
    if (!ji.contains("matrices") || static_cast<int>(ji["matrices"].size()) != n)
      bad(origin, p + ".matrices", "must list one matrix per element");
    for (int g = 0; g < n; ++g) {
      const auto& jm = ji["matrices"][g];
      const std::string pm = p + ".matrices[" + std::to_string(g) + "]";
      if (!jm.is_array() || static_cast<int>(jm.size()) != irr.dim) bad(origin, pm, "wrong shape");
      CMatrix m(irr.dim, irr.dim);
      for (int r = 0; r < irr.dim; ++r) {
        if (static_cast<int>(jm[r].size()) != irr.dim) bad(origin, pm, "wrong shape");
        for (int c = 0; c < irr.dim; ++c) {
          const auto& e = jm[r][c];
          if (!e.is_array() || e.size() != 2) bad(origin, pm, "entries must be [re, im]");
          m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
      }
      if (!all_finite(m)) bad(origin, pm, "non-finite entry");
      irr.mats.push_back(std::move(m));
    }
    if (residual(irr.mats[0], identity(irr.dim)) > 1e-9)
      bad(origin, p + ".matrices[0]", "identity element must map to the identity matrix");
    for (int g = 0; g < n; ++g) {
      if (residual(irr.mats[g] * irr.mats[g].adjoint(), identity(irr.dim)) > 1e-8)
        bad(origin, p + ".matrices[" + std::to_string(g) + "]", "not unitary");
      for (int h = 0; h < n; ++h)
        if (residual(irr.mats[g] * irr.mats[h], irr.mats[d.mult[g][h]]) > 1e-8)
          bad(origin, p + ".matrices", "not a homomorphism at (" + std::to_string(g) + "," +
                                           std::to_string(h) + ")");
    }
    dimsq += irr.dim * irr.dim;
    d.irreps.push_back(std::move(irr));
  }
  if (dimsq != n)
    bad(origin, "irreps", "sum of squared dimensions is " + std::to_string(dimsq) +
                              ", expected " + std::to_string(n));
  // pairwise inequivalent and irreducible: Hom spaces via the intertwiner solver
  for (size_t i = 0; i < d.irreps.size(); ++i) {
    for (size_t k = i; k < d.irreps.size(); ++k) {
      std::vector<std::pair<CMatrix, CMatrix>> cons;
      for (int g = 1; g < n; ++g) cons.emplace_back(d.irreps[i].mats[g], d.irreps[k].mats[g]);
      const auto sol = solve_linear_space(d.irreps[k].dim, d.irreps[i].dim, cons);
      const size_t expect = (i == k) ? 1 : 0;
      if (sol.size() != expect)
        bad(origin, "irreps", "'" + d.irreps[i].label + "' vs '" + d.irreps[k].label +
                                  "': intertwiner space has dimension " +
                                  std::to_string(sol.size()) + ", expected " +
                                  std::to_string(expect));
    }
  }
  return d;
}

FiniteCQG load_finite_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadFixture(path + ": cannot open fixture file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return FiniteCQG(parse_group_fixture(ss.str(), path));
}

}  // namespace ydcat
