#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ydcat/tensorcat.hpp"

namespace ydcat {

/// A finite group with a complete set of unitary irreducible representations.
/// Element 0 is the identity.
struct FiniteGroupData {
  std::string name;
  int order = 0;
  std::vector<std::vector<int>> mult;  // mult[a][b] = a*b
  std::vector<int> inverse;
  struct Irrep {
    std::string label;
    int dim = 0;
    std::vector<CMatrix> mats;  // one unitary per element
  };
  std::vector<Irrep> irreps;

  int mul(int a, int b) const { return mult[a][b]; }
  int inv(int a) const { return inverse[a]; }
};

class FiniteGroupCategory final : public TensorCategory {
 public:
  explicit FiniteGroupCategory(FiniteGroupData data);

  const FiniteGroupData& group() const { return data_; }

  std::string name() const override { return data_.name; }
  Rep irrep_rep(int label) const override;
  Rep tensor_rep(const Rep& a, const Rep& b) const override;
  Rep trivial_rep() const override;
  std::vector<std::pair<CMatrix, CMatrix>> hom_constraints(
      const Rep& a, const Rep& b) const override;

  /// Entrywise conjugate (the conjugate carrier in bar coordinates).
  static Rep conj_rep(const Rep& r);

 private:
  FiniteGroupData data_;
};

/// O(G) with its Hopf structure on the delta basis, the matrix-coefficient
/// basis, the dual algebra c_c(G^) on matrix units, their pairing, and the
/// associated representation category.
class FiniteCQG {
 public:
  explicit FiniteCQG(FiniteGroupData data);

  const FiniteGroupCategory& category() const { return *cat_; }
  const FiniteGroupData& group() const { return cat_->group(); }
  const std::string& name() const { return group().name; }
  int order() const { return group().order; }
  int mul(int a, int b) const { return group().mul(a, b); }
  int inv(int a) const { return group().inv(a); }

  // --- O(G) on the delta basis -------------------------------------------
  int og_dim() const { return order(); }
  CVector og_delta(int g) const;
  CVector og_unit() const;
  CVector og_product(const CVector& f1, const CVector& f2) const;
  CMatrix og_coproduct(const CVector& f) const;  // entry (a,b) of Delta(f)
  Complex og_counit(const CVector& f) const { return f(0); }
  CVector og_antipode(const CVector& f) const;
  CVector og_star(const CVector& f) const { return f.conjugate(); }
  Complex og_haar(const CVector& f) const { return f.sum() / double(order()); }

  // --- matrix-coefficient basis u^{(i)}_{kl} ------------------------------
  int mc_dim() const { return order(); }
  int mc_index(int irrep, int k, int l) const;
  /// (irrep, k, l) of a flattened matrix-coefficient index.
  void mc_unindex(int idx, int& irrep, int& k, int& l) const;
  CVector u_coeff(int irrep, int k, int l) const;  // delta coordinates
  CVector delta_to_mc(const CVector& f) const;
  CVector mc_to_delta(const CVector& c) const;

  // --- c_c(G^) on the matrix-unit basis m^{(i)}_{kl} -----------------------
  CVector cc_unit() const;
  CVector cc_product(const CVector& a, const CVector& b) const;
  CVector cc_star(const CVector& a) const;
  CVector cc_from_group(int g) const;
  CVector cc_to_group(const CVector& omega) const;  // coefficients over group elements
  CMatrix cc_coproduct(const CVector& omega) const;
  Complex pairing(const CVector& omega, const CVector& f) const;
  CVector act_on_cc_left(const CVector& f, const CVector& omega) const;   // f |> w
  CVector act_on_cc_right(const CVector& omega, const CVector& f) const;  // w <| f

 private:
  std::unique_ptr<FiniteGroupCategory> cat_;
  std::vector<int> mc_offsets_;
  CMatrix group_to_mc_;  // column g = coordinates of g over matrix units
  CMatrix mc_to_group_;
};

/// The double algebra on the tensor basis c_c(G^) (x) O(G).
class DoubleAlgebra {
 public:
  explicit DoubleAlgebra(const FiniteCQG& cqg);

  int dim() const { return n_ * n_; }
  int index(int mc_idx, int g) const { return mc_idx * n_ + g; }
  CVector unit() const;
  CVector product(const CVector& x, const CVector& y) const;
  CVector star(const CVector& x) const;
  CVector embed_cc(const CVector& omega) const;
  CVector embed_og(const CVector& f) const;

 private:
  CVector to_group_basis(const CVector& x) const;
  CVector from_group_basis(const CVector& x) const;
  const FiniteCQG* cqg_;
  int n_;
};

/// Parses and fully validates a group fixture; throws BadFixture with a
/// path-precise message on the first violated invariant.
FiniteGroupData parse_group_fixture(const std::string& json_text,
                                    const std::string& origin);
FiniteCQG load_finite_group(const std::string& path);

}  // namespace ydcat
