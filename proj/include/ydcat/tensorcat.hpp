#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ydcat/numkernel.hpp"

namespace ydcat {

struct TruncationOverflow : std::runtime_error {
  explicit TruncationOverflow(const std::string& w) : std::runtime_error(w) {}
};
struct BadParameter : std::runtime_error {
  explicit BadParameter(const std::string& w) : std::runtime_error(w) {}
};
struct BadFixture : std::runtime_error {
  explicit BadFixture(const std::string& w) : std::runtime_error(w) {}
};

struct IrrepLabel {
  int index = 0;
  std::string name;
  int dim = 0;
  int conj = 0;  // index of the conjugate label
};

/// Formal direct sum of irreducible labels; order fixes the block layout.
class CatObject {
 public:
  CatObject() = default;
  explicit CatObject(std::vector<int> summands) : summands_(std::move(summands)) {}
  static CatObject irrep(int label) { return CatObject({label}); }

  const std::vector<int>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  bool operator==(const CatObject& o) const { return summands_ == o.summands_; }

 private:
  std::vector<int> summands_;
};

struct Morphism {
  CatObject source;
  CatObject target;
  CMatrix matrix;  // total_dim(target) x total_dim(source)
};

struct DualityData {
  CatObject object;
  CatObject conjugate;
  Morphism R;     // 1 -> conj(U) (x) U
  Morphism Rbar;  // 1 -> U (x) conj(U)
  CMatrix rho;    // positive operator on H_U, Tr(rho) = Tr(rho^-1)
};

/// Concrete realization of an object: a carrier C^dim plus the structure
/// matrices the category uses to cut out intertwiners (group-element images
/// for finite groups, generator images for q-deformations).
struct Rep {
  int dim = 0;
  std::vector<CMatrix> mats;
};

struct Decomposition {
  int label;        // irreducible summand
  CMatrix isometry; // H_label -> carrier, intertwining
};

struct ResidualReport {
  double left = 0.0;   // ||(Rbar* (x) id)(id (x) R) - id||
  double right = 0.0;  // ||(R* (x) id)(id (x) Rbar) - id||
  double worst() const { return left > right ? left : right; }
};

class TensorCategory {
 public:
  virtual ~TensorCategory() = default;

  int irrep_count() const { return static_cast<int>(labels_.size()); }
  const IrrepLabel& irrep(int i) const { return labels_.at(i); }
  int trivial_label() const { return trivial_; }
  CatObject trivial_object() const { return CatObject::irrep(trivial_); }
  int total_dim(const CatObject& u) const;

  virtual std::string name() const = 0;
  virtual Rep irrep_rep(int label) const = 0;
  virtual Rep tensor_rep(const Rep& a, const Rep& b) const = 0;
  virtual Rep trivial_rep() const = 0;
  /// Pairs (A_k, B_k) such that Hom(a,b) = { X : X A_k = B_k X }.
  virtual std::vector<std::pair<CMatrix, CMatrix>> hom_constraints(
      const Rep& a, const Rep& b) const = 0;
  /// Throws TruncationOverflow when the fusion of two labels leaves the
  /// label set (truncated categories only).
  virtual void check_fusion(int label_a, int label_b) const {
    (void)label_a;
    (void)label_b;
  }

  Rep rep_of(const CatObject& u) const;
  Rep direct_sum(const Rep& a, const Rep& b) const;

  /// Orthonormal (Frobenius) basis of the intertwiner space Hom(a, b).
  std::vector<CMatrix> hom_basis(const Rep& a, const Rep& b,
                                 Tolerance tol = Tolerance{}) const;

  /// Decomposition of a concrete carrier into irreducible summands:
  /// isometries with mutually orthogonal ranges summing to the identity.
  /// `key` enables memoization; pass "" to skip the cache.
  std::vector<Decomposition> decompose_rep(const Rep& r, const std::string& key,
                                           Tolerance tol = Tolerance{}) const;

  /// Spec-level fusion: decompose u (x) v.
  std::vector<Decomposition> decompose(const CatObject& u, const CatObject& v,
                                       Tolerance tol = Tolerance{}) const;

  DualityData conjugate_data(const CatObject& u, Tolerance tol = Tolerance{}) const;
  double frobenius_dim(const CatObject& u, Tolerance tol = Tolerance{}) const;
  ResidualReport verify_conjugate_equations(const DualityData& d,
                                            Tolerance tol = Tolerance{}) const;

  int hom_dim(const CatObject& u, const CatObject& v, Tolerance tol = Tolerance{}) const;

 protected:
  std::vector<IrrepLabel> labels_;
  int trivial_ = 0;

 private:
  DualityData irrep_duality(int label, Tolerance tol) const;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::vector<Decomposition>> decomp_cache_;
  mutable std::map<int, DualityData> duality_cache_;
};

}  // namespace ydcat
