#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "fcsph/cartan.hpp"

namespace fcsph {

/// Choice of extraspecial pairs and their signs.
enum class SignConvention {
  Standard,   ///< smallest first root, N > 0
  Alternate,  ///< last simple root as the first member, N > 0
};

/// Coefficient vector over the basis [e_r for every root r] ++ [h_1 .. h_rank].
using Element = std::vector<mpq_class>;

/// Chevalley basis of the simple Lie algebra of a root system.
class ChevalleyAlgebra {
 public:
  static std::shared_ptr<const ChevalleyAlgebra> build(RootSystemPtr rs,
                                                       SignConvention conv = SignConvention::Standard);

  const RootSystem& system() const { return *rs_; }
  const RootSystemPtr& system_ptr() const { return rs_; }
  SignConvention convention() const { return conv_; }
  int dim() const { return rs_->num_roots() + rs_->rank(); }
  int e(int r) const { return r; }
  int h(int i) const { return rs_->num_roots() + i; }

  /// N_{a,b}; zero when a+b is not a root.
  int N(int a, int b) const { return n_[a * rs_->num_roots() + b]; }
  /// Coefficients of the coroot h_a over h_1..h_rank.
  const std::vector<int>& coroot(int a) const { return coroot_[a]; }

  Element zero() const { return Element(static_cast<std::size_t>(dim())); }
  Element basis(int k) const;

  /// Bracket of two basis vectors as a sparse list (index, coefficient).
  std::vector<std::pair<int, int>> bracket_basis(int i, int j) const;

 private:
  ChevalleyAlgebra() = default;
  void build_constants();

  RootSystemPtr rs_;
  SignConvention conv_ = SignConvention::Standard;
  std::vector<int> n_;
  std::vector<std::vector<int>> coroot_;
};

using ChevalleyPtr = std::shared_ptr<const ChevalleyAlgebra>;

Element bracket(const ChevalleyAlgebra& L, const Element& x, const Element& y);

/// Element of the nilradical from root coefficients; throws InvalidArgument on non-positive roots.
Element nilpotent(const ChevalleyAlgebra& L, const std::map<int, mpq_class>& coeffs);
RootSet support(const ChevalleyAlgebra& L, const Element& x);

/// Matrix of ad(x): column j is [x, basis_j].
std::vector<std::vector<mpq_class>> ad_matrix(const ChevalleyAlgebra& L, const Element& x);
/// Largest n with ad(x)^n != 0; 0 for x = 0.
int height(const ChevalleyAlgebra& L, const Element& x);
/// ad(x)^k == 0 exactly.
bool ad_power_vanishes(const ChevalleyAlgebra& L, const Element& x, int k);
/// Ranks of ad(x)^k for k = 1.. until zero.
std::vector<int> ad_rank_sequence(const ChevalleyAlgebra& L, const Element& x);

/// u_a(xi).x = x + sum_k xi^k / k! ad(e_a)^k x.
Element exp_root_action(const ChevalleyAlgebra& L, int a, const mpq_class& xi, const Element& x);

/// Exact rank of an integer matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<mpz_class>> m);

}  // namespace fcsph
