#ifndef HCFLOW_LINALG_HPP
#define HCFLOW_LINALG_HPP

#include "hcflow/types.hpp"

namespace hcf {

class EndoJ;

/// Hermitian bilinear form on the (1,0) frame. Entry (j,k) of the stored
/// matrix is the form evaluated on (conj(Z_j), Z_k), so the matrix is
/// Hermitian in the usual sense and a metric corresponds to a positive
/// definite matrix. For a Hermitian form paired with the identity reference
/// metric, the stored matrix coincides with the matrix of the associated
/// J-commuting endomorphism on the (1,0) block.
class HermitianForm {
public:
  explicit HermitianForm(int n) : mat_(CMat::Zero(n, n)) {}
  /// Projects onto the Hermitian part; the skew part of the input is
  /// discarded (callers pass numerically Hermitian data).
  explicit HermitianForm(const CMat& m);

  static HermitianForm identity(int n);
  static HermitianForm diagonal(const RVec& d);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const CMat& matrix() const { return mat_; }
  Cx operator()(int j, int k) const { return mat_(j, k); }

  double min_eigenvalue() const;
  RVec eigenvalues() const;  // ascending
  bool positive_definite(double eps = 0.0) const { return min_eigenvalue() > eps; }
  double det_real() const;

  /// Endomorphism norm of the associated endomorphism in a unitary frame:
  /// |E|^2 = 2 sum |E^l_j|^2.
  double endo_norm() const { return std::sqrt(2.0) * mat_.norm(); }

  HermitianForm operator+(const HermitianForm& o) const { return HermitianForm(CMat(mat_ + o.mat_)); }
  HermitianForm operator-(const HermitianForm& o) const { return HermitianForm(CMat(mat_ - o.mat_)); }
  HermitianForm scaled(double s) const { return HermitianForm(CMat(s * mat_)); }

private:
  CMat mat_;
};

/// Real endomorphism of the underlying 2n-dimensional algebra commuting
/// with J, stored as its complex block on the (1,0) subspace; the action on
/// (0,1) is the conjugate block.
class EndoJ {
public:
  explicit EndoJ(const CMat& block) : block_(block) {}
  explicit EndoJ(int n) : block_(CMat::Zero(n, n)) {}

  static EndoJ identity(int n) { return EndoJ(CMat(CMat::Identity(n, n))); }

  int dim() const { return static_cast<int>(block_.rows()); }
  const CMat& block() const { return block_; }

  /// Transpose with respect to the real reference inner product; on the
  /// (1,0) block this is the conjugate transpose.
  EndoJ transpose() const { return EndoJ(CMat(block_.adjoint())); }

  /// Recovers the real 2n x 2n matrix acting on the real basis
  /// {X_a = (Z_a + conj Z_a)/sqrt2, Y_a = i(Z_a - conj Z_a)/sqrt2}.
  RMat to_real() const;

  /// Action on complexified coordinates (first n entries are (1,0)
  /// components, last n are (0,1) components).
  CVec apply(const CVec& coords) const;

  EndoJ operator+(const EndoJ& o) const { return EndoJ(CMat(block_ + o.block_)); }
  EndoJ operator-(const EndoJ& o) const { return EndoJ(CMat(block_ - o.block_)); }
  EndoJ operator*(const EndoJ& o) const { return EndoJ(CMat(block_ * o.block_)); }
  EndoJ scaled(Cx s) const { return EndoJ(CMat(s * block_)); }
  EndoJ commutator(const EndoJ& o) const { return EndoJ(CMat(block_ * o.block_ - o.block_ * block_)); }

  Cx trace() const { return block_.trace(); }         // complex trace over the (1,0) block
  double real_trace() const { return 2.0 * block_.trace().real(); }

private:
  CMat block_;
};

/// <E,F> = 2 Re sum E^l_j conj(F^l_j), the restriction of the real trace
/// form on End(g) to J-commuting endomorphisms.
double endo_inner(const EndoJ& e, const EndoJ& f);
inline double endo_norm(const EndoJ& e) { return std::sqrt(endo_inner(e, e)); }

/// Subspace of the complexified algebra, spanned by orthonormal coordinate
/// columns (dimension 2n rows, one column per member).
class Subspace {
public:
  Subspace(int n, const CMat& basis) : n_(n), basis_(basis) {}

  int ambient_complex_dim() const { return n_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  const CMat& basis() const { return basis_; }

  /// Max norm of the component of v orthogonal to the subspace.
  double contains_residual(const CVec& v) const;
  bool contains(const CVec& v, double tol) const { return contains_residual(v) <= tol; }

private:
  int n_;
  CMat basis_;
};

/// Upper-triangular A with positive diagonal and A^H A = m; the unitary
/// frame of the metric m is Z~ = A^{-1} Z. Throws NumericalError when m is
/// not positive definite.
CMat cholesky_upper(const CMat& m);

}  // namespace hcf

#endif
