#ifndef HCFLOW_TYPES_HPP
#define HCFLOW_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace hcf {

using Cx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Input or consistency failure of an algebra/metric (maps to CLI exit 1).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Runtime numerical failure: singular transforms, degenerate metrics,
/// integrator underflow (maps to CLI exit 2).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Tolerance knobs shared across validation and fitting. Defaults can be
/// overridden with HCF_TOL_* environment variables (see from_env).
struct Tolerances {
  double reality = 1e-9;        // max allowed reality violation on load
  double jacobi_rel = 1e-12;    // x max structure-constant magnitude
  double nijenhuis_rel = 1e-12; // x max structure-constant magnitude
  double nullspace_rel = 1e-9;  // SVD cutoff x largest singular value
  double unimodular = 1e-9;
  double balanced = 1e-10;
  double soliton_residual = 1e-8; // normalized soliton acceptance

  /// Reads HCF_TOL_REALITY, HCF_TOL_JACOBI, HCF_TOL_NIJENHUIS,
  /// HCF_TOL_NULLSPACE, HCF_TOL_UNIMODULAR, HCF_TOL_BALANCED,
  /// HCF_TOL_SOLITON when set.
  static Tolerances from_env();
};

}  // namespace hcf

#endif
