#pragma once

#include <complex>

#include <Eigen/Dense>

namespace cyk {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using IMat = Eigen::MatrixXi;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Smallest eigenvalue of the Hermitian part (A + A^H)/2.
double min_eig_hermitian(const CMat& a);
double min_eig_symmetric(const RMat& a);

// A^p for Hermitian positive definite A via eigendecomposition.
CMat hermitian_power(const CMat& a, double p);

double max_abs(const CMat& a);
double max_abs(const RMat& a);

// Standard symplectic form [[0, I], [-I, 0]] of size 2n.
RMat standard_symplectic(int n);

}  // namespace cyk
