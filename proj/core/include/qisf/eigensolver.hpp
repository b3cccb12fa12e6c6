// eigensolver.hpp: dense symmetric eigensolvers used by the normal-mode module

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qisf::linalg {

struct JacobiOptions {
    double relative_tolerance = 1e-12;  // stop when ‖offdiag‖_F < tol·‖A‖_F
    int max_sweeps = 100;
};

struct EigenDecomposition {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // column k is the eigenvector of values(k)
    int sweeps = 0;
    double off_diagonal_norm = 0.0;
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Throws
// computation_error (with the sweep count and residual off-diagonal norm)
// if the tolerance is not reached within max_sweeps.
EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& a, const JacobiOptions& options = {});

// ‖OᵀO − I‖_max.
double orthogonality_error(const Eigen::MatrixXd& vectors);
// max_k ‖A v_k − λ_k v_k‖₂.
double max_residual(const Eigen::MatrixXd& a, const EigenDecomposition& eig);

// A = [[apex, bᵀ], [b, diag(poles)]]. Only the first component of each
// eigenvector is kept, which is all the system-coordinate correlators need.
struct ArrowheadEigen {
    std::vector<double> values;             // ascending
    std::vector<double> first_component_sq; // (v_k)_0²
};

bool is_arrowhead(const Eigen::MatrixXd& a, double zero_tolerance = 0.0);

// Eigenvalues from the secular equation λ − apex − Σ b_α²/(λ − δ_α) = 0, one
// root per interlacing interval, bracketed against the nearer pole so that
// λ − δ_α keeps full relative accuracy. Zero couplings and repeated poles
// are deflated.
ArrowheadEigen arrowhead_eigen(double apex, std::span<const double> border, std::span<const double> poles);

// Full eigenvectors of an arrowhead matrix (columns, unit norm), for checks
// on moderate sizes; v_k ∝ (1, b_α/(λ_k − δ_α)).
Eigen::MatrixXd arrowhead_eigenvectors(double apex, std::span<const double> border, std::span<const double> poles,
                                       std::span<const double> values);

}  // namespace qisf::linalg
