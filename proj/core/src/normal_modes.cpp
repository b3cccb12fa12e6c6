#include "qisf/normal_modes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "qisf/csv.hpp"
#include "qisf/eigensolver.hpp"
#include "qisf/errors.hpp"

namespace qisf::modes {

NormalModeSpectrum::NormalModeSpectrum(std::vector<double> omegas, std::vector<double> weights, double mass,
                                       double omega0)
    : mass_(mass), omega0_(omega0) {
    if (omegas.size() != weights.size()) throw domain_error("normal-mode spectrum: length mismatch");
    if (omegas.empty()) throw domain_error("normal-mode spectrum is empty");
    if (!(mass > 0.0)) throw domain_error("normal-mode spectrum: mass must be positive");
    std::vector<std::size_t> order(omegas.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return omegas[i] < omegas[j]; });
    omegas_.reserve(order.size());
    weights_.reserve(order.size());
    for (auto i : order) {
        if (!(omegas[i] >= 0.0)) throw domain_error("normal-mode frequencies must be non-negative");
        if (!(weights[i] >= 0.0)) throw domain_error("normal-mode weights must be non-negative");
        omegas_.push_back(omegas[i]);
        weights_.push_back(weights[i]);
    }
    if (std::abs(weight_sum() - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "normal-mode weights must sum to 1 (got " << weight_sum() << ")";
        throw model_error(msg.str());
    }
}

double NormalModeSpectrum::weight_sum() const {
    // Pairwise-ish accumulation from the small end keeps the sum exact to a few ulp.
    double sum = 0.0, carry = 0.0;
    for (double w : weights_) {
        const double y = w - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

NormalModeSpectrum diagonalize(const bath::CoupledPotentialMatrix& v, EigenMethod method) {
    const auto& a = v.entries;
    if (a.rows() != a.cols() || a.rows() == 0) throw domain_error("diagonalize: matrix must be square and non-empty");
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = j + 1; i < a.rows(); ++i)
            if (a(i, j) != a(j, i)) throw domain_error("diagonalize: matrix is not symmetric");

    const double norm = a.norm();
    const Eigen::Index n = a.rows();
    if (method == EigenMethod::automatic)
        method = linalg::is_arrowhead(a) ? EigenMethod::arrowhead : EigenMethod::jacobi;

    std::vector<double> lambdas, weights;
    double orthogonality = 0.0;
    int sweeps = 0;
    if (method == EigenMethod::arrowhead) {
        if (!linalg::is_arrowhead(a)) throw domain_error("diagonalize: matrix is not arrowhead-structured");
        std::vector<double> border(static_cast<std::size_t>(n - 1)), poles(static_cast<std::size_t>(n - 1));
        for (Eigen::Index i = 1; i < n; ++i) {
            border[static_cast<std::size_t>(i - 1)] = a(0, i);
            poles[static_cast<std::size_t>(i - 1)] = a(i, i);
        }
        auto eig = linalg::arrowhead_eigen(a(0, 0), border, poles);
        lambdas = std::move(eig.values);
        weights = std::move(eig.first_component_sq);
    } else {
        auto eig = linalg::jacobi_eigen(a);
        orthogonality = linalg::orthogonality_error(eig.vectors);
        if (orthogonality > orthogonality_tolerance)
            throw computation_error("diagonalize: eigenvectors lost orthogonality (" + std::to_string(orthogonality) + ")");
        sweeps = eig.sweeps;
        lambdas.assign(eig.values.data(), eig.values.data() + n);
        weights.resize(static_cast<std::size_t>(n));
        for (Eigen::Index k = 0; k < n; ++k) weights[static_cast<std::size_t>(k)] = eig.vectors(0, k) * eig.vectors(0, k);
    }

    const double min_lambda = *std::min_element(lambdas.begin(), lambdas.end());
    if (min_lambda < -negative_eigenvalue_tolerance * norm) {
        std::ostringstream msg;
        msg << "diagonalize: potential is not positive semidefinite (eigenvalue " << min_lambda << ", |V| " << norm << ")";
        throw model_error(msg.str());
    }
    std::vector<double> omegas(lambdas.size());
    std::transform(lambdas.begin(), lambdas.end(), omegas.begin(), [](double l) { return std::sqrt(std::max(l, 0.0)); });

    NormalModeSpectrum out(std::move(omegas), std::move(weights), v.mass, v.omega0);
    out.method = method;
    out.min_eigenvalue = min_lambda;
    out.orthogonality_error = orthogonality;
    out.sweeps = sweeps;
    return out;
}

double classical_vacf_modes(const NormalModeSpectrum& spectrum, double t) {
    const auto& w = spectrum.omegas();
    const auto& d2 = spectrum.weights();
    double sum = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) sum += d2[k] * std::cos(w[k] * t);
    return sum;
}

void write_spectrum_csv(std::ostream& out, const NormalModeSpectrum& spectrum) {
    csv::write_header(out, {"omega_k_ps_inv", "dk_sq"});
    for (std::size_t k = 0; k < spectrum.size(); ++k) csv::write_row(out, {spectrum.omegas()[k], spectrum.weights()[k]});
}

}  // namespace qisf::modes
