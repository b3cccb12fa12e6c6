#include "qisf/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "qisf/errors.hpp"

namespace qisf::linalg {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

constexpr double eps = std::numeric_limits<double>::epsilon();

}  // namespace

EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& input, const JacobiOptions& options) {
    if (input.rows() != input.cols()) throw domain_error("jacobi_eigen: matrix must be square");
    const Eigen::Index n = input.rows();
    Eigen::MatrixXd a = 0.5 * (input + input.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double scale = a.norm();
    const double target = options.relative_tolerance * scale;

    EigenDecomposition out;
    double off = off_diagonal_norm(a);
    int sweep = 0;
    while (off > target && scale > 0.0) {
        if (sweep == options.max_sweeps) {
            std::ostringstream msg;
            msg << "jacobi_eigen: no convergence after " << sweep << " sweeps (dim " << n
                << ", off-diagonal norm " << off << ", target " << target << ")";
            throw computation_error(msg.str());
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A ← JᵀAJ with J = [[c, s], [−s, c]] in the (p, q) plane.
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
        ++sweep;
        off = off_diagonal_norm(a);
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto src = order[static_cast<std::size_t>(k)];
        out.values(k) = a(src, src);
        out.vectors.col(k) = v.col(src);
    }
    out.sweeps = sweep;
    out.off_diagonal_norm = off;
    return out;
}

double orthogonality_error(const Eigen::MatrixXd& vectors) {
    const Eigen::MatrixXd gram = vectors.transpose() * vectors;
    return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double max_residual(const Eigen::MatrixXd& a, const EigenDecomposition& eig) {
    double worst = 0.0;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        worst = std::max(worst, (a * eig.vectors.col(k) - eig.values(k) * eig.vectors.col(k)).norm());
    return worst;
}

bool is_arrowhead(const Eigen::MatrixXd& a, double zero_tolerance) {
    if (a.rows() != a.cols()) return false;
    for (Eigen::Index j = 1; j < a.cols(); ++j)
        for (Eigen::Index i = 1; i < a.rows(); ++i)
            if (i != j && std::abs(a(i, j)) > zero_tolerance) return false;
    return true;
}

namespace {

struct Secular {
    double apex_shift;                  // δ_origin − apex
    const std::vector<double>& b2;      // b_α²
    std::vector<double> delta;          // δ_α − δ_origin

    // f(μ) and f′(μ) for λ = δ_origin + μ.
    std::pair<double, double> operator()(double mu) const {
        double f = mu + apex_shift;
        double df = 1.0;
        for (std::size_t i = 0; i < b2.size(); ++i) {
            const double r = 1.0 / (mu - delta[i]);
            const double w = b2[i] * r;
            f -= w;
            df += w * r;
        }
        return {f, df};
    }
};

// Root of the increasing function f on (lo, hi): Newton steps kept inside
// the bracket, bisection otherwise.
double bracketed_root(const Secular& f, double lo, double hi) {
    double mu = 0.5 * (lo + hi);
    for (int iter = 0; iter < 400; ++iter) {
        const auto [value, slope] = f(mu);
        if (value == 0.0) return mu;
        if (value > 0.0)
            hi = mu;
        else
            lo = mu;
        const double width = hi - lo;
        if (width <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi)) || width <= std::numeric_limits<double>::min())
            return 0.5 * (lo + hi);
        double next = mu - value / slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - mu) <= 2.0 * eps * std::abs(mu)) return next;
        mu = next;
    }
    throw computation_error("arrowhead_eigen: secular root did not converge");
}

}  // namespace

ArrowheadEigen arrowhead_eigen(double apex, std::span<const double> border, std::span<const double> poles) {
    if (border.size() != poles.size()) throw domain_error("arrowhead_eigen: border and poles differ in length");
    const std::size_t n = poles.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return poles[i] < poles[j]; });

    double scale = std::abs(apex);
    double border_norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        scale = std::max(scale, std::abs(poles[i]));
        border_norm2 += border[i] * border[i];
    }
    scale = std::max(scale, std::sqrt(border_norm2));
    const double tiny = 8.0 * eps * scale;

    ArrowheadEigen out;
    out.values.reserve(n + 1);
    out.first_component_sq.reserve(n + 1);

    // Deflation: decoupled poles are eigenvalues with no system weight;
    // coincident poles are merged into one coupled pole plus a decoupled one.
    std::vector<double> delta, b2;
    for (std::size_t idx : order) {
        const double d = poles[idx];
        const double bb = border[idx] * border[idx];
        if (std::sqrt(bb) <= tiny) {
            out.values.push_back(d);
            out.first_component_sq.push_back(0.0);
            continue;
        }
        if (!delta.empty() && d - delta.back() <= tiny) {
            out.values.push_back(d);
            out.first_component_sq.push_back(0.0);
            b2.back() += bb;
            continue;
        }
        delta.push_back(d);
        b2.push_back(bb);
    }

    const std::size_t m = delta.size();
    if (m == 0) {
        out.values.push_back(apex);
        out.first_component_sq.push_back(1.0);
    } else {
        const double bnorm = std::sqrt(border_norm2);
        const double lower = std::min(apex, delta.front()) - bnorm - tiny;
        const double upper = std::max(apex, delta.back()) + bnorm + tiny;
        Secular f{0.0, b2, std::vector<double>(m)};
        auto set_origin = [&](std::size_t o) {
            f.apex_shift = delta[o] - apex;
            for (std::size_t i = 0; i < m; ++i) f.delta[i] = delta[i] - delta[o];
        };
        for (std::size_t j = 0; j <= m; ++j) {
            std::size_t origin;
            double lo, hi;
            if (j == 0) {
                origin = 0;
                set_origin(origin);
                lo = lower - delta[0];
                hi = 0.0;
            } else if (j == m) {
                origin = m - 1;
                set_origin(origin);
                lo = 0.0;
                hi = upper - delta[m - 1];
            } else {
                set_origin(j - 1);
                const double gap = delta[j] - delta[j - 1];
                if (f(0.5 * gap).first >= 0.0) {
                    origin = j - 1;
                    lo = 0.0;
                    hi = 0.5 * gap;
                } else {
                    origin = j;
                    set_origin(origin);
                    lo = -0.5 * gap;
                    hi = 0.0;
                }
            }
            const double mu = bracketed_root(f, lo, hi);
            const double slope = f(mu).second;
            out.values.push_back(delta[origin] + mu);
            out.first_component_sq.push_back(1.0 / slope);
        }
    }

    std::vector<std::size_t> perm(out.values.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](auto i, auto j) { return out.values[i] < out.values[j]; });
    ArrowheadEigen sorted;
    sorted.values.reserve(perm.size());
    sorted.first_component_sq.reserve(perm.size());
    for (auto p : perm) {
        sorted.values.push_back(out.values[p]);
        sorted.first_component_sq.push_back(out.first_component_sq[p]);
    }
    return sorted;
}

Eigen::MatrixXd arrowhead_eigenvectors(double /*apex*/, std::span<const double> border, std::span<const double> poles,
                                       std::span<const double> values) {
    const auto n = static_cast<Eigen::Index>(poles.size());
    Eigen::MatrixXd vectors(n + 1, static_cast<Eigen::Index>(values.size()));
    for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
        const double lambda = values[static_cast<std::size_t>(k)];
        vectors(0, k) = 1.0;
        for (Eigen::Index a = 0; a < n; ++a)
            vectors(a + 1, k) = border[static_cast<std::size_t>(a)] / (lambda - poles[static_cast<std::size_t>(a)]);
        vectors.col(k).normalize();
    }
    return vectors;
}

}  // namespace qisf::linalg
