#include "adnf/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "adnf/errors.hpp"

namespace adnf {

namespace {

// Cyclic Jacobi rotations on a symmetric matrix. `a` is destroyed;
// eigenvectors come back as columns of `v`.
void jacobi_eigen(std::vector<double>& a, std::size_t d, std::vector<double>& eigenvalues,
                  std::vector<double>& v) {
    v.assign(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) v[i * d + i] = 1.0;

    auto off_diagonal = [&]() {
        double sum = 0.0;
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                sum += a[p * d + q] * a[p * d + q];
            }
        }
        return sum;
    };

    double scale = 0.0;
    for (std::size_t i = 0; i < d * d; ++i) scale = std::max(scale, std::abs(a[i]));
    // Convergence floor for the off-diagonal sum of squares, a little above
    // the rounding noise of double arithmetic.
    const double tol = (scale > 0.0 ? scale * scale : 1.0) * static_cast<double>(d * d) * 1e-30;

    for (int sweep = 0; sweep < 100 && off_diagonal() > tol; ++sweep) {
        for (std::size_t p = 0; p < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const double apq = a[p * d + q];
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a[q * d + q] - a[p * d + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < d; ++k) {
                    const double akp = a[k * d + p];
                    const double akq = a[k * d + q];
                    a[k * d + p] = c * akp - s * akq;
                    a[k * d + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double apk = a[p * d + k];
                    const double aqk = a[q * d + k];
                    a[p * d + k] = c * apk - s * aqk;
                    a[q * d + k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    const double vkp = v[k * d + p];
                    const double vkq = v[k * d + q];
                    v[k * d + p] = c * vkp - s * vkq;
                    v[k * d + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    eigenvalues.resize(d);
    for (std::size_t i = 0; i < d; ++i) eigenvalues[i] = a[i * d + i];
}

}  // namespace

PcaModel fit_pca(const FeatureMatrix& x, std::size_t k) {
    const std::size_t n = x.rows();
    const std::size_t d = x.cols();
    const std::size_t k_max = std::min(n - 1, d);
    if (n < 2 || k < 1 || k > k_max) {
        throw ConfigError("component count " + std::to_string(k) + " outside [1, " +
                          std::to_string(n < 2 ? 0 : k_max) + "]");
    }

    std::vector<double> mu(d, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t c = 0; c < d; ++c) mu[c] += x(j, c);
    }
    for (double& m : mu) m /= static_cast<double>(n);

    // Sample covariance, divisor N - 1.
    std::vector<double> cov(d * d, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t p = 0; p < d; ++p) {
            const double xp = x(j, p) - mu[p];
            for (std::size_t q = p; q < d; ++q) {
                cov[p * d + q] += xp * (x(j, q) - mu[q]);
            }
        }
    }
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = p; q < d; ++q) {
            cov[p * d + q] /= static_cast<double>(n - 1);
            cov[q * d + p] = cov[p * d + q];
        }
    }

    std::vector<double> eigenvalues;
    std::vector<double> vectors;
    jacobi_eigen(cov, d, eigenvalues, vectors);

    // Descending eigenvalue order; ties keep the lower original index first.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return eigenvalues[a] > eigenvalues[b]; });

    PcaModel model{std::move(mu), FeatureMatrix(k, d), {}};
    model.explained_variance.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
        const std::size_t src = order[c];
        model.explained_variance[c] = std::max(0.0, eigenvalues[src]);
        for (std::size_t p = 0; p < d; ++p) {
            model.components(c, p) = vectors[p * d + src];
        }
        // Sign convention: the entry of largest magnitude is made positive.
        std::size_t pivot = 0;
        double best = -1.0;
        for (std::size_t p = 0; p < d; ++p) {
            const double mag = std::abs(model.components(c, p));
            if (mag > best) {
                best = mag;
                pivot = p;
            }
        }
        if (model.components(c, pivot) < 0.0) {
            for (std::size_t p = 0; p < d; ++p) model.components(c, p) = -model.components(c, p);
        }
    }
    return model;
}

FeatureMatrix transform(const PcaModel& model, const FeatureMatrix& x) {
    const std::size_t d = model.mean.size();
    if (x.cols() != d) {
        throw DimensionError("input dimension " + std::to_string(x.cols()) +
                             " does not match model dimension " + std::to_string(d));
    }
    const std::size_t k = model.components.rows();
    FeatureMatrix y(x.rows(), k);
    for (std::size_t j = 0; j < x.rows(); ++j) {
        for (std::size_t c = 0; c < k; ++c) {
            double dot = 0.0;
            for (std::size_t p = 0; p < d; ++p) {
                dot += (x(j, p) - model.mean[p]) * model.components(c, p);
            }
            y(j, c) = dot;
        }
    }
    return y;
}

}  // namespace adnf
