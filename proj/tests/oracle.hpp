// oracle.hpp — Test-only brute-force references, independent of the library's
// solution paths: dense cyclic Jacobi diagonalization and a determinant-based
// characteristic polynomial.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

// Row-major symmetric matrix.
struct Dense {
    std::size_t n{0};
    std::vector<double> a;

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Explicit arrowhead matrix assembled entry by entry (bright state first).
inline Dense arrowhead(int m, double vbar, double epsilon, double omega_s) {
    Dense h{static_cast<std::size_t>(2 * m + 2), {}};
    h.a.assign(h.n * h.n, 0.0);
    h(0, 0) = omega_s;
    for (int k = -m; k <= m; ++k) {
        const auto i = static_cast<std::size_t>(k + m + 1);
        h(i, i) = omega_s + k * epsilon;
        h(0, i) = vbar;
        h(i, 0) = vbar;
    }
    return h;
}

struct Eigen {
    std::vector<double> values;        // ascending
    std::vector<std::vector<double>> vectors; // vectors[j] pairs with values[j]
};

// Cyclic Jacobi rotations until the off-diagonal norm vanishes.
inline Eigen jacobi(Dense h) {
    const std::size_t n = h.n;
    Dense v{n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += h(p, q) * h(p, q);
        if (off < 1e-300) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (h(p, q) == 0.0) continue;
                const double theta = (h(q, q) - h(p, p)) / (2.0 * h(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = c * hkp - s * hkq;
                    h(k, q) = s * hkp + c * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = c * hpk - s * hqk;
                    h(q, k) = s * hpk + c * hqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return h(x, x) < h(y, y); });
    Eigen out;
    for (auto j : order) {
        out.values.push_back(h(j, j));
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = v(i, j);
        out.vectors.push_back(std::move(col));
    }
    return out;
}

// det(H - lambda I) by Gaussian elimination with partial pivoting.
inline double char_poly(Dense h, double lambda) {
    const std::size_t n = h.n;
    for (std::size_t i = 0; i < n; ++i) h(i, i) -= lambda;
    double det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(h(r, c)) > std::abs(h(piv, c))) piv = r;
        if (h(piv, c) == 0.0) return 0.0;
        if (piv != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h(c, k), h(piv, k));
            det = -det;
        }
        det *= h(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = h(r, c) / h(c, c);
            for (std::size_t k = c; k < n; ++k) h(r, k) -= f * h(c, k);
        }
    }
    return det;
}

} // namespace oracle
