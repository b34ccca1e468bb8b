#pragma once

// Small dense vectors in R^d for d >= 2. Dimensions are tiny (2 or 3 in
// practice), so a plain std::vector<double> with free functions is enough.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace conekernel {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(double c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec& operator+=(Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec operator-(const Vec& a) { return -1.0 * a; }

inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

// Unit basis vector e_k in R^d.
inline Vec basis_vec(std::size_t d, std::size_t k) {
    Vec r(d, 0.0);
    r.at(k) = 1.0;
    return r;
}

inline Vec normalized(const Vec& a) {
    const double n = norm(a);
    if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
    return (1.0 / n) * a;
}

}  // namespace conekernel
