#pragma once

#include <array>
#include <cmath>

#include "hd/errors.hpp"
#include "hd/rational.hpp"

namespace hd {

// f(x, y) = (x + 1/y, y - 1/y - x), undefined on {y = 0}.
// f^-1(x, y) = (x - 1/(x+y), x + y), undefined on {y = -x}.

template <class S>
struct planar_point {
    S x{};
    S y{};
    friend bool operator==(const planar_point&, const planar_point&) = default;
};

using rpoint = planar_point<rat>;
using dpoint = planar_point<double>;

template <class S>
struct mat2 {
    S a11{}, a12{}, a21{}, a22{};
    S det() const { return a11 * a22 - a12 * a21; }
    S trace() const { return a11 + a22; }
    friend mat2 operator*(const mat2& l, const mat2& r) {
        return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
    }
};

inline rpoint apply_f(const rpoint& p) {
    if (p.y == 0) throw discontinuity_error("f undefined: y = 0 at x = " + to_string(p.x));
    rat inv = 1 / p.y;
    return {p.x + inv, p.y - inv - p.x};
}

inline rpoint apply_f_inv(const rpoint& p) {
    rat s = p.x + p.y;
    if (s == 0)
        throw discontinuity_error("f^-1 undefined: x + y = 0 at x = " + to_string(p.x));
    return {p.x - 1 / s, s};
}

inline rpoint mirror(const rpoint& p) { return {-p.x, -p.y}; }

inline mat2<rat> jacobian(const rpoint& p) {
    if (p.y == 0) throw discontinuity_error("Df undefined: y = 0 at x = " + to_string(p.x));
    rat iy2 = 1 / (p.y * p.y);
    return {rat(1), -iy2, rat(-1), rat(1) + iy2};
}

// Float-mode variants guard a band of width eps around each discontinuity so
// that sign decisions never ride on a rounded near-zero value.
inline dpoint apply_f(const dpoint& p, double eps) {
    if (std::abs(p.y) < eps) throw discontinuity_error("f undefined (|y| < eps)");
    double inv = 1.0 / p.y;
    return {p.x + inv, p.y - inv - p.x};
}

inline dpoint apply_f_inv(const dpoint& p, double eps) {
    double s = p.x + p.y;
    if (std::abs(s) < eps) throw discontinuity_error("f^-1 undefined (|x+y| < eps)");
    return {p.x - 1.0 / s, s};
}

inline dpoint mirror(const dpoint& p) { return {-p.x, -p.y}; }

inline mat2<double> jacobian(const dpoint& p, double eps) {
    if (std::abs(p.y) < eps) throw discontinuity_error("Df undefined (|y| < eps)");
    double iy2 = 1.0 / (p.y * p.y);
    return {1.0, -iy2, -1.0, 1.0 + iy2};
}

}  // namespace hd
