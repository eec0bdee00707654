#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

namespace discseq {

using Complex = std::complex<double>;

/// A point of C^n stored as n complex coordinates.
struct Point {
    std::vector<Complex> coords;

    Point() = default;
    explicit Point(Complex z) : coords{z} {}
    Point(std::initializer_list<Complex> cs) : coords(cs) {}
    explicit Point(std::vector<Complex> cs) : coords(std::move(cs)) {}

    int dimension() const { return static_cast<int>(coords.size()); }

    /// Single-coordinate access for one-dimensional domains.
    Complex z() const { return coords[0]; }

    bool finite() const {
        for (const Complex& c : coords)
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
        return true;
    }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

} // namespace discseq
