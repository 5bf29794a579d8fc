#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace equicoh {

/* A point of the RO(Z/2) grading lattice: p is the topological degree,
 * q the weight (number of twisted coordinates). */
struct Bidegree {
    int p = 0;
    int q = 0;

    friend constexpr auto operator<=>(const Bidegree&, const Bidegree&) = default;

    constexpr Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
    constexpr Bidegree operator-(const Bidegree& o) const { return {p - o.p, q - o.q}; }
};

std::string to_string(const Bidegree& d);

/* Finite rectangle of the (p,q) plane, both bounds inclusive. */
struct Window {
    int pMin = 0;
    int pMax = 0;
    int qMin = 0;
    int qMax = 0;

    Window() = default;
    Window(int pmin, int pmax, int qmin, int qmax) : pMin(pmin), pMax(pmax), qMin(qmin), qMax(qmax) {
        if (pMin > pMax || qMin > qMax)
            throw std::invalid_argument("Window: empty range");
    }

    friend constexpr auto operator<=>(const Window&, const Window&) = default;

    constexpr bool contains(const Bidegree& d) const {
        return d.p >= pMin && d.p <= pMax && d.q >= qMin && d.q <= qMax;
    }
    constexpr int width() const { return pMax - pMin + 1; }
    constexpr int height() const { return qMax - qMin + 1; }
    constexpr long long area() const { return static_cast<long long>(width()) * height(); }

    /* Grow the rectangle by the same margin on every side. */
    Window expanded(int margin) const {
        return Window(pMin - margin, pMax + margin, qMin - margin, qMax + margin);
    }
};

std::string to_string(const Window& w);

}  // namespace equicoh
