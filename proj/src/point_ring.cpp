#include "equicoh/point_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equicoh {

std::string to_string(const Bidegree& d) {
    std::ostringstream os;
    os << "(" << d.p << "," << d.q << ")";
    return os.str();
}

std::string to_string(const Window& w) {
    std::ostringstream os;
    os << "[" << w.pMin << "," << w.pMax << "]x[" << w.qMin << "," << w.qMax << "]";
    return os.str();
}

ConeBasisElement ConeBasisElement::top(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("ConeBasisElement::top: negative exponent");
    return {Cone::Top, a, b};
}

ConeBasisElement ConeBasisElement::bot(int n, int m) {
    if (n < 0 || m < 0)
        throw std::invalid_argument("ConeBasisElement::bot: negative divisor exponent");
    return {Cone::Bot, n, m};
}

Bidegree ConeBasisElement::degree() const {
    if (cone == Cone::Top)
        return {e1, e1 + e2};
    return {-e1, -2 - e1 - e2};
}

int basis_dim(const Bidegree& d) {
    if (d.p >= 0 && d.q >= d.p)
        return 1;  // top cone
    if (d.p <= 0 && d.q <= d.p - 2)
        return 1;  // bottom cone
    return 0;
}

std::optional<ConeBasisElement> element_at(const Bidegree& d) {
    if (d.p >= 0 && d.q >= d.p)
        return ConeBasisElement::top(d.p, d.q - d.p);
    if (d.p <= 0 && d.q <= d.p - 2)
        return ConeBasisElement::bot(-d.p, d.p - d.q - 2);
    return std::nullopt;
}

int free_orbit_dim(const Bidegree& d) {
    return d.p == 0 ? 1 : 0;
}

std::optional<ConeBasisElement> multiply_basis(const ConeBasisElement& x, const ConeBasisElement& y) {
    using Cone = ConeBasisElement::Cone;
    if (x.cone == Cone::Top && y.cone == Cone::Top)
        return ConeBasisElement::top(x.e1 + y.e1, x.e2 + y.e2);
    if (x.cone == Cone::Bot && y.cone == Cone::Bot)
        return std::nullopt;
    const ConeBasisElement& t = (x.cone == Cone::Top) ? x : y;
    const ConeBasisElement& b = (x.cone == Cone::Top) ? y : x;
    if (b.e1 >= t.e1 && b.e2 >= t.e2)
        return ConeBasisElement::bot(b.e1 - t.e1, b.e2 - t.e2);
    return std::nullopt;
}

RingElement RingElement::from_terms(std::vector<ConeBasisElement> terms) {
    std::sort(terms.begin(), terms.end());
    // F2 coefficients: pairs cancel.
    std::vector<ConeBasisElement> kept;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            kept.push_back(terms[i]);
        i = j;
    }
    RingElement r;
    r.terms_ = std::move(kept);
    return r;
}

bool RingElement::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const Bidegree d = terms_.front().degree();
    for (const auto& t : terms_)
        if (t.degree() != d)
            return false;
    return true;
}

std::optional<Bidegree> RingElement::degree() const {
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.front().degree();
}

RingElement RingElement::operator+(const RingElement& o) const {
    std::vector<ConeBasisElement> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(std::move(all));
}

RingElement RingElement::operator*(const RingElement& o) const {
    std::vector<ConeBasisElement> prods;
    for (const auto& x : terms_)
        for (const auto& y : o.terms_)
            if (auto z = multiply_basis(x, y))
                prods.push_back(*z);
    return from_terms(std::move(prods));
}

RingElement multiply(const RingElement& x, const RingElement& y) {
    return x * y;
}

}  // namespace equicoh
