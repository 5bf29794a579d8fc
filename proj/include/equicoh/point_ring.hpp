#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equicoh/bidegree.hpp"

namespace equicoh {

/* Basis element of the bigraded coefficient ring M = H^{*,*}(pt; Z/2-constant).
 *
 * The ring has two support cones.  The top cone is the polynomial algebra
 * Z/2[rho, tau] with rho in (1,1) and tau in (0,1); its basis is rho^a tau^b.
 * The bottom cone is spanned by the elements theta/(rho^n tau^m), where theta
 * sits in (0,-2) and is infinitely divisible by both rho and tau.
 */
struct ConeBasisElement {
    enum class Cone { Top, Bot };

    Cone cone = Cone::Top;
    int e1 = 0;  // rho exponent (Top) / rho divisor exponent (Bot)
    int e2 = 0;  // tau exponent (Top) / tau divisor exponent (Bot)

    static ConeBasisElement top(int a, int b);
    static ConeBasisElement bot(int n, int m);
    static ConeBasisElement one() { return {}; }
    static ConeBasisElement rho() { return top(1, 0); }
    static ConeBasisElement tau() { return top(0, 1); }
    static ConeBasisElement theta() { return bot(0, 0); }

    Bidegree degree() const;

    friend constexpr auto operator<=>(const ConeBasisElement&, const ConeBasisElement&) = default;
};

/* F2 dimension of M in one bidegree (0 or 1). */
int basis_dim(const Bidegree& d);

/* The unique basis element in bidegree d, when basis_dim(d) = 1. */
std::optional<ConeBasisElement> element_at(const Bidegree& d);

/* F2 dimension of H^{*,*}(Z/2) = Z/2[t, t^{-1}], t in (0,1). */
int free_orbit_dim(const Bidegree& d);

/* Product of basis elements; nullopt encodes zero.
 *
 * Top*Top adds exponents.  Top(a,b)*Bot(n,m) is Bot(n-a, m-b) when both
 * divisor exponents stay nonnegative and zero otherwise (the divisibility
 * tower truncates exponentwise).  Bot*Bot is zero.
 */
std::optional<ConeBasisElement> multiply_basis(const ConeBasisElement& x, const ConeBasisElement& y);

/* Element of M: an F2 set of cone basis elements, kept sorted.  Sums over
 * distinct bidegrees are permitted; homogeneity is checked only where an
 * operation needs it. */
class RingElement {
  public:
    RingElement() = default;
    explicit RingElement(const ConeBasisElement& b) : terms_{b} {}
    static RingElement zero() { return RingElement(); }
    static RingElement unit() { return RingElement(ConeBasisElement::one()); }
    static RingElement from_terms(std::vector<ConeBasisElement> terms);

    const std::vector<ConeBasisElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    /* Common bidegree of all terms; nullopt when zero or inhomogeneous. */
    std::optional<Bidegree> degree() const;

    RingElement operator+(const RingElement& o) const;  // F2 symmetric difference
    RingElement operator*(const RingElement& o) const;

    friend auto operator<=>(const RingElement&, const RingElement&) = default;

  private:
    std::vector<ConeBasisElement> terms_;
};

RingElement multiply(const RingElement& x, const RingElement& y);

}  // namespace equicoh
