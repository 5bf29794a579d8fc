#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equicoh/bidegree.hpp"
#include "equicoh/free_module.hpp"
#include "equicoh/point_ring.hpp"

namespace equicoh {

/* The spaces whose RO(Z/2)-graded cohomology rings are implemented:
 * the sign sphere S^{1,1}, the twisted projective spaces RP^n_tw and
 * RP^inf_tw, and P(R^{4,1}). */
struct SpaceId {
    enum class Kind { S11, RPtw, RPtwInf, P41 };

    Kind kind = Kind::RPtwInf;
    int n = 0;  // RPtw only

    static SpaceId s11() { return {Kind::S11, 0}; }
    static SpaceId rptw(int n);
    static SpaceId rpinf() { return {Kind::RPtwInf, 0}; }
    static SpaceId p41() { return {Kind::P41, 0}; }

    friend auto operator<=>(const SpaceId&, const SpaceId&) = default;
};

std::string to_string(const SpaceId& s);
std::optional<SpaceId> space_from_string(const std::string& name);

/* The free module underlying the space's cohomology (generator degrees per
 * the cell structures; RPtwInf truncated to generators visible in w). */
FreeModule space_module(const SpaceId& s, const Window& w);

/* One monomial coeff * a^aExp * b^bExp * c^cExp over the point ring.
 * deg a = (1,1), deg b = (2,1), deg c = (3,1); c exists only on P(R^{4,1}). */
struct ProjMonomial {
    ConeBasisElement coeff;
    int aExp = 0;
    int bExp = 0;
    int cExp = 0;

    Bidegree degree() const;

    friend auto operator<=>(const ProjMonomial&, const ProjMonomial&) = default;
};

/* F2 sum of monomials in one space's cohomology ring.  Terms are kept
 * sorted in the canonical print order; elements need not be in normal form
 * until normal_form is applied. */
struct ProjRingElement {
    SpaceId space;
    std::vector<ProjMonomial> terms;

    static ProjRingElement zero(const SpaceId& s) { return {s, {}}; }
    static ProjRingElement from_terms(const SpaceId& s, std::vector<ProjMonomial> terms);

    bool is_zero() const { return terms.empty(); }

    friend auto operator<=>(const ProjRingElement&, const ProjRingElement&) = default;
};

/* Named generator classes (unit coefficient). */
ProjRingElement proj_one(const SpaceId& s);
ProjRingElement proj_a(const SpaceId& s);
ProjRingElement proj_b(const SpaceId& s);
ProjRingElement proj_c(const SpaceId& s);  // P41 only

/* Rewrites to the unique normal form; idempotent.
 *
 * Everywhere: a^2 -> rho a + tau b (on S^{1,1} simply a^2 -> rho a, where b
 * is already zero).  RP^n_tw: a monomial whose topological degree e + 2k
 * exceeds n is zero.  P(R^{4,1}): ab -> tau c, bc -> 0, c^2 -> 0, and the
 * closure relations bb -> 0, ac -> rho c these force.  Normal-form
 * monomials match the free-module generators one for one. */
ProjRingElement normal_form(const ProjRingElement& x);

/* Distribute, multiply coefficients in the point ring, add exponents, then
 * normal_form.  Spaces must agree. */
ProjRingElement multiply_ring(const ProjRingElement& x, const ProjRingElement& y);

ProjRingElement add_ring(const ProjRingElement& x, const ProjRingElement& y);

/* Element of the singular cohomology ring Z/2[z]/(z^{dim+1}); truncation
 * absent for the infinite space. */
struct SingularElement {
    std::set<int> exps;               // exponents of z present
    std::optional<int> truncation;    // z^k = 0 for k > truncation

    bool is_zero() const { return exps.empty(); }

    SingularElement operator+(const SingularElement& o) const;
    SingularElement operator*(const SingularElement& o) const;

    friend auto operator<=>(const SingularElement&, const SingularElement&) = default;
};

/* The forgetful ring map psi: rho -> 0, tau -> 1, theta-divided classes -> 0,
 * a -> z, b -> z^2, c -> z^3, truncated by the space's singular ring. */
SingularElement forgetful(const ProjRingElement& x);

/* Restriction along the standard inclusions: S11 c RPtw(n) c RPtw(n+1) c
 * RPtwInf, and P41 receiving from RPtwInf.  Sends a -> a, b -> b and
 * normalizes in the target, so source classes above the target's truncation
 * die.  Unsupported pairs throw std::invalid_argument. */
ProjRingElement restrict_to(const ProjRingElement& x, const SpaceId& to);

}  // namespace equicoh
