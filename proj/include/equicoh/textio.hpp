#pragma once

#include <string>
#include <vector>

#include "equicoh/attach.hpp"
#include "equicoh/point_ring.hpp"
#include "equicoh/proj_ring.hpp"

namespace equicoh {

/* --- canonical printing ------------------------------------------------ */

std::string print_basis(const ConeBasisElement& b);     // "rho^2 tau", "theta/(rho tau^3)", "1"
std::string print_ring(const RingElement& x);           // terms joined by " + ", "0" when zero
std::string print_proj(const ProjRingElement& x);       // e.g. "rho a + tau b"
std::string print_singular(const SingularElement& x);   // e.g. "z^4 + z + 1"

/* --- parsing ------------------------------------------------------------ */

enum class DiagCode { Syntax, DuplicateLabel, OrderingViolation, UnresolvedReference, NoCells };

std::string to_string(DiagCode code);

struct Diagnostic {
    int line = 0;
    int col = 0;
    DiagCode code = DiagCode::Syntax;
    std::string message;

    std::string format() const;  // "line L, col C: [code] message"
};

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(Diagnostic d) : std::runtime_error(d.format()), diag_(std::move(d)) {}
    const Diagnostic& diag() const { return diag_; }

  private:
    Diagnostic diag_;
};

/* Point-ring expression: sums of products of rho/tau powers and at most one
 * divided theta, e.g. "tau^2", "theta/(rho tau^3)", "rho + tau theta/(tau)". */
RingElement parse_ring(const std::string& text);

/* Ring expression over a space, additionally allowing the classes a, b, c. */
ProjRingElement parse_proj(const SpaceId& space, const std::string& text);

/* --- cell complex documents (.eqc) -------------------------------------- */

struct DifferentialLine {
    std::string cell;    // label of the attached cell (the stage)
    std::string source;  // label of the generator carrying the image
    RingElement expr;    // coefficient of nu
};

struct ComplexDocument {
    std::string name;
    std::vector<Generator> cells;
    std::vector<DifferentialLine> differentials;

    CellComplexSpec to_spec() const;
};

/* Grammar:
 *   complex <name> {
 *     cell <label> (<p>,<q>)
 *     d <cellLabel> : <genLabel> = <ringExpr>
 *   }
 * with '#' line comments.  All diagnostics carry line/column and a code. */
ComplexDocument parse_complex(const std::string& text);

std::string print_complex(const ComplexDocument& doc);

}  // namespace equicoh
