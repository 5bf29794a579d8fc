#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicoh/bidegree.hpp"
#include "equicoh/free_module.hpp"
#include "equicoh/point_ring.hpp"

namespace equicoh {

/* Generator-wise images of the connecting map into the cohomology of the
 * attached cell.  images[g] is the coefficient of nu, the generator of the
 * cell's shifted ring copy.  The map has bidegree (1,0): for a source
 * generator at (pg,qg) and a (p,q)-cell every term must sit in bidegree
 * (pg+1-p, qg-q). */
struct DifferentialSpec {
    std::map<std::string, RingElement> images;

    bool is_zero() const;
    RingElement image_of(const std::string& label) const;
};

/* Checks the bidegree-homogeneity invariant of d against B and the cell;
 * throws std::invalid_argument on violation. */
void validate_differential(const FreeModule& B, const Bidegree& cell, const DifferentialSpec& d);

enum class AttachmentCase { NoDifferential, Kill, BottomShift, GeneralRamp };

std::string to_string(AttachmentCase c);

/* What one attachment did to the generator multiset. */
struct AttachmentOutcome {
    FreeModule result;
    AttachmentCase kind = AttachmentCase::NoDifferential;
    std::vector<Generator> removed;  // generators of B that changed degree or died
    std::vector<Generator> added;    // their replacements plus the cell class
};

/* The cohomology after attaching departs from a free module: some image of
 * the connecting map survives in the top cone of nu, which the change-of-
 * basis analysis forbids for genuine Rep(Z/2)-complexes. */
class FreenessError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* The window is too small for the result's generators to be read off. */
class WindowError : public std::runtime_error {
  public:
    WindowError(const std::string& what, Bidegree at) : std::runtime_error(what), at_(at) {}
    Bidegree at() const { return at_; }

  private:
    Bidegree at_;
};

/* Attaches a single (p,q)-cell to a space with free cohomology B.
 *
 * For every bidegree (s,t) in w the connecting map B_(s,t) -> (S^cell M)_(s+1,t)
 * has an F2 rank r(s,t); the new dimension at (s,t) is
 * (dim B - r(s,t)) + (dim S^cell M - r(s-1,t)), i.e. kernel plus cokernel.
 * The resulting table is handed to recover_generators; success is the
 * freeness certificate.  cellLabel, when nonempty, names the cell's class
 * whenever it survives with its original bidegree.
 *
 * Errors: invalid d -> std::invalid_argument; unreadable result ->
 * WindowError; certified non-free result -> FreenessError. */
AttachmentOutcome attach_cell(const FreeModule& B, const Bidegree& cell, const DifferentialSpec& d,
                              const Window& w, const std::string& cellLabel = "");

/* Change of basis normal form for a differential whose nonzero images are
 * single basis multiples of nu on one divisibility ray (all rho^a tau^* for
 * one a, or all theta/(rho^n tau^*) for one n).  The attaching map slides
 * off every generator except the one of minimal q; the returned spec has at
 * most one nonzero image and the same degreewise ranks everywhere.  Images
 * outside that family -> std::invalid_argument ("unsupported shape"). */
DifferentialSpec reduce_basis(const FreeModule& B, const Bidegree& cell, const DifferentialSpec& d);

/* An ordered Rep(Z/2)-cell list with per-attachment differential data. */
struct CellComplexSpec {
    std::vector<Generator> cells;               // (label, bidegree), attachment order
    std::map<std::size_t, DifferentialSpec> differentials;  // stage index -> images

    /* Ordering invariant: p nondecreasing, q nondecreasing within equal p,
     * first cell (0,0).  Throws std::invalid_argument. */
    void validate() const;
};

struct StageLog {
    std::size_t stage = 0;
    Generator cell;
    AttachmentCase kind = AttachmentCase::NoDifferential;
    std::vector<Generator> removed;
    std::vector<Generator> added;
};

struct FiltrationResult {
    FreeModule cohomology;
    std::vector<StageLog> log;
};

/* Runs the one-at-a-time cell filtration, folding attach_cell over the
 * cells.  Errors from a stage are rethrown with the stage index attached. */
FiltrationResult run_filtration(const CellComplexSpec& spec, const Window& w);

/* A window large enough for every module arising while attaching the given
 * cells, including the degree shifts bottom-cone differentials can cause. */
Window default_window_for_cells(const std::vector<Generator>& cells);

}  // namespace equicoh
