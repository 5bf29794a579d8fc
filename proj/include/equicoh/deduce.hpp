#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "equicoh/attach.hpp"
#include "equicoh/free_module.hpp"
#include "equicoh/schubert.hpp"

namespace equicoh {

/* Canonical form for a set of candidate cohomologies: each candidate is the
 * sorted generator-degree multiset of a free module. */
using Candidate = std::vector<Bidegree>;
using CandidateSet = std::set<Candidate>;

/* All C(p,q) flag symbols for R^{p,q}, lexicographic. */
std::vector<FlagSymbol> enumerate_flag_symbols(int p, int q);

class ResourceCapError : public std::runtime_error {
  public:
    ResourceCapError(const std::string& what, long long cap) : std::runtime_error(what), cap_(cap) {}
    long long cap() const { return cap_; }

  private:
    long long cap_;
};

struct SearchOptions {
    long long nodeCap = 1'000'000;  // attach_cell invocations per flag
};

/* Every cohomology a one-at-a-time filtration of the given cells can
 * produce under an admissible differential assignment.
 *
 * At each attachment the image of a surviving generator is bidegree-forced,
 * so the candidates per generator are: zero, the unit (a kill, when the
 * forced bidegree is (0,0)), or the single bottom-cone basis element in the
 * forced bidegree.  Branches whose page fails the freeness certificate are
 * pruned, as are branches whose generator count can no longer reach the
 * cell count.  Surviving outcomes are further required to have one
 * generator per cell and the cells' dimension multiset as column counts. */
CandidateSet admissible_outcomes(const std::vector<Generator>& cells, const Window& w,
                                 const SearchOptions& opts = {});

enum class Verdict { Determined, Ambiguous, Inconsistent };

std::string to_string(Verdict v);

struct DeductionReport {
    int n = 0, p = 0, q = 0;
    Window window;
    std::vector<std::pair<FlagSymbol, CandidateSet>> perFlag;
    CandidateSet intersection;
    Verdict verdict = Verdict::Inconsistent;
    std::optional<Candidate> determined;  // present exactly when verdict == Determined
};

/* Runs admissible_outcomes for every flag symbol (or the given subset) of
 * G_n(R^{p,q}) and intersects the canonical candidate sets. */
DeductionReport deduce(int n, int p, int q, const Window& w,
                       const std::vector<FlagSymbol>& flags = {}, const SearchOptions& opts = {});

/* A window adequate for deduce(n,p,q). */
Window default_window_for_grassmannian(int n, int p, int q);

}  // namespace equicoh
