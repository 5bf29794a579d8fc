#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicoh/bidegree.hpp"
#include "equicoh/point_ring.hpp"

namespace equicoh {

struct Generator {
    std::string label;
    Bidegree degree;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/* A free bigraded module over the point ring: one shifted copy of the ring
 * per generator.  Labels are unique; repeated bidegrees are fine. */
class FreeModule {
  public:
    FreeModule() = default;
    explicit FreeModule(std::vector<Generator> gens);
    /* Convenience: generators labeled g0, g1, ... at the given degrees. */
    static FreeModule from_degrees(const std::vector<Bidegree>& degrees);

    void add(const Generator& g);
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool has_label(const std::string& label) const;
    const Generator* find(const std::string& label) const;

    /* Generator degrees as a sorted multiset; two modules are isomorphic
     * exactly when these agree. */
    std::vector<Bidegree> degree_multiset() const;

    friend auto operator<=>(const FreeModule&, const FreeModule&) = default;

  private:
    std::vector<Generator> gens_;
};

/* Pointwise F2 dimension: the sum over generators of basis_dim(d - deg g). */
int module_dim(const FreeModule& M, const Bidegree& d);

/* Dimension counts over a finite window, stored densely. */
class DimensionTable {
  public:
    DimensionTable() = default;
    explicit DimensionTable(const Window& w) : window_(w), counts_(static_cast<std::size_t>(w.area()), 0) {}

    const Window& window() const { return window_; }
    int at(int p, int q) const { return counts_[index(p, q)]; }
    int at(const Bidegree& d) const { return at(d.p, d.q); }
    void set(int p, int q, int v) { counts_[index(p, q)] = v; }
    void add(int p, int q, int v) { counts_[index(p, q)] += v; }

    friend auto operator<=>(const DimensionTable&, const DimensionTable&) = default;

  private:
    std::size_t index(int p, int q) const {
        if (p < window_.pMin || p > window_.pMax || q < window_.qMin || q > window_.qMax)
            throw std::out_of_range("DimensionTable: bidegree outside window");
        return static_cast<std::size_t>(p - window_.pMin) * window_.height() +
               static_cast<std::size_t>(q - window_.qMin);
    }

    Window window_;
    std::vector<int> counts_;
};

DimensionTable dimension_table(const FreeModule& M, const Window& w);
/* Reference loop, always serial; the parallel kernel must match it exactly. */
DimensionTable dimension_table_serial(const FreeModule& M, const Window& w);

/* Number of generators in each topological degree.  This equals the stable
 * column value lim_{q->inf} module_dim(M,(k,q)), i.e. the nonequivariant
 * Betti numbers the module forgets to. */
std::map<int, int> singular_betti(const FreeModule& M);

/* Raised when a table cannot be certified as the table of a free module on
 * the given window. */
class RecoveryError : public std::runtime_error {
  public:
    RecoveryError(const std::string& what, Bidegree at) : std::runtime_error(what), at_(at) {}
    Bidegree at() const { return at_; }

  private:
    Bidegree at_;
};

/* Inverts dimension_table.  Sweeps columns left to right; the diagonal
 * difference T(p,t) - T(p-1,t-1) of the residual table (found generators
 * subtracted) is exactly the cumulative q-distribution of the column-p
 * generators, because both cones of any generator in a column > p cancel in
 * that difference.  The result is verified against the input table entry by
 * entry; failure throws RecoveryError naming the first offending bidegree.
 *
 * Recovered generators are labeled "g{p}_{q}_{k}" with k disambiguating
 * duplicates. */
FreeModule recover_generators(const DimensionTable& T);

}  // namespace equicoh
