#include "equicoh/free_module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "equicoh/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace equicoh {

FreeModule::FreeModule(std::vector<Generator> gens) {
    for (auto& g : gens)
        add(g);
}

FreeModule FreeModule::from_degrees(const std::vector<Bidegree>& degrees) {
    FreeModule M;
    int i = 0;
    for (const auto& d : degrees)
        M.add({"g" + std::to_string(i++), d});
    return M;
}

void FreeModule::add(const Generator& g) {
    if (has_label(g.label))
        throw std::invalid_argument("FreeModule: duplicate generator label '" + g.label + "'");
    gens_.push_back(g);
}

bool FreeModule::has_label(const std::string& label) const {
    return find(label) != nullptr;
}

const Generator* FreeModule::find(const std::string& label) const {
    for (const auto& g : gens_)
        if (g.label == label)
            return &g;
    return nullptr;
}

std::vector<Bidegree> FreeModule::degree_multiset() const {
    std::vector<Bidegree> ds;
    ds.reserve(gens_.size());
    for (const auto& g : gens_)
        ds.push_back(g.degree);
    std::sort(ds.begin(), ds.end());
    return ds;
}

int module_dim(const FreeModule& M, const Bidegree& d) {
    int dim = 0;
    for (const auto& g : M.generators())
        dim += basis_dim(d - g.degree);
    return dim;
}

DimensionTable dimension_table_serial(const FreeModule& M, const Window& w) {
    DimensionTable T(w);
    for (int p = w.pMin; p <= w.pMax; ++p)
        for (int q = w.qMin; q <= w.qMax; ++q)
            T.set(p, q, module_dim(M, {p, q}));
    return T;
}

DimensionTable dimension_table(const FreeModule& M, const Window& w) {
#ifdef _OPENMP
    if (exec_mode() == ExecMode::Parallel) {
        DimensionTable T(w);
        const int nthreads = thread_count();
#pragma omp parallel for schedule(static) num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
        for (int p = w.pMin; p <= w.pMax; ++p)
            for (int q = w.qMin; q <= w.qMax; ++q)
                T.set(p, q, module_dim(M, {p, q}));
        return T;
    }
#endif
    return dimension_table_serial(M, w);
}

std::map<int, int> singular_betti(const FreeModule& M) {
    std::map<int, int> betti;
    for (const auto& g : M.generators())
        ++betti[g.degree.p];
    return betti;
}

namespace {

/* Subtracts the full dimension table of one shifted ring copy, checking that
 * no entry goes negative. */
void subtract_generator(DimensionTable& resid, const Bidegree& g) {
    const Window& w = resid.window();
    for (int p = w.pMin; p <= w.pMax; ++p)
        for (int q = w.qMin; q <= w.qMax; ++q) {
            const int c = basis_dim(Bidegree{p, q} - g);
            if (c == 0)
                continue;
            resid.add(p, q, -c);
            if (resid.at(p, q) < 0)
                throw RecoveryError("not a free-module table / window too small", {p, q});
        }
}

}  // namespace

FreeModule recover_generators(const DimensionTable& T) {
    const Window& w = T.window();
    DimensionTable resid = T;
    std::vector<Bidegree> found;

    for (int p = w.pMin + 1; p <= w.pMax; ++p) {
        // Cumulative count of column-p generators with q <= t.
        std::vector<int> cum(static_cast<std::size_t>(w.height()), 0);
        for (int t = w.qMin + 1; t <= w.qMax; ++t) {
            const int c = resid.at(p, t) - resid.at(p - 1, t - 1);
            if (c < 0)
                throw RecoveryError("not a free-module table / window too small", {p, t});
            cum[static_cast<std::size_t>(t - w.qMin)] = c;
        }
        std::vector<Bidegree> column;
        for (int t = w.qMax; t >= w.qMin + 2; --t) {
            const int here = cum[static_cast<std::size_t>(t - w.qMin)];
            const int below = cum[static_cast<std::size_t>(t - 1 - w.qMin)];
            const int count = here - below;
            if (count < 0)
                throw RecoveryError("not a free-module table / window too small", {p, t});
            for (int k = 0; k < count; ++k)
                column.push_back({p, t});
        }
        for (const auto& g : column) {
            subtract_generator(resid, g);
            found.push_back(g);
        }
    }

    // Exact verification: every contribution must be accounted for.
    for (int p = w.pMin; p <= w.pMax; ++p)
        for (int q = w.qMin; q <= w.qMax; ++q)
            if (resid.at(p, q) != 0)
                throw RecoveryError("not a free-module table / window too small", {p, q});

    std::sort(found.begin(), found.end());
    FreeModule M;
    std::map<Bidegree, int> dup;
    for (const auto& d : found) {
        const int k = dup[d]++;
        std::ostringstream label;
        label << "g" << d.p << "_" << d.q << "_" << k;
        M.add({label.str(), d});
    }
    return M;
}

}  // namespace equicoh
