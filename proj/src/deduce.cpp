#include "equicoh/deduce.hpp"

#include <algorithm>

#include "equicoh/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace equicoh {

std::vector<FlagSymbol> enumerate_flag_symbols(int p, int q) {
    if (q < 0 || q > p)
        throw std::invalid_argument("enumerate_flag_symbols: need 0 <= q <= p");
    std::vector<FlagSymbol> out;
    std::vector<int> phi(q);
    for (int i = 0; i < q; ++i)
        phi[i] = i + 1;
    while (true) {
        out.push_back(FlagSymbol{phi});
        int i = q - 1;
        while (i >= 0 && phi[i] == p - (q - 1 - i))
            --i;
        if (i < 0)
            break;
        ++phi[i];
        for (int j = i + 1; j < q; ++j)
            phi[j] = phi[j - 1] + 1;
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Determined: return "Determined";
        case Verdict::Ambiguous: return "Ambiguous";
        case Verdict::Inconsistent: return "Inconsistent";
    }
    return "?";
}

namespace {

struct Search {
    const std::vector<Generator>& cells;
    const Window& w;
    long long nodeCap;
    long long nodes = 0;
    /* Subtree results depend only on (stage, module), so identical
     * intermediate modules share their futures. */
    std::map<std::pair<std::size_t, Candidate>, CandidateSet> memo;

    CandidateSet run() {
        FreeModule base;
        base.add(cells.front());
        return explore(1, base);
    }

    CandidateSet explore(std::size_t stage, const FreeModule& B) {
        if (stage == cells.size()) {
            CandidateSet out;
            if (B.size() == cells.size() && betti_matches(B))
                out.insert(B.degree_multiset());
            return out;
        }
        const auto key = std::make_pair(stage, B.degree_multiset());
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        const Bidegree cell = cells[stage].degree;

        /* Per generator: zero always; the forced-bidegree basis element when
         * it is the unit (kill) or a bottom-cone class. */
        std::vector<std::pair<std::string, ConeBasisElement>> optional_images;
        for (const auto& g : B.generators()) {
            const Bidegree cdeg{g.degree.p + 1 - cell.p, g.degree.q - cell.q};
            const auto elem = element_at(cdeg);
            if (!elem)
                continue;
            if (elem->cone == ConeBasisElement::Cone::Bot || cdeg == Bidegree{0, 0})
                optional_images.emplace_back(g.label, *elem);
        }
        if (optional_images.size() >= 40)
            throw ResourceCapError("admissible differential search exploded", nodeCap);

        CandidateSet out;
        const std::size_t combos = std::size_t{1} << optional_images.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            DifferentialSpec d;
            for (std::size_t i = 0; i < optional_images.size(); ++i)
                if (mask & (std::size_t{1} << i))
                    d.images[optional_images[i].first] = RingElement(optional_images[i].second);

            if (++nodes > nodeCap)
                throw ResourceCapError("admissible differential search exceeded the node cap", nodeCap);

            FreeModule next;
            try {
                next = attach_cell(B, cell, d, w, cells[stage].label).result;
            } catch (const FreenessError&) {
                continue;  // inadmissible assignment
            }
            // Remaining stages add at most one generator each.
            if (next.size() + (cells.size() - stage - 1) < cells.size())
                continue;
            CandidateSet sub = explore(stage + 1, next);
            out.insert(sub.begin(), sub.end());
        }
        memo.emplace(key, out);
        return out;
    }

    bool betti_matches(const FreeModule& B) const {
        std::map<int, int> want;
        for (const auto& c : cells)
            ++want[c.degree.p];
        return singular_betti(B) == want;
    }
};

}  // namespace

CandidateSet admissible_outcomes(const std::vector<Generator>& cells, const Window& w,
                                 const SearchOptions& opts) {
    CellComplexSpec ordering_check;
    ordering_check.cells = cells;
    ordering_check.validate();

    Search s{cells, w, opts.nodeCap, 0, {}};
    return s.run();
}

DeductionReport deduce(int n, int p, int q, const Window& w, const std::vector<FlagSymbol>& flags,
                       const SearchOptions& opts) {
    GrassmannianDesc probe{n, p, q, FlagSymbol{}};
    probe.flag = enumerate_flag_symbols(p, q).front();
    validate_grassmannian(probe);

    std::vector<FlagSymbol> use = flags.empty() ? enumerate_flag_symbols(p, q) : flags;
    for (const auto& f : use)
        validate_flag_symbol(f, p, q);

    DeductionReport report;
    report.n = n;
    report.p = p;
    report.q = q;
    report.window = w;
    report.perFlag.resize(use.size());

    std::exception_ptr failure;

#ifdef _OPENMP
    if (exec_mode() == ExecMode::Parallel) {
        const int nthreads = thread_count();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
        for (std::size_t i = 0; i < use.size(); ++i) {
            try {
                std::vector<Generator> cells;
                int k = 0;
                for (const auto& [sigma, d] : enumerate_cells({n, p, q, use[i]}))
                    cells.push_back({"c" + std::to_string(k++), d});
                report.perFlag[i] = {use[i], admissible_outcomes(cells, w, opts)};
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
    } else
#endif
    {
        for (std::size_t i = 0; i < use.size(); ++i) {
            std::vector<Generator> cells;
            int k = 0;
            for (const auto& [sigma, d] : enumerate_cells({n, p, q, use[i]}))
                cells.push_back({"c" + std::to_string(k++), d});
            report.perFlag[i] = {use[i], admissible_outcomes(cells, w, opts)};
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    bool first = true;
    for (const auto& [flag, set] : report.perFlag) {
        if (first) {
            report.intersection = set;
            first = false;
            continue;
        }
        CandidateSet kept;
        for (const auto& c : report.intersection)
            if (set.count(c))
                kept.insert(c);
        report.intersection = std::move(kept);
    }

    if (report.intersection.size() == 1) {
        report.verdict = Verdict::Determined;
        report.determined = *report.intersection.begin();
    } else if (report.intersection.empty()) {
        report.verdict = Verdict::Inconsistent;
    } else {
        report.verdict = Verdict::Ambiguous;
    }
    return report;
}

Window default_window_for_grassmannian(int n, int p, int q) {
    (void)q;
    /* Cells are (a,b) with 0 <= b <= a <= n(p-n), and attachments keep every
     * generator weight inside the cell weight range. */
    const int pMax = n * (p - n);
    return Window(-2, pMax + 2, -6, pMax + 4);
}

}  // namespace equicoh
