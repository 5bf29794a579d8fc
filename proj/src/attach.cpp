#include "equicoh/attach.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "equicoh/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace equicoh {

bool DifferentialSpec::is_zero() const {
    for (const auto& [label, image] : images)
        if (!image.is_zero())
            return false;
    return true;
}

RingElement DifferentialSpec::image_of(const std::string& label) const {
    auto it = images.find(label);
    return it == images.end() ? RingElement::zero() : it->second;
}

void validate_differential(const FreeModule& B, const Bidegree& cell, const DifferentialSpec& d) {
    for (const auto& [label, image] : d.images) {
        const Generator* g = B.find(label);
        if (!g)
            throw std::invalid_argument("differential references unknown generator '" + label + "'");
        if (image.is_zero())
            continue;
        const Bidegree want{g->degree.p + 1 - cell.p, g->degree.q - cell.q};
        for (const auto& term : image.terms())
            if (term.degree() != want)
                throw std::invalid_argument("differential on '" + label + "' is not homogeneous of bidegree " +
                                            to_string(want) + " (term at " + to_string(term.degree()) + ")");
    }
}

std::string to_string(AttachmentCase c) {
    switch (c) {
        case AttachmentCase::NoDifferential: return "NoDifferential";
        case AttachmentCase::Kill: return "Kill";
        case AttachmentCase::BottomShift: return "BottomShift";
        case AttachmentCase::GeneralRamp: return "GeneralRamp";
    }
    return "?";
}

namespace {

/* Rank (0 or 1) of the connecting map B_(s,t) -> (S^cell M)_(s+1,t).  The
 * target is at most one-dimensional, so the rank is 1 exactly when some
 * basis vector x*g maps to a nonzero multiple of nu. */
int rank_at(const FreeModule& B, const DifferentialSpec& d, int s, int t) {
    for (const auto& g : B.generators()) {
        const RingElement image = d.image_of(g.label);
        if (image.is_zero())
            continue;
        const auto x = element_at(Bidegree{s, t} - g.degree);
        if (!x)
            continue;
        if (!(RingElement(*x) * image).is_zero())
            return 1;
    }
    return 0;
}

DimensionTable attachment_table(const FreeModule& B, const Bidegree& cell, const DifferentialSpec& d,
                                const Window& w) {
    // Ranks on one extra column to the left feed the cokernel term at pMin.
    const int pLo = w.pMin - 1;
    const int cols = w.pMax - pLo + 1;
    std::vector<int> ranks(static_cast<std::size_t>(cols) * w.height(), 0);
    auto rank_index = [&](int s, int t) {
        return static_cast<std::size_t>(s - pLo) * w.height() + static_cast<std::size_t>(t - w.qMin);
    };

#ifdef _OPENMP
    if (exec_mode() == ExecMode::Parallel) {
        const int nthreads = thread_count();
#pragma omp parallel for schedule(static) num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
        for (int s = pLo; s <= w.pMax; ++s)
            for (int t = w.qMin; t <= w.qMax; ++t)
                ranks[rank_index(s, t)] = rank_at(B, d, s, t);
    } else
#endif
    {
        for (int s = pLo; s <= w.pMax; ++s)
            for (int t = w.qMin; t <= w.qMax; ++t)
                ranks[rank_index(s, t)] = rank_at(B, d, s, t);
    }

    DimensionTable T(w);
    for (int s = w.pMin; s <= w.pMax; ++s)
        for (int t = w.qMin; t <= w.qMax; ++t) {
            const int kernel = module_dim(B, {s, t}) - ranks[rank_index(s, t)];
            const int cokernel = basis_dim(Bidegree{s, t} - cell) - ranks[rank_index(s - 1, t)];
            T.set(s, t, kernel + cokernel);
        }
    return T;
}

std::vector<Bidegree> multiset_difference(std::vector<Bidegree> a, const std::vector<Bidegree>& b) {
    for (const auto& d : b) {
        auto it = std::find(a.begin(), a.end(), d);
        if (it != a.end())
            a.erase(it);
    }
    return a;
}

std::string fresh_label(const Bidegree& d, const std::set<std::string>& used) {
    for (int k = 0;; ++k) {
        std::ostringstream os;
        os << "g" << d.p << "_" << d.q << "_" << k;
        if (!used.count(os.str()))
            return os.str();
    }
}

}  // namespace

AttachmentOutcome attach_cell(const FreeModule& B, const Bidegree& cell, const DifferentialSpec& d,
                              const Window& w, const std::string& cellLabel) {
    validate_differential(B, cell, d);

    FreeModule recovered;
    try {
        recovered = recover_generators(attachment_table(B, cell, d, w));
    } catch (const RecoveryError& first) {
        // Distinguish a cramped window from a genuinely non-free page: a free
        // result becomes readable on a larger window, a non-free one never does.
        const int margin = std::max(w.width(), w.height()) + 4;
        try {
            recover_generators(attachment_table(B, cell, d, w.expanded(margin)));
        } catch (const RecoveryError&) {
            throw FreenessError("freeness violated: attaching a " + to_string(cell) +
                                " cell leaves a non-free page (inadmissible differential)");
        }
        throw WindowError(std::string("window too small: ") + first.what() + " at " + to_string(first.at()),
                          first.at());
    }

    const std::vector<Bidegree> before = B.degree_multiset();
    const std::vector<Bidegree> after = recovered.degree_multiset();
    const std::vector<Bidegree> removedDegrees = multiset_difference(before, after);
    const std::vector<Bidegree> addedDegrees = multiset_difference(after, before);

    // Pick which B-generators were consumed: prefer the carriers of nonzero
    // images; break remaining ties by label.
    AttachmentOutcome out;
    std::set<std::string> removedLabels;
    for (const auto& deg : removedDegrees) {
        const Generator* pick = nullptr;
        auto better = [&](const Generator& g) {
            if (!pick)
                return true;
            const bool gMoved = !d.image_of(g.label).is_zero();
            const bool pickMoved = !d.image_of(pick->label).is_zero();
            if (gMoved != pickMoved)
                return gMoved;
            return g.label < pick->label;
        };
        for (const auto& g : B.generators())
            if (g.degree == deg && !removedLabels.count(g.label) && better(g))
                pick = &g;
        removedLabels.insert(pick->label);
        out.removed.push_back(*pick);
    }

    std::set<std::string> used;
    for (const auto& g : B.generators())
        if (!removedLabels.count(g.label)) {
            out.result.add(g);
            used.insert(g.label);
        }
    for (const auto& deg : addedDegrees) {
        std::string label;
        if (deg == cell && !cellLabel.empty() && !used.count(cellLabel))
            label = cellLabel;
        else
            label = fresh_label(deg, used);
        used.insert(label);
        out.result.add({label, deg});
        out.added.push_back({label, deg});
    }

    if (d.is_zero())
        out.kind = AttachmentCase::NoDifferential;
    else if (addedDegrees.empty() && removedDegrees.size() == 1 &&
             removedDegrees[0] == Bidegree{cell.p - 1, cell.q})
        out.kind = AttachmentCase::Kill;
    else if (removedDegrees.size() == 1 && addedDegrees.size() == 2)
        out.kind = AttachmentCase::BottomShift;
    else
        out.kind = AttachmentCase::GeneralRamp;
    return out;
}

DifferentialSpec reduce_basis(const FreeModule& B, const Bidegree& cell, const DifferentialSpec& d) {
    validate_differential(B, cell, d);

    std::vector<std::pair<const Generator*, ConeBasisElement>> nonzero;
    for (const auto& [label, image] : d.images) {
        if (image.is_zero())
            continue;
        if (image.terms().size() != 1)
            throw std::invalid_argument("reduce_basis: unsupported shape (multi-term image on '" + label + "')");
        nonzero.emplace_back(B.find(label), image.terms().front());
    }
    if (nonzero.size() <= 1)
        return d;

    const ConeBasisElement head = nonzero.front().second;
    for (const auto& [g, c] : nonzero)
        if (c.cone != head.cone || c.e1 != head.e1)
            throw std::invalid_argument("reduce_basis: unsupported shape (images on different rays)");

    // Keep the generator of minimal q; the tau-power change of basis
    // w_i -> tau^{delta} w_keep + w_i zeroes every other image.
    const Generator* keep = nonzero.front().first;
    for (const auto& [g, c] : nonzero)
        if (g->degree.q < keep->degree.q || (g->degree.q == keep->degree.q && g->label < keep->label))
            keep = g;

    DifferentialSpec reduced;
    reduced.images[keep->label] = d.image_of(keep->label);
    return reduced;
}

void CellComplexSpec::validate() const {
    if (cells.empty())
        throw std::invalid_argument("cell complex: no cells");
    if (cells.front().degree != Bidegree{0, 0})
        throw std::invalid_argument("cell complex: first cell must be (0,0)");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!labels.insert(cells[i].label).second)
            throw std::invalid_argument("cell complex: duplicate label '" + cells[i].label + "'");
        if (i == 0)
            continue;
        const Bidegree& prev = cells[i - 1].degree;
        const Bidegree& cur = cells[i].degree;
        if (cur.p < prev.p || (cur.p == prev.p && cur.q < prev.q))
            throw std::invalid_argument("cell complex: cell '" + cells[i].label +
                                        "' violates the attachment ordering (p, then q, nondecreasing)");
    }
    for (const auto& [stage, diff] : differentials)
        if (stage == 0 || stage >= cells.size())
            throw std::invalid_argument("cell complex: differential at invalid stage " + std::to_string(stage));
}

FiltrationResult run_filtration(const CellComplexSpec& spec, const Window& w) {
    spec.validate();

    FiltrationResult res;
    res.cohomology.add(spec.cells.front());
    res.log.push_back({0, spec.cells.front(), AttachmentCase::NoDifferential, {}, {spec.cells.front()}});

    for (std::size_t stage = 1; stage < spec.cells.size(); ++stage) {
        const Generator& cell = spec.cells[stage];
        DifferentialSpec d;
        if (auto it = spec.differentials.find(stage); it != spec.differentials.end())
            d = it->second;
        const std::string where = "stage " + std::to_string(stage) + " (cell '" + cell.label + "'): ";
        try {
            AttachmentOutcome out = attach_cell(res.cohomology, cell.degree, d, w, cell.label);
            res.log.push_back({stage, cell, out.kind, out.removed, out.added});
            res.cohomology = std::move(out.result);
        } catch (const FreenessError& e) {
            throw FreenessError(where + e.what());
        } catch (const WindowError& e) {
            throw WindowError(where + e.what(), e.at());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(where + e.what());
        }
    }
    return res;
}

Window default_window_for_cells(const std::vector<Generator>& cells) {
    int pMax = 0, qMin = 0, qMax = 0;
    for (const auto& c : cells) {
        pMax = std::max(pMax, c.degree.p);
        qMin = std::min(qMin, c.degree.q);
        qMax = std::max(qMax, c.degree.q);
    }
    /* Degree shifts move generators up in q but never below the lowest cell
     * weight, so a fixed margin around the cell box suffices. */
    return Window(-2, pMax + 2, qMin - 4, qMax + 2);
}

}  // namespace equicoh
