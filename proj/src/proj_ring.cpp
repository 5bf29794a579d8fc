#include "equicoh/proj_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace equicoh {

SpaceId SpaceId::rptw(int n) {
    if (n < 1)
        throw std::invalid_argument("SpaceId::rptw: need n >= 1");
    return {Kind::RPtw, n};
}

std::string to_string(const SpaceId& s) {
    switch (s.kind) {
        case SpaceId::Kind::S11: return "s11";
        case SpaceId::Kind::RPtw: return "rptw" + std::to_string(s.n);
        case SpaceId::Kind::RPtwInf: return "rpinf";
        case SpaceId::Kind::P41: return "p41";
    }
    return "?";
}

std::optional<SpaceId> space_from_string(const std::string& name) {
    if (name == "s11")
        return SpaceId::s11();
    if (name == "rpinf")
        return SpaceId::rpinf();
    if (name == "p41")
        return SpaceId::p41();
    if (name.rfind("rptw", 0) == 0 && name.size() > 4) {
        int n = 0;
        for (std::size_t i = 4; i < name.size(); ++i) {
            if (!isdigit(static_cast<unsigned char>(name[i])))
                return std::nullopt;
            n = n * 10 + (name[i] - '0');
        }
        if (n >= 1)
            return SpaceId::rptw(n);
    }
    return std::nullopt;
}

FreeModule space_module(const SpaceId& s, const Window& w) {
    auto twisted_gens = [&](int top) {
        FreeModule M;
        for (int k = 0; k <= top; ++k)
            M.add({"g" + std::to_string(k), {k, (k + 1) / 2}});
        return M;
    };
    switch (s.kind) {
        case SpaceId::Kind::S11: return twisted_gens(1);
        case SpaceId::Kind::RPtw: return twisted_gens(s.n);
        case SpaceId::Kind::RPtwInf: return twisted_gens(std::max(0, w.pMax));
        case SpaceId::Kind::P41: {
            FreeModule M;
            M.add({"g0", {0, 0}});
            M.add({"g1", {1, 1}});
            M.add({"g2", {2, 1}});
            M.add({"g3", {3, 1}});
            return M;
        }
    }
    throw std::logic_error("space_module: bad SpaceId");
}

Bidegree ProjMonomial::degree() const {
    const Bidegree gens{aExp + 2 * bExp + 3 * cExp, aExp + bExp + cExp};
    return coeff.degree() + gens;
}

namespace {

/* Canonical term order: generator part first (a before pure b-powers, low
 * b-powers first), coefficient last. */
bool monomial_less(const ProjMonomial& x, const ProjMonomial& y) {
    if (x.aExp != y.aExp)
        return x.aExp > y.aExp;
    if (x.bExp != y.bExp)
        return x.bExp < y.bExp;
    if (x.cExp != y.cExp)
        return x.cExp < y.cExp;
    return x.coeff < y.coeff;
}

std::vector<ProjMonomial> f2_reduce(std::vector<ProjMonomial> terms) {
    std::sort(terms.begin(), terms.end(), monomial_less);
    std::vector<ProjMonomial> kept;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            kept.push_back(terms[i]);
        i = j;
    }
    return kept;
}

void require_no_c(const SpaceId& s, const ProjMonomial& m) {
    if (m.cExp > 0 && s.kind != SpaceId::Kind::P41)
        throw std::invalid_argument("the class c exists only on p41, not on " + to_string(s));
}

}  // namespace

ProjRingElement ProjRingElement::from_terms(const SpaceId& s, std::vector<ProjMonomial> terms) {
    for (const auto& m : terms)
        require_no_c(s, m);
    return {s, f2_reduce(std::move(terms))};
}

ProjRingElement proj_one(const SpaceId& s) {
    return ProjRingElement::from_terms(s, {{ConeBasisElement::one(), 0, 0, 0}});
}

ProjRingElement proj_a(const SpaceId& s) {
    return ProjRingElement::from_terms(s, {{ConeBasisElement::one(), 1, 0, 0}});
}

ProjRingElement proj_b(const SpaceId& s) {
    return ProjRingElement::from_terms(s, {{ConeBasisElement::one(), 0, 1, 0}});
}

ProjRingElement proj_c(const SpaceId& s) {
    return ProjRingElement::from_terms(s, {{ConeBasisElement::one(), 0, 0, 1}});
}

ProjRingElement normal_form(const ProjRingElement& x) {
    const SpaceId s = x.space;
    std::vector<ProjMonomial> done;
    std::vector<ProjMonomial> work(x.terms.begin(), x.terms.end());

    auto push_scaled = [&](const ProjMonomial& m, const ConeBasisElement& scale, int da, int db, int dc) {
        if (auto coeff = multiply_basis(m.coeff, scale))
            work.push_back({*coeff, m.aExp + da, m.bExp + db, m.cExp + dc});
    };

    while (!work.empty()) {
        ProjMonomial m = work.back();
        work.pop_back();
        require_no_c(s, m);

        if (m.aExp >= 2) {
            // a^2 = rho a + tau b; on S^{1,1} the b term is already zero.
            push_scaled(m, ConeBasisElement::rho(), -1, 0, 0);
            if (s.kind != SpaceId::Kind::S11)
                push_scaled(m, ConeBasisElement::tau(), -2, 1, 0);
            continue;
        }
        switch (s.kind) {
            case SpaceId::Kind::S11:
                if (m.aExp + 2 * m.bExp > 1)
                    continue;
                break;
            case SpaceId::Kind::RPtw:
                if (m.aExp + 2 * m.bExp > s.n)
                    continue;
                break;
            case SpaceId::Kind::RPtwInf:
                break;
            case SpaceId::Kind::P41:
                if (m.cExp >= 2 || m.bExp >= 2 || (m.bExp >= 1 && m.cExp >= 1))
                    continue;  // c^2 = 0, bb = 0, bc = 0
                if (m.aExp >= 1 && m.bExp >= 1) {
                    push_scaled(m, ConeBasisElement::tau(), -1, -1, 1);  // ab = tau c
                    continue;
                }
                if (m.aExp >= 1 && m.cExp >= 1) {
                    push_scaled(m, ConeBasisElement::rho(), -1, 0, 0);  // ac = rho c
                    continue;
                }
                break;
        }
        done.push_back(m);
    }
    return {s, f2_reduce(std::move(done))};
}

ProjRingElement multiply_ring(const ProjRingElement& x, const ProjRingElement& y) {
    if (x.space != y.space)
        throw std::invalid_argument("multiply_ring: elements of different spaces (" + to_string(x.space) +
                                    " vs " + to_string(y.space) + ")");
    std::vector<ProjMonomial> prods;
    for (const auto& mx : x.terms)
        for (const auto& my : y.terms)
            if (auto coeff = multiply_basis(mx.coeff, my.coeff))
                prods.push_back({*coeff, mx.aExp + my.aExp, mx.bExp + my.bExp, mx.cExp + my.cExp});
    return normal_form({x.space, f2_reduce(std::move(prods))});
}

ProjRingElement add_ring(const ProjRingElement& x, const ProjRingElement& y) {
    if (x.space != y.space)
        throw std::invalid_argument("add_ring: elements of different spaces");
    std::vector<ProjMonomial> all = x.terms;
    all.insert(all.end(), y.terms.begin(), y.terms.end());
    return {x.space, f2_reduce(std::move(all))};
}

SingularElement SingularElement::operator+(const SingularElement& o) const {
    SingularElement r;
    r.truncation = truncation ? truncation : o.truncation;
    for (int e : exps)
        r.exps.insert(e);
    for (int e : o.exps) {
        if (r.exps.count(e))
            r.exps.erase(e);
        else
            r.exps.insert(e);
    }
    return r;
}

SingularElement SingularElement::operator*(const SingularElement& o) const {
    SingularElement r;
    r.truncation = truncation ? truncation : o.truncation;
    for (int e1 : exps)
        for (int e2 : o.exps) {
            const int e = e1 + e2;
            if (r.truncation && e > *r.truncation)
                continue;
            if (r.exps.count(e))
                r.exps.erase(e);
            else
                r.exps.insert(e);
        }
    return r;
}

namespace {

std::optional<int> singular_truncation(const SpaceId& s) {
    switch (s.kind) {
        case SpaceId::Kind::S11: return 1;
        case SpaceId::Kind::RPtw: return s.n;
        case SpaceId::Kind::RPtwInf: return std::nullopt;
        case SpaceId::Kind::P41: return 3;
    }
    return std::nullopt;
}

}  // namespace

SingularElement forgetful(const ProjRingElement& x) {
    SingularElement out;
    out.truncation = singular_truncation(x.space);
    for (const auto& m : x.terms) {
        // psi(rho) = 0, psi(tau) = 1; the divided classes forget to zero.
        if (m.coeff.cone != ConeBasisElement::Cone::Top || m.coeff.e1 > 0)
            continue;
        const int e = m.aExp + 2 * m.bExp + 3 * m.cExp;
        if (out.truncation && e > *out.truncation)
            continue;
        if (out.exps.count(e))
            out.exps.erase(e);
        else
            out.exps.insert(e);
    }
    return out;
}

ProjRingElement restrict_to(const ProjRingElement& x, const SpaceId& to) {
    const SpaceId from = x.space;
    const bool ok = (from == to) ||
                    (from.kind == SpaceId::Kind::RPtwInf && to.kind != SpaceId::Kind::RPtwInf) ||
                    (from.kind == SpaceId::Kind::RPtw && to.kind == SpaceId::Kind::RPtw && to.n <= from.n) ||
                    (from.kind == SpaceId::Kind::RPtw && to.kind == SpaceId::Kind::S11);
    if (!ok)
        throw std::invalid_argument("restrict_to: no standard inclusion realizes " + to_string(to) +
                                    " inside " + to_string(from));
    return normal_form({to, x.terms});
}

}  // namespace equicoh
