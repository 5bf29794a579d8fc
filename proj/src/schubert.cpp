#include "equicoh/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equicoh {

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ",";
        os << v[i];
    }
    return os.str();
}

void check_strictly_increasing(const std::vector<int>& v, int bound, const char* what) {
    int prev = 0;
    for (int x : v) {
        if (x <= prev)
            throw std::invalid_argument(std::string(what) + ": entries must be strictly increasing and >= 1");
        if (x > bound)
            throw std::invalid_argument(std::string(what) + ": entry " + std::to_string(x) +
                                        " exceeds ambient dimension " + std::to_string(bound));
        prev = x;
    }
}

bool contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

std::string to_string(const SchubertSymbol& s) {
    return "(" + join(s.sigma) + ")";
}

std::string to_string(const FlagSymbol& f) {
    return "(" + join(f.phi) + ")";
}

void validate_schubert_symbol(const SchubertSymbol& sigma, int p) {
    check_strictly_increasing(sigma.sigma, p, "SchubertSymbol");
}

void validate_flag_symbol(const FlagSymbol& phi, int p, int q) {
    if (static_cast<int>(phi.phi.size()) != q)
        throw std::invalid_argument("FlagSymbol: expected " + std::to_string(q) + " entries, got " +
                                    std::to_string(phi.phi.size()));
    check_strictly_increasing(phi.phi, p, "FlagSymbol");
}

void validate_grassmannian(const GrassmannianDesc& G) {
    if (G.n < 1 || G.n > G.p)
        throw std::invalid_argument("GrassmannianDesc: need 1 <= n <= p");
    if (G.q < 0 || G.q > G.p)
        throw std::invalid_argument("GrassmannianDesc: need 0 <= q <= p");
    validate_flag_symbol(G.flag, G.p, G.q);
}

Bidegree cell_bidegree(const SchubertSymbol& sigma, const FlagSymbol& phi) {
    const auto& s = sigma.sigma;
    const auto& f = phi.phi;

    int a = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        a += s[i] - static_cast<int>(i + 1);

    /* b = sum over twisted pivots of |{1..s_i} \ (phi u sigma(i))|
     *   + sum over untwisted pivots of |({1..s_i} n phi) \ sigma(i)|,
     * where sigma(i) = {s_1,...,s_i}. */
    int b = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const int si = s[i];
        if (contains(f, si)) {
            for (int x = 1; x <= si; ++x) {
                if (contains(f, x))
                    continue;
                bool in_sigma_prefix = false;
                for (std::size_t j = 0; j <= i; ++j)
                    if (s[j] == x) {
                        in_sigma_prefix = true;
                        break;
                    }
                if (!in_sigma_prefix)
                    ++b;
            }
        } else {
            for (int x = 1; x <= si; ++x) {
                if (!contains(f, x))
                    continue;
                bool in_sigma_prefix = false;
                for (std::size_t j = 0; j <= i; ++j)
                    if (s[j] == x) {
                        in_sigma_prefix = true;
                        break;
                    }
                if (!in_sigma_prefix)
                    ++b;
            }
        }
    }
    return {a, b};
}

std::vector<std::pair<SchubertSymbol, Bidegree>> enumerate_cells(const GrassmannianDesc& G) {
    validate_grassmannian(G);

    std::vector<std::pair<SchubertSymbol, Bidegree>> cells;
    std::vector<int> sigma(G.n);
    for (int i = 0; i < G.n; ++i)
        sigma[i] = i + 1;

    while (true) {
        SchubertSymbol sym{sigma};
        cells.emplace_back(sym, cell_bidegree(sym, G.flag));

        // next n-subset of {1..p} in lexicographic order
        int i = G.n - 1;
        while (i >= 0 && sigma[i] == G.p - (G.n - 1 - i))
            --i;
        if (i < 0)
            break;
        ++sigma[i];
        for (int j = i + 1; j < G.n; ++j)
            sigma[j] = sigma[j - 1] + 1;
    }

    std::stable_sort(cells.begin(), cells.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second)
            return x.second < y.second;
        return x.first.sigma < y.first.sigma;
    });
    return cells;
}

std::vector<Bidegree> projective_cells(int p, int q) {
    if (p < 1 || q < 0 || q > p)
        throw std::invalid_argument("projective_cells: need 1 <= p and 0 <= q <= p");
    if (2 * q > p)
        throw std::invalid_argument("projective_cells: q > p/2; reduce with flip_iso(p,q) = (p,p-q) first");

    FlagSymbol phi;
    for (int i = 1; i <= q; ++i)
        phi.phi.push_back(2 * i);

    std::vector<Bidegree> out;
    for (const auto& [sigma, d] : enumerate_cells({1, p, q, phi}))
        out.push_back(d);
    return out;
}

std::vector<Bidegree> rp_tw_cells(int n) {
    if (n < 0)
        throw std::invalid_argument("rp_tw_cells: n must be nonnegative");
    return projective_cells(n + 1, (n + 1) / 2);
}

std::pair<int, int> flip_iso(int p, int q) {
    if (q < 0 || q > p)
        throw std::invalid_argument("flip_iso: need 0 <= q <= p");
    return {p, p - q};
}

std::vector<Bidegree> flag_to_representation(const FlagSymbol& phi, int p) {
    validate_flag_symbol(phi, p, static_cast<int>(phi.phi.size()));
    std::vector<Bidegree> flag;
    flag.reserve(p + 1);
    for (int i = 0; i <= p; ++i) {
        int twists = 0;
        for (int x : phi.phi)
            if (x <= i)
                ++twists;
        flag.push_back({i, twists});
    }
    return flag;
}

}  // namespace equicoh
