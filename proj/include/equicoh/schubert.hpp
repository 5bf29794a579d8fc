#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equicoh/bidegree.hpp"

namespace equicoh {

/* Strictly increasing jump positions of a plane against a flag,
 * 1 <= s_1 < ... < s_n <= p. */
struct SchubertSymbol {
    std::vector<int> sigma;

    friend auto operator<=>(const SchubertSymbol&, const SchubertSymbol&) = default;
};

/* Positions in {1..p} where the chosen flag of subrepresentations gains a
 * twisted coordinate; strictly increasing, one entry per twist. */
struct FlagSymbol {
    std::vector<int> phi;

    friend auto operator<=>(const FlagSymbol&, const FlagSymbol&) = default;
};

std::string to_string(const SchubertSymbol& s);
std::string to_string(const FlagSymbol& f);

/* Validation against an ambient dimension; throws std::invalid_argument. */
void validate_schubert_symbol(const SchubertSymbol& sigma, int p);
void validate_flag_symbol(const FlagSymbol& phi, int p, int q);

/* G_n(R^{p,q}) together with a flag choice. */
struct GrassmannianDesc {
    int n = 1;
    int p = 1;
    int q = 0;
    FlagSymbol flag;
};

void validate_grassmannian(const GrassmannianDesc& G);

/* Bidegree (a,b) of the Schubert cell e(sigma, phi).  a is the usual cell
 * dimension sum(sigma_i - i); b counts, row by row of the echelon form, the
 * free coordinates whose action is opposite to the pivot's action. */
Bidegree cell_bidegree(const SchubertSymbol& sigma, const FlagSymbol& phi);

/* All C(p,n) Schubert cells of G, ordered by bidegree (p, then q) with ties
 * broken by lexicographic Schubert symbol, ready for one-at-a-time
 * attachment. */
std::vector<std::pair<SchubertSymbol, Bidegree>> enumerate_cells(const GrassmannianDesc& G);

/* Cell structure of P(R^{p,q}) via the flag (2,4,...,2q).  Requires
 * q <= p/2; apply flip_iso first otherwise. */
std::vector<Bidegree> projective_cells(int p, int q);

/* Cell structure of the twisted projective space RP^n_tw =
 * P(R^{n+1, floor((n+1)/2)}): one cell in each bidegree (k, ceil(k/2)). */
std::vector<Bidegree> rp_tw_cells(int n);

/* The untwisting homeomorphism P(R^{p,q}) ~ P(R^{p,p-q}). */
std::pair<int, int> flip_iso(int p, int q);

/* The flag V_0 < ... < V_p determined by phi: V_i = (i, #{j : phi_j <= i}). */
std::vector<Bidegree> flag_to_representation(const FlagSymbol& phi, int p);

}  // namespace equicoh
