#pragma once

#include "phylogf/series.hpp"

#include <vector>

namespace phylogf {

// network class selector; `all` is only meaningful for the exhaustive oracle
enum class Klass { normal, treechild, all };

// Closed algebraic form F(z) = z (a(z^2) - b(z^2) sqrt(1-2z^2)) / (1-2z^2)^p
// with a positive half-integer exponent p (stored doubled so it stays integral).
struct AlgebraicGF {
    std::vector<mpq_class> a_poly;  // a(w), index = power of w
    std::vector<mpq_class> b_poly;  // b(w)
    int two_p = 1;                  // 2p, an odd positive integer
};

// the published closed-form polynomial pairs for k in {1,2,3}, both classes,
// stored verbatim with exact rational coefficients; exponent p = 2k - 1/2
const AlgebraicGF& catalog(Klass klass, int k);

// expand the closed form to a rational z-series of the given order
RatSeries expand_algebraic(const AlgebraicGF& gf, int N);

// Skeleton-case operator constructions: each case's expression is transcribed
// term by term (vertex factors, attached trees, marked paths), the full marker
// coefficient is extracted, cases are summed, and the 2^k multiplicity of the
// skeleton decomposition is divided out.
RatSeries operator_N(int k, int N);  // normal networks, k in {1,2,3}
RatSeries operator_T(int k, int N);  // tree-child networks, k in {1,2,3}

// independent k=1 derivation through unicyclic-graph counting
RatSeries unicyclic_gf(Klass klass, int N);

// exact number of vertex-labeled networks: n! [z^n] of the catalog expansion
// (k = 0 goes through the plain tree series)
mpz_class count(Klass klass, int k, long n);

// leaf-labeled networks: l! / (2l+2k-1)! * count(klass, k, 2l+2k-1);
// the division is exact for a correct series and asserted here
mpz_class leaf_labeled_count(Klass klass, int k, long l);

// EGF of the caterpillar-skeleton subclass: L_k = N_1 * P^{k-1}, a lower
// bound for the normal series (k >= 2)
RatSeries caterpillar_lower_bound(int k, int N);

// the path-extension factor P(z) of the caterpillar construction,
// (8z^2 - 12z^4 - (8z^2 - 4z^4) sqrt(1-2z^2)) / (1-2z^2)^2
RatSeries caterpillar_path_gf(int N);

}  // namespace phylogf
