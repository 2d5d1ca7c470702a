#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phylogf/gf.hpp"

using namespace phylogf;

namespace {
mpz_class fac(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}
}  // namespace

TEST_CASE("operator construction equals the closed form where the published"
          " forms agree") {
    const int N = 60;
    for (int k = 1; k <= 3; ++k) {
        RatSeries op = operator_N(k, N);
        RatSeries cat = expand_algebraic(catalog(Klass::normal, k), N);
        for (int n = 0; n <= N; ++n) CHECK(op.c[n] == cat.c[n]);
    }
    RatSeries op = operator_T(1, N);
    RatSeries cat = expand_algebraic(catalog(Klass::treechild, 1), N);
    for (int n = 0; n <= N; ++n) CHECK(op.c[n] == cat.c[n]);
}

TEST_CASE("known divergence between the published tree-child forms") {
    // the k=2 and k=3 tree-child closed forms and operator expansions are
    // transcribed verbatim; they genuinely disagree, starting at z^7 and z^11
    const int N = 15;
    RatSeries cat2 = expand_algebraic(catalog(Klass::treechild, 2), N);
    RatSeries op2 = operator_T(2, N);
    CHECK(cat2.c[7] == 1);
    CHECK(op2.c[7] == 0);
    CHECK(cat2.c[9] == mpq_class(47, 4));
    CHECK(op2.c[9] == mpq_class(29, 4));
    CHECK(cat2.c[11] == 69);
    CHECK(op2.c[11] == mpq_class(109, 2));
    CHECK(cat2.c[13] == mpq_class(4785, 16));
    CHECK(op2.c[13] == mpq_class(4135, 16));
    CHECK(cat2.c[15] == mpq_class(8739, 8));
    CHECK(op2.c[15] == 987);

    RatSeries cat3 = expand_algebraic(catalog(Klass::treechild, 3), N);
    RatSeries op3 = operator_T(3, N);
    CHECK(cat3.c[11] == -1);
    CHECK(op3.c[11] == 0);
    CHECK(cat3.c[13] == 106);
    CHECK(op3.c[13] == 116);
    CHECK(cat3.c[15] == mpq_class(10611, 8));
    CHECK(op3.c[15] == mpq_class(11091, 8));
}

TEST_CASE("published normal coefficients") {
    RatSeries n2 = expand_algebraic(catalog(Klass::normal, 2), 15);
    CHECK(n2.c[7] == 0);
    CHECK(n2.c[9] == 0);
    CHECK(n2.c[11] == mpq_class(21, 8));
    CHECK(n2.c[13] == mpq_class(189, 8));
    CHECK(n2.c[15] == mpq_class(1023, 8));
    RatSeries n3 = expand_algebraic(catalog(Klass::normal, 3), 15);
    for (int n = 0; n <= 13; ++n) CHECK(n3.c[n] == 0);
    CHECK(n3.c[15] == mpq_class(243, 8));
}

TEST_CASE("unicyclic derivation matches the one-reticulation operator") {
    const int N = 60;
    RatSeries un = unicyclic_gf(Klass::normal, N);
    RatSeries on = operator_N(1, N);
    RatSeries ut = unicyclic_gf(Klass::treechild, N);
    RatSeries ot = operator_T(1, N);
    for (int n = 0; n <= N; ++n) {
        CHECK(un.c[n] == on.c[n]);
        CHECK(ut.c[n] == ot.c[n]);
    }
}

TEST_CASE("caterpillar path factor and lower bound") {
    RatSeries p = caterpillar_path_gf(16);
    for (int n = 0; n <= 7; ++n) CHECK(p.c[n] == 0);
    CHECK(p.c[8] == 2);
    CHECK(p.c[10] == 11);
    CHECK(p.c[12] == mpq_class(81, 2));

    const int N = 41;
    RatSeries lb = caterpillar_lower_bound(2, N);
    RatSeries n2 = expand_algebraic(catalog(Klass::normal, 2), N);
    CHECK(lb.c[15] == 1);
    for (int n = 1; n <= N; n += 2) CHECK(lb.c[n] <= n2.c[n]);
}

TEST_CASE("vertex-labeled counts") {
    CHECK(count(Klass::normal, 0, 5) == 60);
    CHECK(count(Klass::treechild, 0, 5) == 60);
    CHECK(count(Klass::treechild, 1, 5) == 120);
    CHECK(count(Klass::normal, 1, 5) == 0);
    CHECK(count(Klass::normal, 1, 7) == 2520);
    CHECK(count(Klass::treechild, 1, 7) == 17640);
    CHECK(count(Klass::normal, 1, 9) == 816480);
    CHECK(count(Klass::treechild, 1, 9) == 3447360);
    CHECK(count(Klass::treechild, 2, 9) == 4263840);
    CHECK(count(Klass::normal, 2, 11) == 104781600);
    CHECK(count(Klass::treechild, 2, 13) == mpz_class(4785) * fac(13) / 16);
    // the published k=3 tree-child form goes negative at z^11; counts report
    // what the form says, the cross-checks flag it
    CHECK(count(Klass::treechild, 3, 11) == -39916800);
    for (long n = 2; n <= 12; n += 2) CHECK(count(Klass::normal, 1, n) == 0);
    CHECK_THROWS_AS(count(Klass::all, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(count(Klass::normal, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(count(Klass::normal, 1, 0), std::invalid_argument);
}

TEST_CASE("leaf-labeled counts") {
    CHECK(leaf_labeled_count(Klass::normal, 1, 3) == 3);
    CHECK(leaf_labeled_count(Klass::treechild, 1, 3) == 21);
    // k=0: leaf-labeled rooted binary trees on 3 leaves
    CHECK(leaf_labeled_count(Klass::normal, 0, 3) == 3);
    // the published k=2 tree-child coefficient is not divisible the way a
    // correct series must be
    CHECK_THROWS_AS(leaf_labeled_count(Klass::treechild, 2, 3), std::logic_error);
    CHECK_THROWS_AS(leaf_labeled_count(Klass::normal, 1, 0), std::invalid_argument);
}
