#include "phylogf/algebra.hpp"

namespace phylogf {

static void require_same_k(const MultilinearElem& a, const MultilinearElem& b) {
    if (a.k != b.k) throw std::invalid_argument("marker-count mismatch");
}

MultilinearElem mle_add(const MultilinearElem& a, const MultilinearElem& b) {
    require_same_k(a, b);
    MultilinearElem out(a.k);
    for (std::size_t m = 0; m < out.c.size(); ++m) out.c[m] = a.c[m] + b.c[m];
    return out;
}

MultilinearElem mle_sub(const MultilinearElem& a, const MultilinearElem& b) {
    require_same_k(a, b);
    MultilinearElem out(a.k);
    for (std::size_t m = 0; m < out.c.size(); ++m) out.c[m] = a.c[m] - b.c[m];
    return out;
}

MultilinearElem mle_mul(const MultilinearElem& a, const MultilinearElem& b) {
    require_same_k(a, b);
    MultilinearElem out(a.k);
    const std::size_t full = a.c.size();
    for (std::size_t ma = 0; ma < full; ++ma) {
        if (sgn(a.c[ma]) == 0) continue;
        for (std::size_t mb = 0; mb < full; ++mb) {
            if (ma & mb) continue;  // y_i^2 = 0: only disjoint monomials survive
            if (sgn(b.c[mb]) == 0) continue;
            out.c[ma | mb] += a.c[ma] * b.c[mb];
        }
    }
    return out;
}

MultilinearElem mle_recip(const MultilinearElem& a) {
    if (sgn(a.c[0]) == 0) throw std::invalid_argument("reciprocal of element with zero constant part");
    const mpq_class inv0 = mpq_class(1) / a.c[0];
    // a = a_0 (1 + u) with u nilpotent; 1/a = (1/a_0) sum_{i<=k} (-u)^i
    MultilinearElem u = a * inv0;
    u.c[0] -= 1;
    MultilinearElem acc = MultilinearElem::constant(a.k, 1);
    MultilinearElem term = MultilinearElem::constant(a.k, 1);
    for (int i = 0; i < a.k; ++i) {
        term = mle_mul(term, u) * mpq_class(-1);
        if (term.is_zero()) break;
        acc = mle_add(acc, term);
    }
    return acc * inv0;
}

mpq_class extract_full(const MultilinearElem& a) {
    return a.c[a.c.size() - 1];
}

MultilinearElem operator*(const MultilinearElem& a, const mpq_class& s) {
    MultilinearElem out(a.k);
    for (std::size_t m = 0; m < out.c.size(); ++m) out.c[m] = a.c[m] * s;
    return out;
}

bool operator==(const MultilinearElem& a, const MultilinearElem& b) {
    if (a.k != b.k) return false;
    for (std::size_t m = 0; m < a.c.size(); ++m)
        if (a.c[m] != b.c[m]) return false;
    return true;
}

}  // namespace phylogf
