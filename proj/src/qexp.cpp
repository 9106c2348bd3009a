#include "hmf/qexp.hpp"

#include "hmf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hmf {

QExp QExp::truncated(int new_bound) const {
    QExp r(weight, std::min(bound, new_bound));
    for (int i = 0; i <= r.bound; ++i) r.coeffs[i] = coeffs[i];
    return r;
}

QExp QExp::operator+(const QExp& o) const {
    if (weight != o.weight && !is_zero() && !o.is_zero())
        throw std::invalid_argument("QExp: adding forms of different weights");
    QExp r(is_zero() ? o.weight : weight, std::min(bound, o.bound));
    for (int i = 0; i <= r.bound; ++i) r.coeffs[i] = coeff(i) + o.coeff(i);
    return r;
}

QExp QExp::operator-(const QExp& o) const { return *this + o.scaled(Rat(-1)); }

QExp QExp::operator*(const QExp& o) const {
    QExp r(weight + o.weight, std::min(bound, o.bound));
    for (int i = 0; i <= r.bound; ++i) {
        if (coeffs[i] == 0) continue;
        for (int j = 0; i + j <= r.bound; ++j) {
            if (o.coeffs[j] == 0) continue;
            r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
        }
    }
    return r;
}

QExp QExp::scaled(const Rat& c) const {
    QExp r(weight, bound);
    for (int i = 0; i <= bound; ++i) r.coeffs[i] = c * coeffs[i];
    return r;
}

QExp d_operator(const QExp& f) {
    QExp r(f.weight + 2, f.bound);
    for (int n = 0; n <= f.bound; ++n) r.coeffs[n] = n * f.coeffs[n];
    return r;
}

namespace {

// sum of d^k over divisors d of n
Int sigma(int n, int k) {
    Int s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        Int p = 1;
        for (int i = 0; i < k; ++i) p *= d;
        s += p;
    }
    return s;
}

}  // namespace

QExp eisenstein_q(int k, int bound) {
    if (k != 4 && k != 6) throw std::invalid_argument("eisenstein_q: k must be 4 or 6");
    QExp r(k, bound);
    r.coeffs[0] = 1;
    const int c = (k == 4) ? 240 : -504;
    const int pw = k - 1;
    for (int n = 1; n <= bound; ++n) r.coeffs[n] = Rat(c * sigma(n, pw));
    return r;
}

QExp delta_q(int bound) {
    QExp e4 = eisenstein_q(4, bound), e6 = eisenstein_q(6, bound);
    QExp d = (e4 * e4 * e4 - e6 * e6).scaled(Rat(1, 1728));
    d.weight = 12;
    return d;
}

QExp divide_q(const QExp& f, const QExp& g) {
    int ord = 0;
    while (ord <= g.bound && g.coeffs[ord] == 0) ++ord;
    if (ord > g.bound) throw std::domain_error("divide_q: division by zero series");
    for (int i = 0; i < std::min(ord, f.bound + 1); ++i)
        if (f.coeffs[i] != 0) throw std::domain_error("divide_q: not divisible at truncation");
    const Rat lead = g.coeffs[ord];
    QExp r(f.weight - g.weight, std::min(f.bound, g.bound) - ord);
    for (int n = 0; n <= r.bound; ++n) {
        Rat acc = f.coeff(n + ord);
        for (int j = 0; j < n; ++j) acc -= r.coeffs[j] * g.coeff(n + ord - j);
        r.coeffs[n] = acc / lead;
    }
    return r;
}

QExp e2_q(int bound) {
    // E2 = D(Delta)/Delta, computed to one extra term so the quotient keeps
    // the requested bound after cancelling the q-order
    QExp delta = delta_q(bound + 1);
    QExp e2 = divide_q(d_operator(delta), delta);
    e2.weight = 2;
    return e2;
}

Rat binomial_rat(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
    return r;
}

QExp rankin_cohen_1var(const QExp& f, const QExp& g, int n) {
    // [f,g]_n = sum_r (-1)^r C(f0+n-1, n-r) C(g0+n-1, r) D^r f * D^{n-r} g
    std::vector<QExp> df{f}, dg{g};
    for (int i = 0; i < n; ++i) {
        df.push_back(d_operator(df.back()));
        dg.push_back(d_operator(dg.back()));
    }
    QExp acc(f.weight + g.weight + 2 * n, std::min(f.bound, g.bound));
    for (int r = 0; r <= n; ++r) {
        Rat c = binomial_rat(f.weight + n - 1, n - r) * binomial_rat(g.weight + n - 1, r);
        if (r % 2) c = -c;
        QExp term = (df[r] * dg[n - r]).scaled(c);
        term.weight = acc.weight;
        acc = acc + term;
    }
    return acc;
}

namespace {

// shared fit over an arbitrary monomial list
template <typename Mono, typename Decomp>
Decomp fit_monomials(const QExp& f, const std::vector<QExp>& basis,
                     const std::vector<std::pair<int, int>>& exps) {
    Decomp out;
    if (exps.empty()) { out.ok = f.is_zero(); return out; }
    const int rows = f.bound + 1;
    QMat A(rows, QVec(exps.size()));
    QVec b(rows);
    for (size_t j = 0; j < exps.size(); ++j)
        for (int n = 0; n < rows; ++n) A[n][j] = QuadElem(basis[j].coeff(n));
    for (int n = 0; n < rows; ++n) b[n] = QuadElem(f.coeff(n));
    SolveResult sr = solve_linear(A, b);
    if (sr.status == SolveStatus::Inconsistent) return out;
    out.ok = true;
    for (size_t j = 0; j < exps.size(); ++j) {
        if (sr.solution[j].is_zero()) continue;
        out.terms.push_back(Mono{exps[j].first, exps[j].second, sr.solution[j].x});
    }
    return out;
}

}  // namespace

EllipticDecomposition isobaric_decompose_elliptic(const QExp& f) {
    std::vector<std::pair<int, int>> exps;
    std::vector<QExp> basis;
    QExp e4 = eisenstein_q(4, f.bound), e6 = eisenstein_q(6, f.bound);
    for (int a = 0; 4 * a <= f.weight; ++a) {
        int rem = f.weight - 4 * a;
        if (rem % 6) continue;
        int b = rem / 6;
        QExp m(0, f.bound);
        m.coeffs[0] = 1;
        for (int i = 0; i < a; ++i) m = m * e4;
        for (int i = 0; i < b; ++i) m = m * e6;
        exps.push_back({a, b});
        basis.push_back(m);
    }
    return fit_monomials<EllipticMonomial, EllipticDecomposition>(f, basis, exps);
}

E4DeltaDecomposition decompose_e4_delta(const QExp& f) {
    std::vector<std::pair<int, int>> exps;
    std::vector<QExp> basis;
    QExp e4 = eisenstein_q(4, f.bound), dl = delta_q(f.bound);
    for (int b = 0; 12 * b <= f.weight; ++b) {
        int rem = f.weight - 12 * b;
        if (rem % 4) continue;
        int a = rem / 4;
        QExp m(0, f.bound);
        m.coeffs[0] = 1;
        for (int i = 0; i < a; ++i) m = m * e4;
        for (int i = 0; i < b; ++i) m = m * dl;
        exps.push_back({a, b});
        basis.push_back(m);
    }
    return fit_monomials<E4DeltaMonomial, E4DeltaDecomposition>(f, basis, exps);
}

}  // namespace hmf
