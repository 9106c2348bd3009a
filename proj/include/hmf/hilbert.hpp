#pragma once

// Truncated Fourier expansions of Hilbert modular forms for Q(sqrt5).
//
// Exponents live on the trace-dual lattice (1/sqrt5) O_K: the index
// nu = (a + b*sqrt5)/(2*sqrt5) with a = b (mod 2) has trace(nu) = b and
// conjugate (-a, b).  A series carries a per-series denominator D >= 1
// (theta intermediates only); the actual exponent is nu/D.  Keys are
// restricted to the totally positive cone plus zero (Koecher principle),
// and every operation records the trace bound to which it stays exact.

#include "hmf/qexp.hpp"
#include "hmf/quadfield.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hmf {

struct NuIndex {
    Int a, b;  // nu = (a + b*sqrt5)/(2*sqrt5), a = b (mod 2)

    NuIndex() : a(0), b(0) {}
    NuIndex(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    NuIndex(long a_, long b_) : a(a_), b(b_) {}

    bool is_zero() const { return a == 0 && b == 0; }
    Int trace() const { return b; }
    NuIndex conj() const { return NuIndex(-a, b); }
    NuIndex operator+(const NuIndex& o) const { return NuIndex(a + o.a, b + o.b); }

    // nu as an element of K: b/2 + (a/10) sqrt5
    QuadElem value() const { return QuadElem(Rat(b, 2), Rat(a, 10)); }
    Rat norm() const { return Rat(5 * b * b - a * a, 20); }

    bool totally_positive_or_zero() const {
        if (is_zero()) return true;
        return b > 0 && a * a < 5 * b * b;
    }

    bool operator==(const NuIndex& o) const { return a == o.a && b == o.b; }
};

// Monomial order: ascending trace, ties broken by descending a.  Any
// cone-compatible order would do; this one puts the leading monomial of
// chi_5 at mu0 = (1,1).  Only division and square roots depend on it.
struct NuOrder {
    bool operator()(const NuIndex& l, const NuIndex& r) const {
        if (l.b != r.b) return l.b < r.b;
        return l.a > r.a;
    }
};

using CoeffMap = std::map<NuIndex, QuadElem, NuOrder>;

// All NuIndex in the closed cone with trace <= trace_max, in monomial order.
std::vector<NuIndex> enumerate_cone(long trace_max);

class HilbertSeries {
public:
    std::pair<int, int> weight{0, 0};
    int bound = 0;    // exact for all exponents nu/denom of trace <= bound
    long denom = 1;   // lattice refinement (theta intermediates only)
    CoeffMap coeffs;  // zero coefficients never stored

    HilbertSeries() = default;
    HilbertSeries(std::pair<int, int> w, int bound_, long denom_ = 1)
        : weight(w), bound(bound_), denom(denom_) {}

    static HilbertSeries one(int bound);

    QuadElem coeff(const NuIndex& nu) const {
        auto it = coeffs.find(nu);
        return it == coeffs.end() ? QuadElem() : it->second;
    }
    void set_coeff(const NuIndex& nu, QuadElem c);

    bool is_zero() const { return coeffs.empty(); }
    QuadElem constant_term() const { return coeff(NuIndex(0, 0)); }
    Int max_key_trace() const { return Int(bound) * denom; }

    HilbertSeries operator+(const HilbertSeries& o) const;
    HilbertSeries operator-(const HilbertSeries& o) const;
    HilbertSeries operator*(const HilbertSeries& o) const;
    HilbertSeries scaled(const QuadElem& c) const;
    HilbertSeries truncated(int new_bound) const;

    bool same_coeffs(const HilbertSeries& o) const { return coeffs == o.coeffs; }
    // equality of coefficients up to the shared bound (weights must agree)
    bool agrees_with(const HilbertSeries& o) const;

    // swap of the two variables: (a,b) -> (-a,b), weight pair swapped
    HilbertSeries swap_conjugate() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    // normalized partial derivative D_i = (2*pi*i)^{-1} d/dz_i; coefficient
    // at nu is multiplied by sigma_i(nu/denom).  Not modular on its own.
    HilbertSeries normalized_partial(int i) const;

    // restriction to the diagonal z1 = z2 (denom must be 1); weight r1+r2
    QExp restrict_diagonal() const;

    HilbertSeries invert() const;  // requires nonzero constant term
};

// exact quotient h with h*d = g to the largest safe bound; throws
// std::domain_error("not divisible") if no exact quotient exists
HilbertSeries divide_exact(const HilbertSeries& g, const HilbertSeries& d);

// exact square root with the chosen leading sign; throws
// std::domain_error("no square root") when none exists
HilbertSeries sqrt_series(const HilbertSeries& g, int leading_sign);

}  // namespace hmf
