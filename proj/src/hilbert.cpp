#include "hmf/hilbert.hpp"

#include "hmf/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hmf {

std::vector<NuIndex> enumerate_cone(long trace_max) {
    std::vector<NuIndex> out;
    if (trace_max < 0) return out;
    out.emplace_back(0L, 0L);
    for (long b = 1; b <= trace_max; ++b) {
        // a = b (mod 2), a^2 < 5 b^2, descending a
        long amax = static_cast<long>(Int(sqrt(Int(5) * b * b)));
        while (Int(amax) * amax >= Int(5) * b * b) --amax;
        if ((amax - b) % 2 != 0) --amax;
        for (long a = amax; a >= -amax; a -= 2) out.emplace_back(a, b);
    }
    return out;
}

HilbertSeries HilbertSeries::one(int bound) {
    HilbertSeries s({0, 0}, bound);
    s.coeffs[NuIndex(0, 0)] = QuadElem(1L);
    return s;
}

void HilbertSeries::set_coeff(const NuIndex& nu, QuadElem c) {
    if (!nu.totally_positive_or_zero())
        throw std::invalid_argument("HilbertSeries: index outside the Koecher cone");
    if (c.is_zero())
        coeffs.erase(nu);
    else
        coeffs[nu] = std::move(c);
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
    if (denom != o.denom)
        throw std::invalid_argument("HilbertSeries: denominator mismatch in add");
    if (weight != o.weight && !is_zero() && !o.is_zero())
        throw std::invalid_argument("HilbertSeries: adding different weights");
    HilbertSeries r(is_zero() ? o.weight : weight, std::min(bound, o.bound), denom);
    const Int limit = r.max_key_trace();
    for (const auto& [nu, c] : coeffs)
        if (nu.b <= limit) r.coeffs[nu] = c;
    for (const auto& [nu, c] : o.coeffs) {
        if (nu.b > limit) continue;
        auto [it, fresh] = r.coeffs.try_emplace(nu, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
    return *this + o.scaled(QuadElem(-1L));
}

HilbertSeries HilbertSeries::operator*(const HilbertSeries& o) const {
    if (denom != o.denom)
        throw std::invalid_argument("HilbertSeries: denominator mismatch in mul");
    HilbertSeries r({weight.first + o.weight.first, weight.second + o.weight.second},
                    std::min(bound, o.bound), denom);
    const Int limit = r.max_key_trace();
    for (const auto& [nu, c] : coeffs) {
        if (nu.b > limit) break;  // map is trace-ascending
        for (const auto& [mu, d] : o.coeffs) {
            if (nu.b + mu.b > limit) break;
            NuIndex tau = nu + mu;
            QuadElem prod = c * d;
            auto [it, fresh] = r.coeffs.try_emplace(tau, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second.is_zero()) r.coeffs.erase(it);
            }
        }
    }
    return r;
}

HilbertSeries HilbertSeries::scaled(const QuadElem& c) const {
    HilbertSeries r(weight, bound, denom);
    if (c.is_zero()) return r;
    for (const auto& [nu, v] : coeffs) r.coeffs[nu] = c * v;
    return r;
}

HilbertSeries HilbertSeries::truncated(int new_bound) const {
    HilbertSeries r(weight, std::min(bound, new_bound), denom);
    const Int limit = r.max_key_trace();
    for (const auto& [nu, c] : coeffs) {
        if (nu.b > limit) break;
        r.coeffs[nu] = c;
    }
    return r;
}

bool HilbertSeries::agrees_with(const HilbertSeries& o) const {
    if (denom != o.denom) return false;
    const Int limit = std::min(max_key_trace(), o.max_key_trace());
    auto upto = [&](const CoeffMap& m, CoeffMap& out) {
        for (const auto& [nu, c] : m) {
            if (nu.b > limit) break;
            out[nu] = c;
        }
    };
    CoeffMap a, b;
    upto(coeffs, a);
    upto(o.coeffs, b);
    return a == b;
}

HilbertSeries HilbertSeries::swap_conjugate() const {
    // pure reindexing: F(z2,z1) has coefficient a_{nu'} at nu.  Coefficients
    // are real numbers (read through sigma_1) and are not touched.
    HilbertSeries r({weight.second, weight.first}, bound, denom);
    for (const auto& [nu, c] : coeffs) r.coeffs[nu.conj()] = c;
    return r;
}

bool HilbertSeries::is_symmetric() const { return swap_conjugate().same_coeffs(*this); }

bool HilbertSeries::is_antisymmetric() const {
    return swap_conjugate().same_coeffs(scaled(QuadElem(-1L)));
}

HilbertSeries HilbertSeries::normalized_partial(int i) const {
    if (i != 1 && i != 2) throw std::invalid_argument("normalized_partial: i must be 1 or 2");
    HilbertSeries r(weight, bound, denom);
    const QuadElem inv_denom(Rat(1, denom));
    for (const auto& [nu, c] : coeffs) {
        QuadElem s = nu.value();
        if (i == 2) s = s.conj();
        QuadElem v = c * s * inv_denom;
        if (!v.is_zero()) r.coeffs[nu] = v;
    }
    return r;
}

QExp HilbertSeries::restrict_diagonal() const {
    if (denom != 1)
        throw std::domain_error("restrict_diagonal: refined lattice (denom > 1)");
    QExp q(weight.first + weight.second, bound);
    for (const auto& [nu, c] : coeffs) {
        long m = static_cast<long>(nu.b);
        q.coeffs[m] += c.x;  // conjugation-stable strata: sqrt5 parts must cancel
    }
    // verify rationality of each stratum sum
    std::map<long, Rat> irr;
    for (const auto& [nu, c] : coeffs) irr[static_cast<long>(nu.b)] += c.y;
    for (const auto& [m, y] : irr)
        if (y != 0) throw std::domain_error("restrict_diagonal: non-rational diagonal sum");
    return q;
}

HilbertSeries HilbertSeries::invert() const {
    QuadElem c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("invert: zero constant term");
    HilbertSeries r({-weight.first, -weight.second}, bound, denom);
    const Int limit = max_key_trace();
    QuadElem inv0 = c0.inverse();
    r.coeffs[NuIndex(0, 0)] = inv0;
    // stratum recursion: h_t = -c0^{-1} * sum_{0<s<=t} f_s h_{t-s}
    for (Int t = 1; t <= limit; ++t) {
        CoeffMap acc;
        for (const auto& [nu, f] : coeffs) {
            if (nu.b > t) break;
            if (nu.b == 0) continue;
            for (const auto& [mu, h] : r.coeffs) {
                if (mu.b != t - nu.b) continue;
                NuIndex tau = nu + mu;
                acc[tau] += f * h;
            }
        }
        for (auto& [tau, v] : acc) {
            if (tau.b != t) continue;
            QuadElem hv = -(inv0 * v);
            if (!hv.is_zero()) r.coeffs[tau] = hv;
        }
    }
    return r;
}

namespace {

// strata of a coefficient map, keyed by trace
std::map<Int, CoeffMap> strata_of(const CoeffMap& m) {
    std::map<Int, CoeffMap> out;
    for (const auto& [nu, c] : m) out[nu.b][nu] = c;
    return out;
}

CoeffMap conv(const CoeffMap& f, const CoeffMap& g) {
    CoeffMap out;
    for (const auto& [nu, c] : f)
        for (const auto& [mu, d] : g) out[nu + mu] += c * d;
    // drop exact zeros
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// cone points of one trace stratum (possibly on a refined lattice where the
// parity constraint a = b (mod 2) still applies)
std::vector<NuIndex> stratum_points(const Int& t) {
    std::vector<NuIndex> out;
    if (t == 0) { out.emplace_back(0L, 0L); return out; }
    Int amax = sqrt(Int(5) * t * t);
    while (amax * amax >= Int(5) * t * t) --amax;
    if (((amax - t) % 2) != 0) --amax;
    for (Int a = amax; a >= -amax; a -= 2) out.push_back(NuIndex(a, t));
    return out;
}

// solve conv(divisor_stratum, x) = rhs for an unknown stratum x at trace t;
// rhs is supported on trace t + trace(divisor_stratum)
std::optional<CoeffMap> solve_stratum(const CoeffMap& divisor_stratum, const CoeffMap& rhs,
                                      const Int& t) {
    const Int m = divisor_stratum.begin()->first.b;
    auto unknowns = stratum_points(t);
    auto targets = stratum_points(t + m);
    QMat A(targets.size(), QVec(unknowns.size()));
    QVec b(targets.size(), QuadElem());
    for (size_t j = 0; j < unknowns.size(); ++j)
        for (const auto& [mu, d] : divisor_stratum) {
            NuIndex tau = unknowns[j] + mu;
            for (size_t i = 0; i < targets.size(); ++i)
                if (targets[i] == tau) { A[i][j] += d; break; }
        }
    for (size_t i = 0; i < targets.size(); ++i) {
        auto it = rhs.find(targets[i]);
        if (it != rhs.end()) b[i] = it->second;
    }
    SolveResult sr = solve_linear(std::move(A), std::move(b));
    if (sr.status == SolveStatus::Inconsistent) return std::nullopt;
    CoeffMap out;
    for (size_t j = 0; j < unknowns.size(); ++j)
        if (!sr.solution[j].is_zero()) out[unknowns[j]] = sr.solution[j];
    return out;
}

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    Int n = numerator(r), d = denominator(r);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rat(sn, sd);
}

std::optional<QuadElem> quad_sqrt(const QuadElem& v) {
    if (v.is_zero()) return QuadElem();
    if (v.sign() < 0 || v.conj().sign() < 0) return std::nullopt;  // not totally positive
    if (v.y == 0) {
        if (auto s = rat_sqrt(v.x)) return QuadElem(*s);
        if (auto s = rat_sqrt(v.x / 5)) return QuadElem(Rat(0), *s);
        return std::nullopt;
    }
    // (p + q sqrt5)^2 = v: q^2 = (x +- sqrt(x^2 - 5 y^2)) / 10, p = y / (2q)
    auto disc = rat_sqrt(v.x * v.x - 5 * v.y * v.y);
    if (!disc) return std::nullopt;
    for (int sgn : {+1, -1}) {
        Rat q2 = (v.x + sgn * *disc) / 10;
        if (q2 <= 0) continue;
        if (auto q = rat_sqrt(q2)) {
            QuadElem cand(v.y / (2 * *q), *q);
            if (cand * cand == v) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace

HilbertSeries divide_exact(const HilbertSeries& g, const HilbertSeries& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (g.denom != d.denom) throw std::invalid_argument("divide_exact: denominator mismatch");
    auto d_strata = strata_of(d.coeffs);
    const Int m = d_strata.begin()->first;
    const Int Th = std::min(g.max_key_trace(), d.max_key_trace()) - m;
    HilbertSeries h({g.weight.first - d.weight.first, g.weight.second - d.weight.second},
                    static_cast<int>(Th / g.denom), g.denom);
    if (g.is_zero()) return h;

    const CoeffMap& lead = d_strata.begin()->second;
    if (g.coeffs.begin()->first.b < m) throw std::domain_error("not divisible");
    std::map<Int, CoeffMap> h_strata;
    for (Int t = 0; t <= Th; ++t) {
        // residual at trace t + m
        CoeffMap rhs;
        for (const auto& [nu, c] : g.coeffs)
            if (nu.b == t + m) rhs[nu] = c;
        for (const auto& [s, hs] : h_strata) {
            auto dit = d_strata.find(t + m - s);
            if (dit == d_strata.end()) continue;
            for (const auto& [tau, v] : conv(hs, dit->second)) {
                rhs[tau] -= v;
                if (rhs[tau].is_zero()) rhs.erase(tau);
            }
        }
        if (rhs.empty()) continue;
        auto sol = solve_stratum(lead, rhs, t);
        if (!sol) throw std::domain_error("not divisible");
        if (!sol->empty()) h_strata[t] = std::move(*sol);
    }
    for (const auto& [t, hs] : h_strata)
        for (const auto& [nu, c] : hs) h.coeffs[nu] = c;

    // exact re-verification to the safe bound
    HilbertSeries check = h * d.truncated(static_cast<int>(Th / g.denom) + 1);
    const Int vlim = std::min(Int(Th + m), check.max_key_trace());
    for (const auto& [nu, c] : check.coeffs) {
        if (nu.b > vlim) break;
        if (g.coeff(nu) != c) throw std::domain_error("not divisible");
    }
    for (const auto& [nu, c] : g.coeffs) {
        if (nu.b > vlim) break;
        if (check.coeff(nu) != c) throw std::domain_error("not divisible");
    }
    return h;
}

HilbertSeries sqrt_series(const HilbertSeries& g, int leading_sign) {
    if (g.is_zero()) throw std::domain_error("no square root: zero series");
    if (g.weight.first % 2 || g.weight.second % 2)
        throw std::domain_error("no square root: odd weight");
    auto g_strata = strata_of(g.coeffs);
    const Int m2 = g_strata.begin()->first;
    if (m2 % 2 != 0) throw std::domain_error("no square root: odd leading trace");
    const Int m = m2 / 2;
    const Int Th = g.max_key_trace() - m;

    // leading stratum: univariate square root along descending a
    CoeffMap h_lead;
    {
        const CoeffMap& G = g_strata.begin()->second;
        const Int Amax = G.begin()->first.a;  // monomial order: largest a first
        if ((Amax - m2) % 2 != 0) throw std::domain_error("no square root");
        Int amax = Amax / 2;
        if (((amax - m) % 2) != 0) throw std::domain_error("no square root");
        auto ltop = quad_sqrt(G.begin()->second);
        if (!ltop) throw std::domain_error("no square root");
        QuadElem top = (leading_sign >= 0) == (ltop->sign() >= 0) ? *ltop : -*ltop;
        h_lead[NuIndex(amax, m)] = top;
        QuadElem two_top = QuadElem(2L) * top;
        Int amin = 0;
        if (m > 0) {
            Int cone_max = sqrt(Int(5) * m * m);
            while (cone_max * cone_max >= Int(5) * m * m) --cone_max;
            if (((cone_max - m) % 2) != 0) --cone_max;
            amin = -cone_max;
        }
        for (Int a = amax - 2; a >= amin; a -= 2) {
            QuadElem rhs = [&] {
                auto it = G.find(NuIndex(amax + a, m2));
                return it == G.end() ? QuadElem() : it->second;
            }();
            for (const auto& [n1, c1] : h_lead)
                for (const auto& [n2, c2] : h_lead)
                    if (n1.a + n2.a == amax + a && n1.a > a && n2.a > a) rhs -= c1 * c2;
            QuadElem ca = rhs / two_top;
            if (!ca.is_zero()) h_lead[NuIndex(a, m)] = ca;
        }
        // verify the leading stratum squares back
        CoeffMap sq = conv(h_lead, h_lead);
        if (sq != G) throw std::domain_error("no square root");
    }

    std::map<Int, CoeffMap> h_strata;
    h_strata[m] = h_lead;
    CoeffMap two_lead;
    for (const auto& [nu, c] : h_lead) two_lead[nu] = QuadElem(2L) * c;

    for (Int t = m + 1; t <= Th; ++t) {
        CoeffMap rhs;
        for (const auto& [nu, c] : g.coeffs)
            if (nu.b == t + m) rhs[nu] = c;
        for (const auto& [s1, hs1] : h_strata) {
            Int s2 = t + m - s1;
            if (s2 <= m || s2 >= t) continue;  // middle terms only (s1, s2 in (m, t))
            auto it = h_strata.find(s2);
            if (it == h_strata.end()) continue;
            if (s1 > s2) continue;  // count unordered pairs once
            CoeffMap c = conv(hs1, it->second);
            int mult = (s1 == s2) ? 1 : 2;
            for (const auto& [tau, v] : c) {
                rhs[tau] -= QuadElem(Rat(mult)) * v;
                if (rhs[tau].is_zero()) rhs.erase(tau);
            }
        }
        if (rhs.empty()) continue;
        auto sol = solve_stratum(two_lead, rhs, t);
        if (!sol) throw std::domain_error("no square root");
        if (!sol->empty()) h_strata[t] = std::move(*sol);
    }

    HilbertSeries h({g.weight.first / 2, g.weight.second / 2},
                    static_cast<int>(Th / g.denom), g.denom);
    for (const auto& [t, hs] : h_strata)
        for (const auto& [nu, c] : hs) h.coeffs[nu] = c;

    HilbertSeries check = h * h;
    const Int vlim = std::min(Int(Th + m), check.max_key_trace());
    for (const auto& [nu, c] : check.coeffs) {
        if (nu.b > vlim) break;
        if (g.coeff(nu) != c) throw std::domain_error("no square root");
    }
    for (const auto& [nu, c] : g.coeffs) {
        if (nu.b > vlim) break;
        if (check.coeff(nu) != c) throw std::domain_error("no square root");
    }
    return h;
}

}  // namespace hmf
