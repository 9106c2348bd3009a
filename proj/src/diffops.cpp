#include "hmf/diffops.hpp"

#include "hmf/qexp.hpp"  // binomial_rat

#include <stdexcept>

namespace hmf {

namespace {

// sigma_i of the actual exponent nu/denom, as an exact element of K
QuadElem sigma(const NuIndex& nu, int i, long denom) {
    QuadElem v = nu.value();
    if (i == 2) v = v.conj();
    return v * QuadElem(Rat(1, denom));
}

// pairwise convolution sum_{nu+mu=tau} factor(nu, mu) a_nu b_mu
template <typename Factor>
HilbertSeries bilinear_conv(const HilbertSeries& F, const HilbertSeries& G,
                            std::pair<int, int> weight, Factor&& factor) {
    if (F.denom != G.denom)
        throw std::invalid_argument("bilinear_conv: denominator mismatch");
    HilbertSeries r(weight, std::min(F.bound, G.bound), F.denom);
    const Int limit = r.max_key_trace();
    for (const auto& [nu, a] : F.coeffs) {
        if (nu.b > limit) break;
        for (const auto& [mu, b] : G.coeffs) {
            if (nu.b + mu.b > limit) break;
            QuadElem f = factor(nu, mu);
            if (f.is_zero()) continue;
            NuIndex tau = nu + mu;
            auto [it, fresh] = r.coeffs.try_emplace(tau, QuadElem());
            it->second += f * a * b;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

HilbertSeries with_weight(HilbertSeries s, std::pair<int, int> w) {
    s.weight = w;
    return s;
}

void require_parallel(const HilbertSeries& F, const char* who) {
    if (F.weight.first != F.weight.second)
        throw std::invalid_argument(std::string(who) + ": parallel weight required");
}

}  // namespace

HilbertSeries rankin_bracket(const HilbertSeries& F, const HilbertSeries& G, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("rankin_bracket: i must be 1 or 2");
    const long fi = (i == 1) ? F.weight.first : F.weight.second;
    const long gi = (i == 1) ? G.weight.first : G.weight.second;
    std::pair<int, int> w{F.weight.first + G.weight.first + (i == 1 ? 2 : 0),
                          F.weight.second + G.weight.second + (i == 2 ? 2 : 0)};
    const long D = F.denom;
    return bilinear_conv(F, G, w, [&](const NuIndex& nu, const NuIndex& mu) {
        return QuadElem(Rat(gi)) * sigma(nu, i, D) - QuadElem(Rat(fi)) * sigma(mu, i, D);
    });
}

HilbertSeries rankin_bracket_composed(const HilbertSeries& F, const HilbertSeries& G, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("rankin_bracket: i must be 1 or 2");
    const long fi = (i == 1) ? F.weight.first : F.weight.second;
    const long gi = (i == 1) ? G.weight.first : G.weight.second;
    std::pair<int, int> w{F.weight.first + G.weight.first + (i == 1 ? 2 : 0),
                          F.weight.second + G.weight.second + (i == 2 ? 2 : 0)};
    HilbertSeries t1 = with_weight(G * F.normalized_partial(i), w);
    HilbertSeries t2 = with_weight(F * G.normalized_partial(i), w);
    return t1.scaled(QuadElem(Rat(gi))) - t2.scaled(QuadElem(Rat(fi)));
}

HilbertSeries rc_bracket(const HilbertSeries& F, const HilbertSeries& G, int s1, int s2) {
    if (s1 < 0 || s2 < 0) throw std::invalid_argument("rc_bracket: negative order");
    const auto [f1, f2] = F.weight;
    const auto [g1, g2] = G.weight;
    std::pair<int, int> w{f1 + g1 + 2 * s1, f2 + g2 + 2 * s2};

    // precompute D1^a D2^b applied to each argument
    auto powers = [&](const HilbertSeries& X, int m1, int m2) {
        std::vector<std::vector<HilbertSeries>> p(m1 + 1, std::vector<HilbertSeries>(m2 + 1));
        p[0][0] = X;
        for (int a = 1; a <= m1; ++a) p[a][0] = p[a - 1][0].normalized_partial(1);
        for (int a = 0; a <= m1; ++a)
            for (int b = 1; b <= m2; ++b) p[a][b] = p[a][b - 1].normalized_partial(2);
        return p;
    };
    auto dF = powers(F, s1, s2), dG = powers(G, s1, s2);

    HilbertSeries acc(w, std::min(F.bound, G.bound), F.denom);
    for (int r1 = 0; r1 <= s1; ++r1)
        for (int r2 = 0; r2 <= s2; ++r2) {
            Rat c = binomial_rat(f1 + s1 - 1, s1 - r1) * binomial_rat(f2 + s2 - 1, s2 - r2) *
                    binomial_rat(g1 + s1 - 1, r1) * binomial_rat(g2 + s2 - 1, r2);
            if ((r1 + r2) % 2) c = -c;
            if (c == 0) continue;
            HilbertSeries term = dF[r1][r2] * dG[s1 - r1][s2 - r2];
            acc = acc + with_weight(term.scaled(QuadElem(c)), w);
        }
    return acc;
}

HilbertSeries lambda_op(const HilbertSeries& F) {
    std::pair<int, int> w{2 * F.weight.first + 2, 2 * F.weight.second + 2};
    const long D = F.denom;
    return bilinear_conv(F, F, w, [&](const NuIndex& nu, const NuIndex& mu) {
        return sigma(mu, 1, D) * sigma(mu, 2, D) - sigma(nu, 1, D) * sigma(mu, 2, D);
    });
}

HilbertSeries lambda_op_composed(const HilbertSeries& F) {
    std::pair<int, int> w{2 * F.weight.first + 2, 2 * F.weight.second + 2};
    HilbertSeries d1 = F.normalized_partial(1);
    HilbertSeries d2 = F.normalized_partial(2);
    return with_weight(F * d1.normalized_partial(2), w) - with_weight(d1 * d2, w);
}

HilbertSeries pi_op(const HilbertSeries& F, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("pi_op: i must be 1 or 2");
    const long fi = (i == 1) ? F.weight.first : F.weight.second;
    std::pair<int, int> w{2 * F.weight.first + (i == 1 ? 4 : 0),
                          2 * F.weight.second + (i == 2 ? 4 : 0)};
    const long D = F.denom;
    HilbertSeries r = bilinear_conv(F, F, w, [&](const NuIndex& nu, const NuIndex& mu) {
        QuadElem sm = sigma(mu, i, D);
        return (QuadElem(Rat(fi)) * sm - QuadElem(Rat(fi + 1)) * sigma(nu, i, D)) * sm;
    });
    if (!r.constant_term().is_zero())
        throw std::logic_error("pi_op: nonzero constant term");
    return r;
}

HilbertSeries pi_op_composed(const HilbertSeries& F, int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("pi_op: i must be 1 or 2");
    const long fi = (i == 1) ? F.weight.first : F.weight.second;
    std::pair<int, int> w{2 * F.weight.first + (i == 1 ? 4 : 0),
                          2 * F.weight.second + (i == 2 ? 4 : 0)};
    HilbertSeries d = F.normalized_partial(i);
    return with_weight(F * d.normalized_partial(i), w).scaled(QuadElem(Rat(fi))) -
           with_weight(d * d, w).scaled(QuadElem(Rat(fi + 1)));
}

HilbertSeries big_pi_op(const HilbertSeries& F) { return pi_op(F, 1) * pi_op(F, 2); }

HilbertSeries multi_bracket(const std::vector<HilbertSeries>& forms) {
    if (forms.size() == 2) return rankin_bracket(forms[0], forms[1], 1);
    if (forms.size() != 3) throw std::invalid_argument("multi_bracket: arity must be 2 or 3");
    for (const auto& X : forms) require_parallel(X, "multi_bracket");
    const long r[3] = {forms[0].weight.first, forms[1].weight.first, forms[2].weight.first};
    int wsum = static_cast<int>(r[0] + r[1] + r[2]) + 2;
    std::pair<int, int> w{wsum, wsum};

    std::vector<HilbertSeries> d1, d2;
    for (const auto& X : forms) {
        d1.push_back(X.normalized_partial(1));
        d2.push_back(X.normalized_partial(2));
    }
    // cofactor expansion along the top row (r_j F_j)
    HilbertSeries acc(w, forms[0].bound, forms[0].denom);
    for (int j = 0; j < 3; ++j) {
        int c1 = (j == 0) ? 1 : 0, c2 = (j == 2) ? 1 : 2;
        HilbertSeries minor = d1[c1] * d2[c2] - d1[c2] * d2[c1];
        HilbertSeries term = forms[j] * minor;
        QuadElem coef(Rat((j % 2) ? -r[j] : r[j]));
        acc = acc + with_weight(term, w).scaled(coef);
    }
    return acc;
}

HilbertSeries triple_bracket(const HilbertSeries& F, const HilbertSeries& G,
                             const HilbertSeries& H) {
    require_parallel(G, "triple_bracket");
    require_parallel(H, "triple_bracket");
    Rat gh(G.weight.first + H.weight.first);
    return multi_bracket({F, G, H}).scaled(QuadElem(gh));
}

HilbertSeries t_op(const HilbertSeries& F) {
    require_parallel(F, "t_op");
    HilbertSeries L = lambda_op(F), P = big_pi_op(F);
    return rankin_bracket(F, L, 1) * rankin_bracket(F, P, 2) -
           rankin_bracket(F, L, 2) * rankin_bracket(F, P, 1);
}

HilbertSeries phi_op(const HilbertSeries& F) {
    if (F.constant_term().is_zero())
        throw std::domain_error(
            "phi_op: zero constant term (F is a cusp form; use divide_exact directly)");
    const long r1 = F.weight.first, r2 = F.weight.second;
    HilbertSeries L = lambda_op(F);
    HilbertSeries num = big_pi_op(F) - (L * L).scaled(QuadElem(Rat((r1 + 1) * (r2 + 1))));
    return num * F.invert();
}

}  // namespace hmf
