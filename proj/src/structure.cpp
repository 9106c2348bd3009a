#include "hmf/structure.hpp"

#include "hmf/diffops.hpp"
#include "hmf/eisenstein.hpp"
#include "hmf/linalg.hpp"
#include "hmf/theta.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hmf {

namespace {

// memoized generator construction, keyed by bound
template <typename Build>
HilbertSeries memo(const char* key, int bound, Build&& build) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, HilbertSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({key, bound});
    if (it == cache.end()) it = cache.emplace(std::pair{std::string(key), bound}, build()).first;
    return it->second;
}

}  // namespace

HilbertSeries phi2(int bound) {
    return memo("phi2", bound, [&] { return eisenstein_series(2, bound); });
}

HilbertSeries chi6(int bound) {
    return memo("chi6", bound,
                [&] { return lambda_op(phi2(bound)).scaled(QuadElem(Rat(1, 24))); });
}

HilbertSeries chi5_theta(int bound) {
    // ring normalization: leading coefficient 1 at mu0.  The raw ten-factor
    // product has leading coefficient 64, so this is theta_product/64; the
    // published relation coefficients only close with this scaling.
    return memo("chi5", bound, [&] { return chi5(bound).scaled(QuadElem(Rat(1, 2))); });
}

HilbertSeries chi5_squared_deri2(int bound) {
    return memo("chi5sq_deri2", bound, [&] {
        HilbertSeries c6 = chi6(bound), p2 = phi2(bound);
        HilbertSeries num = (c6 * c6).scaled(QuadElem(9L)) -
                            big_pi_op(p2).scaled(QuadElem(Rat(1, 576)));
        return num * p2.scaled(QuadElem(5L)).invert();
    });
}

HilbertSeries chi_tilde(int bound) {
    return memo("chi_tilde", bound,
                [&] { return triple_bracket(chi6(bound), phi2(bound), chi5_theta(bound)); });
}

Rat chi6_diagonal_constant(int bound) {
    if (bound < 2) throw std::invalid_argument("chi6_diagonal_constant: bound must be >= 2");
    QExp diag = chi6(bound).restrict_diagonal();
    QExp delta = delta_q(bound);
    Rat c = diag.coeff(1);  // Delta has q-coefficient 1
    for (int n = 0; n <= bound; ++n)
        if (diag.coeff(n) != c * delta.coeff(n))
            throw std::runtime_error("chi6 diagonal restriction is not proportional to Delta");
    return c;
}

RelationName relation_from_string(const std::string& name) {
    if (name == "systeme2_2") return RelationName::Systeme2_2;
    if (name == "systeme2_3") return RelationName::Systeme2_3;
    if (name == "deri2") return RelationName::Deri2;
    if (name == "equadiff") return RelationName::Equadiff;
    if (name == "t_identity") return RelationName::TIdentity;
    throw std::invalid_argument("unknown relation: " + name);
}

HilbertSeries verify_relation(RelationName name, int bound) {
    HilbertSeries p2 = phi2(bound), c6 = chi6(bound), c5 = chi5_theta(bound);
    HilbertSeries c5sq = c5 * c5;
    switch (name) {
        case RelationName::Systeme2_2:
            return lambda_op(c6) -
                   (p2 * (p2 * c5sq - c6 * c6)).scaled(QuadElem(Rat(1, 20)));
        case RelationName::Systeme2_3:
            return lambda_op(c5sq) -
                   (c5sq * (c6 * c6 - p2 * c5sq)).scaled(QuadElem(Rat(1, 10)));
        case RelationName::Deri2:
            return big_pi_op(p2) -
                   ((c6 * c6).scaled(QuadElem(9L)) - (p2 * c5sq).scaled(QuadElem(5L)))
                       .scaled(QuadElem(576L));
        case RelationName::Equadiff:
            return lambda_op(lambda_op(p2)).scaled(QuadElem(100L)) + p2 * big_pi_op(p2) -
                   [&] {
                       HilbertSeries L = lambda_op(p2);
                       return (p2 * L * L).scaled(QuadElem(4L));
                   }();
        case RelationName::TIdentity: {
            HilbertSeries q = divide_exact(t_op(p2), p2 * p2);
            // 2^11 * 3^3 * 5 / 7
            return q - (c5 * chi_tilde(bound)).scaled(QuadElem(Rat(276480, 7)));
        }
    }
    throw std::logic_error("verify_relation: unreachable");
}

HilbertSeries IsobaricPoly::evaluate(const std::vector<HilbertSeries>& generators) const {
    if (generators.size() != generator_names.size())
        throw std::invalid_argument("IsobaricPoly::evaluate: generator count mismatch");
    int bound = generators.empty() ? 0 : generators[0].bound;
    for (const auto& g : generators) bound = std::min(bound, g.bound);
    HilbertSeries acc({weight, weight}, bound);
    for (const auto& term : terms) {
        HilbertSeries m = HilbertSeries::one(bound);
        for (size_t i = 0; i < generators.size(); ++i)
            for (int e = 0; e < term.exponents[i]; ++e) m = m * generators[i];
        acc = acc + m.scaled(term.coeff).truncated(bound);
    }
    acc.weight = {weight, weight};
    return acc;
}

namespace {

void enumerate_exponents(const std::vector<int>& weights, int target, size_t i,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (i == weights.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    for (int e = 0; e * weights[i] <= target; ++e) {
        cur[i] = e;
        enumerate_exponents(weights, target - e * weights[i], i + 1, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

IsobaricPoly fit_isobaric_relation(const HilbertSeries& target,
                                   const std::vector<std::string>& names,
                                   const std::vector<HilbertSeries>& generators,
                                   int weight) {
    if (names.size() != generators.size())
        throw std::invalid_argument("fit_isobaric_relation: name/generator mismatch");
    IsobaricPoly poly;
    poly.generator_names = names;
    poly.weight = weight;
    int bound = target.bound;
    for (const auto& g : generators) {
        if (g.weight.first != g.weight.second)
            throw std::invalid_argument("fit_isobaric_relation: non-parallel generator");
        poly.generator_weights.push_back(g.weight.first);
        bound = std::min(bound, g.bound);
    }

    std::vector<std::vector<int>> exps;
    std::vector<int> cur(generators.size(), 0);
    enumerate_exponents(poly.generator_weights, weight, 0, cur, exps);
    if (exps.empty()) {
        if (!target.is_zero()) throw std::domain_error("not in the ring");
        return poly;
    }

    std::vector<HilbertSeries> monomials;
    for (const auto& e : exps) {
        HilbertSeries m = HilbertSeries::one(bound);
        for (size_t i = 0; i < generators.size(); ++i)
            for (int k = 0; k < e[i]; ++k) m = m * generators[i];
        monomials.push_back(m.truncated(bound));
    }

    auto cone = enumerate_cone(bound);
    QMat A(cone.size(), QVec(exps.size()));
    QVec b(cone.size());
    for (size_t r = 0; r < cone.size(); ++r) {
        for (size_t c = 0; c < exps.size(); ++c) A[r][c] = monomials[c].coeff(cone[r]);
        b[r] = target.coeff(cone[r]);
    }
    SolveResult sr = solve_linear(std::move(A), std::move(b));
    if (sr.status == SolveStatus::Inconsistent) throw std::domain_error("not in the ring");
    if (sr.status == SolveStatus::Underdetermined)
        throw std::domain_error("fit underdetermined: raise the bound");

    for (size_t c = 0; c < exps.size(); ++c)
        if (!sr.solution[c].is_zero()) poly.terms.push_back({exps[c], sr.solution[c]});
    return poly;
}

namespace {

// key for comparing term lists regardless of ordering
std::map<std::vector<int>, QuadElem> term_map(const IsobaricPoly& p) {
    std::map<std::vector<int>, QuadElem> m;
    for (const auto& t : p.terms) m[t.exponents] = t.coeff;
    return m;
}

// the restriction/division recursion of the structure theorem, producing
// terms over {phi2, chi5^2, chi6}
void recurse_symmetric(const HilbertSeries& F, const HilbertSeries& p2,
                       const HilbertSeries& c5sq, const HilbertSeries& c6, const Rat& c,
                       int chi5sq_exp, std::vector<IsobaricTerm>& out) {
    if (F.is_zero()) return;
    const int w = F.weight.first;
    QExp diag = F.restrict_diagonal();
    E4DeltaDecomposition dec = decompose_e4_delta(diag);
    if (!dec.ok) throw std::domain_error("not in the ring");
    HilbertSeries G({w, w}, F.bound);
    for (const auto& t : dec.terms) {
        HilbertSeries m = HilbertSeries::one(F.bound);
        for (int i = 0; i < t.e4_exp; ++i) m = m * p2;
        for (int i = 0; i < t.delta_exp; ++i) m = m * c6;
        Rat coef = t.coeff;
        for (int i = 0; i < t.delta_exp; ++i) coef /= c;
        G = G + m.scaled(QuadElem(coef));
        out.push_back({{t.e4_exp, chi5sq_exp, t.delta_exp}, QuadElem(coef)});
    }
    G.weight = {w, w};
    HilbertSeries R = F - G.truncated(F.bound);
    if (R.is_zero()) return;
    recurse_symmetric(divide_exact(R, c5sq), p2, c5sq, c6, c, chi5sq_exp + 1, out);
}

}  // namespace

IsobaricPoly decompose_symmetric_even(const HilbertSeries& F, bool check_recursion) {
    if (F.weight.first != F.weight.second)
        throw std::invalid_argument("decompose_symmetric_even: parallel weight required");
    if (F.weight.first % 2)
        throw std::invalid_argument("decompose_symmetric_even: even weight required");
    if (!F.is_symmetric())
        throw std::invalid_argument("decompose_symmetric_even: input not symmetric");
    const int bound = F.bound;
    HilbertSeries p2 = phi2(bound), c6 = chi6(bound), c5 = chi5_theta(bound);
    HilbertSeries c5sq = c5 * c5;
    IsobaricPoly fit = fit_isobaric_relation(F, {"phi2", "chi5^2", "chi6"},
                                             {p2, c5sq, c6}, F.weight.first);
    if (check_recursion) {
        Rat c = chi6_diagonal_constant(bound);
        std::vector<IsobaricTerm> rec;
        recurse_symmetric(F, p2, c5sq, c6, c, 0, rec);
        IsobaricPoly alt = fit;
        alt.terms = rec;
        if (term_map(alt) != term_map(fit))
            throw std::runtime_error("decomposition paths disagree");
    }
    return fit;
}

IsobaricPoly lift_mu(const E4DeltaDecomposition& p, int weight, const Rat& c) {
    IsobaricPoly out;
    out.generator_names = {"phi2", "chi6"};
    out.generator_weights = {2, 6};
    out.weight = weight / 2;  // elliptic weight 2w pulls back to parallel weight w
    for (const auto& t : p.terms) {
        Rat coef = t.coeff;
        for (int i = 0; i < t.delta_exp; ++i) coef /= c;
        out.terms.push_back({{t.e4_exp, t.delta_exp}, QuadElem(coef)});
    }
    return out;
}

IsobaricPoly decompose_any(const HilbertSeries& F) {
    if (F.weight.first != F.weight.second)
        throw std::invalid_argument("decompose_any: parallel weight required");
    const int bound = F.bound;
    HilbertSeries p2 = phi2(bound), c6 = chi6(bound), c5 = chi5_theta(bound);
    HilbertSeries ct = chi_tilde(bound);

    IsobaricPoly out;
    out.generator_names = {"phi2", "chi5", "chi6", "chi_tilde"};
    out.generator_weights = {2, 5, 6, 15};
    out.weight = F.weight.first;

    // symmetric part: even weight decomposes directly; odd weight is
    // chi_tilde times an even symmetric form
    auto emit_symmetric = [&](const HilbertSeries& S, int chi5_exp, int chit_exp) {
        if (S.is_zero()) return;
        if (S.weight.first % 2 == 0) {
            IsobaricPoly d = decompose_symmetric_even(S, false);
            for (const auto& t : d.terms)
                out.terms.push_back(
                    {{t.exponents[0], chi5_exp + 2 * t.exponents[1], t.exponents[2], chit_exp},
                     t.coeff});
        } else {
            if (chit_exp > 0) throw std::domain_error("not in the ring");
            HilbertSeries K = divide_exact(S, ct);
            IsobaricPoly d = decompose_symmetric_even(K, false);
            for (const auto& t : d.terms)
                out.terms.push_back(
                    {{t.exponents[0], chi5_exp + 2 * t.exponents[1], t.exponents[2], 1},
                     t.coeff});
        }
    };

    HilbertSeries swapped = F.swap_conjugate();
    HilbertSeries S = (F + swapped).scaled(QuadElem(Rat(1, 2)));
    HilbertSeries A = (F - swapped).scaled(QuadElem(Rat(1, 2)));
    emit_symmetric(S, 0, 0);
    if (!A.is_zero()) emit_symmetric(divide_exact(A, c5), 1, 0);

    HilbertSeries back = out.evaluate({p2, c5, c6, ct});
    if (!back.agrees_with(F.truncated(back.bound)))
        throw std::runtime_error("decompose_any: reassembly mismatch");
    return out;
}

}  // namespace hmf
