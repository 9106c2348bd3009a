#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hmf/diffops.hpp"
#include "hmf/eisenstein.hpp"
#include "hmf/structure.hpp"

#include <map>
#include <random>

using namespace hmf;

namespace {

std::map<std::vector<int>, QuadElem> term_map(const IsobaricPoly& p) {
    std::map<std::vector<int>, QuadElem> m;
    for (const auto& t : p.terms) m[t.exponents] = t.coeff;
    return m;
}

}  // namespace

TEST_CASE("generator normalizations") {
    HilbertSeries c6 = chi6(5), c5 = chi5_theta(5), ct = chi_tilde(5);
    CHECK(c6.weight == std::pair<int, int>{6, 6});
    CHECK(c6.constant_term().is_zero());
    CHECK(c6.coeff(NuIndex(1, 1)) == QuadElem(1L));
    CHECK(c6.is_symmetric());
    CHECK(c5.weight == std::pair<int, int>{5, 5});
    CHECK(c5.coeff(NuIndex(1, 1)) == QuadElem(1L));
    CHECK(c5.is_antisymmetric());
    CHECK(ct.weight == std::pair<int, int>{15, 15});
    CHECK(ct.is_symmetric());
    CHECK(ct.constant_term().is_zero());
    // chi_tilde has irrational coefficients at self-conjugate indices, so its
    // diagonal restriction is not defined termwise
    CHECK(ct.coeff(NuIndex(0, 2)).y != 0);
    CHECK_THROWS_AS((void)ct.restrict_diagonal(), std::domain_error);
}

TEST_CASE("chi6 restricts to a multiple of Delta") {
    CHECK(chi6_diagonal_constant(8) == Rat(2));
}

TEST_CASE("the two chi5^2 constructions agree") {
    HilbertSeries c5 = chi5_theta(6);
    HilbertSeries viaderi = chi5_squared_deri2(6);
    CHECK(viaderi.weight == std::pair<int, int>{10, 10});
    CHECK((c5 * c5).agrees_with(viaderi));
    CHECK(viaderi.is_symmetric());
    CHECK(viaderi.constant_term().is_zero());
}

TEST_CASE("ring relations hold") {
    CHECK(verify_relation(RelationName::Systeme2_2, 6).is_zero());
    CHECK(verify_relation(RelationName::Systeme2_3, 6).is_zero());
    CHECK(verify_relation(RelationName::Deri2, 6).is_zero());
    CHECK(verify_relation(RelationName::Equadiff, 6).is_zero());
    CHECK(verify_relation(RelationName::TIdentity, 6).is_zero());
    CHECK(relation_from_string("deri2") == RelationName::Deri2);
    CHECK_THROWS_AS((void)relation_from_string("nope"), std::invalid_argument);
}

TEST_CASE("Pi(phi2) decomposes over the generators") {
    int bound = 6;
    HilbertSeries p2 = phi2(bound), c6 = chi6(bound), c5 = chi5_theta(bound);
    IsobaricPoly fit = fit_isobaric_relation(big_pi_op(p2), {"phi2", "chi5^2", "chi6"},
                                             {p2, c5 * c5, c6}, 12);
    auto tm = term_map(fit);
    REQUIRE(tm.size() == 2);
    CHECK(tm[{0, 0, 2}] == QuadElem(5184L));
    CHECK(tm[{1, 1, 0}] == QuadElem(-2880L));
}

TEST_CASE("restriction of Pi(phi2) - 9 Lambda(phi2)^2 vanishes") {
    HilbertSeries p2 = phi2(10);
    HilbertSeries L = lambda_op(p2);
    HilbertSeries num = big_pi_op(p2) - (L * L).scaled(QuadElem(9L));
    CHECK(num.restrict_diagonal().is_zero());
}

TEST_CASE("T(phi2) factorization") {
    int bound = 6;
    HilbertSeries p2 = phi2(bound);
    HilbertSeries q = divide_exact(t_op(p2), p2 * p2);
    HilbertSeries rhs = (chi5_theta(bound) * chi_tilde(bound)).scaled(QuadElem(Rat(276480, 7)));
    CHECK(q.agrees_with(rhs));
}

TEST_CASE("symmetric even decomposition: both paths, exact reassembly") {
    int bound = 6;
    HilbertSeries p2 = phi2(bound), c6 = chi6(bound), c5 = chi5_theta(bound);
    HilbertSeries c5sq = c5 * c5;

    IsobaricPoly cube = decompose_symmetric_even((p2 * p2 * p2).truncated(bound));
    auto tm = term_map(cube);
    REQUIRE(tm.size() == 1);
    CHECK(tm[{3, 0, 0}] == QuadElem(1L));

    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 12; ++trial) {
        int w = 4 + 2 * (trial % 9);  // parallel weights 4..20
        IsobaricPoly truth;
        truth.generator_names = {"phi2", "chi5^2", "chi6"};
        truth.generator_weights = {2, 10, 6};
        truth.weight = w;
        for (int e5 = 0; 10 * e5 <= w; ++e5)
            for (int e6 = 0; 10 * e5 + 6 * e6 <= w; ++e6) {
                if ((w - 10 * e5 - 6 * e6) % 2) continue;
                int e2 = (w - 10 * e5 - 6 * e6) / 2;
                int c = coef(rng);
                if (c) truth.terms.push_back({{e2, e5, e6}, QuadElem(Rat(c))});
            }
        HilbertSeries F = truth.evaluate({p2, c5sq, c6});
        IsobaricPoly back = decompose_symmetric_even(F);
        CHECK(term_map(back) == term_map(truth));
    }
}

TEST_CASE("decomposition over the full generator set") {
    int bound = 6;
    HilbertSeries p2 = phi2(bound), c5 = chi5_theta(bound), ct = chi_tilde(bound);

    // antisymmetric input: one chi5 factor splits off
    IsobaricPoly a = decompose_any((p2 * c5).truncated(bound));
    auto tm = term_map(a);
    REQUIRE(tm.size() == 1);
    CHECK(tm[{1, 1, 0, 0}] == QuadElem(1L));

    // odd symmetric weight: chi_tilde appears with degree one
    IsobaricPoly t = decompose_any(ct);
    tm = term_map(t);
    REQUIRE(tm.size() == 1);
    CHECK(tm[{0, 0, 0, 1}] == QuadElem(1L));

    // mixed symmetry, everything in parallel weight 19
    HilbertSeries p7 = p2;
    for (int i = 1; i < 7; ++i) p7 = p7 * p2;
    HilbertSeries mix = (p2 * p2 * ct).scaled(QuadElem(Rat(3, 7))) + p7 * c5 -
                        (p2 * p2 * chi5_squared_deri2(bound) * c5).scaled(QuadElem(2L));
    IsobaricPoly m = decompose_any(mix);
    tm = term_map(m);
    REQUIRE(tm.size() == 3);
    CHECK(tm[{7, 1, 0, 0}] == QuadElem(1L));
    CHECK(tm[{2, 0, 0, 1}] == QuadElem(Rat(3, 7)));
    CHECK(tm[{2, 3, 0, 0}] == QuadElem(-2L));

    // negative control: a symmetric series that is not modular
    HilbertSeries junk = (p2 * p2).truncated(bound);
    junk.set_coeff(NuIndex(0, 2), junk.coeff(NuIndex(0, 2)) + QuadElem(1L));
    CHECK(junk.is_symmetric());
    CHECK_THROWS_AS((void)decompose_symmetric_even(junk), std::domain_error);
}

TEST_CASE("lifting an elliptic decomposition along the diagonal") {
    int bound = 6;
    HilbertSeries p2 = phi2(bound), c6 = chi6(bound);
    HilbertSeries F = (p2 * p2 * p2).truncated(bound) + c6.scaled(QuadElem(Rat(11)));
    QExp diag = F.restrict_diagonal();
    E4DeltaDecomposition dec = decompose_e4_delta(diag);
    REQUIRE(dec.ok);
    Rat c = chi6_diagonal_constant(bound);
    IsobaricPoly lifted = lift_mu(dec, diag.weight, c);
    HilbertSeries back = lifted.evaluate({p2, c6});
    CHECK(back.restrict_diagonal() == diag);
    CHECK(back.agrees_with(F));  // weight 6: the lift section is unique here
}
