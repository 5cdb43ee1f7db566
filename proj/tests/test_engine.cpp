/*
   Copyright 2026 The elimcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace elimcert;
using testutil::qp;

namespace {

const std::vector<MPoly<Rational>> kConics{qp("x1^2+x2^2-1", 2), qp("x1^2-x2", 2)};
const std::vector<MPoly<Rational>> kTwistedCubic{qp("x2-x1^2", 3), qp("x3-x1^3", 3)};

} // namespace

TEST_CASE("generic combinations") {
    SUBCASE("shape for s = n - q = 2") {
        Sampler sampler(1);
        auto gc = build_generic_combinations(kConics, 0, sampler);
        REQUIRE(gc.F.size() == 2);
        CHECK(gc.F[1] == kConics[1]); // F_{n-q} is the lowest-degree generator itself
        CHECK(gc.alpha[1][0].is_zero());
        CHECK(gc.alpha[1][1].is_one());
        CHECK_FALSE(gc.alpha[0][0].is_zero());
        MPoly<Rational> expect = kConics[0].scaled(gc.alpha[0][0]) + kConics[1].scaled(gc.alpha[0][1]);
        CHECK(gc.F[0] == expect);
        CHECK(dimension(gc.F).q == 0);
    }
    SUBCASE("a regular sequence passes on the first draw") {
        std::vector<MPoly<Rational>> gens{qp("x1^2-x2", 2), qp("x2^3-1", 2)};
        auto gc = build_generic_combinations(gens, 0, std::uint64_t{9});
        CHECK(gc.F.size() == 2);
    }
    SUBCASE("twisted cubic degrees at seed 42") {
        Sampler sampler(42);
        auto gc = build_generic_combinations(kTwistedCubic, 1, sampler);
        REQUIRE(gc.F.size() == 2);
        CHECK(*gc.F[0].total_degree() == 3);
        CHECK(*gc.F[1].total_degree() == 2);
        CHECK(gc.sorted_degrees == std::vector<long>{3, 2});
        // degree sort puts the cubic first
        CHECK(gc.sort_permutation == std::vector<std::size_t>{1, 0});
    }
    SUBCASE("too few generators for the claimed dimension") {
        Sampler sampler(3);
        CHECK_THROWS_AS((void)build_generic_combinations(std::vector<MPoly<Rational>>{qp("x1", 3)}, 0, sampler),
                        InconsistentInputError);
    }
}

TEST_CASE("two conics: the bound is attained and certified") {
    for (auto mode : {PipelineMode::GenericCoords, PipelineMode::OriginalCoords}) {
        CAPTURE(mode_name(mode));
        auto cert = eliminate_with_bound(kConics, 0, mode);
        CHECK(cert.q == 0);
        CHECK(cert.bound == 4);
        CHECK(*cert.phi.total_degree() == 4);
        CHECK(cert.phi.supported_within(1));
        auto rep = verify_certificate(cert, kConics);
        CHECK(rep.verdict);
        CHECK(rep.deg_phi == 4);
    }
}

TEST_CASE("twisted cubic: certificate under the bound in both modes") {
    for (auto mode : {PipelineMode::GenericCoords, PipelineMode::OriginalCoords}) {
        CAPTURE(mode_name(mode));
        auto cert = eliminate_with_bound(kTwistedCubic, 7, mode);
        CHECK(cert.q == 1);
        CHECK(cert.bound == 6);
        CHECK(cert.phi.supported_within(2));
        CHECK(*cert.phi.total_degree() <= 6);
        CHECK(verify_certificate(cert, kTwistedCubic).verdict);
        if (mode == PipelineMode::OriginalCoords) {
            CHECK(cert.stats.deformation_steps >= 0);
            CHECK(cert.stats.deformation_steps <= cert.stats.deformation_initial_valuation);
        }
    }
}

TEST_CASE("principal ideal already supported on the kept block") {
    std::vector<MPoly<Rational>> gens{qp("x1", 2)};
    auto cert = eliminate_with_bound(gens, 0, PipelineMode::OriginalCoords);
    CHECK(cert.q == 1);
    CHECK(cert.bound == 1);
    CHECK(cert.phi == qp("x1", 2));
    CHECK(cert.cofactors[0] == qp("1", 2));
    CHECK(verify_certificate(cert, gens).verdict);

    auto cert2 = eliminate_with_bound(gens, 0, PipelineMode::GenericCoords);
    CHECK(cert2.bound == 1);
    CHECK(*cert2.phi.total_degree() == 1);
    CHECK(verify_certificate(cert2, gens).verdict);
}

TEST_CASE("zero generators flow through with zero cofactors") {
    std::vector<MPoly<Rational>> gens{kConics[0], MPoly<Rational>::zero(FieldDesc::rationals(), 2, TermOrder::grevlex()),
                                      kConics[1]};
    auto cert = eliminate_with_bound(gens, 0, PipelineMode::GenericCoords);
    CHECK(cert.cofactors.size() == 3);
    CHECK(cert.cofactors[1].is_zero());
    CHECK(cert.bound == 4);
    CHECK(verify_certificate(cert, gens).verdict);
}

TEST_CASE("empty variety handling") {
    std::vector<MPoly<Rational>> gens{qp("x1", 2), qp("x1-1", 2)};
    CHECK_THROWS_AS((void)eliminate_with_bound(gens, 0, PipelineMode::GenericCoords), PreconditionError);
    EngineOptions opts;
    opts.allow_empty_variety = true;
    auto cert = eliminate_with_bound(gens, 0, PipelineMode::GenericCoords, opts);
    CHECK(cert.q == -1);
    CHECK(cert.phi == qp("1", 2));
    CHECK(cert.bound == 1); // d_s * d_1 with n-1 = 1 factor
    auto rep = verify_certificate(cert, gens);
    CHECK(rep.verdict);
}

TEST_CASE("the zero ideal is rejected") {
    std::vector<MPoly<Rational>> gens{MPoly<Rational>::zero(FieldDesc::rationals(), 2, TermOrder::grevlex())};
    CHECK_THROWS_AS((void)eliminate_with_bound(gens, 0, PipelineMode::GenericCoords), PreconditionError);
}

TEST_CASE("seed determinism of the full pipeline") {
    for (auto mode : {PipelineMode::GenericCoords, PipelineMode::OriginalCoords}) {
        auto a = eliminate_with_bound(kTwistedCubic, 11, mode);
        auto b = eliminate_with_bound(kTwistedCubic, 11, mode);
        CHECK(a.phi == b.phi);
        REQUIRE(a.cofactors.size() == b.cofactors.size());
        for (std::size_t i = 0; i < a.cofactors.size(); ++i)
            CHECK(a.cofactors[i] == b.cofactors[i]);
        auto c = eliminate_with_bound(kTwistedCubic, 12, mode);
        CHECK((c.phi != a.phi || c.cofactors != a.cofactors)); // a different seed draws differently
    }
}

TEST_CASE("deformation reduction") {
    const FieldDesc q = FieldDesc::rationals();
    const TermOrder grev = TermOrder::grevlex();
    std::vector<MPoly<Rational>> F{qp("x1^2-x2", 2), qp("x2^2-1", 2)};
    auto ident = CoordinateChange<Rational>::identity(2, q);
    const auto lift = [](const MPoly<Rational>& p) { return lift_to_t(p); };

    SUBCASE("valuation zero passes through at t = 0") {
        TCertificate<Rational> tc;
        tc.b0 = lift(F[0]);
        tc.cofactors = {lift(qp("1", 2)), lift(MPoly<Rational>::zero(q, 2, grev))};
        auto res = deformation_reduce(tc, F, ident);
        CHECK(res.initial_valuation == 0);
        CHECK(res.steps == 0);
        CHECK(res.phi == F[0]);
        CHECK(res.cofactors[0] == qp("1", 2));
    }

    SUBCASE("a clean factor of t needs one division and no syzygy correction") {
        TCertificate<Rational> tc;
        auto t_one = MPoly<UPoly<Rational>>::constant(q, 2, grev, UPoly<Rational>::t_power(Rational(1), 1));
        tc.b0 = lift(F[0]) * t_one;
        tc.cofactors = {t_one, lift(MPoly<Rational>::zero(q, 2, grev))};
        auto res = deformation_reduce(tc, F, ident);
        CHECK(res.initial_valuation == 1);
        CHECK(res.steps == 1);
        CHECK(res.phi == F[0]);
    }

    SUBCASE("a nonzero syzygy at t = 0 is subtracted before dividing") {
        // G = (F2 + t*g1, -F1 + t*g2) makes b0 = t*(g1 F1 + g2 F2) with the
        // Koszul syzygy appearing at t = 0
        auto g1 = qp("x1+1", 2);
        auto g2 = qp("x2-3", 2);
        auto t_one = MPoly<UPoly<Rational>>::constant(q, 2, grev, UPoly<Rational>::t_power(Rational(1), 1));
        TCertificate<Rational> tc;
        tc.cofactors = {lift(F[1]) + t_one * lift(g1), -lift(F[0]) + t_one * lift(g2)};
        tc.b0 = t_one * lift(g1 * F[0] + g2 * F[1]);
        auto res = deformation_reduce(tc, F, ident);
        CHECK(res.initial_valuation == 1);
        CHECK(res.steps == 1);
        CHECK(res.phi == g1 * F[0] + g2 * F[1]);
        CHECK(res.cofactors[0] == g1);
        CHECK(res.cofactors[1] == g2);
    }

    SUBCASE("deformation through a real coordinate change") {
        Sampler sampler(21);
        auto change = generic_coordinate_change<Rational>(2, ChangeKind::UnipotentT, q, sampler);
        auto inv = change.inverted();
        std::vector<MPoly<UPoly<Rational>>> Fbar{apply_linear_change_t(F[0], inv),
                                                 apply_linear_change_t(F[1], inv)};
        auto t_one = MPoly<UPoly<Rational>>::constant(q, 2, grev, UPoly<Rational>::t_power(Rational(1), 1));
        // start from t * (Koszul relation + a true combination)
        TCertificate<Rational> tc;
        tc.cofactors = {Fbar[1] + t_one * lift(qp("1", 2)), -Fbar[0]};
        tc.b0 = t_one * Fbar[0];
        auto res = deformation_reduce(tc, F, change);
        CHECK(res.initial_valuation >= 1);
        CHECK(res.steps == res.initial_valuation);
        CHECK(res.phi == F[0]);
        MPoly<Rational> sum = MPoly<Rational>::zero(q, 2, grev);
        for (std::size_t j = 0; j < F.size(); ++j)
            sum += res.cofactors[j] * F[j];
        CHECK(sum == res.phi);
    }

    SUBCASE("a broken identity is rejected up front") {
        TCertificate<Rational> tc;
        tc.b0 = lift(qp("x1", 2));
        tc.cofactors = {lift(qp("1", 2)), lift(qp("1", 2))};
        CHECK_THROWS_AS((void)deformation_reduce(tc, F, ident), PreconditionError);
    }
}

TEST_CASE("perron relations") {
    SUBCASE("cusp parameterization") {
        auto rel = perron_relation(std::vector<MPoly<Rational>>{qp("x1^2", 1), qp("x1^3", 1)});
        CHECK(rel.W == qp("x1^3 - x2^2", 2)); // reads as T1^3 - T2^2
        CHECK(rel.weights == std::vector<long>{2, 3});
        CHECK(rel.weighted_deg == 6);
        CHECK(rel.bound == 6);
    }
    SUBCASE("equal components") {
        auto rel = perron_relation(std::vector<MPoly<Rational>>{qp("x1", 1), qp("x1", 1)});
        CHECK(rel.W == qp("x1 - x2", 2));
        CHECK(rel.weighted_deg == 1);
        CHECK(rel.bound == 1);
    }
    SUBCASE("graph of a product") {
        auto rel =
            perron_relation(std::vector<MPoly<Rational>>{qp("x1", 2), qp("x2", 2), qp("x1*x2", 2)});
        CHECK(rel.W == qp("x1*x2 - x3", 3)); // T1 T2 - T3 up to sign
        CHECK(*weighted_degree(rel.W, rel.weights) == 2);
        CHECK(rel.bound == 2);
    }
    SUBCASE("constant components are rejected") {
        CHECK_THROWS_AS((void)perron_relation(std::vector<MPoly<Rational>>{qp("x1", 1), qp("5", 1)}),
                        PreconditionError);
    }
    SUBCASE("collapsing maps are rejected") {
        CHECK_THROWS_AS(
            (void)perron_relation(std::vector<MPoly<Rational>>{qp("x1", 2), qp("x1", 2), qp("x1", 2)}),
            PreconditionError);
    }
    SUBCASE("component count must be n + 1") {
        CHECK_THROWS_AS((void)perron_relation(std::vector<MPoly<Rational>>{qp("x1*x2", 2), qp("x2", 2)}),
                        StructuralError);
    }
}

TEST_CASE("certificate verification catches tampering") {
    auto cert = eliminate_with_bound(kConics, 0, PipelineMode::OriginalCoords);
    REQUIRE(verify_certificate(cert, kConics).verdict);

    SUBCASE("phi shifted by one") {
        auto bad = cert;
        bad.phi += qp("1", 2);
        auto rep = verify_certificate(bad, kConics);
        CHECK_FALSE(rep.verdict);
        CHECK_FALSE(rep.items[2].pass); // membership identity
    }
    SUBCASE("bound tightened on a sharp instance") {
        auto bad = cert;
        bad.bound -= 1;
        auto rep = verify_certificate(bad, kConics);
        CHECK_FALSE(rep.verdict);
        CHECK_FALSE(rep.items[3].pass); // degree bound
    }
    SUBCASE("support violation") {
        auto bad = cert;
        bad.q = -1; // demand a constant phi
        auto rep = verify_certificate(bad, kConics);
        CHECK_FALSE(rep.items[1].pass);
    }
    SUBCASE("wrong generators") {
        auto rep = verify_certificate(cert, kTwistedCubic);
        CHECK_FALSE(rep.verdict);
    }
}

TEST_CASE("prime-field pipeline") {
    const std::uint64_t p = 1048583;
    std::vector<MPoly<Fp>> gens{testutil::fpp("x1^2+x2^2-1", 2, p), testutil::fpp("x1^2-x2", 2, p)};
    for (auto mode : {PipelineMode::GenericCoords, PipelineMode::OriginalCoords}) {
        auto cert = eliminate_with_bound(gens, 5, mode);
        CHECK(cert.bound == 4);
        CHECK(*cert.phi.total_degree() == 4);
        CHECK(verify_certificate(cert, gens).verdict);
    }
}

TEST_CASE("oracle domination on named instances") {
    for (const auto& gens : {kConics, kTwistedCubic}) {
        auto rep = dimension(gens);
        auto cert = eliminate_with_bound(gens, 3, PipelineMode::GenericCoords);
        auto elim = elimination_ideal(gens, rep.q + 1);
        auto min_elt = min_degree_element(elim);
        REQUIRE(min_elt.has_value());
        CHECK(*cert.phi.total_degree() >= min_elt->second);
    }
}
