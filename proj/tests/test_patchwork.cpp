#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "tropcurve/patchwork.hpp"

using namespace tropcurve;
using testutil::family_from;
using testutil::slab_family;
using testutil::square_family;
using testutil::staircase_family;
using testutil::staircase_poly;

TEST_CASE("tropicalization", "[patchwork]") {
    auto fam = square_family();
    auto p = tropicalization(fam);
    REQUIRE(p.coeffs == parse_tropical_poly("0+0x+0y+1xy").coeffs);
    // Signs are invisible tropically.
    REQUIRE(tropicalization(square_family(-1)).coeffs == p.coeffs);
    auto p2 = tropicalization(staircase_family(2));
    REQUIRE(p2.coeffs == staircase_poly(2).coeffs);
}

TEST_CASE("family validation", "[patchwork]") {
    REQUIRE_NOTHROW(square_family().validate());
    REQUIRE_NOTHROW(staircase_family(3).validate());
    REQUIRE_NOTHROW(slab_family().validate());

    SECTION("missing lattice points are named") {
        PatchworkFamily fam;
        fam.support = {{0, 0}, {2, 0}, {0, 2}};
        fam.lifting = {Rational(0), Rational(0), Rational(0)};
        fam.signs = {1, 1, 1};
        try {
            fam.validate();
            FAIL("expected FamilyValidationError");
        } catch (const FamilyValidationError& e) {
            std::string msg = e.what();
            REQUIRE(msg.find("(1,0)") != std::string::npos);
            REQUIRE(msg.find("(1,1)") != std::string::npos);
        }
    }
    SECTION("non-strictly-convex lifting is rejected") {
        // Drop the boundary point (1,0) below the lifted envelope of its
        // neighbors; it stops being a vertex of the subdivision.
        PatchworkFamily fam = staircase_family(2);
        for (size_t i = 0; i < fam.support.size(); ++i)
            if (fam.support[i] == LatticePoint{1, 0}) fam.lifting[i] = Rational(-5);
        try {
            fam.validate();
            FAIL("expected FamilyValidationError");
        } catch (const FamilyValidationError& e) {
            REQUIRE(std::string(e.what()).find("(1,0)") != std::string::npos);
        }
    }
    SECTION("bad signs and magnitudes") {
        auto fam = square_family();
        fam.signs[0] = 2;
        REQUIRE_THROWS_AS(fam.validate(), FamilyValidationError);
        fam = square_family();
        fam.magnitudes = {Rational(1), Rational(1), Rational(0), Rational(1)};
        REQUIRE_THROWS_AS(fam.validate(), FamilyValidationError);
    }
}

TEST_CASE("instantiate", "[patchwork]") {
    const double t = std::exp(20.0);
    SECTION("square family") {
        auto f = instantiate(square_family(), t);
        REQUIRE(f.coeffs.at({0, 0}) == cdouble(1.0));
        REQUIRE(f.coeffs.at({1, 0}) == cdouble(1.0));
        REQUIRE(f.coeffs.at({0, 1}) == cdouble(1.0));
        REQUIRE(std::abs(f.coeffs.at({1, 1}) - cdouble(t)) <= 1e-9 * t);
    }
    SECTION("sign flip lands on the coefficient") {
        auto f = instantiate(square_family(-1), t);
        REQUIRE(std::abs(f.coeffs.at({1, 1}) + cdouble(t)) <= 1e-9 * t);
    }
    SECTION("staircase coefficients are t^{-(j^2+jk+k^2)}") {
        auto f = instantiate(staircase_family(2), t);
        for (const auto& [m, c] : f.coeffs) {
            double expect = std::pow(t, double(-(m.j * m.j + m.j * m.k + m.k * m.k)));
            REQUIRE(std::abs(c - expect) <= 1e-9 * expect);
        }
    }
    SECTION("t must exceed 1; overflow is guarded") {
        REQUIRE_THROWS_AS(instantiate(square_family(), 0.5), std::invalid_argument);
        REQUIRE_THROWS_AS(instantiate(square_family(), std::exp(701.0)), std::overflow_error);
    }
    SECTION("tropicalization/instantiate consistency") {
        // log_t of each coefficient magnitude approaches the lifting value
        // within |log_t m| = |ln m|/ln t.
        auto fam = staircase_family(2);
        fam.magnitudes.assign(fam.support.size(), Rational(2));
        for (double tt : {std::exp(5.0), std::exp(10.0), std::exp(20.0)}) {
            auto f = instantiate(fam, tt);
            for (size_t i = 0; i < fam.support.size(); ++i) {
                double logt_mag = std::log(std::abs(f.coeffs.at(fam.support[i]))) / std::log(tt);
                double slack = (std::log(2.0) + 1e-9) / std::log(tt);
                REQUIRE(std::fabs(logt_mag - fam.lifting[i].to_double()) <= slack);
            }
        }
    }
}

TEST_CASE("classify_twist sign rule", "[patchwork]") {
    auto curve = dual_curve(tropicalization(square_family()));
    REQUIRE(curve.bounded_edges.size() == 1);
    const auto& edge = curve.bounded_edges[0];

    SECTION("distinct parity: product of all four signs") {
        REQUIRE(classify_twist(edge, square_family().sign_map()) == Twist::Twisted);
        REQUIRE(classify_twist(edge, square_family(-1).sign_map()) == Twist::Untwisted);
    }
    SECTION("same parity: product of the opposite signs") {
        auto slab = dual_curve(tropicalization(slab_family()));
        REQUIRE(slab.bounded_edges.size() == 1);
        const auto& e = slab.bounded_edges[0];
        REQUIRE(e.opposite.has_value());
        std::set<LatticePoint> opp(e.opposite->begin(), e.opposite->end());
        REQUIRE(opp == std::set<LatticePoint>{{1, 0}, {1, 2}});
        REQUIRE(classify_twist(e, slab_family({{{1, 0}, -1}}).sign_map()) == Twist::Twisted);
        REQUIRE(classify_twist(e, slab_family().sign_map()) == Twist::Untwisted);
    }
    SECTION("missing sign is an error") {
        std::map<LatticePoint, int> partial{{{0, 0}, 1}, {{1, 1}, 1}};
        REQUIRE_THROWS_AS(classify_twist(edge, partial), std::invalid_argument);
    }
}

TEST_CASE("twist_set", "[patchwork]") {
    auto curve = dual_curve(tropicalization(square_family()));
    REQUIRE(twist_set(square_family(), curve).edges == std::set<int>{0});
    REQUIRE(twist_set(square_family(-1), curve).edges.empty());

    auto c2 = dual_curve(staircase_poly(2));
    REQUIRE(twist_set(staircase_family(2), c2).edges == std::set<int>{0, 1, 2});

    auto trivial = dual_curve(parse_tropical_poly("0+0x+0y+0xy"));
    REQUIRE_THROWS_AS(twist_set(square_family(), trivial), NotSmoothError);
}

TEST_CASE("twist admissibility", "[patchwork]") {
    auto c3 = dual_curve(staircase_poly(3));
    auto basis = cycle_basis(c3);
    REQUIRE(basis.size() == 1);

    SECTION("empty set is admissible") {
        REQUIRE(is_twist_admissible(c3, TwistSet{}));
    }
    SECTION("single cycle edge is not admissible") {
        TwistSet T;
        T.edges.insert(basis[0][0].edge);
        auto res = check_twist_admissible(c3, T);
        REQUIRE_FALSE(res.admissible);
        REQUIRE(res.violating_cycle == 0);
    }
    SECTION("genus-0 curves accept every subset") {
        auto sq = dual_curve(tropicalization(square_family()));
        REQUIRE(is_twist_admissible(sq, TwistSet{}));
        REQUIRE(is_twist_admissible(sq, TwistSet{{0}}));
    }
}

TEST_CASE("synthesize_signs examples", "[patchwork]") {
    auto sq = dual_curve(tropicalization(square_family()));

    SECTION("square, twisted edge: all-plus") {
        auto sign = synthesize_signs(sq, TwistSet{{0}});
        REQUIRE(sign.has_value());
        for (const auto& [p, s] : *sign) REQUIRE(s == +1);
        REQUIRE(classify_twist(sq.bounded_edges[0], *sign) == Twist::Twisted);
    }
    SECTION("square, untwisted edge: -1 exactly at (1,1)") {
        auto sign = synthesize_signs(sq, TwistSet{});
        REQUIRE(sign.has_value());
        REQUIRE(sign->at({1, 1}) == -1);
        REQUIRE(sign->at({0, 0}) == +1);
        REQUIRE(sign->at({1, 0}) == +1);
        REQUIRE(sign->at({0, 1}) == +1);
        REQUIRE(classify_twist(sq.bounded_edges[0], *sign) == Twist::Untwisted);
    }
    SECTION("single hexagon edge on the degree-3 curve is infeasible") {
        auto c3 = dual_curve(staircase_poly(3));
        auto basis = cycle_basis(c3);
        TwistSet T;
        T.edges.insert(basis[0][0].edge);
        REQUIRE_FALSE(synthesize_signs(c3, T).has_value());
    }
}

TEST_CASE("synthesis round-trips and matches admissibility exhaustively", "[patchwork][property]") {
    auto c3 = dual_curve(staircase_poly(3));
    const int n = static_cast<int>(c3.bounded_edges.size());
    REQUIRE(n == 9);
    int admissible_count = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        TwistSet T;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) T.edges.insert(i);
        bool adm = is_twist_admissible(c3, T);
        auto sign = synthesize_signs(c3, T);
        REQUIRE(sign.has_value() == adm);
        if (adm) {
            ++admissible_count;
            auto fam = staircase_family(3);
            for (size_t i = 0; i < fam.support.size(); ++i)
                fam.signs[i] = sign->at(fam.support[i]);
            REQUIRE(twist_set(fam, c3).edges == T.edges);
        }
    }
    // One Z/2 x Z/2 constraint from the hexagon cycle: a quarter of the 512.
    REQUIRE(admissible_count == 128);
}

TEST_CASE("twist set is invariant under coordinate sign changes", "[patchwork][property]") {
    // Negating sigma at every v with <v,e> odd corresponds to (z,w) ->
    // (+-z, +-w); global negation corresponds to f -> -f. Both preserve the
    // curve and therefore the twisted set.
    std::mt19937 rng(161803);
    auto c2 = dual_curve(staircase_poly(2));
    auto c3 = dual_curve(staircase_poly(3));
    std::uniform_int_distribution<int> coin(0, 1);
    for (int iter = 0; iter < 40; ++iter) {
        bool deg3 = iter % 2;
        const auto& curve = deg3 ? c3 : c2;
        auto fam = staircase_family(deg3 ? 3 : 2);
        for (auto& s : fam.signs) s = coin(rng) ? +1 : -1;
        auto base = twist_set(fam, curve);
        for (auto e : {LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 1}}) {
            auto flipped = fam;
            for (size_t i = 0; i < flipped.support.size(); ++i)
                if ((flipped.support[i].j * e.dj + flipped.support[i].k * e.dk) % 2 != 0)
                    flipped.signs[i] = -flipped.signs[i];
            REQUIRE(twist_set(flipped, curve).edges == base.edges);
        }
        auto negated = fam;
        for (auto& s : negated.signs) s = -s;
        REQUIRE(twist_set(negated, curve).edges == base.edges);
    }

    // Negating a single parity class is NOT a symmetry: on the square
    // family it provably flips the classification (the four rule points
    // occupy all four parity classes).
    auto sq = dual_curve(tropicalization(square_family()));
    auto flipped_corner = square_family();
    flipped_corner.signs[0] = -1;  // sign at (0,0)
    REQUIRE(twist_set(square_family(), sq).edges == std::set<int>{0});
    REQUIRE(twist_set(flipped_corner, sq).edges.empty());
}
