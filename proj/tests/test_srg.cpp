#include "qwmix/errors.hpp"
#include "qwmix/graphs.hpp"
#include "qwmix/spectral.hpp"
#include "qwmix/srg.hpp"
#include "qwmix/walk.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <ranges>

using namespace qwmix;
using std::numbers::pi;

TEST_CASE("srg eigenvalues")
{
    const auto pal = srg_eigenvalues({9, 4, 1, 2});
    CHECK(pal.k == 4.0);
    CHECK(pal.theta == doctest::Approx(1.0));
    CHECK(pal.tau == doctest::Approx(-2.0));
    const auto rook = srg_eigenvalues({16, 6, 2, 2});
    CHECK(rook.theta == doctest::Approx(2.0));
    CHECK(rook.tau == doctest::Approx(-2.0));
    const auto c5 = srg_eigenvalues({5, 2, 0, 1});
    CHECK(c5.theta == doctest::Approx((-1 + std::sqrt(5.0)) / 2));
    CHECK(c5.tau == doctest::Approx((-1 - std::sqrt(5.0)) / 2));
    CHECK_THROWS_AS(srg_eigenvalues({16, 6, 2, 3}), InfeasibleParams);

    // cross-check with the eigensolver
    for (const Graph& g : {paley(9), paley(13), cartesian_product(complete(4), complete(4)), oracle::clebsch()}) {
        const auto p = *srg_params(g);
        const auto ev = srg_eigenvalues(p);
        const auto dec = eigendecompose(g);
        REQUIRE(dec.size() == 3);
        CHECK(dec.thetas(0) == doctest::Approx(ev.k));
        CHECK(dec.thetas(1) == doctest::Approx(ev.theta));
        CHECK(dec.thetas(2) == doctest::Approx(ev.tau));
    }
}

TEST_CASE("Chan families")
{
    CHECK(chan_family({16, 6, 2, 2}) == ChanFamily{Family::I, 2, false});
    CHECK(chan_family({9, 4, 1, 2}) == ChanFamily{Family::IV, 1, false});
    CHECK(chan_family({25, 12, 5, 6}) == ChanFamily{Family::IV, 2, false});
    CHECK(chan_family({16, 10, 6, 6}) == ChanFamily{Family::II, 2, false});
    CHECK(chan_family({16, 5, 0, 2}) == ChanFamily{Family::II, 2, true});
    CHECK(chan_family({16, 9, 4, 6}) == ChanFamily{Family::I, 2, true});
    CHECK_FALSE(chan_family({13, 6, 2, 3}));
    CHECK_FALSE(chan_family({5, 2, 0, 1}));
    for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V}) {
        for (int theta = 1; theta <= 6; ++theta) {
            const SrgParams p = family_params(f, theta);
            if (!p.feasible() || !p.primitive()) continue;
            INFO(std::string(to_string(f)), " theta=", theta);
            const auto fam = chan_family(p);
            REQUIRE(fam);
            CHECK(fam->theta == theta);
            CHECK_FALSE(fam->on_complement);
            // conference parameters are their own complement
            if (f == Family::IV) CHECK(p.complement() == p);
            else CHECK(chan_family(p.complement())->on_complement);
        }
    }
    CHECK(conference_like({13, 6, 2, 3}));
    CHECK(conference_like({9, 4, 1, 2}));
    CHECK_FALSE(conference_like({16, 6, 2, 2}));
}

TEST_CASE("characterizing equations")
{
    const SrgParams rook{16, 6, 2, 2};
    CHECK(characterizing_residual(rook, {Complex(-1, 0), Complex(1, 0), Complex(0, 1), pi / 4}) <= 1e-10);

    // Paley(9) at t = 2 pi / 9: x = e^{2 pi i / 3}, y its conjugate, c = e^{i pi / 9}
    const Complex x = std::polar(1.0, 2 * pi / 3);
    CHECK(characterizing_residual({9, 4, 1, 2}, {x, std::conj(x), std::polar(1.0, pi / 9), 2 * pi / 9}) <= 1e-10);
    CHECK(best_phase_residual({9, 4, 1, 2}, x, std::conj(x), 2 * pi / 9) <= 1e-10);

    // t = 0: residual |sqrt(n) - n| in the first equation
    const SrgParams p{16, 6, 2, 2};
    CHECK(characterizing_residual(p, {Complex(1, 0), Complex(1, 0), Complex(1, 0), 0.0}) == doctest::Approx(12.0));

    // best phase never exceeds any fixed phase
    for (double phi : {0.0, 0.3, 1.7, 3.0}) {
        CHECK(best_phase_residual(rook, Complex(-1, 0), Complex(1, 0), 1.1) <=
              characterizing_residual(rook, {Complex(-1, 0), Complex(1, 0), std::polar(1.0, phi), 1.1}) + 1e-12);
    }
}

TEST_CASE("residual sweeps over time")
{
    const auto good = grid_min_residual(family_params(Family::I, 2), Complex(-1, 0), Complex(1, 0));
    CHECK(good.residual <= 1e-2);
    const auto odd = grid_min_residual(family_params(Family::I, 3), Complex(-1, 0), Complex(1, 0));
    CHECK(odd.residual > 1e-2);
    // families III and V admit no solution at small theta for any admissible (x, y)
    for (Family f : {Family::III, Family::V}) {
        for (int theta = 2; theta <= 4; ++theta) {
            const SrgParams p = family_params(f, theta);
            for (const auto& [xx, yy] : chan_coefficients(f, theta)) {
                INFO(std::string(to_string(f)), " theta=", theta);
                CHECK(grid_min_residual(p, xx, yy).residual > 1e-2);
            }
        }
    }
}

TEST_CASE("family (i)/(ii) mixing times")
{
    const ChanFamily rook{Family::I, 2, false};
    CHECK(family_i_ii_time(rook, 0).expr == "pi/4");
    CHECK(family_i_ii_time(rook, 1).expr == "3*pi/4");
    auto first = family_i_ii_times(rook) | std::views::take(4);
    std::vector<std::string> exprs;
    for (const auto& t : first) exprs.push_back(t.expr);
    CHECK(exprs == std::vector<std::string>{"pi/4", "3*pi/4", "5*pi/4", "7*pi/4"});

    const Graph g = cartesian_product(complete(4), complete(4));
    for (int m = 0; m < 6; ++m) CHECK(is_uniform_mixing_at(g, family_i_ii_time(rook, m).value, 1e-9));

    CHECK_THROWS_AS(check_family_i_ii_mixes({Family::I, 3, false}), NoMixing);
    CHECK_THROWS_AS(check_family_i_ii_mixes({Family::II, 3, false}), NoMixing);
    CHECK_THROWS_AS(check_family_i_ii_mixes({Family::IV, 1, false}), NoMixing);
    CHECK_NOTHROW(check_family_i_ii_mixes({Family::II, 2, false}));

    // family (ii) with theta = 2: the Clebsch graph and its complement are flat at pi / 4
    const ChanFamily clebsch_family{Family::II, 2, true};
    for (int m = 0; m < 4; ++m) {
        const double t = family_i_ii_time(clebsch_family, m).value;
        CHECK(is_uniform_mixing_at(oracle::clebsch(), t, 1e-9));
        CHECK(is_uniform_mixing_at(complement(oracle::clebsch()), t, 1e-9));
    }
}

TEST_CASE("regular symmetric Hadamard check")
{
    const auto rook = rshcd_check(cartesian_product(complete(4), complete(4)));
    REQUIRE(rook);
    CHECK(rook->kind == HadamardKind::JMinus2A);
    CHECK(rook->row_sum == 4);
    CHECK_FALSE(rshcd_check(cycle(5)));
    CHECK(rshcd_check(oracle::clebsch()));

    // K_4: J - 2A = 2I - J is symmetric, +-1, constant diagonal and squares to 4I
    const auto k4 = rshcd_check(complete(4));
    REQUIRE(k4);
    CHECK(k4->kind == HadamardKind::JMinus2A);
    CHECK(k4->row_sum == -2);
    CHECK_FALSE(rshcd_check(complete(3)));
}

TEST_CASE("srg verdicts")
{
    const auto rook = srg_mixing_verdict({16, 6, 2, 2});
    CHECK(rook.kind == SrgVerdictKind::Mixes);
    REQUIRE(rook.family);
    CHECK(rook.family->family == Family::I);
    REQUIRE(rook.times.size() == 3);
    CHECK(rook.times[0].expr == "pi/4");
    CHECK(rook.times[1].expr == "3*pi/4");

    CHECK(srg_mixing_verdict({25, 12, 5, 6}).kind == SrgVerdictKind::NoMixing);

    const auto pal = srg_mixing_verdict({9, 4, 1, 2});
    CHECK(pal.kind == SrgVerdictKind::Mixes);
    REQUIRE_FALSE(pal.times.empty());
    CHECK(pal.times[0].expr == "2*pi/9");
    for (const auto& t : pal.times) CHECK(is_uniform_mixing_at(paley(9), t.value, 1e-9));

    CHECK(srg_mixing_verdict({36, 15, 6, 6}).kind == SrgVerdictKind::NoMixing);
    CHECK(srg_mixing_verdict({16, 5, 0, 2}).kind == SrgVerdictKind::Mixes);

    const auto p13 = srg_mixing_verdict({13, 6, 2, 3});
    CHECK(p13.kind == SrgVerdictKind::NotCovered);
    CHECK(p13.conference_like);
    CHECK(srg_mixing_verdict({5, 2, 0, 1}).kind == SrgVerdictKind::NotCovered);

    CHECK_THROWS_AS(srg_mixing_verdict({16, 6, 2, 3}), InfeasibleParams);
    CHECK_THROWS_AS(srg_mixing_verdict({6, 3, 0, 3}), InvalidArgument);

    // constructible graphs without a mixing verdict stay well away from flat on [0, 2 pi]
    const TimeGrid grid = parse_grid("0:2*pi:0.0001");
    for (const Graph& g : {paley(13), cycle(5)}) {
        INFO(g.label);
        CHECK(srg_mixing_verdict(*srg_params(g)).kind != SrgVerdictKind::Mixes);
        CHECK(grid_min_flatness(eigendecompose(g), grid).flatness > 1e-2);
    }
}
