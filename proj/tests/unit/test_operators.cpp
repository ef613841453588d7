#include <doctest.h>

#include "paramplane/errors.hpp"
#include "paramplane/families.hpp"
#include "paramplane/operator.hpp"
#include "paramplane/roots.hpp"
#include "support/oracles.hpp"

using namespace paramplane;
using namespace std::complex_literals;

namespace {

constexpr Family kFamilies[] = {Family::Kim4, Family::ChebyshevMultipoint, Family::ErmakovKalitkin,
                                Family::SixthOrder};

NewtonLikeOperator random_operator(oracle::Rng& rng, int max_k = 6) {
    for (;;) {
        try {
            return NewtonLikeOperator(rng.integer(1, 6), rng.polynomial(rng.integer(1, max_k)));
        } catch (const DegenerateParameter&) {
        }
    }
}

Complex random_parameter(oracle::Rng& rng, Family f) {
    // Boxes roughly matching the rendered windows of each family.
    switch (f) {
    case Family::Kim4: return rng.complex_in_box(60.0);
    case Family::ChebyshevMultipoint: return rng.complex_in_box(4.0);
    case Family::ErmakovKalitkin: return rng.complex_in_box(20.0);
    case Family::SixthOrder: return rng.complex_in_box(8.0);
    }
    return 0.0;
}

double scale(const std::vector<Complex>& c) { return Polynomial(c).max_magnitude(); }

} // namespace

TEST_SUITE("operator") {

TEST_CASE("construction rejects vanishing end coefficients") {
    CHECK_THROWS_AS(NewtonLikeOperator(2, Polynomial{0.0, 1.0}), DegenerateParameter);
    CHECK_THROWS_AS(NewtonLikeOperator(2, Polynomial{1.0, 1.0, 0.0}), DegenerateParameter);
    CHECK_THROWS_AS(NewtonLikeOperator(0, Polynomial{1.0, 2.0}), DegenerateParameter);
    const NewtonLikeOperator op(3, Polynomial{2.0, 5.0});
    CHECK(op.num() == Polynomial{5.0, 2.0});
    CHECK(op.k() == 1);
}

TEST_CASE("eval matches the defining formula and handles the extended plane") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const NewtonLikeOperator op = random_operator(rng);
        const Complex z = rng.complex_with_modulus(0.2, 5.0);
        const Complex direct = oracle::direct_operator(op.n(), op.den().coeffs(), z);
        if (std::abs(op.den()(z)) < 1e-3 || std::abs(direct) > 1e8 || std::abs(direct) < 1e-8) continue;
        CHECK(std::abs(op(z) - direct) <= 1e-9 * std::abs(direct));
    }
    const NewtonLikeOperator op(2, Polynomial{1.0, 1.0});
    CHECK(op(0.0) == Complex{0.0});
    CHECK(is_infinite(op(kInfinity)));
    // den(-1) = 0 while num(-1) = 0 too: here the pole lies at z = -1 of den = 1 + 2z.
    const NewtonLikeOperator pole(2, Polynomial{1.0, 2.0});
    CHECK(is_infinite(pole(-0.5)));
    // Far away the symmetric branch avoids overflow.
    const Complex far = pole(1e200);
    CHECK(is_infinite(far));
    CHECK(std::abs(pole(1e-200)) == 0.0);
}

TEST_CASE("family fixed values: O(1) = 1, O(0) = 0, Ermakov O(-1) = -1") {
    oracle::Rng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Complex a = rng.complex_in_box(40.0);
        if (std::abs(a - 16.0) < 1e-3 || std::abs(a - 1.0) < 1e-3) continue;
        const auto kim = instantiate({Family::Kim4, a});
        CHECK(std::abs(kim(1.0) - 1.0) < 1e-12);
        CHECK(kim(0.0) == Complex{0.0});
        const auto erm = instantiate({Family::ErmakovKalitkin, a});
        CHECK(std::abs(erm(-1.0) + 1.0) < 1e-12);
    }
}

TEST_CASE("symmetry O(z) O(1/z) = 1") {
    oracle::Rng rng(47);
    for (Family f : kFamilies) {
        int checked = 0;
        while (checked < 1000) {
            const Complex a = random_parameter(rng, f);
            std::optional<NewtonLikeOperator> op;
            try {
                op.emplace(instantiate({f, a}));
            } catch (const DegenerateParameter&) {
                continue;
            }
            const Complex z = rng.complex_with_modulus(0.1, 10.0);
            const double dz = std::abs(op->den()(z)) / op->den().abs_eval(std::abs(z));
            const double dw = std::abs(op->den()(1.0 / z)) / op->den().abs_eval(1.0 / std::abs(z));
            if (dz < 1e-6 || dw < 1e-6) continue;
            CHECK(std::abs((*op)(z) * (*op)(1.0 / z) - 1.0) < 1e-9);
            ++checked;
        }
    }
}

TEST_CASE("derivative numerator matches the Kim closed expression") {
    const auto op = instantiate({Family::Kim4, -2.0});
    const Polynomial b = derivative_numerator(op);
    const Polynomial q = deflate(b, Polynomial{1.0, 4.0, 6.0, 4.0, 1.0});
    // B = -4 (1+z)^4 (a-1 + (-4-a) z + (a-6) z^2 + (-4-a) z^3 + (a-1) z^4) at a = -2.
    const std::vector<Complex> quartic{-3.0, -2.0, -8.0, -2.0, -3.0};
    REQUIRE(q.trimmed().size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(q[i] + 4.0 * quartic[i]) < 1e-10);

    oracle::Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a = rng.complex_in_box(50.0);
        if (std::abs(a - 1.0) < 1e-3) continue;
        const Polynomial qa = deflate(derivative_numerator(instantiate({Family::Kim4, a})), Polynomial{1.0, 4.0, 6.0, 4.0, 1.0});
        const std::vector<Complex> eq{a - 1.0, -4.0 - a, a - 6.0, -4.0 - a, a - 1.0};
        for (int i = 0; i < 5; ++i) CHECK(std::abs(qa[i] + 4.0 * eq[i]) < 1e-9 * scale(eq));
    }
}

TEST_CASE("derivative numerator with num = den") {
    const NewtonLikeOperator op(2, Polynomial{1.0, 1.0});
    CHECK(derivative_numerator(op) == Polynomial{2.0, 4.0, 2.0});
}

TEST_CASE("derivative numerator is palindromic for random operators") {
    oracle::Rng rng(59);
    for (int trial = 0; trial < 1000; ++trial) {
        const NewtonLikeOperator op = random_operator(rng);
        INFO("n=" << op.n() << " k=" << op.k());
        CHECK(is_palindromic(derivative_numerator(op), 1e-10));
    }
}

TEST_CASE("derivative agrees with central differences") {
    oracle::Rng rng(61);
    int checked = 0;
    while (checked < 300) {
        const NewtonLikeOperator op = random_operator(rng, 4);
        const Complex z = rng.complex_with_modulus(0.3, 3.0);
        if (std::abs(op.den()(z)) < 1e-2 || std::abs(op.num()(z)) < 1e-2) continue;
        const auto f = [&](Complex w) { return oracle::direct_operator(op.n(), op.den().coeffs(), w); };
        const Complex fd = oracle::central_difference(f, z, 1e-6);
        if (std::abs(fd) > 1e4) continue;
        CHECK(std::abs(derivative(op, z) - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
        ++checked;
    }
}

TEST_CASE("multiplier examples") {
    const auto kim = instantiate({Family::Kim4, 84.0});
    CHECK(std::abs(multiplier(kim, 1.0) + 64.0 / 68.0) < 1e-12);
    for (Family f : kFamilies) {
        const auto op = instantiate({f, 0.37 + 0.21i});
        CHECK(multiplier(op, 0.0) == Complex{0.0});
        CHECK(std::abs(multiplier(op, kInfinity)) == 0.0);
    }
    oracle::Rng rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const auto erm = instantiate({Family::ErmakovKalitkin, rng.complex_in_box(20.0)});
        CHECK(std::abs(multiplier(erm, -1.0) - 1.0) < 1e-10);
    }
    CHECK_THROWS_AS(multiplier(kim, 0.5), NotFixed);
}

TEST_CASE("Kim multiplier law at z = 1") {
    oracle::Rng rng(71);
    for (int trial = 0; trial < 500; ++trial) {
        const Complex a = rng.complex_in_box(100.0);
        if (std::abs(a - 16.0) < 1e-2 || std::abs(a - 1.0) < 1e-6) continue;
        const Complex expected = 64.0 / (16.0 - a);
        const Complex lambda = multiplier(instantiate({Family::Kim4, a}), 1.0);
        CHECK(std::abs(std::abs(lambda) - std::abs(expected)) < 1e-10);
        CHECK(std::abs(lambda - expected) < 1e-10 * std::abs(expected));
    }
    for (int k = 0; k < 64; ++k) {
        const Complex a = 16.0 + std::polar(64.0, 2.0 * M_PI * k / 64.0);
        if (std::abs(a - 1.0) < 1e-9) continue;
        CHECK(std::abs(std::abs(multiplier(instantiate({Family::Kim4, a}), 1.0)) - 1.0) < 1e-9);
    }
}

TEST_CASE("classify_multiplier") {
    CHECK(classify_multiplier(0.0) == FixedPointClass::Superattracting);
    CHECK(classify_multiplier(0.5i) == FixedPointClass::Attracting);
    CHECK(classify_multiplier(1.5) == FixedPointClass::Repelling);
    CHECK(classify_multiplier(1.0) == FixedPointClass::Parabolic);
    CHECK(classify_multiplier(std::polar(1.0, 2.0 * M_PI * 3.0 / 7.0)) == FixedPointClass::Parabolic);
    CHECK(classify_multiplier(std::polar(1.0, 2.0 * M_PI * (std::sqrt(5.0) - 1.0) / 2.0)) ==
          FixedPointClass::IrrationallyIndifferent);
}

TEST_CASE("fixed points of the Kim family") {
    oracle::Rng rng(73);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex a = rng.complex_in_box(60.0);
        const auto op = instantiate({Family::Kim4, a});
        const auto fps = fixed_points(op);
        REQUIRE(fps.size() == 9);
        std::vector<Complex> strange;
        for (std::size_t i = 0; i + 2 < fps.size(); ++i) strange.push_back(fps[i].location);
        CHECK(strange.size() == 7);
        int ones = 0;
        for (const Complex& z : strange) {
            CHECK(std::abs(op(z) - z) < 1e-8 * std::max(1.0, std::abs(z)));
            if (std::abs(z - 1.0) < 1e-8) {
                ++ones;
                continue;
            }
            double best = 1e9;
            for (const Complex& w : strange) best = std::min(best, std::abs(z * w - 1.0));
            CHECK(best < 1e-8);
        }
        CHECK(ones == 1);
        CHECK(fps[7].location == Complex{0.0});
        CHECK(is_infinite(fps[8].location));
        CHECK(fps[7].kind == FixedPointClass::Superattracting);
        CHECK(fps[8].kind == FixedPointClass::Superattracting);
        // n + k even: -1 is a preimage of 1, not fixed.
        CHECK(std::abs(op(-1.0) - 1.0) < 1e-12);
    }
}

TEST_CASE("fixed points of the Ermakov family are only 1 and a triple -1") {
    oracle::Rng rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex a = rng.complex_in_box(20.0);
        const auto fps = fixed_points(instantiate({Family::ErmakovKalitkin, a}));
        REQUIRE(fps.size() == 4);
        CHECK(std::abs(fps[0].location + 1.0) < 1e-10);
        CHECK(fps[0].multiplicity == 3);
        CHECK(std::abs(fps[0].multiplier - 1.0) < 1e-8);
        CHECK(fps[0].kind == FixedPointClass::Parabolic);
        CHECK(std::abs(fps[1].location - 1.0) < 1e-12);
        CHECK(fps[1].multiplicity == 1);
    }
}

TEST_CASE("fixed points of the Chebyshev family come in inverse pairs") {
    oracle::Rng rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        const Complex a = rng.complex_in_box(4.0);
        const auto fps = fixed_points(instantiate({Family::ChebyshevMultipoint, a}));
        REQUIRE(fps.size() == 7);
        std::vector<Complex> others;
        for (std::size_t i = 0; i < 5; ++i) {
            if (std::abs(fps[i].location - 1.0) > 1e-8) others.push_back(fps[i].location);
        }
        REQUIRE(others.size() == 4);
        for (const Complex& z : others) {
            double best = 1e9;
            for (const Complex& w : others) best = std::min(best, std::abs(z * w - 1.0));
            CHECK(best < 1e-8);
        }
    }
}

TEST_CASE("multipliers at fixed points agree with central differences") {
    oracle::Rng rng(89);
    for (Family f : kFamilies) {
        for (int trial = 0; trial < 20; ++trial) {
            const Complex a = random_parameter(rng, f);
            std::optional<NewtonLikeOperator> op;
            try {
                op.emplace(instantiate({f, a}));
            } catch (const DegenerateParameter&) {
                continue;
            }
            for (const auto& fp : fixed_points(*op)) {
                if (is_infinite(fp.location) || fp.multiplicity > 1) continue;
                const Complex z = fp.location;
                if (std::abs(op->den()(z)) < 1e-3 * op->den().abs_eval(std::abs(z))) continue;
                const auto g = [&](Complex w) { return oracle::direct_operator(op->n(), op->den().coeffs(), w); };
                const Complex fd = oracle::central_difference(g, z, 1e-6 * std::max(1.0, std::abs(z)));
                INFO(to_string(f) << " a=" << a << " z=" << z);
                CHECK(std::abs(fp.multiplier - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
            }
        }
    }
}

TEST_CASE("fixed point -1 versus parity of n + k") {
    oracle::Rng rng(97);
    for (int trial = 0; trial < 300; ++trial) {
        const NewtonLikeOperator op = random_operator(rng);
        if (std::abs(op.den()(-1.0)) < 1e-6) continue;
        const Complex image = op(-1.0);
        if ((op.n() + op.k()) % 2 == 0) {
            CHECK(std::abs(image - 1.0) < 1e-10);
        } else {
            CHECK(std::abs(image + 1.0) < 1e-10);
        }
        CHECK(std::abs(op(1.0) - 1.0) < 1e-10 * std::max(1.0, 1.0 / std::abs(op.den()(1.0))));
    }
}

} // TEST_SUITE

TEST_SUITE("critical points") {

TEST_CASE("CriticalSet normalization") {
    const std::vector<Complex> pts{0.5, -3.0i, std::polar(1.0, -0.3)};
    const CriticalSet set = make_critical_set(pts);
    REQUIRE(set.representatives.size() == 3);
    REQUIRE(set.full.size() == 6);
    for (const Complex& c : set.representatives) {
        CHECK(std::abs(c) >= 1.0 - 1e-12);
        double best = 1e9;
        for (const Complex& f : set.full) best = std::min(best, std::abs(f - 1.0 / c) / std::max(1.0, std::abs(c)));
        CHECK(best < 1e-9);
    }
    CHECK(std::abs(symmetry_representative(std::polar(1.0, -0.3)) - std::polar(1.0, 0.3)) < 1e-15);
    CHECK(symmetry_representative(0.5) == Complex{2.0});
}

TEST_CASE("Kim at a = -2: numeric criticals match the closed forms") {
    const FamilyId id{Family::Kim4, -2.0};
    const auto numeric = numeric_criticals(id);
    const auto closed = closed_form_criticals(id);
    REQUIRE(numeric.representatives.size() == 2);
    REQUIRE(closed.representatives.size() == 2);
    CHECK(oracle::multiset_distance(numeric.representatives, closed.representatives) < 1e-8);

    // Cross-check against the oracle on the full derivative numerator.
    const auto all = solve_poly_oracle(derivative_numerator(instantiate(id)));
    CHECK(oracle::distance_modulo_inverse(closed.representatives, all) < 1e-8);
}

TEST_CASE("Kim closed forms: c2 = 1/c1 and c4 = 1/c3") {
    const auto closed = closed_form_criticals({Family::Kim4, -2.0});
    REQUIRE(closed.full.size() == 4);
    for (const Complex& c : closed.full) {
        double best = 1e9;
        for (const Complex& d : closed.full) best = std::min(best, std::abs(c * d - 1.0));
        CHECK(best < 1e-12);
    }
}

TEST_CASE("Chebyshev deflated derivative numerator is proportional to P(z,a)") {
    oracle::Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a = rng.complex_in_box(4.0);
        const FamilyId id{Family::ChebyshevMultipoint, a};
        const auto op = instantiate(id);
        const Polynomial rest = deflate(derivative_numerator(op), known_prefixed_factors(id)[0]).trimmed();
        const Complex a2 = a * a;
        const std::vector<Complex> p{6.0 * a - 3.0, -12.0 + 22.0 * a - 12.0 * a2,
                                     -18.0 + 32.0 * a - 24.0 * a2 + 8.0 * a2 * a, -12.0 + 22.0 * a - 12.0 * a2,
                                     6.0 * a - 3.0};
        REQUIRE(rest.size() == 5);
        const Complex ratio = rest[0] / p[0];
        for (int i = 0; i < 5; ++i) CHECK(std::abs(rest[i] - ratio * p[i]) < 1e-9 * rest.max_magnitude());
        CHECK(numeric_criticals(id).representatives.size() == 2);
    }
}

TEST_CASE("Ermakov derivative numerator is proportional to P(a,z)") {
    oracle::Rng rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex a = rng.complex_in_box(20.0);
        const Polynomial b = derivative_numerator(instantiate({Family::ErmakovKalitkin, a})).trimmed();
        const Complex a2 = a * a;
        const Complex c0 = 6.0 * (a - 1.0) * (-2.0 + 2.0 * a + a2);
        const Complex c1 = 8.0 * (a - 1.0) * (-6.0 + 6.0 * a + a2);
        const Complex c2 = 72.0 - 144.0 * a + 68.0 * a2 + 4.0 * a2 * a + a2 * a2;
        const std::vector<Complex> p{c0, c1, c2, c1, c0};
        REQUIRE(b.size() == 5);
        const Complex ratio = b[2] / p[2];
        for (int i = 0; i < 5; ++i) CHECK(std::abs(b[i] - ratio * p[i]) < 1e-9 * b.max_magnitude());
    }
}

TEST_CASE("sixth-order family has three representatives") {
    oracle::Rng rng(107);
    for (int trial = 0; trial < 50; ++trial) {
        const FamilyId id{Family::SixthOrder, rng.complex_in_box(8.0)};
        const auto set = numeric_criticals(id);
        CHECK(set.representatives.size() == 3);
        CHECK(set.full.size() == 6);
    }
}

TEST_CASE("free_critical_points rejects a factor that does not divide B") {
    const auto op = instantiate({Family::Kim4, -2.0});
    const std::vector<Polynomial> wrong{Polynomial{1.0, -3.0, 1.0}};
    CHECK_THROWS_AS(free_critical_points(op, wrong), DeflationResidual);
}

TEST_CASE("closed forms agree with the oracle at the named parameters") {
    for (const FamilyId& id : {FamilyId{Family::ErmakovKalitkin, 2.0}, FamilyId{Family::ChebyshevMultipoint, 0.5 + 0.5i},
                               FamilyId{Family::Kim4, -30.0 + 8.0i}, FamilyId{Family::SixthOrder, 4.1 + 0.2i}}) {
        const auto closed = closed_form_criticals(id);
        const Polynomial rest = [&] {
            Polynomial b = derivative_numerator(instantiate(id));
            for (const auto& f : known_prefixed_factors(id)) b = deflate(b, f);
            return b;
        }();
        const auto roots = solve_poly_oracle(rest);
        INFO(to_string(id.family) << " a=" << id.a);
        CHECK(oracle::distance_modulo_inverse(closed.representatives, roots) < 1e-8);
        CHECK(oracle::distance_modulo_inverse(roots, closed.full) < 1e-8);
    }
}

TEST_CASE("sixth-order closed forms at a = 4 where the cubic factors exactly") {
    // (x - 2)(9x^2 - 16): a double critical point at z = 1 plus x = 4/3 and x = -4/3.
    const auto closed = closed_form_criticals({Family::SixthOrder, 4.0});
    std::vector<Complex> expected;
    for (const Complex x : {Complex{2.0}, Complex{4.0 / 3.0}, Complex{-4.0 / 3.0}}) expected.push_back(lift_root(x).first);
    CHECK(oracle::multiset_distance(closed.representatives, expected) < 1e-7);
}

TEST_CASE("instantiate coefficients and degenerate sets") {
    const auto kim0 = instantiate({Family::Kim4, 0.0});
    CHECK(kim0.den() == Polynomial{1.0, 4.0, 6.0, 4.0, 1.0});
    CHECK(kim0.num() == kim0.den());
    CHECK(std::abs(kim0(0.3 + 0.2i) - std::pow(0.3 + 0.2i, 4)) < 1e-15);

    const Complex a{1.7, -0.4};
    const auto erm = instantiate({Family::ErmakovKalitkin, a});
    CHECK(std::abs(erm.num()[0] - (2.0 * (a - 1.0) + a * a)) < 1e-14);

    const auto six = instantiate({Family::SixthOrder, 4.0});
    CHECK(six.den() == Polynomial{1.0, 0.0, -4.0, 0.0, 5.0, 0.0, -6.0});
    Complex sum_num = 0.0, sum_den = 0.0;
    for (const auto& c : six.num().coeffs()) sum_num += c;
    for (const auto& c : six.den().coeffs()) sum_den += c;
    CHECK(sum_num == sum_den);
    CHECK(std::abs(six(1.0) - 1.0) < 1e-14);

    CHECK_THROWS_AS(instantiate({Family::Kim4, 1.0}), DegenerateParameter);
    CHECK_THROWS_AS(instantiate({Family::ChebyshevMultipoint, 0.5}), DegenerateParameter);
    CHECK_THROWS_AS(instantiate({Family::ErmakovKalitkin, 1.0}), DegenerateParameter);
    CHECK_THROWS_AS(instantiate({Family::ErmakovKalitkin, -1.0 + std::sqrt(3.0)}), DegenerateParameter);
    CHECK_THROWS_AS(instantiate({Family::ErmakovKalitkin, -1.0 - std::sqrt(3.0)}), DegenerateParameter);
    CHECK_THROWS_AS(instantiate({Family::SixthOrder, 2.5}), DegenerateParameter);
    CHECK_THROWS_AS(closed_form_criticals({Family::Kim4, 1.0}), DegenerateParameter);
}

TEST_CASE("family names round-trip") {
    for (Family f : kFamilies) CHECK(parse_family(to_string(f)) == f);
    CHECK_FALSE(parse_family("newton").has_value());
}

} // TEST_SUITE
