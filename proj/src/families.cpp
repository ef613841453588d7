#include "paramplane/families.hpp"

#include <array>

#include "paramplane/errors.hpp"
#include "paramplane/roots.hpp"

namespace paramplane {

std::string_view to_string(Family f) {
    switch (f) {
    case Family::Kim4: return "kim";
    case Family::ChebyshevMultipoint: return "cheby";
    case Family::ErmakovKalitkin: return "ermakov";
    case Family::SixthOrder: return "sixth";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : {Family::Kim4, Family::ChebyshevMultipoint, Family::ErmakovKalitkin, Family::SixthOrder}) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

int free_critical_count(Family f) {
    return f == Family::SixthOrder ? 3 : 2;
}

Polynomial family_denominator(const FamilyId& id) {
    const Complex a = id.a;
    const Complex a2 = a * a;
    switch (id.family) {
    case Family::Kim4:
        return {1.0, 4.0, 6.0, 4.0, 1.0 - a};
    case Family::ChebyshevMultipoint:
        return {1.0, 4.0 - 4.0 * a, 5.0 - 8.0 * a + 4.0 * a2, 2.0 - 4.0 * a};
    case Family::ErmakovKalitkin:
        return {2.0 * (a - 1.0), 4.0 * (a - 1.0), a2 + 2.0 * a - 2.0};
    case Family::SixthOrder:
        return {1.0,
                8.0 - 2.0 * a,
                28.0 - 12.0 * a + a2,
                56.0 - 30.0 * a + 4.0 * a2,
                69.0 - 40.0 * a + 6.0 * a2,
                48.0 - 28.0 * a + 4.0 * a2,
                10.0 - 4.0 * a};
    }
    throw DegenerateParameter("unknown family");
}

namespace {

int family_exponent(Family f) {
    switch (f) {
    case Family::Kim4: return 4;
    case Family::ChebyshevMultipoint: return 3;
    case Family::ErmakovKalitkin: return 3;
    case Family::SixthOrder: return 6;
    }
    return 1;
}

} // namespace

NewtonLikeOperator instantiate(const FamilyId& id) {
    try {
        return NewtonLikeOperator(family_exponent(id.family), family_denominator(id));
    } catch (const DegenerateParameter&) {
        throw DegenerateParameter(std::string(to_string(id.family)) + " family is degenerate at a = (" +
                                  std::to_string(id.a.real()) + ", " + std::to_string(id.a.imag()) + ")");
    }
}

std::vector<Polynomial> known_prefixed_factors(const FamilyId& id) {
    const Polynomial one_plus_z_4{1.0, 4.0, 6.0, 4.0, 1.0};
    switch (id.family) {
    case Family::Kim4:
        return {one_plus_z_4};
    case Family::ChebyshevMultipoint:
        return {Polynomial{1.0, 2.0 - 2.0 * id.a, 1.0}};
    case Family::ErmakovKalitkin:
        return {};
    case Family::SixthOrder:
        return {one_plus_z_4, Polynomial{-1.0, id.a - 2.0, -1.0}};
    }
    return {};
}

CriticalSet closed_form_criticals(const FamilyId& id) {
    // Validates the parameter against the degenerate set.
    (void)instantiate(id);

    const Complex a = id.a;
    const Complex a2 = a * a;
    const Complex a3 = a2 * a;
    std::array<Complex, 2> pair_heads{};

    switch (id.family) {
    case Family::Kim4: {
        const Complex s = std::sqrt(5.0 * a * (4.0 + a));
        const Complex inner = 10.0 * a * (6.0 - a);
        const Complex denom = 4.0 * (a - 1.0);
        pair_heads[0] = (4.0 + a - s - std::sqrt(inner - 2.0 * (4.0 + a) * s)) / denom;
        pair_heads[1] = (4.0 + a + s - std::sqrt(inner + 2.0 * (4.0 + a) * s)) / denom;
        break;
    }
    case Family::ChebyshevMultipoint: {
        const Complex d = std::sqrt(1.0 + 36.0 * a - 12.0 * a2);
        const Complex base = 6.0 - 11.0 * a + 6.0 * a2;
        const Complex cubic = 6.0 + 25.0 * a - 48.0 * a2 + 12.0 * a3;
        const Complex denom = 6.0 * (2.0 * a - 1.0);
        pair_heads[0] = (base - a * d - std::sqrt(2.0 * a * (cubic - base * d))) / denom;
        pair_heads[1] = (base + a * d - std::sqrt(2.0 * a * (cubic + base * d))) / denom;
        break;
    }
    case Family::ErmakovKalitkin: {
        const Complex e = std::sqrt(2.0 * (1.0 - a) * (26.0 - 26.0 * a + 3.0 * a2));
        const Complex g = -6.0 + 6.0 * a + a2;
        const Complex h = 192.0 - 384.0 * a + 154.0 * a2 + 38.0 * a3 + 3.0 * a2 * a2;
        const Complex denom = 12.0 * (a - 1.0) * (-2.0 + 2.0 * a + a2);
        const Complex lead = 4.0 * (1.0 - a) * g;
        pair_heads[0] = (lead - a2 * e - a * std::sqrt(2.0 * (1.0 - a) * (h - 4.0 * g * e))) / denom;
        pair_heads[1] = (lead + a2 * e - a * std::sqrt(2.0 * (1.0 - a) * (h + 4.0 * g * e))) / denom;
        break;
    }
    case Family::SixthOrder: {
        const std::vector<Complex> xs =
            solve_cubic(-15.0 + 6.0 * a, -94.0 + 63.0 * a - 11.0 * a2, -160.0 + 152.0 * a - 49.0 * a2 + 5.0 * a3,
                        -64.0 + 80.0 * a - 34.0 * a2 + 5.0 * a3);
        std::vector<Complex> points;
        for (const Complex& x : xs) points.push_back(lift_root(x).first);
        return make_critical_set(points);
    }
    }
    return make_critical_set(pair_heads);
}

CriticalSet numeric_criticals(const FamilyId& id) {
    const NewtonLikeOperator op = instantiate(id);
    const std::vector<Polynomial> factors = known_prefixed_factors(id);
    return free_critical_points(op, factors);
}

} // namespace paramplane
