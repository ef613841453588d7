#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "paramplane/operator.hpp"

namespace paramplane {

/// The four one-parameter operator families in the catalog.
enum class Family {
    Kim4,                //!< fourth-order Kim-type, n = 4, k = 4
    ChebyshevMultipoint, //!< multipoint Chebyshev variant, n = 3, k = 3
    ErmakovKalitkin,     //!< Ermakov-Kalitkin type, n = 3, k = 2
    SixthOrder,          //!< sixth-order scheme, n = 6, k = 6
};

struct FamilyId {
    Family family;
    Complex a;
};

std::string_view to_string(Family f);
/// Accepts the short CLI names: kim, cheby, ermakov, sixth.
std::optional<Family> parse_family(std::string_view name);

/// Number of free critical points modulo z -> 1/z.
int free_critical_count(Family f);

/// Denominator coefficients (ascending) at parameter a, before any
/// degeneracy check.
Polynomial family_denominator(const FamilyId& id);

/// Throws DegenerateParameter on the family's degenerate set.
NewtonLikeOperator instantiate(const FamilyId& id);

/// Factors of the derivative numerator that are not free critical points
/// (preimages of z = 1).
std::vector<Polynomial> known_prefixed_factors(const FamilyId& id);

/// Critical points from the explicit radical formulas (the reduced cubic for
/// SixthOrder), normalized to symmetry representatives.
CriticalSet closed_form_criticals(const FamilyId& id);

/// Same set through derivative_numerator, deflation and palindromic reduction.
CriticalSet numeric_criticals(const FamilyId& id);

} // namespace paramplane
