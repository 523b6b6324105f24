#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sylvdet/determinant.hpp"
#include "sylvdet/reduction.hpp"

namespace sylvdet::cli {

using Json = nlohmann::ordered_json;

/// Product of (var - r) over the roots, equal neighbours folded into a power: "(t+2)t(t-2)", "(t-2)^3".
std::string factored_form(const std::vector<Rational>& roots, char var = 't');

/// "[c0, c1, ...]" ascending.
std::string coefficient_list(const Polynomial& p);

/// Definition of t in terms of x when it is not x itself; empty otherwise.
std::string lambda_note(FamilyId family, const Readings& readings);

std::vector<std::string> reading_names(const Readings& readings);

Json rationals_json(const std::vector<Rational>& values);
Json params_json(const FamilyParams& params);
Json shift_json(const ShiftSpec& shift);
Json matrix_json(const DenseMatrix& m);

Json verify_json(const VerifyReport& r);
Json induction_json(const InductionReport& r);
Json reduction_json(const ReductionReport& r, bool with_trace);
Json identity_json(const IdentityReport& r, IdentityReading reading);

}  // namespace sylvdet::cli
