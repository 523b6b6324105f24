#pragma once

#include <optional>
#include <string>

#include "sylvdet/families.hpp"
#include "sylvdet/matrix.hpp"
#include "sylvdet/polynomial.hpp"

namespace sylvdet {

/// det(tI + G) through the three-term recurrence on the tridiagonal entries.
Polynomial charpoly(const TridiagonalSpec& spec);

/// det(tI + m) by Bareiss evaluation at t = 0, 1, -1, 2, -2, ... followed by interpolation.
Polynomial charpoly_dense(const DenseMatrix& m);

/// Independent route to charpoly: dense Bareiss evaluation plus interpolation.
Polynomial charpoly_oracle(const TridiagonalSpec& spec);

/// The k-th oracle node: 0, 1, -1, 2, -2, ...
Rational oracle_node(unsigned k);

/*
 * Outcome of checking one family instance against its closed form.
 *
 * `variable` is 't' in the normal case. The literal dual Hahn form is not a
 * polynomial in t = lambda(x), so under that reading both sides are
 * compared in x and `variable` is 'x'.
 */
struct VerifyReport {
    FamilyId family = FamilyId::SylvesterD;
    unsigned dim = 0;
    FamilyParams params;
    Readings readings;
    char variable = 't';
    Polynomial charpoly;
    Polynomial closed_form;
    Polynomial oracle;
    std::vector<Rational> spectrum;
    bool closed_match = false;
    bool oracle_match = false;
    std::optional<std::string> witness;

    bool passed() const { return closed_match && oracle_match; }
};

VerifyReport verify_family(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings = {});

struct InductionReport {
    FamilyId family = FamilyId::SylvesterD;
    unsigned dim = 0;
    FamilyParams params;
    ShiftSpec shift;
    Polynomial parent;
    /// prod (t - r) * scale^{-child_dim} * P_child(scale (t + offset))
    Polynomial reassembled;
    bool passed = false;
};

/// Induction step checked against an explicitly supplied parent matrix.
InductionReport induction_report(FamilyId family, unsigned dim, const FamilyParams& params,
                                 const TridiagonalSpec& parent, const Readings& readings = {});
InductionReport induction_report(FamilyId family, unsigned dim, const FamilyParams& params,
                                 const Readings& readings = {});
bool induction_check(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings = {});

/*
 * a -> B_dim(a x0) with the B-family parameter a is a polynomial of degree
 * at most dim in a. Its a^dim coefficient must equal D_dim(x0). The
 * polynomial is recovered by interpolation through dim + 1 values of a.
 */
bool b_leading_coefficient_check(unsigned dim, const Rational& x0);

/// A_dim(t) = 2^dim B_dim(t/2)|_{a=1/2} = (t - (dim-1))^dim.
bool a_family_check(unsigned dim);

}  // namespace sylvdet
