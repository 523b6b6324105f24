#include "sylvdet/determinant.hpp"

#include <algorithm>

#include "sylvdet/algebra.hpp"
#include "sylvdet/errors.hpp"

namespace sylvdet {

Polynomial charpoly(const TridiagonalSpec& spec) {
    if (spec.dim == 0) return Polynomial::constant(1);
    const Polynomial t = Polynomial::variable();
    Polynomial previous = Polynomial::constant(1);
    Polynomial current = t + Polynomial::constant(spec.diag[0]);
    for (std::size_t k = 1; k < spec.dim; ++k) {
        Polynomial next = (t + Polynomial::constant(spec.diag[k])) * current - (spec.sup[k - 1] * spec.sub[k - 1]) * previous;
        previous = std::move(current);
        current = std::move(next);
    }
    return current;
}

Rational oracle_node(unsigned k) {
    const long half = static_cast<long>((k + 1) / 2);
    return (k % 2 == 1) ? Rational(half) : Rational(-half);
}

Polynomial charpoly_dense(const DenseMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Point> samples;
    samples.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        const Rational t0 = oracle_node(k);
        DenseMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += t0;
        samples.emplace_back(t0, bareiss_determinant(shifted));
    }
    return interpolate(samples);
}

Polynomial charpoly_oracle(const TridiagonalSpec& spec) { return charpoly_dense(to_dense(spec)); }

namespace {

// (-x)_N (x + g + d + 1)_{N+1} as a polynomial in x.
Polynomial literal_dual_hahn(const DualHahnParams& p, unsigned dim) {
    const unsigned big_n = dim - 1;
    Polynomial out = Polynomial::constant(1);
    for (unsigned j = 0; j < big_n; ++j) out *= Polynomial({Rational(j), Rational(-1)});
    const Rational shift = p.gamma + p.delta + 1;
    for (unsigned j = 0; j < dim; ++j) out *= Polynomial({shift + Rational(j), Rational(1)});
    return out;
}

std::string degree_witness(const Polynomial& lhs, const Polynomial& rhs) {
    return "degree " + std::to_string(lhs.degree()) + " vs " + std::to_string(rhs.degree());
}

std::string coefficient_witness(const Polynomial& lhs, const Polynomial& rhs, const char* lhs_name,
                                const char* rhs_name) {
    if (lhs.degree() != rhs.degree()) return degree_witness(lhs, rhs);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(std::max(lhs.degree(), 0)); ++k) {
        if (lhs.coefficient(k) != rhs.coefficient(k)) {
            return "coefficient of t^" + std::to_string(k) + ": " + lhs_name + " " + lhs.coefficient(k).str() + ", " +
                   rhs_name + " " + rhs.coefficient(k).str();
        }
    }
    return {};
}

}  // namespace

VerifyReport verify_family(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings) {
    VerifyReport report;
    report.family = family;
    report.dim = dim;
    report.params = params;
    report.readings = readings;

    const TridiagonalSpec spec = build_matrix(family, dim, params, readings);
    report.charpoly = charpoly(spec);
    report.oracle = charpoly_oracle(spec);
    report.oracle_match = report.charpoly == report.oracle;
    report.spectrum = predicted_spectrum(family, dim, params, readings);

    if (family == FamilyId::DualHahn && readings.dual_hahn_closed_form) {
        const auto& p = std::get<DualHahnParams>(params);
        // lambda(x) = -x (x + g + d + 1) = -(g+d+1) x - x^2
        const Polynomial lambda({Rational(0), -(p.gamma + p.delta + 1), Rational(-1)});
        report.variable = 'x';
        report.charpoly = report.charpoly.compose(lambda);
        report.oracle = report.oracle.compose(lambda);
        report.closed_form = literal_dual_hahn(p, dim);
    } else {
        report.closed_form = poly_from_roots(report.spectrum);
    }
    report.closed_match = report.charpoly == report.closed_form;

    if (!report.closed_match) {
        report.witness = coefficient_witness(report.charpoly, report.closed_form, "charpoly", "closed form");
    } else if (!report.oracle_match) {
        report.witness = coefficient_witness(report.charpoly, report.oracle, "charpoly", "oracle");
    }
    return report;
}

InductionReport induction_report(FamilyId family, unsigned dim, const FamilyParams& params,
                                 const TridiagonalSpec& parent, const Readings& readings) {
    InductionReport report;
    report.family = family;
    report.dim = dim;
    report.params = params;
    report.shift = shifted_family(family, dim, params);

    const ShiftSpec& s = report.shift;
    const Polynomial child = charpoly(build_matrix(family, s.child_dim, s.child_params, readings));
    Polynomial rhs = child.affine(s.scale, s.offset) * pow(s.scale, -static_cast<long>(s.child_dim));
    rhs *= poly_from_roots(s.pulled_roots);

    report.parent = charpoly(parent);
    report.reassembled = std::move(rhs);
    report.passed = report.parent == report.reassembled;
    return report;
}

InductionReport induction_report(FamilyId family, unsigned dim, const FamilyParams& params,
                                 const Readings& readings) {
    return induction_report(family, dim, params, build_matrix(family, dim, params, readings), readings);
}

bool induction_check(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings) {
    return induction_report(family, dim, params, readings).passed;
}

bool b_leading_coefficient_check(unsigned dim, const Rational& x0) {
    if (dim < 1) throw BadDimension("dim must be at least 1");
    std::vector<Point> samples;
    samples.reserve(dim + 1);
    for (unsigned k = 0; k <= dim; ++k) {
        const Rational a = oracle_node(k);
        const Polynomial b_poly = charpoly(build_matrix(FamilyId::SylvesterB, dim, SylvesterBParams{a}));
        samples.emplace_back(a, b_poly(a * x0));
    }
    const Polynomial in_a = interpolate(samples);
    const Polynomial d_poly = charpoly(build_matrix(FamilyId::SylvesterD, dim, NoParams{}));
    return in_a.coefficient(dim) == d_poly(x0);
}

bool a_family_check(unsigned dim) {
    if (dim < 1) throw BadDimension("dim must be at least 1");
    const Polynomial a_poly = charpoly(build_matrix(FamilyId::SylvesterA, dim, NoParams{}));
    const Polynomial b_half = charpoly(build_matrix(FamilyId::SylvesterB, dim, SylvesterBParams{Rational(1, 2)}));
    const Polynomial rescaled = b_half.affine(Rational(1, 2), Rational(0)) * pow(Rational(2), dim);
    const std::vector<Rational> repeated(dim, Rational(dim - 1));
    return a_poly == rescaled && a_poly == poly_from_roots(repeated);
}

}  // namespace sylvdet
