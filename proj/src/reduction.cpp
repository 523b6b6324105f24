#include "sylvdet/reduction.hpp"

#include "sylvdet/errors.hpp"
#include "sylvdet/sampling.hpp"

namespace sylvdet {

DenseMatrix build_transform(TransformKind kind, unsigned dim, const std::optional<FamilyParams>& params) {
    if (dim < 1) throw BadDimension("transform dim must be at least 1");
    DenseMatrix m = DenseMatrix::identity(dim);
    switch (kind) {
        case TransformKind::SylvesterRows:
            if (dim < 2) throw BadDimension("SylvesterRows needs dim >= 2");
            for (std::size_t c = 0; c < dim; ++c) {
                m(0, c) = 1;
                m(1, c) = (c % 2 == 0) ? 1 : -1;
            }
            break;
        case TransformKind::OnesRow:
            for (std::size_t c = 0; c < dim; ++c) m(0, c) = 1;
            break;
        case TransformKind::AlternatingColumn:
            for (std::size_t r = 0; r < dim; ++r) m(r, 0) = (r % 2 == 0) ? 1 : -1;
            break;
        case TransformKind::BidiagSkipOne:
            for (std::size_t r = 0; r + 2 < dim; ++r) m(r, r + 2) = -1;
            break;
        case TransformKind::BidiagAdjacentMinus:
            for (std::size_t r = 0; r + 1 < dim; ++r) m(r, r + 1) = -1;
            break;
        case TransformKind::BidiagAdjacentPlus:
            for (std::size_t r = 1; r < dim; ++r) m(r, r - 1) = 1;
            break;
        case TransformKind::LambdaDiag: {
            const QRacahParams* p = params ? std::get_if<QRacahParams>(&*params) : nullptr;
            if (p == nullptr) throw UsageError("LambdaDiag needs q-Racah parameters");
            if (p->q.is_zero()) throw DegenerateParams("LambdaDiag with q = 0");
            const Rational ab = p->a * p->b;
            for (long k = 0; k < static_cast<long>(dim); ++k) {
                const Rational factor = Rational(1) - ab * pow(p->q, 2 * k + 2);
                if (factor.is_zero()) {
                    throw DegenerateParams("Lambda entry " + std::to_string(k) + " vanishes (a*b*q^" +
                                           std::to_string(2 * k + 2) + " = 1)");
                }
                m(k, k) = pow(p->q, -k) * factor;
            }
            break;
        }
    }
    return m;
}

bool ansatz_kernel_check(const TridiagonalSpec& spec) {
    const DenseMatrix g = to_dense(spec);
    for (std::size_t r = 0; r < g.dim(); ++r) {
        Rational acc;
        for (std::size_t c = 0; c < g.dim(); ++c) {
            if (c % 2 == 0) {
                acc += g(r, c);
            } else {
                acc -= g(r, c);
            }
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool has_reduction(FamilyId family) {
    switch (family) {
        case FamilyId::SylvesterD:
        case FamilyId::SylvesterB:
        case FamilyId::Krawtchouk:
        case FamilyId::DualHahn:
        case FamilyId::QRacah:
            return true;
        default:
            return false;
    }
}

namespace {

class Recorder {
public:
    explicit Recorder(ReductionReport& report) : report_(report) {}

    bool expect(const char* check, std::size_t row, std::size_t col, const Rational& expected, const Rational& actual) {
        if (expected == actual) return true;
        if (!report_.witness) report_.witness = Witness{check, row, col, expected, actual};
        return false;
    }

    bool expect_block(const char* check, const DenseMatrix& actual, std::size_t r0, std::size_t r1, std::size_t c0,
                      std::size_t c1, const DenseMatrix* expected) {
        bool ok = true;
        for (std::size_t r = r0; r < r1; ++r) {
            for (std::size_t c = c0; c < c1; ++c) {
                const Rational want = expected ? (*expected)(r, c) : Rational(0);
                ok = expect(check, r, c, want, actual(r, c)) && ok;
            }
        }
        return ok;
    }

    void trace(std::string label, const DenseMatrix& m) { report_.trace.push_back({std::move(label), m}); }

private:
    ReductionReport& report_;
};

}  // namespace

ReductionReport reduce_spec(FamilyId family, unsigned dim, const FamilyParams& params, const TridiagonalSpec& parent,
                            const Readings& readings) {
    if (!has_reduction(family)) {
        throw Unsupported("no reduction available for family " + std::string(family_name(family)));
    }
    ReductionReport report;
    report.family = family;
    report.dim = dim;
    report.params = params;
    report.shift = shifted_family(family, dim, params);
    Recorder rec(report);

    const Rational big_n = Rational(dim - 1);
    const DenseMatrix g = to_dense(parent);
    rec.trace("G", g);

    // Step 1: split off the known eigenvalues.
    DenseMatrix split_form;
    std::vector<Rational> expected_eigs;
    bool lower_triangular = false;
    switch (family) {
        case FamilyId::SylvesterD: {
            const DenseMatrix t = build_transform(TransformKind::SylvesterRows, dim);
            split_form = t * g * invert(t);
            rec.trace("T G T^-1", split_form);
            expected_eigs = {big_n, -big_n};
            lower_triangular = true;
            break;
        }
        case FamilyId::SylvesterB: {
            const Rational a = std::get<SylvesterBParams>(params).a;
            const DenseMatrix t = build_transform(TransformKind::OnesRow, dim);
            split_form = t * g * invert(t);
            rec.trace("T B T^-1", split_form);
            expected_eigs = {big_n * a - big_n};
            lower_triangular = true;
            break;
        }
        default: {
            const DenseMatrix t = build_transform(TransformKind::AlternatingColumn, dim);
            split_form = invert(t) * g * t;
            rec.trace("T^-1 G T", split_form);
            expected_eigs = {Rational(0)};
            break;
        }
    }

    const std::size_t split = expected_eigs.size();
    const DenseMatrix expected_lead = DenseMatrix::diagonal(expected_eigs);
    if (lower_triangular) {
        report.zero_block = "upper-right";
        report.zero_block_ok = rec.expect_block("zero block", split_form, 0, split, split, dim, nullptr);
    } else {
        report.zero_block = "lower-left";
        report.zero_block_ok = rec.expect_block("zero block", split_form, split, dim, 0, split, nullptr);
    }
    bool lead_ok = true;
    for (std::size_t r = 0; r < split; ++r) {
        report.leading_eigs.push_back(split_form(r, r));
        for (std::size_t c = 0; c < split; ++c) {
            lead_ok = rec.expect("leading block", r, c, expected_lead(r, c), split_form(r, c)) && lead_ok;
        }
    }
    report.leading_eigs_ok = lead_ok;

    // Steps 2-3: trailing block and the bidiagonal similarity.
    const DenseMatrix m = split_form.trailing(split);
    rec.trace("M", m);
    const auto child_dim = static_cast<unsigned>(m.dim());
    DenseMatrix reduced;
    switch (family) {
        case FamilyId::SylvesterD: {
            const DenseMatrix s = build_transform(TransformKind::BidiagSkipOne, child_dim);
            reduced = invert(s) * m * s;
            rec.trace("S^-1 M S", reduced);
            break;
        }
        case FamilyId::SylvesterB: {
            const DenseMatrix s = build_transform(TransformKind::BidiagAdjacentMinus, child_dim);
            reduced = invert(s) * m * s;
            rec.trace("S^-1 M S", reduced);
            break;
        }
        default: {
            const DenseMatrix s = build_transform(TransformKind::BidiagAdjacentPlus, child_dim);
            reduced = s * m * invert(s);
            rec.trace("S M S^-1", reduced);
            break;
        }
    }

    if (family == FamilyId::QRacah) {
        // Expected: diagonal a_k + c_{k+1}, superdiagonal a_{k+1}, subdiagonal c_{k+1}.
        DenseMatrix tri(child_dim);
        for (std::size_t k = 0; k < child_dim; ++k) {
            tri(k, k) = parent.sup[k] + parent.sub[k];
            if (k + 1 < child_dim) {
                tri(k, k + 1) = parent.sup[k + 1];
                tri(k + 1, k) = parent.sub[k];
            }
        }
        report.trailing_tridiagonal_ok =
            rec.expect_block("tridiagonal form", reduced, 0, child_dim, 0, child_dim, &tri);
        const DenseMatrix lambda = build_transform(TransformKind::LambdaDiag, child_dim, params);
        reduced = invert(lambda) * reduced * lambda;
        rec.trace("Lambda^-1 S M S^-1 Lambda", reduced);
    }

    // Step 4: child G / scale + offset I.
    const ShiftSpec& shift = report.shift;
    const DenseMatrix child = to_dense(build_matrix(family, shift.child_dim, shift.child_params, readings));
    const DenseMatrix expected =
        shift.scale.reciprocal() * child + shift.offset * DenseMatrix::identity(shift.child_dim);
    rec.trace("G_child / scale + offset I", expected);
    report.trailing_match_ok = rec.expect_block("trailing similarity", reduced, 0, child_dim, 0, child_dim, &expected);
    return report;
}

ReductionReport reduce_step(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings) {
    if (!has_reduction(family)) {
        throw Unsupported("no reduction available for family " + std::string(family_name(family)));
    }
    return reduce_spec(family, dim, params, build_matrix(family, dim, params, readings), readings);
}

bool qracah_identity_at(unsigned n, unsigned dim, const QRacahParams& point, IdentityReading reading) {
    if (dim < 2 || n + 1 >= dim) throw BadDimension("identity needs 0 <= n <= N-1");
    const unsigned big_n = dim - 1;
    const Rational& q = point.q;
    const Rational ab = point.a * point.b;
    const Rational one = 1;
    const long ln = n;

    const Rational c_over_bqn = point.c / (point.b * pow(q, big_n));
    const Rational c_left = reading == IdentityReading::LowerShift ? qracah_lower(point, big_n, ln + 1)
                                                                  : qracah_lower(point, big_n, big_n + 1);
    const Rational lhs =
        (qracah_upper(point, big_n, ln) + c_left - one - c_over_bqn + q.reciprocal() + q * c_over_bqn) * q;

    const Rational base = one - ab * pow(q, 2 * ln + 2);
    const Rational c_n = n == 0 ? Rational(0) : qracah_lower(point, big_n, ln);
    const Rational rhs = qracah_upper(point, big_n, ln + 1) * (one - ab * pow(q, 2 * ln + 4)) / base +
                         q * q * c_n * (one - ab * pow(q, 2 * ln)) / base;
    return lhs == rhs;
}

IdentityReport qracah_scalar_identity(unsigned n, unsigned dim, unsigned trials, std::uint64_t seed,
                                      IdentityReading reading) {
    if (dim < 2 || n + 1 >= dim) throw BadDimension("identity needs 0 <= n <= N-1");
    IdentityReport report;
    report.n = n;
    report.dim = dim;
    report.trials = trials;
    report.vacuous = trials == 0;

    const long big_n = static_cast<long>(dim) - 1;
    for (unsigned trial = 0; trial < trials; ++trial) {
        RationalSampler rng(combine_seed({seed, n, dim, trial}));
        std::optional<QRacahParams> point;
        for (int attempt = 0; attempt < kSampleRetries && !point; ++attempt) {
            Rational q = rng.draw(kIdentityPointBound);
            Rational a = rng.draw(kIdentityPointBound);
            Rational b = rng.draw(kIdentityPointBound);
            QRacahParams candidate{q, a, b, rng.draw(kIdentityPointBound)};
            if (!validate_params(FamilyId::QRacah, dim, candidate).empty()) continue;
            // c_{N+1} additionally divides by 1 - ab q^{2N+3}.
            if (reading == IdentityReading::CapitalN && a * b * pow(q, 2 * big_n + 3) == Rational(1)) continue;
            point = candidate;
        }
        if (!point) throw SamplingExhausted("no nondegenerate identity point after " + std::to_string(kSampleRetries) + " draws");
        if (qracah_identity_at(n, dim, *point, reading)) {
            ++report.passed_trials;
        } else if (!report.counterexample) {
            report.counterexample = point;
        }
    }
    report.passed = report.passed_trials == trials;
    return report;
}

}  // namespace sylvdet
