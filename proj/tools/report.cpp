#include "report.hpp"

namespace sylvdet::cli {

namespace {

std::string linear_factor(const Rational& root, char var) {
    if (root.is_zero()) return std::string(1, var);
    const Rational magnitude = root.sign() < 0 ? -root : root;
    return std::string("(") + var + (root.sign() < 0 ? "+" : "-") + magnitude.str() + ")";
}

const char* identity_reading_name(IdentityReading reading) {
    return reading == IdentityReading::CapitalN ? "cN1" : "cn1";
}

}  // namespace

std::string factored_form(const std::vector<Rational>& roots, char var) {
    if (roots.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i + 1;
        while (j < roots.size() && roots[j] == roots[i]) ++j;
        out += linear_factor(roots[i], var);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string coefficient_list(const Polynomial& p) {
    std::string out = "[";
    const auto coeffs = p.coefficient_strings();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) out += ", ";
        out += coeffs[i];
    }
    return out + "]";
}

std::string lambda_note(FamilyId family, const Readings& readings) {
    switch (family) {
        case FamilyId::Krawtchouk:
        case FamilyId::Hahn:
            return "t = lambda(x) = -x";
        case FamilyId::DualHahn:
            return "t = lambda(x) = -x(x+gamma+delta+1)";
        case FamilyId::Racah:
            return readings.racah_lambda ? "t = lambda(x) = -x(x+gamma+delta)"
                                         : "t = lambda(x) = -x(x+gamma+delta+1), delta = -N-1-beta";
        case FamilyId::QRacah:
            return readings.qracah_lambda ? "t = lambda(x) = q^-x (1-q^(x+1) c d), d = q^-(N+1)/b"
                                          : "t = lambda(x) = -(1-q^-x)(1-q^(x+1) c d), d = q^-(N+1)/b";
        default:
            return {};
    }
}

std::vector<std::string> reading_names(const Readings& readings) {
    std::vector<std::string> names;
    if (readings.dual_hahn_closed_form) names.emplace_back("dual-hahn-closed-form");
    if (readings.racah_lambda) names.emplace_back("racah-lambda");
    if (readings.qracah_lambda) names.emplace_back("q-racah-lambda");
    if (readings.qracah_upper_factor) names.emplace_back("q-racah-upper");
    return names;
}

Json rationals_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

Json params_json(const FamilyParams& params) {
    Json out = Json::object();
    for (const auto& [name, value] : param_fields(params)) out[name] = value.str();
    return out;
}

Json shift_json(const ShiftSpec& shift) {
    return Json{{"pulled_roots", rationals_json(shift.pulled_roots)},
                {"scale", shift.scale.str()},
                {"offset", shift.offset.str()},
                {"child_dim", shift.child_dim},
                {"child_params", params_json(shift.child_params)}};
}

Json matrix_json(const DenseMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

Json case_header(const char* kind, FamilyId family, unsigned dim, const FamilyParams& params) {
    Json out{{"kind", kind}, {"family", family_name(family)}, {"dim", dim}, {"params", params_json(params)}};
    const auto derived = derived_fields(params, dim);
    if (!derived.empty()) {
        Json d = Json::object();
        for (const auto& [name, value] : derived) d[name] = value.str();
        out["derived"] = std::move(d);
    }
    return out;
}

Json coefficients_json(const Polynomial& p) {
    Json out = Json::array();
    for (auto& s : p.coefficient_strings()) out.push_back(std::move(s));
    return out;
}

}  // namespace

Json verify_json(const VerifyReport& r) {
    Json out = case_header("closed-form", r.family, r.dim, r.params);
    out["readings"] = reading_names(r.readings);
    out["variable"] = std::string(1, r.variable);
    out["charpoly"] = coefficients_json(r.charpoly);
    out["closed_form"] = coefficients_json(r.closed_form);
    out["oracle"] = coefficients_json(r.oracle);
    out["spectrum"] = rationals_json(r.spectrum);
    out["closed_match"] = r.closed_match;
    out["oracle_match"] = r.oracle_match;
    out["passed"] = r.passed();
    if (r.witness) out["witness"] = *r.witness;
    return out;
}

Json induction_json(const InductionReport& r) {
    Json out = case_header("induction", r.family, r.dim, r.params);
    out["shift"] = shift_json(r.shift);
    out["parent"] = coefficients_json(r.parent);
    out["reassembled"] = coefficients_json(r.reassembled);
    out["passed"] = r.passed;
    return out;
}

Json reduction_json(const ReductionReport& r, bool with_trace) {
    Json out = case_header("reduction", r.family, r.dim, r.params);
    out["zero_block"] = r.zero_block;
    out["zero_block_ok"] = r.zero_block_ok;
    out["leading_eigs"] = rationals_json(r.leading_eigs);
    out["leading_eigs_ok"] = r.leading_eigs_ok;
    out["trailing_tridiagonal_ok"] = r.trailing_tridiagonal_ok;
    out["trailing_match_ok"] = r.trailing_match_ok;
    out["shift"] = shift_json(r.shift);
    out["passed"] = r.passed();
    if (r.witness) {
        out["witness"] = Json{{"check", r.witness->check},
                              {"row", r.witness->row},
                              {"col", r.witness->col},
                              {"expected", r.witness->expected.str()},
                              {"actual", r.witness->actual.str()}};
    }
    if (with_trace) {
        Json steps = Json::array();
        for (const auto& step : r.trace) steps.push_back(Json{{"label", step.label}, {"matrix", matrix_json(step.matrix)}});
        out["trace"] = std::move(steps);
    }
    return out;
}

Json identity_json(const IdentityReport& r, IdentityReading reading) {
    Json out{{"kind", "identity"},
             {"reading", identity_reading_name(reading)},
             {"n", r.n},
             {"dim", r.dim},
             {"trials", r.trials},
             {"passed_trials", r.passed_trials},
             {"vacuous", r.vacuous},
             {"passed", r.passed}};
    if (r.counterexample) out["counterexample"] = params_json(*r.counterexample);
    return out;
}

}  // namespace sylvdet::cli
