#include "sylvdet/families.hpp"

#include <algorithm>
#include <functional>

#include "sylvdet/errors.hpp"
#include "sylvdet/sampling.hpp"

namespace sylvdet {

namespace {

struct FamilyEntry {
    FamilyId id;
    std::string_view name;
};

constexpr std::array<FamilyEntry, 8> kNames = {{
    {FamilyId::SylvesterD, "sylvester-d"},
    {FamilyId::SylvesterB, "sylvester-b"},
    {FamilyId::SylvesterA, "sylvester-a"},
    {FamilyId::Krawtchouk, "krawtchouk"},
    {FamilyId::DualHahn, "dual-hahn"},
    {FamilyId::Hahn, "hahn"},
    {FamilyId::Racah, "racah"},
    {FamilyId::QRacah, "q-racah"},
}};


bool params_match(FamilyId family, const FamilyParams& params) {
    switch (family) {
        case FamilyId::SylvesterD:
        case FamilyId::SylvesterA:
            return std::holds_alternative<NoParams>(params);
        case FamilyId::SylvesterB:
            return std::holds_alternative<SylvesterBParams>(params);
        case FamilyId::Krawtchouk:
            return std::holds_alternative<KrawtchoukParams>(params);
        case FamilyId::DualHahn:
            return std::holds_alternative<DualHahnParams>(params);
        case FamilyId::Hahn:
            return std::holds_alternative<HahnParams>(params);
        case FamilyId::Racah:
            return std::holds_alternative<RacahParams>(params);
        case FamilyId::QRacah:
            return std::holds_alternative<QRacahParams>(params);
    }
    return false;
}

std::vector<std::string> field_names(FamilyId family) {
    switch (family) {
        case FamilyId::SylvesterD:
        case FamilyId::SylvesterA:
            return {};
        case FamilyId::SylvesterB:
            return {"a"};
        case FamilyId::Krawtchouk:
            return {"p"};
        case FamilyId::DualHahn:
            return {"gamma", "delta"};
        case FamilyId::Hahn:
            return {"alpha", "beta"};
        case FamilyId::Racah:
            return {"alpha", "beta", "gamma"};
        case FamilyId::QRacah:
            return {"q", "a", "b", "c"};
    }
    return {};
}

// Shared denominator scan for Hahn and Racah: a_n uses n = 0..N-1, c_n uses n = 1..N.
void scan_jacobi_denominators(const Rational& alpha, const Rational& beta, unsigned big_n,
                              std::vector<std::string>& out) {
    const Rational s = alpha + beta;
    auto check = [&](long n, long shift) {
        const Rational v = Rational(2 * n) + s + Rational(shift);
        if (v.is_zero()) {
            out.push_back("2*" + std::to_string(n) + "+alpha+beta" + (shift ? "+" + std::to_string(shift) : "") +
                          " = 0");
        }
    };
    for (long n = 0; n < static_cast<long>(big_n); ++n) {
        check(n, 1);
        check(n, 2);
    }
    for (long n = 1; n <= static_cast<long>(big_n); ++n) {
        check(n, 0);
        check(n, 1);
    }
}

Rational nonzero_or_throw(const Rational& v, const char* what) {
    if (v.is_zero()) throw DegenerateParams(std::string("vanishing denominator: ") + what);
    return v;
}

using Coefficient = std::function<Rational(long)>;

TridiagonalSpec ansatz_spec(unsigned dim, const Coefficient& upper, const Coefficient& lower) {
    const long big_n = static_cast<long>(dim) - 1;
    TridiagonalSpec spec{dim, {}, {}, {}};
    spec.diag.reserve(dim);
    for (long n = 0; n < big_n; ++n) {
        spec.sup.push_back(upper(n));
        spec.sub.push_back(lower(n + 1));
    }
    // a_N and c_0 vanish structurally.
    for (long n = 0; n <= big_n; ++n) {
        Rational d;
        if (n < big_n) d += spec.sup[n];
        if (n > 0) d += spec.sub[n - 1];
        spec.diag.push_back(d);
    }
    return spec;
}

Rational hahn_upper(const HahnParams& p, long big_n, long n) {
    const Rational s = p.alpha + p.beta;
    const Rational num = (Rational(n) + s + 1) * (Rational(n) + p.alpha + 1) * Rational(big_n - n);
    return num / nonzero_or_throw((Rational(2 * n) + s + 1) * (Rational(2 * n) + s + 2), "Hahn a_n");
}

Rational hahn_lower(const HahnParams& p, long big_n, long n) {
    const Rational s = p.alpha + p.beta;
    const Rational num = Rational(n) * (Rational(n) + s + Rational(big_n + 1)) * (Rational(n) + p.beta);
    return num / nonzero_or_throw((Rational(2 * n) + s) * (Rational(2 * n) + s + 1), "Hahn c_n");
}

Rational racah_upper(const RacahParams& p, long big_n, long n) {
    const Rational s = p.alpha + p.beta;
    const Rational num = (Rational(n) + p.alpha + 1) * (Rational(n) + s + 1) * (Rational(n) + p.gamma + 1) *
                         Rational(big_n - n);
    return num / nonzero_or_throw((Rational(2 * n) + s + 1) * (Rational(2 * n) + s + 2), "Racah a_n");
}

Rational racah_lower(const RacahParams& p, long big_n, long n) {
    const Rational s = p.alpha + p.beta;
    const Rational num = -Rational(n) * (Rational(n) + s + Rational(big_n + 1)) * (Rational(n) + s - p.gamma) *
                         (Rational(n) + p.beta);
    return num / nonzero_or_throw((Rational(2 * n) + s) * (Rational(2 * n) + s + 1), "Racah c_n");
}

// -n (n + g + d + 1), or -n (n + g + d) under the literal Racah reading.
Rational quadratic_lambda(long n, const Rational& gamma, const Rational& delta, long extra) {
    return -Rational(n) * (Rational(n) + gamma + delta + Rational(extra));
}

Rational qracah_lambda(const QRacahParams& p, unsigned dim, long n, bool literal) {
    const Rational cd = p.c * qracah_d(p, dim);
    const Rational second = Rational(1) - pow(p.q, n + 1) * cd;
    if (literal) return pow(p.q, -n) * second;
    return -(Rational(1) - pow(p.q, -n)) * second;
}

}  // namespace

std::string_view family_name(FamilyId family) {
    for (const auto& e : kNames) {
        if (e.id == family) return e.name;
    }
    return "unknown";
}

std::optional<FamilyId> parse_family(std::string_view name) {
    for (const auto& e : kNames) {
        if (e.name == name) return e.id;
    }
    return std::nullopt;
}

bool is_ansatz_family(FamilyId family) {
    switch (family) {
        case FamilyId::Krawtchouk:
        case FamilyId::DualHahn:
        case FamilyId::Hahn:
        case FamilyId::Racah:
        case FamilyId::QRacah:
            return true;
        default:
            return false;
    }
}

Rational racah_delta(const RacahParams& params, unsigned dim) { return -Rational(dim) - params.beta; }

Rational qracah_d(const QRacahParams& params, unsigned dim) {
    return pow(params.q, -static_cast<long>(dim)) / params.b;
}

std::vector<std::pair<std::string, Rational>> param_fields(const FamilyParams& params) {
    return std::visit(
        [](const auto& p) -> std::vector<std::pair<std::string, Rational>> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NoParams>) {
                return {};
            } else if constexpr (std::is_same_v<T, SylvesterBParams>) {
                return {{"a", p.a}};
            } else if constexpr (std::is_same_v<T, KrawtchoukParams>) {
                return {{"p", p.p}};
            } else if constexpr (std::is_same_v<T, DualHahnParams>) {
                return {{"gamma", p.gamma}, {"delta", p.delta}};
            } else if constexpr (std::is_same_v<T, HahnParams>) {
                return {{"alpha", p.alpha}, {"beta", p.beta}};
            } else if constexpr (std::is_same_v<T, RacahParams>) {
                return {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}};
            } else {
                return {{"q", p.q}, {"a", p.a}, {"b", p.b}, {"c", p.c}};
            }
        },
        params);
}

std::vector<std::pair<std::string, Rational>> derived_fields(const FamilyParams& params, unsigned dim) {
    if (const auto* r = std::get_if<RacahParams>(&params)) return {{"delta", racah_delta(*r, dim)}};
    if (const auto* q = std::get_if<QRacahParams>(&params)) {
        if (q->q.is_zero() || q->b.is_zero()) return {};
        return {{"d", qracah_d(*q, dim)}};
    }
    return {};
}

FamilyParams params_from_fields(FamilyId family, const std::map<std::string, Rational>& fields) {
    const auto names = field_names(family);
    for (const auto& [name, value] : fields) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw UsageError("family " + std::string(family_name(family)) + " has no parameter '" + name + "'");
        }
    }
    auto get = [&](const std::string& name) {
        auto it = fields.find(name);
        if (it == fields.end()) {
            throw UsageError("family " + std::string(family_name(family)) + " needs parameter '" + name + "'");
        }
        return it->second;
    };
    switch (family) {
        case FamilyId::SylvesterD:
        case FamilyId::SylvesterA:
            return NoParams{};
        case FamilyId::SylvesterB:
            return SylvesterBParams{get("a")};
        case FamilyId::Krawtchouk:
            return KrawtchoukParams{get("p")};
        case FamilyId::DualHahn:
            return DualHahnParams{get("gamma"), get("delta")};
        case FamilyId::Hahn:
            return HahnParams{get("alpha"), get("beta")};
        case FamilyId::Racah:
            return RacahParams{get("alpha"), get("beta"), get("gamma")};
        case FamilyId::QRacah:
            return QRacahParams{get("q"), get("a"), get("b"), get("c")};
    }
    return NoParams{};
}

std::optional<Readings> parse_reading(std::string_view name) {
    Readings r;
    if (name == "dual-hahn-closed-form") {
        r.dual_hahn_closed_form = true;
    } else if (name == "racah-lambda") {
        r.racah_lambda = true;
    } else if (name == "q-racah-lambda") {
        r.qracah_lambda = true;
    } else if (name == "q-racah-upper") {
        r.qracah_upper_factor = true;
    } else {
        return std::nullopt;
    }
    return r;
}

Rational qracah_upper(const QRacahParams& p, unsigned big_n, long n, bool literal_factor) {
    const Rational ab = p.a * p.b;
    const Rational one = 1;
    const Rational second = literal_factor ? one - pow(p.q, n + 1) : one - p.a * pow(p.q, n + 1);
    const Rational num = (one - ab * pow(p.q, n + 1)) * second * (one - pow(p.q, n - static_cast<long>(big_n))) *
                         (one - p.c * pow(p.q, n + 1));
    const Rational den = (one - ab * pow(p.q, 2 * n + 1)) * (one - ab * pow(p.q, 2 * n + 2));
    return num / nonzero_or_throw(den, "q-Racah a_n");
}

Rational qracah_lower(const QRacahParams& p, unsigned big_n, long n) {
    const Rational ab = p.a * p.b;
    const Rational one = 1;
    if (p.b.is_zero() || p.c.is_zero() || p.q.is_zero()) throw DegenerateParams("q-Racah c_n needs q, b, c nonzero");
    const Rational prefactor = p.c * pow(p.q, -static_cast<long>(big_n)) / p.b;
    const Rational num = (one - pow(p.q, n)) * (one - p.b * pow(p.q, n)) * (one - ab / p.c * pow(p.q, n)) *
                         (one - ab * pow(p.q, n + static_cast<long>(big_n) + 1));
    const Rational den = (one - ab * pow(p.q, 2 * n)) * (one - ab * pow(p.q, 2 * n + 1));
    return prefactor * num / nonzero_or_throw(den, "q-Racah c_n");
}

std::vector<std::string> validate_params(FamilyId family, unsigned dim, const FamilyParams& params) {
    std::vector<std::string> out;
    if (dim < 1) {
        out.emplace_back("dim must be at least 1");
        return out;
    }
    if (!params_match(family, params)) {
        out.push_back("parameter record does not match family " + std::string(family_name(family)));
        return out;
    }
    const unsigned big_n = dim - 1;
    switch (family) {
        case FamilyId::Hahn: {
            const auto& p = std::get<HahnParams>(params);
            scan_jacobi_denominators(p.alpha, p.beta, big_n, out);
            break;
        }
        case FamilyId::Racah: {
            const auto& p = std::get<RacahParams>(params);
            scan_jacobi_denominators(p.alpha, p.beta, big_n, out);
            break;
        }
        case FamilyId::QRacah: {
            const auto& p = std::get<QRacahParams>(params);
            if (p.q.is_zero() || p.q == Rational(1) || p.q == Rational(-1)) out.emplace_back("q in {0, 1, -1}");
            if (p.b.is_zero()) out.emplace_back("b = 0");
            if (p.c.is_zero()) out.emplace_back("c = 0");
            if (!p.q.is_zero()) {
                const Rational ab = p.a * p.b;
                for (long k = 1; k <= 2 * static_cast<long>(big_n) + 2; ++k) {
                    if (ab * pow(p.q, k) == Rational(1)) out.push_back("a*b*q^" + std::to_string(k) + " = 1");
                }
            }
            break;
        }
        default:
            // Remaining families have entries polynomial in their parameters.
            break;
    }
    return out;
}

TridiagonalSpec build_matrix(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings) {
    if (dim < 1) throw BadDimension("dim must be at least 1");
    if (!params_match(family, params)) {
        throw UsageError("parameter record does not match family " + std::string(family_name(family)));
    }
    if (auto violations = validate_params(family, dim, params); !violations.empty()) {
        std::string msg = std::string(family_name(family)) + " dim " + std::to_string(dim) + ":";
        for (const auto& v : violations) msg += " " + v + ";";
        throw DegenerateParams(msg);
    }
    const long big_n = static_cast<long>(dim) - 1;
    TridiagonalSpec spec{dim, {}, {}, {}};
    switch (family) {
        case FamilyId::SylvesterD:
            for (long n = 0; n <= big_n; ++n) spec.diag.emplace_back(0);
            for (long n = 0; n < big_n; ++n) {
                spec.sup.emplace_back(n + 1);
                spec.sub.emplace_back(big_n - n);
            }
            return spec;
        case FamilyId::SylvesterB: {
            const Rational a = std::get<SylvesterBParams>(params).a;
            for (long n = 0; n <= big_n; ++n) spec.diag.emplace_back(-n);
            for (long n = 0; n < big_n; ++n) {
                spec.sup.push_back(Rational(n + 1) * a);
                spec.sub.push_back(Rational(big_n - n) * (a - 1));
            }
            return spec;
        }
        case FamilyId::SylvesterA:
            for (long n = 0; n <= big_n; ++n) spec.diag.emplace_back(-2 * n);
            for (long n = 0; n < big_n; ++n) {
                spec.sup.emplace_back(n + 1);
                spec.sub.emplace_back(-(big_n - n));
            }
            return spec;
        case FamilyId::Krawtchouk: {
            const Rational p = std::get<KrawtchoukParams>(params).p;
            return ansatz_spec(
                dim, [&](long n) { return p * Rational(big_n - n); },
                [&](long n) { return Rational(n) * (Rational(1) - p); });
        }
        case FamilyId::DualHahn: {
            const auto& p = std::get<DualHahnParams>(params);
            return ansatz_spec(
                dim, [&](long n) { return Rational(big_n - n) * (p.gamma + Rational(n + 1)); },
                [&](long n) { return Rational(n) * (Rational(big_n - n + 1) + p.delta); });
        }
        case FamilyId::Hahn: {
            const auto& p = std::get<HahnParams>(params);
            return ansatz_spec(
                dim, [&](long n) { return hahn_upper(p, big_n, n); }, [&](long n) { return hahn_lower(p, big_n, n); });
        }
        case FamilyId::Racah: {
            const auto& p = std::get<RacahParams>(params);
            return ansatz_spec(
                dim, [&](long n) { return racah_upper(p, big_n, n); },
                [&](long n) { return racah_lower(p, big_n, n); });
        }
        case FamilyId::QRacah: {
            const auto& p = std::get<QRacahParams>(params);
            const auto n_big = static_cast<unsigned>(big_n);
            return ansatz_spec(
                dim, [&](long n) { return qracah_upper(p, n_big, n, readings.qracah_upper_factor); },
                [&](long n) { return qracah_lower(p, n_big, n); });
        }
    }
    return spec;
}

std::vector<Rational> predicted_spectrum(FamilyId family, unsigned dim, const FamilyParams& params,
                                         const Readings& readings) {
    if (dim < 1) throw BadDimension("dim must be at least 1");
    if (auto violations = validate_params(family, dim, params); !violations.empty()) {
        throw DegenerateParams(std::string(family_name(family)) + ": " + violations.front());
    }
    const long big_n = static_cast<long>(dim) - 1;
    std::vector<Rational> roots;
    roots.reserve(dim);
    for (long n = 0; n <= big_n; ++n) {
        switch (family) {
            case FamilyId::SylvesterD:
                roots.emplace_back(2 * n - big_n);
                break;
            case FamilyId::SylvesterB: {
                // factor x + (N-2j) a - N + j
                const Rational a = std::get<SylvesterBParams>(params).a;
                roots.push_back(-(Rational(big_n - 2 * n) * a) + Rational(big_n - n));
                break;
            }
            case FamilyId::SylvesterA:
                roots.emplace_back(big_n);
                break;
            case FamilyId::Krawtchouk:
            case FamilyId::Hahn:
                roots.emplace_back(-n);
                break;
            case FamilyId::DualHahn: {
                const auto& p = std::get<DualHahnParams>(params);
                roots.push_back(quadratic_lambda(n, p.gamma, p.delta, 1));
                break;
            }
            case FamilyId::Racah: {
                const auto& p = std::get<RacahParams>(params);
                roots.push_back(quadratic_lambda(n, p.gamma, racah_delta(p, dim), readings.racah_lambda ? 0 : 1));
                break;
            }
            case FamilyId::QRacah:
                roots.push_back(qracah_lambda(std::get<QRacahParams>(params), dim, n, readings.qracah_lambda));
                break;
        }
    }
    return roots;
}

ShiftSpec shifted_family(FamilyId family, unsigned dim, const FamilyParams& params) {
    if (family == FamilyId::SylvesterA) {
        throw Unsupported("sylvester-a has no induction step of its own; it follows from sylvester-b at a = 1/2");
    }
    const unsigned min_dim = family == FamilyId::SylvesterD ? 3 : 2;
    if (dim < min_dim) {
        throw BadDimension(std::string(family_name(family)) + " induction needs dim >= " + std::to_string(min_dim));
    }
    if (auto violations = validate_params(family, dim, params); !violations.empty()) {
        throw DegenerateParams(std::string(family_name(family)) + ": " + violations.front());
    }
    const long big_n = static_cast<long>(dim) - 1;
    ShiftSpec s;
    s.child_dim = dim - 1;
    s.pulled_roots = {Rational(0)};
    switch (family) {
        case FamilyId::SylvesterD:
            s.pulled_roots = {Rational(big_n), Rational(-big_n)};
            s.child_dim = dim - 2;
            s.child_params = NoParams{};
            break;
        case FamilyId::SylvesterB: {
            const Rational a = std::get<SylvesterBParams>(params).a;
            s.pulled_roots = {Rational(big_n) - Rational(big_n) * a};
            s.offset = -a;
            s.child_params = params;
            break;
        }
        case FamilyId::Krawtchouk:
            s.offset = 1;
            s.child_params = params;
            break;
        case FamilyId::DualHahn: {
            const auto& p = std::get<DualHahnParams>(params);
            s.offset = p.gamma + p.delta + 2;
            s.child_params = DualHahnParams{p.gamma + 1, p.delta + 1};
            break;
        }
        case FamilyId::Hahn: {
            const auto& p = std::get<HahnParams>(params);
            s.offset = 1;
            s.child_params = HahnParams{p.alpha + 1, p.beta};
            break;
        }
        case FamilyId::Racah: {
            const auto& p = std::get<RacahParams>(params);
            s.offset = p.gamma + racah_delta(p, dim) + 2;
            s.child_params = RacahParams{p.alpha + 1, p.beta, p.gamma + 1};
            break;
        }
        case FamilyId::QRacah: {
            const auto& p = std::get<QRacahParams>(params);
            const Rational c_over_bqn = p.c / (p.b * pow(p.q, big_n));
            s.scale = p.q;
            s.offset = Rational(1) + c_over_bqn - p.q.reciprocal() - p.q * c_over_bqn;
            s.child_params = QRacahParams{p.q, p.a * p.q, p.b, p.c * p.q};
            break;
        }
        case FamilyId::SylvesterA:
            break;
    }
    return s;
}

FamilyParams sample_params(FamilyId family, unsigned dim, std::uint64_t seed) {
    RationalSampler rng(combine_seed({seed, static_cast<std::uint64_t>(family), dim}));
    auto draw = [&] { return rng.draw(kSampleBound); };
    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
        FamilyParams candidate;
        switch (family) {
            case FamilyId::SylvesterD:
            case FamilyId::SylvesterA:
                return NoParams{};
            case FamilyId::SylvesterB:
                candidate = SylvesterBParams{draw()};
                break;
            case FamilyId::Krawtchouk:
                candidate = KrawtchoukParams{draw()};
                break;
            case FamilyId::DualHahn: {
                Rational g = draw();
                candidate = DualHahnParams{g, draw()};
                break;
            }
            case FamilyId::Hahn: {
                Rational a = draw();
                candidate = HahnParams{a, draw()};
                break;
            }
            case FamilyId::Racah: {
                Rational a = draw();
                Rational b = draw();
                candidate = RacahParams{a, b, draw()};
                break;
            }
            case FamilyId::QRacah: {
                Rational q = draw();
                Rational a = draw();
                Rational b = draw();
                candidate = QRacahParams{q, a, b, draw()};
                break;
            }
        }
        if (validate_params(family, dim, candidate).empty()) return candidate;
    }
    throw SamplingExhausted("no valid " + std::string(family_name(family)) + " parameters after " +
                            std::to_string(kSampleRetries) + " draws");
}

}  // namespace sylvdet
