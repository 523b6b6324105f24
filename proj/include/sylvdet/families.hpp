#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sylvdet/rational.hpp"

namespace sylvdet {

enum class FamilyId { SylvesterD, SylvesterB, SylvesterA, Krawtchouk, DualHahn, Hahn, Racah, QRacah };

inline constexpr std::array<FamilyId, 8> kAllFamilies = {
    FamilyId::SylvesterD, FamilyId::SylvesterB, FamilyId::SylvesterA, FamilyId::Krawtchouk,
    FamilyId::DualHahn,   FamilyId::Hahn,       FamilyId::Racah,      FamilyId::QRacah,
};

/// Kebab-case CLI name, e.g. "dual-hahn".
std::string_view family_name(FamilyId family);
std::optional<FamilyId> parse_family(std::string_view name);

/// Families whose diagonal is fixed by b_n = -a_n - c_n.
bool is_ansatz_family(FamilyId family);

struct NoParams {
    friend bool operator==(const NoParams&, const NoParams&) = default;
};
struct SylvesterBParams {
    Rational a;
    friend bool operator==(const SylvesterBParams&, const SylvesterBParams&) = default;
};
struct KrawtchoukParams {
    Rational p;
    friend bool operator==(const KrawtchoukParams&, const KrawtchoukParams&) = default;
};
struct DualHahnParams {
    Rational gamma;
    Rational delta;
    friend bool operator==(const DualHahnParams&, const DualHahnParams&) = default;
};
struct HahnParams {
    Rational alpha;
    Rational beta;
    friend bool operator==(const HahnParams&, const HahnParams&) = default;
};
/// delta is derived from beta + delta + 1 = -N; see racah_delta.
struct RacahParams {
    Rational alpha;
    Rational beta;
    Rational gamma;
    friend bool operator==(const RacahParams&, const RacahParams&) = default;
};
/// d is derived from b d q = q^{-N}; see qracah_d.
struct QRacahParams {
    Rational q;
    Rational a;
    Rational b;
    Rational c;
    friend bool operator==(const QRacahParams&, const QRacahParams&) = default;
};

using FamilyParams =
    std::variant<NoParams, SylvesterBParams, KrawtchoukParams, DualHahnParams, HahnParams, RacahParams, QRacahParams>;

/// delta = -N - 1 - beta with N = dim - 1.
Rational racah_delta(const RacahParams& params, unsigned dim);
/// d = q^{-N-1} / b with N = dim - 1.
Rational qracah_d(const QRacahParams& params, unsigned dim);

/// Stored fields in declaration order, e.g. {("gamma", 1/2), ("delta", 1/3)}.
std::vector<std::pair<std::string, Rational>> param_fields(const FamilyParams& params);
/// Fields derived from the stored ones and the dimension (Racah delta, q-Racah d).
std::vector<std::pair<std::string, Rational>> derived_fields(const FamilyParams& params, unsigned dim);
/// Builds the parameter record for `family` from name=value pairs. Throws UsageError on
/// unknown, missing, or surplus names.
FamilyParams params_from_fields(FamilyId family, const std::map<std::string, Rational>& fields);

/*
 * Alternative readings of printed formulas that the oracle rejects. The
 * default-constructed value selects the corrected forms everywhere; each flag
 * switches one formula back to its literal printed form so the failure can
 * be reproduced.
 */
struct Readings {
    bool dual_hahn_closed_form = false;  // (-x)_N (x+g+d+1)_{N+1}
    bool racah_lambda = false;           // lambda(x) = -x(x+g+d)
    bool qracah_lambda = false;          // lambda(x) = q^{-x}(1-q^{x+1}cd)
    bool qracah_upper_factor = false;    // (1-q^{n+1}) in a_n instead of (1-aq^{n+1})

    static Readings all_literal() { return {true, true, true, true}; }
    bool any() const { return dual_hahn_closed_form || racah_lambda || qracah_lambda || qracah_upper_factor; }
    friend bool operator==(const Readings&, const Readings&) = default;
};

/// Names accepted by --variant, mapped onto Readings flags.
std::optional<Readings> parse_reading(std::string_view name);

/*
 * Tridiagonal G stored through the entries of tI + G:
 *   diag[n]  constant added to t on the diagonal (= -b_n)
 *   sup[n]   entry (n, n+1) (= a_n)
 *   sub[n]   entry (n+1, n) (= c_{n+1})
 * The characteristic object is P(t) = det(tI + G).
 */
struct TridiagonalSpec {
    unsigned dim = 0;
    std::vector<Rational> diag;
    std::vector<Rational> sup;
    std::vector<Rational> sub;

    friend bool operator==(const TridiagonalSpec&, const TridiagonalSpec&) = default;
};

/*
 * One induction step:
 *   P_dim(t) = prod_{r in pulled_roots} (t - r) * scale^{-child_dim} * P_child(scale * (t + offset)).
 */
struct ShiftSpec {
    std::vector<Rational> pulled_roots;
    Rational scale = 1;
    Rational offset;
    FamilyParams child_params;
    unsigned child_dim = 0;
};

/// q-Racah upper coefficient a_n for the dimension N + 1. Throws DegenerateParams on a zero denominator.
Rational qracah_upper(const QRacahParams& params, unsigned big_n, long n, bool literal_factor = false);
/// q-Racah lower coefficient c_n for the dimension N + 1. Throws DegenerateParams on a zero denominator.
Rational qracah_lower(const QRacahParams& params, unsigned big_n, long n);

/// Violations as human-readable strings; empty means valid.
std::vector<std::string> validate_params(FamilyId family, unsigned dim, const FamilyParams& params);

TridiagonalSpec build_matrix(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings = {});

/// Roots mu_0..mu_N of the claimed P(t) = prod (t - mu_n), in the order the closed form lists them.
std::vector<Rational> predicted_spectrum(FamilyId family, unsigned dim, const FamilyParams& params,
                                         const Readings& readings = {});

ShiftSpec shifted_family(FamilyId family, unsigned dim, const FamilyParams& params);

/// Numerators lie in [-kSampleBound, kSampleBound], denominators in [1, kSampleBound].
inline constexpr long kSampleBound = 50;
inline constexpr int kSampleRetries = 1000;

/// Deterministic in (family, dim, seed); the result always validates.
FamilyParams sample_params(FamilyId family, unsigned dim, std::uint64_t seed);

}  // namespace sylvdet
