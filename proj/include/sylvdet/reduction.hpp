#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sylvdet/families.hpp"
#include "sylvdet/matrix.hpp"

namespace sylvdet {

enum class TransformKind {
    SylvesterRows,        // rows (1,...,1), (1,-1,...,(-1)^N), then identity rows
    OnesRow,              // row (1,...,1), then identity rows
    AlternatingColumn,    // first column (1,-1,1,...), identity elsewhere
    BidiagSkipOne,        // unit diagonal, -1 on the second superdiagonal
    BidiagAdjacentMinus,  // unit diagonal, -1 on the superdiagonal
    BidiagAdjacentPlus,   // unit diagonal, +1 on the subdiagonal
    LambdaDiag,           // diag(q^{-k} (1 - ab q^{2k+2})), k = 0..dim-1
};

/// LambdaDiag needs QRacahParams and throws DegenerateParams on a vanishing entry.
DenseMatrix build_transform(TransformKind kind, unsigned dim, const std::optional<FamilyParams>& params = {});

/// G v = 0 for the alternating vector v = (1, -1, 1, ...).
bool ansatz_kernel_check(const TridiagonalSpec& spec);

/// First entry that broke an exact comparison.
struct Witness {
    std::string check;
    std::size_t row = 0;
    std::size_t col = 0;
    Rational expected;
    Rational actual;
};

struct TraceStep {
    std::string label;
    DenseMatrix matrix;
};

struct ReductionReport {
    FamilyId family = FamilyId::SylvesterD;
    unsigned dim = 0;
    FamilyParams params;
    /// "upper-right" for the row transforms (block lower triangular), "lower-left" for the column transform.
    std::string zero_block;
    bool zero_block_ok = false;
    /// Eigenvalues of G split off in the leading block.
    std::vector<Rational> leading_eigs;
    bool leading_eigs_ok = false;
    /// Tridiagonal form after the bidiagonal step (q-Racah only; true otherwise).
    bool trailing_tridiagonal_ok = true;
    bool trailing_match_ok = false;
    ShiftSpec shift;
    std::optional<Witness> witness;
    std::vector<TraceStep> trace;

    bool passed() const { return zero_block_ok && leading_eigs_ok && trailing_tridiagonal_ok && trailing_match_ok; }
};

bool has_reduction(FamilyId family);

/*
 * Replays the block-triangularization for one family instance:
 *   1. conjugate G by the family's first transform and check the zero block
 *      and the split-off eigenvalues;
 *   2. take the trailing block M;
 *   3. conjugate M by the bidiagonal transform (and Lambda for q-Racah);
 *   4. compare with child G / scale + offset I entrywise.
 * Every comparison is exact. Throws Unsupported for sylvester-a, hahn, racah.
 */
ReductionReport reduce_step(FamilyId family, unsigned dim, const FamilyParams& params, const Readings& readings = {});
/// Same, starting from an explicitly supplied parent matrix.
ReductionReport reduce_spec(FamilyId family, unsigned dim, const FamilyParams& params, const TridiagonalSpec& parent,
                            const Readings& readings = {});

/// Which c index the left side of the diagonal identity uses.
enum class IdentityReading { LowerShift, CapitalN };  // c_{n+1} vs c_{N+1}

/*
 * (a_n + c_{n+1} - 1 - c/(bq^N) + 1/q + cq/(bq^N)) q
 *     = a_{n+1} (1-abq^{2n+4})/(1-abq^{2n+2}) + q^2 c_n (1-abq^{2n})/(1-abq^{2n+2})
 * evaluated exactly at one parameter point, with N = dim - 1.
 */
bool qracah_identity_at(unsigned n, unsigned dim, const QRacahParams& point,
                        IdentityReading reading = IdentityReading::LowerShift);

/// Numerator and denominator bound of the randomized identity points (about 1.2e6 distinct values).
inline constexpr long kIdentityPointBound = 1000;

struct IdentityReport {
    unsigned n = 0;
    unsigned dim = 0;
    unsigned trials = 0;
    unsigned passed_trials = 0;
    bool vacuous = false;
    bool passed = false;
    std::optional<QRacahParams> counterexample;
};

/*
 * Randomized exact identity test. Each trial draws (q, a, b, c) from the
 * seed. A wrong identity of total degree D in a variable passes one trial
 * with probability at most D / 1.2e6, so 20 independent trials leave no
 * practical room for a false pass.
 */
IdentityReport qracah_scalar_identity(unsigned n, unsigned dim, unsigned trials, std::uint64_t seed,
                                      IdentityReading reading = IdentityReading::LowerShift);

}  // namespace sylvdet
