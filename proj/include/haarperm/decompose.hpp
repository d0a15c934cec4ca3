#pragma once

#include "haarperm/budgets.hpp"
#include "haarperm/carleson.hpp"
#include "haarperm/collection.hpp"
#include "haarperm/exponent.hpp"
#include "haarperm/haar_ops.hpp"
#include "haarperm/permutation.hpp"
#include "haarperm/scalar.hpp"
#include "haarperm/series.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace haarperm {

/// One application of the split rule to an index set D rooted at I:
///   S = { J in D : |pi(J)|^alpha / W >= K (|J|/|I|)^alpha },  G = D \ S,
/// where W = sum of |L|^alpha over L in max pi(D). At alpha = 1 the weight
/// W is exactly the covered measure |pi(D)*|.
/// The pulled-back maxima N = pi^-1(max pi(D)) and the next roots
/// O = (N intersect S) union max S drive the iteration.
struct SplitResult {
    DyadicInterval root;
    IntervalCollection good;             // G
    IntervalCollection stopped;          // S
    IntervalCollection stopped_max;      // max S
    IntervalCollection pulled_back_max;  // N
    IntervalCollection next_roots;       // O
    Scalar weight;                       // W
};

SplitResult lemma_split(const IntervalCollection& index_set, const DyadicInterval& root,
                        const PermutationMap& map, const Scalar& stopping_parameter,
                        const CarlesonExponent& exponent);

/// The three split bounds, checkable against a distortion bound M and a
/// coefficient series x:
///   (i)   sum_{J in G} x_J^2 |pi(J)|^alpha <= W K ||x||^2
///   (ii)  sum_{J in max S} (|J|/|I|)^alpha <= M / K
///   (iii) sum_{J in O}     (|J|/|I|)^alpha <= M (M+1) / K
struct SplitBound {
    std::string name;
    Scalar lhs;
    Scalar rhs;
    bool pass;
};
std::vector<SplitBound> check_split_bounds(const SplitResult& split,
                                           const PermutationMap& map,
                                           const CoefficientSeries& series,
                                           const Scalar& stopping_parameter,
                                           const Scalar& distortion_bound,
                                           const CarlesonExponent& exponent);

/// Stopping-time pieces of S along the generations of O: for L in the k-th
/// generation, D(L) = {J in S : J subseteq L} minus everything under the
/// (k+1)-st generation. The pieces are pairwise disjoint and every member
/// of S below some member of O lands in exactly one piece.
std::map<DyadicInterval, IntervalCollection> stopping_decomposition(
    const IntervalCollection& stopped, const IntervalCollection& next_roots);

/// Full transcript of one decomposition run, sufficient to re-verify every
/// bound without re-running the construction.
struct DecompositionCertificate {
    int depth;
    CarlesonExponent alpha;
    Scalar stopping_parameter;  // K
    Scalar distortion_bound;    // M
    PermutationMap map;
    CoefficientSeries series;
    DyadicInterval j0;
    IntervalCollection base;  // B

    struct Level {
        std::vector<SplitResult> splits;  // roots in lexicographic order
    };
    std::vector<Level> levels;

    IntervalCollection all_roots;   // O: every processed root
    IntervalCollection all_pulled;  // N: union of the pulled-back maxima
};

struct RunOptions {
    std::optional<Scalar> stopping_parameter;  // K; defaults to 4M^2 + 1
    std::optional<Scalar> distortion_bound;    // M; defaults to exact distortion
    Budgets budgets{};
};

/// Runs the iterative construction: picks the base interval J0 as the exact
/// argmax of the image-rooted norm expression, takes B as the pulled-back
/// image subtree restricted to the support of x, and splits level by level
/// until no roots remain. Requires K > M(M+1) (otherwise NonContraction)
/// and a nonzero series (otherwise ZeroSeries).
DecompositionCertificate run_decomposition(const PermutationMap& map,
                                           const CoefficientSeries& series,
                                           const CarlesonExponent& exponent,
                                           const RunOptions& options = {});

struct VerificationCheck {
    std::string name;
    std::string detail;
    std::string lhs;
    std::string rhs;
    bool pass;
    bool informational;  // reported but not counted toward the verdict
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool all_pass = true;  // over non-informational checks

    const VerificationCheck* find(const std::string& name) const;
};

/// Re-checks a certificate from its stored pieces alone: split structure
/// and membership rule, the per-root bounds (i)-(iii), geometric decay of
/// the root layers, the 2- and 3M-Carleson claims for O and N, the image
/// identity pi(N) = union of max pi(D(I)), the partition of B by the good
/// parts, and the assembled norm bound
///   ||T_pi x||^2 <= K M CC(N) ||x||^2 <= 3 M^2 K ||x||^2.
/// Violations are reported, never thrown.
VerificationReport verify_certificate(const DecompositionCertificate& certificate);

std::string certificate_to_json_text(const DecompositionCertificate& certificate,
                                     const VerificationReport* report = nullptr);
DecompositionCertificate certificate_from_json_text(const std::string& text);
void save_certificate(const DecompositionCertificate& certificate,
                      const VerificationReport& report, const std::filesystem::path& path);
DecompositionCertificate load_certificate(const std::filesystem::path& path);

std::string report_to_json_text(const VerificationReport& report);

}  // namespace haarperm
