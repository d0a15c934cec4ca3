#include "haarperm/harness.hpp"

#include "haarperm/errors.hpp"
#include "haarperm/scan.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace haarperm {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

const char* generator_kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::Identity: return "identity";
        case GeneratorKind::LevelPreservingRandom: return "level_preserving_random";
        case GeneratorKind::TreeAutomorphism: return "tree_automorphism";
        case GeneratorKind::SubtreeSwap: return "subtree_swap";
        case GeneratorKind::RandomBijection: return "random_bijection";
        case GeneratorKind::AdversarialMassMover: return "adversarial_mass_mover";
    }
    return "?";
}

GeneratorKind generator_kind_from_name(const std::string& name) {
    for (GeneratorKind kind :
         {GeneratorKind::Identity, GeneratorKind::LevelPreservingRandom,
          GeneratorKind::TreeAutomorphism, GeneratorKind::SubtreeSwap,
          GeneratorKind::RandomBijection, GeneratorKind::AdversarialMassMover})
        if (name == generator_kind_name(kind)) return kind;
    raise(ErrorKind::InvalidArgument, "unknown generator kind '" + name + "'");
}

namespace {

std::vector<std::uint32_t> identity_table(int depth) {
    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    std::vector<std::uint32_t> fwd(std::size_t(count) + 1);
    std::iota(fwd.begin(), fwd.end(), 0u);
    return fwd;
}

void shuffle_tail(std::vector<std::uint32_t>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[rng.below(i)]);
}

PermutationMap gen_level_preserving(int depth, Rng& rng) {
    auto fwd = identity_table(depth);
    for (int level = 1; level <= depth; ++level) {
        const std::uint32_t first = std::uint32_t(1) << level;
        std::vector<std::uint32_t> targets(first);
        std::iota(targets.begin(), targets.end(), first);
        shuffle_tail(targets, rng);
        for (std::uint32_t k = 0; k < first; ++k) fwd[first + k] = targets[k];
    }
    return PermutationMap(depth, std::move(fwd));
}

PermutationMap gen_tree_automorphism(int depth, Rng& rng) {
    auto fwd = identity_table(depth);
    if (depth == 0) return PermutationMap(depth, std::move(fwd));
    const std::uint32_t internal_end = std::uint32_t(1) << depth;  // nodes with children
    for (std::uint32_t i = 1; i < internal_end; ++i) {
        const bool cross = rng.coin();
        const std::uint32_t target = fwd[i];
        fwd[2 * i] = 2 * target + (cross ? 1u : 0u);
        fwd[2 * i + 1] = 2 * target + (cross ? 0u : 1u);
    }
    return PermutationMap(depth, std::move(fwd));
}

PermutationMap gen_subtree_swap(int depth, Rng& rng) {
    auto fwd = identity_table(depth);
    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    if (depth == 0) return PermutationMap(depth, std::move(fwd));
    if (rng.coin()) {
        // Two single nodes, any levels.
        const std::uint32_t a = 1 + std::uint32_t(rng.below(count));
        std::uint32_t b = 1 + std::uint32_t(rng.below(count - 1));
        if (b >= a) ++b;
        std::swap(fwd[a], fwd[b]);
    } else {
        // Two whole subtrees rooted at the same level (equal depth below).
        const int level = 1 + int(rng.below(std::uint64_t(depth)));
        const std::uint32_t first = std::uint32_t(1) << level;
        const std::uint32_t a = first + std::uint32_t(rng.below(first));
        std::uint32_t b = first + std::uint32_t(rng.below(first - 1));
        if (b >= a) ++b;
        for (int sub = 0; level + sub <= depth; ++sub) {
            const std::uint32_t width = std::uint32_t(1) << sub;
            for (std::uint32_t off = 0; off < width; ++off)
                std::swap(fwd[(a << sub) + off], fwd[(b << sub) + off]);
        }
    }
    return PermutationMap(depth, std::move(fwd));
}

PermutationMap gen_random_bijection(int depth, Rng& rng) {
    auto fwd = identity_table(depth);
    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    for (std::uint32_t i = count; i > 1; --i)
        std::swap(fwd[i], fwd[1 + std::uint32_t(rng.below(i))]);
    return PermutationMap(depth, std::move(fwd));
}

PermutationMap gen_mass_mover(int depth, Rng& rng) {
    // Deep intervals land on shallow ones: sources deepest-first, targets
    // shallowest-first, with a seeded shuffle inside each level block.
    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    std::vector<std::uint32_t> sources;
    std::vector<std::uint32_t> targets;
    for (int level = depth; level >= 0; --level) {
        std::vector<std::uint32_t> block;
        const std::uint32_t first = std::uint32_t(1) << level;
        for (std::uint32_t i = first; i < 2 * first; ++i) block.push_back(i);
        shuffle_tail(block, rng);
        sources.insert(sources.end(), block.begin(), block.end());
    }
    for (int level = 0; level <= depth; ++level) {
        std::vector<std::uint32_t> block;
        const std::uint32_t first = std::uint32_t(1) << level;
        for (std::uint32_t i = first; i < 2 * first; ++i) block.push_back(i);
        shuffle_tail(block, rng);
        targets.insert(targets.end(), block.begin(), block.end());
    }
    std::vector<std::uint32_t> fwd(std::size_t(count) + 1, 0);
    for (std::uint32_t k = 0; k < count; ++k) fwd[sources[k]] = targets[k];
    return PermutationMap(depth, std::move(fwd));
}

}  // namespace

PermutationMap gen_permutation(const GeneratorSpec& spec) {
    Rng rng(derive_seed(spec.seed, 0x9e00 + std::uint64_t(spec.kind)));
    switch (spec.kind) {
        case GeneratorKind::Identity: return PermutationMap::identity(spec.depth);
        case GeneratorKind::LevelPreservingRandom: return gen_level_preserving(spec.depth, rng);
        case GeneratorKind::TreeAutomorphism: return gen_tree_automorphism(spec.depth, rng);
        case GeneratorKind::SubtreeSwap: return gen_subtree_swap(spec.depth, rng);
        case GeneratorKind::RandomBijection: return gen_random_bijection(spec.depth, rng);
        case GeneratorKind::AdversarialMassMover: return gen_mass_mover(spec.depth, rng);
    }
    raise(ErrorKind::InvalidArgument, "unknown generator kind");
}

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

namespace {
constexpr std::int64_t kCoeffDenominatorLog2 = 10;  // coefficients k / 2^10
}

CoefficientSeries random_series(int depth, Normalization normalization, const Rational& p,
                                Rng& rng) {
    CoefficientSeries out(depth, normalization, p);
    const std::int64_t den = std::int64_t(1) << kCoeffDenominatorLog2;
    for (std::uint32_t i = 1; i <= out.interval_count(); ++i) {
        if (rng.coin()) continue;  // sparsity 1/2
        const std::int64_t numerator = std::int64_t(rng.below(2 * den + 1)) - den;
        if (numerator == 0) continue;
        out.set(DyadicInterval::from_index(i), Scalar(Rational(numerator, den)));
    }
    return out;
}

CoefficientSeries random_nonzero_series(int depth, Normalization normalization,
                                        const Rational& p, Rng& rng) {
    for (;;) {
        CoefficientSeries out = random_series(depth, normalization, p, rng);
        if (!out.is_zero()) return out;
    }
}

CoefficientSeries random_series_for(const CarlesonExponent& exponent, int depth, Rng& rng,
                                    bool nonzero) {
    const Normalization norm =
        exponent.is_bmo() ? Normalization::LinfHaar : Normalization::Lambda;
    const Rational p = exponent.is_bmo() ? Rational(1) : exponent.p();
    return nonzero ? random_nonzero_series(depth, norm, p, rng)
                   : random_series(depth, norm, p, rng);
}

IntervalCollection random_nonempty_collection(int depth, Rng& rng) {
    const TruncatedTree tree(depth);
    std::vector<DyadicInterval> members;
    for (;;) {
        members.clear();
        for (const auto& interval : tree.intervals())
            if (rng.coin()) members.push_back(interval);
        if (!members.empty()) return IntervalCollection(depth, std::move(members));
    }
}

// ---------------------------------------------------------------------------
// Property checks
// ---------------------------------------------------------------------------

bool SuiteReport::all_pass() const {
    for (const auto& p : properties)
        if (!p.pass()) return false;
    return true;
}

namespace {

void record_failure(PropertyReport& report, const std::string& witness) {
    ++report.failures;
    if (report.witness.empty()) report.witness = witness;
}

std::string set_to_string_brief(const IntervalCollection& collection) {
    std::string out = "{";
    bool first = true;
    for (const auto& m : collection) {
        if (!first) out += ",";
        out += m.token();
        first = false;
    }
    return out + "}";
}

}  // namespace

PropertyReport theorem2_check(const PermutationMap& map, std::uint64_t trials,
                              std::uint64_t seed, const Budgets& budgets) {
    if (!is_level_preserving(map))
        raise(ErrorKind::NotLevelPreserving,
              "the norm chain needs |pi(I)| = |I| for every interval");
    PropertyReport report{"theorem2"};

    SearchOptions search;
    search.budgets = budgets;
    const std::uint32_t count = map.interval_count();
    const bool exact_ok =
        count <= 40 && (std::uint64_t(1) << count) <= budgets.max_subsets;
    search.mode = exact_ok ? SearchMode::Exact : SearchMode::Antichain;
    const SemyonovResult k_result = semyonov_parameter(map, search);
    const Rational k_value = k_result.value.rat();
    const CarlesonExponent bmo = CarlesonExponent::bmo();

    Rational max_ratio(0);

    // Structured family: the indicator series of every nonempty collection.
    if (map.depth() <= 3) {
        const scan::DenseTree tree(map.depth());
        const scan::IntWeights weights(tree, 1);
        std::vector<std::int64_t> sums(tree.count + 1);
        const std::int64_t k_num = numerator(k_value).convert_to<std::int64_t>();
        const std::int64_t k_den = denominator(k_value).convert_to<std::int64_t>();
        const std::uint64_t total = std::uint64_t(1) << tree.count;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            subtree_sums(tree, weights, mask, sums);
            const scan::Fraction base = rooted_max_over_all(tree, weights, sums);
            const std::uint64_t image = tree.image_mask(map, mask);
            subtree_sums(tree, weights, image, sums);
            const scan::Fraction moved = rooted_max_over_all(tree, weights, sums);
            ++report.trials;
            const __int128 lhs = __int128(moved.num) * base.den * k_den;
            const __int128 rhs = __int128(k_num) * base.num * moved.den;
            if (lhs > rhs)
                record_failure(report, "indicator of " +
                                           set_to_string_brief(tree.collection_of(mask)));
            const Rational ratio =
                Rational(moved.num, moved.den) / Rational(base.num, base.den);
            max_ratio = std::max(max_ratio, ratio);
        }
    }

    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, 0x7e02, t));
        const CoefficientSeries series =
            random_series(map.depth(), Normalization::LinfHaar, Rational(1), rng);
        const Scalar base = weighted_norm_sq(series, bmo);
        const Scalar moved = weighted_norm_sq(permute_coefficients(series, map), bmo);
        ++report.trials;
        if (!(moved.rat() <= k_value * base.rat()))
            record_failure(report, "random series, trial " + std::to_string(t));
        if (!base.is_zero()) max_ratio = std::max(max_ratio, moved.rat() / base.rat());
    }

    report.stats.emplace_back("K", rational_to_string(k_value));
    report.stats.emplace_back("max_ratio", rational_to_string(max_ratio));
    report.stats.emplace_back("K_mode", exact_ok ? "exact" : "antichain");
    return report;
}

PropertyReport necessity_check(const PermutationMap& map, const CarlesonExponent& exponent,
                               NecessityFamily family, std::uint64_t trials,
                               std::uint64_t seed) {
    PropertyReport report{"necessity"};
    Scalar lower_bound(1);

    if (family == NecessityFamily::ExhaustiveDepth3) {
        if (map.depth() > 3)
            raise(ErrorKind::DepthTooLarge, "the exhaustive family needs depth <= 3");
        const scan::DenseTree tree(map.depth());
        const std::uint64_t total = std::uint64_t(1) << tree.count;
        if (exponent.exact()) {
            const scan::IntWeights weights(tree, exponent.alpha().convert_to<long>());
            std::vector<std::int64_t> sums(tree.count + 1);
            for (std::uint64_t mask = 1; mask < total; ++mask) {
                const std::uint64_t image = tree.image_mask(map, mask);
                subtree_sums(tree, weights, image, sums);
                const scan::Fraction norm_all = rooted_max_over_all(tree, weights, sums);
                const scan::Fraction cc_image =
                    rooted_max_over_members(tree, weights, image, sums);
                ++report.trials;
                if (!(norm_all == cc_image))
                    record_failure(report, "collection " +
                                               set_to_string_brief(tree.collection_of(mask)));
                subtree_sums(tree, weights, mask, sums);
                const scan::Fraction cc_base =
                    rooted_max_over_members(tree, weights, mask, sums);
                lower_bound = max(lower_bound,
                                  Scalar(scan::ratio(cc_image, cc_base).to_rational()));
            }
        } else {
            const scan::DblWeights weights(tree, exponent.alpha().convert_to<double>());
            std::vector<double> sums(tree.count + 1);
            for (std::uint64_t mask = 1; mask < total; ++mask) {
                const std::uint64_t image = tree.image_mask(map, mask);
                subtree_sums(tree, weights, image, sums);
                const double norm_all = rooted_max_over_all(tree, weights, sums);
                const double cc_image = rooted_max_over_members(tree, weights, image, sums);
                ++report.trials;
                if (!approx_equal(Scalar::from_double(norm_all),
                                  Scalar::from_double(cc_image)))
                    record_failure(report, "collection " +
                                               set_to_string_brief(tree.collection_of(mask)));
                subtree_sums(tree, weights, mask, sums);
                const double cc_base = rooted_max_over_members(tree, weights, mask, sums);
                lower_bound = max(lower_bound, Scalar::from_double(cc_image / cc_base));
            }
        }
    } else {
        for (std::uint64_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(seed, 0x7e03, t));
            const IntervalCollection collection =
                random_nonempty_collection(map.depth(), rng);
            const IntervalCollection image = map.image(collection);
            const CoefficientSeries indicator = indicator_series(collection, exponent);
            const Scalar norm =
                weighted_norm_sq(permute_coefficients(indicator, map), exponent);
            const Scalar cc_image = carleson_constant(image, exponent);
            ++report.trials;
            const bool ok = exponent.exact() ? norm == cc_image
                                             : approx_equal(norm, cc_image);
            if (!ok)
                record_failure(report, "collection " + set_to_string_brief(collection));
            const Scalar cc_base = carleson_constant(collection, exponent);
            lower_bound = max(lower_bound, cc_image / cc_base);
        }
    }
    report.stats.emplace_back("distortion_lower_bound", lower_bound.str());
    return report;
}

PropertyReport theorem34_suite(const PermutationMap& map, const CarlesonExponent& exponent,
                               std::uint64_t trials, std::uint64_t seed,
                               const Budgets& budgets) {
    PropertyReport report{"theorem34"};
    SearchOptions search;
    search.budgets = budgets;
    const Scalar m_bound = distortion(map, exponent, search).value;
    const Scalar k_param = Scalar(4) * m_bound * m_bound + Scalar(1);
    RunOptions run_options{k_param, m_bound, budgets};

    Scalar empirical(0);
    const PermutationMap inverse = map.inverse();
    for (int direction = 0; direction < 2; ++direction) {
        const PermutationMap& pi = direction == 0 ? map : inverse;
        for (std::uint64_t t = 0; t < trials; ++t) {
            Rng rng(derive_seed(seed, 0x7e34 + std::uint64_t(direction), t));
            const CoefficientSeries series =
                random_series_for(exponent, map.depth(), rng, /*nonzero=*/true);
            ++report.trials;
            try {
                const DecompositionCertificate cert =
                    run_decomposition(pi, series, exponent, run_options);
                const VerificationReport verification = verify_certificate(cert);
                if (!verification.all_pass) {
                    std::string first;
                    for (const auto& check : verification.checks)
                        if (!check.pass && !check.informational) {
                            first = check.name + " (" + check.detail + ")";
                            break;
                        }
                    record_failure(report, "direction " + std::to_string(direction) +
                                               " trial " + std::to_string(t) + ": " + first);
                }
                const Scalar base = weighted_norm_sq(series, exponent);
                const Scalar moved =
                    weighted_norm_sq(permute_coefficients(series, pi), exponent);
                empirical = max(empirical, moved / base);
            } catch (const Error& e) {
                record_failure(report, std::string("exception: ") + e.what());
            }
        }
    }
    report.stats.emplace_back("M", m_bound.str());
    report.stats.emplace_back("K", k_param.str());
    report.stats.emplace_back("certified_bound",
                              (Scalar(3) * m_bound * m_bound * k_param).str());
    report.stats.emplace_back("empirical_sup", empirical.str());
    return report;
}

PropertyReport transpose_identity_check(int depth, std::uint64_t trials,
                                        std::uint64_t seed) {
    PropertyReport report{"transpose"};
    const Rational ps[3] = {Rational(1), Rational(2, 3), Rational(1, 2)};
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, 0x7e05, t));
        const Rational p = ps[rng.below(3)];
        const PermutationMap pi = gen_permutation(
            {GeneratorKind::RandomBijection, depth, derive_seed(seed, 0x7e06, t)});
        const CoefficientSeries a = random_series(depth, Normalization::Lambda, p, rng);
        const CoefficientSeries c = random_series(depth, Normalization::Hp, p, rng);
        const Scalar lhs = pairing(permute_coefficients(a, pi), c);
        const Scalar rhs = pairing(a, adjoint_permute(c, pi));
        ++report.trials;
        if (lhs != rhs)
            record_failure(report, "trial " + std::to_string(t) + " (p = " +
                                       rational_to_string(p) + ")");
    }
    return report;
}

PropertyReport oracle_bmo_sup_check(int depth, std::uint64_t trials, std::uint64_t seed) {
    if (depth > 3)
        raise(ErrorKind::DepthTooLarge, "the collection sup oracle needs depth <= 3");
    PropertyReport report{"oracle_bmo_sup"};
    const scan::DenseTree tree(depth);
    const CarlesonExponent bmo = CarlesonExponent::bmo();
    const std::uint64_t total = std::uint64_t(1) << tree.count;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, 0x7e07, t));
        const CoefficientSeries series =
            random_series(depth, Normalization::LinfHaar, Rational(1), rng);
        // Scaled integers: coefficient k/2^10 contributes k^2 2^(depth-level)
        // to the numerator; the denominator is 2^20 * covered cells.
        std::vector<std::int64_t> weight(tree.count + 1, 0);
        for (std::uint32_t i = 1; i <= tree.count; ++i) {
            const Scalar& c = series.at_index(i);
            if (c.is_zero()) continue;
            const Rational scaled = c.rat() * (std::int64_t(1) << kCoeffDenominatorLog2);
            const std::int64_t k = numerator(scaled).convert_to<std::int64_t>();
            weight[i] = k * k * (std::int64_t(1) << (depth - tree.level[i]));
        }
        std::int64_t best_num = 0;
        std::int64_t best_den = 1;
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            std::int64_t num = 0;
            for (std::uint64_t m = mask; m != 0; m &= m - 1)
                num += weight[std::uint32_t(std::countr_zero(m)) + 1];
            const std::int64_t den = tree.covered_cells(mask);
            if (__int128(num) * best_den > __int128(best_num) * den) {
                best_num = num;
                best_den = den;
            }
        }
        const Rational sup =
            Rational(best_num, best_den) /
            (Rational(std::int64_t(1) << (2 * kCoeffDenominatorLog2)) * pow2(depth));
        const Scalar norm = weighted_norm_sq(series, bmo);
        ++report.trials;
        if (sup != norm.rat())
            record_failure(report, "series trial " + std::to_string(t));
    }
    return report;
}

PropertyReport oracle_index_set_check(int depth, std::uint64_t trials, std::uint64_t seed) {
    PropertyReport report{"oracle_cc_index_set"};
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, 0x7e08, t));
        const IntervalCollection collection = random_nonempty_collection(depth, rng);
        for (long a : {1L, 2L, 3L}) {
            const CarlesonExponent exponent = CarlesonExponent::from_alpha(Rational(a));
            const Scalar members = carleson_constant(collection, exponent);
            const Scalar tree_wide = carleson_constant_over_tree(collection, exponent);
            ++report.trials;
            if (members != tree_wide)
                record_failure(report, "alpha " + std::to_string(a) + ", collection " +
                                           set_to_string_brief(collection));
        }
    }
    return report;
}

PropertyReport oracle_covered_measure_check(int depth, std::uint64_t trials,
                                            std::uint64_t seed) {
    PropertyReport report{"oracle_covered_measure"};
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, 0x7e09, t));
        const IntervalCollection collection = random_nonempty_collection(depth, rng);
        // Mark leaf cells one by one; entirely independent of max_collection.
        const std::uint32_t cells = std::uint32_t(1) << depth;
        std::uint32_t marked = 0;
        for (std::uint32_t j = 0; j < cells; ++j) {
            const DyadicInterval cell = DyadicInterval::from_index(cells + j);
            if (collection.covers(cell)) ++marked;
        }
        const Rational oracle = Rational(marked) * pow2(-depth);
        ++report.trials;
        if (oracle != covered_measure(collection))
            record_failure(report, "collection " + set_to_string_brief(collection));
    }
    return report;
}

PropertyReport cc_p1_check(int depth, std::uint64_t trials, std::uint64_t seed) {
    PropertyReport report{"cc_p1_equals_cc"};
    const CarlesonExponent by_alpha = CarlesonExponent::from_alpha(Rational(1));
    const CarlesonExponent by_p = CarlesonExponent::from_p(Rational(1));
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, 0x7e0a, t));
        const IntervalCollection collection = random_nonempty_collection(depth, rng);
        ++report.trials;
        if (carleson_constant(collection, by_alpha) != carleson_constant(collection, by_p))
            record_failure(report, "collection " + set_to_string_brief(collection));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

SuiteConfig SuiteConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::InvalidArgument, std::string("config is not valid JSON: ") + e.what());
    }
    SuiteConfig config;
    if (j.contains("depth")) config.depth = j["depth"].get<int>();
    if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) config.trials = j["trials"].get<std::uint64_t>();
    if (j.contains("checks")) {
        config.checks.clear();
        for (const auto& c : j["checks"]) config.checks.push_back(c.get<std::string>());
    }
    if (j.contains("budgets")) {
        const auto& b = j["budgets"];
        if (b.contains("max_subsets"))
            config.budgets.max_subsets = b["max_subsets"].get<std::uint64_t>();
        if (b.contains("max_antichains"))
            config.budgets.max_antichains = b["max_antichains"].get<std::uint64_t>();
        if (b.contains("samples"))
            config.budgets.sample_trials = b["samples"].get<std::uint64_t>();
        if (b.contains("workers")) config.budgets.workers = b["workers"].get<unsigned>();
    }
    return config;
}

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport suite;
    auto has = [&](const char* name) {
        return std::find(config.checks.begin(), config.checks.end(), name) !=
               config.checks.end();
    };
    const CarlesonExponent alphas[2] = {CarlesonExponent::from_alpha(Rational(1)),
                                        CarlesonExponent::from_alpha(Rational(2))};

    if (has("theorem2")) {
        for (int i = 0; i < 2; ++i) {
            const PermutationMap pi =
                gen_permutation({GeneratorKind::LevelPreservingRandom, config.depth,
                                 derive_seed(config.seed, 0x5001, i)});
            PropertyReport r = theorem2_check(pi, config.trials,
                                              derive_seed(config.seed, 0x5002, i),
                                              config.budgets);
            r.name = "theorem2." + std::to_string(i);
            suite.properties.push_back(std::move(r));
        }
    }
    if (has("necessity")) {
        for (int i = 0; i < 2; ++i) {
            const PermutationMap pi = gen_permutation({GeneratorKind::RandomBijection,
                                                       config.depth,
                                                       derive_seed(config.seed, 0x5003, i)});
            for (int a = 0; a < 2; ++a) {
                const NecessityFamily family = config.depth <= 3
                                                   ? NecessityFamily::ExhaustiveDepth3
                                                   : NecessityFamily::Sampled;
                PropertyReport r = necessity_check(pi, alphas[a], family, config.trials,
                                                   derive_seed(config.seed, 0x5004, i));
                r.name = "necessity." + std::to_string(i) + ".alpha" +
                         rational_to_string(alphas[a].alpha());
                suite.properties.push_back(std::move(r));
            }
        }
    }
    if (has("theorem34")) {
        const GeneratorSpec specs[3] = {
            {GeneratorKind::Identity, config.depth, 0},
            {GeneratorKind::SubtreeSwap, config.depth, derive_seed(config.seed, 0x5005)},
            {GeneratorKind::RandomBijection, config.depth, derive_seed(config.seed, 0x5006)},
        };
        for (int i = 0; i < 3; ++i) {
            const PermutationMap pi = gen_permutation(specs[i]);
            for (int a = 0; a < 2; ++a) {
                PropertyReport r =
                    theorem34_suite(pi, alphas[a], std::min<std::uint64_t>(config.trials, 10),
                                    derive_seed(config.seed, 0x5007, i), config.budgets);
                r.name = std::string("theorem34.") + generator_kind_name(specs[i].kind) +
                         ".alpha" + rational_to_string(alphas[a].alpha());
                suite.properties.push_back(std::move(r));
            }
        }
    }
    if (has("transpose")) {
        suite.properties.push_back(transpose_identity_check(
            config.depth, config.trials, derive_seed(config.seed, 0x5008)));
    }
    if (has("oracles")) {
        const std::uint64_t n = std::min<std::uint64_t>(config.trials, 50);
        if (config.depth <= 3)
            suite.properties.push_back(
                oracle_bmo_sup_check(config.depth, n, derive_seed(config.seed, 0x5009)));
        suite.properties.push_back(
            oracle_index_set_check(config.depth, n, derive_seed(config.seed, 0x500a)));
        suite.properties.push_back(oracle_covered_measure_check(
            config.depth, n, derive_seed(config.seed, 0x500b)));
    }
    if (has("cc_p1")) {
        suite.properties.push_back(
            cc_p1_check(config.depth, config.trials, derive_seed(config.seed, 0x500c)));
    }
    return suite;
}

std::string suite_report_to_json_text(const SuiteReport& report) {
    nlohmann::json j;
    j["all_pass"] = report.all_pass();
    nlohmann::json properties = nlohmann::json::array();
    for (const auto& p : report.properties) {
        nlohmann::json q;
        q["name"] = p.name;
        q["trials"] = p.trials;
        q["failures"] = p.failures;
        if (!p.witness.empty()) q["witness"] = p.witness;
        nlohmann::json stats = nlohmann::json::object();
        for (const auto& [key, value] : p.stats) stats[key] = value;
        q["stats"] = std::move(stats);
        properties.push_back(std::move(q));
    }
    j["properties"] = std::move(properties);
    return j.dump(2) + "\n";
}

}  // namespace haarperm
