#include "haarperm/decompose.hpp"

#include "haarperm/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cassert>
#include <fstream>
#include <sstream>

namespace haarperm {

namespace {

/// lhs <= rhs, with relative slack when a float crept in (non-integer alpha).
bool le_with_tol(const Scalar& lhs, const Scalar& rhs, double rel_tol = 1e-12) {
    if (lhs.is_exact() && rhs.is_exact()) return lhs.rat() <= rhs.rat();
    const double l = lhs.to_double();
    const double r = rhs.to_double();
    return l <= r + rel_tol * std::max(std::abs(l), std::abs(r));
}

Scalar image_weight_sum(const IntervalCollection& image_max,
                        const CarlesonExponent& exponent) {
    Scalar sum(0);
    for (const auto& member : image_max) sum += exponent.measure_weight(member);
    return sum;
}

}  // namespace

SplitResult lemma_split(const IntervalCollection& index_set, const DyadicInterval& root,
                        const PermutationMap& map, const Scalar& stopping_parameter,
                        const CarlesonExponent& exponent) {
    if (index_set.empty()) raise(ErrorKind::EmptyInput, "split of an empty index set");
    for (const auto& member : index_set)
        if (!root.contains(member))
            raise(ErrorKind::RootViolation,
                  "'" + member.token() + "' is not contained in the split root '" +
                      root.token() + "'");

    const IntervalCollection image = map.image(index_set);
    const IntervalCollection image_max = max_collection(image);
    const Scalar weight = image_weight_sum(image_max, exponent);
    if (exponent.is_bmo()) {
        // Two routes to the same weight at alpha = 1; they must agree exactly.
        const Scalar covered = Scalar(covered_measure(image));
        if (weight != covered)
            raise(ErrorKind::InvalidArgument,
                  "internal: weight routes disagree at alpha = 1");
    }

    const Scalar root_weight = exponent.measure_weight(root);
    std::vector<DyadicInterval> stopped_members;
    std::vector<DyadicInterval> good_members;
    for (const auto& member : index_set) {
        const Scalar lhs = exponent.measure_weight(map.apply(member)) / weight;
        const Scalar rhs =
            stopping_parameter * exponent.measure_weight(member) / root_weight;
        if (lhs >= rhs)
            stopped_members.push_back(member);
        else
            good_members.push_back(member);
    }
    IntervalCollection stopped =
        IntervalCollection::from_sorted(index_set.depth_bound(), std::move(stopped_members));
    IntervalCollection good =
        IntervalCollection::from_sorted(index_set.depth_bound(), std::move(good_members));
    IntervalCollection stopped_max = max_collection(stopped);
    IntervalCollection pulled = map.preimage(image_max);
    IntervalCollection next = pulled.set_intersection(stopped).set_union(stopped_max);
    return SplitResult{root,   std::move(good),   std::move(stopped), std::move(stopped_max),
                       std::move(pulled), std::move(next),    weight};
}

std::vector<SplitBound> check_split_bounds(const SplitResult& split,
                                           const PermutationMap& map,
                                           const CoefficientSeries& series,
                                           const Scalar& stopping_parameter,
                                           const Scalar& distortion_bound,
                                           const CarlesonExponent& exponent) {
    std::vector<SplitBound> out;
    const Scalar norm = weighted_norm_sq(series, exponent);
    const Scalar root_weight = exponent.measure_weight(split.root);

    Scalar lhs_good(0);
    for (const auto& member : split.good) {
        const Scalar& c = series.at(member);
        if (!c.is_zero()) lhs_good += c * c * exponent.measure_weight(map.apply(member));
    }
    const Scalar rhs_good = split.weight * stopping_parameter * norm;
    out.push_back({"good_part_bound", lhs_good, rhs_good, le_with_tol(lhs_good, rhs_good)});

    Scalar lhs_stop(0);
    for (const auto& member : split.stopped_max)
        lhs_stop += exponent.measure_weight(member) / root_weight;
    const Scalar rhs_stop = distortion_bound / stopping_parameter;
    out.push_back({"stopped_max_bound", lhs_stop, rhs_stop, le_with_tol(lhs_stop, rhs_stop)});

    Scalar lhs_next(0);
    for (const auto& member : split.next_roots)
        lhs_next += exponent.measure_weight(member) / root_weight;
    const Scalar rhs_next =
        distortion_bound * (distortion_bound + Scalar(1)) / stopping_parameter;
    out.push_back({"next_roots_bound", lhs_next, rhs_next, le_with_tol(lhs_next, rhs_next)});
    return out;
}

std::map<DyadicInterval, IntervalCollection> stopping_decomposition(
    const IntervalCollection& stopped, const IntervalCollection& next_roots) {
    std::map<DyadicInterval, IntervalCollection> out;
    if (stopped.empty()) return out;
    const std::vector<IntervalCollection> layers = generations(next_roots);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const IntervalCollection* deeper = k + 1 < layers.size() ? &layers[k + 1] : nullptr;
        for (const auto& piece_root : layers[k]) {
            std::vector<DyadicInterval> members;
            for (const auto& candidate : stopped) {
                if (!piece_root.contains(candidate)) continue;
                if (deeper != nullptr && deeper->covers(candidate)) continue;
                members.push_back(candidate);
            }
            out.emplace(piece_root, IntervalCollection::from_sorted(stopped.depth_bound(),
                                                                    std::move(members)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// run_decomposition
// ---------------------------------------------------------------------------

namespace {

/// The image-rooted expression g(J0) = (1/|pi(J0)|^alpha)
/// sum_{J : pi(J) subseteq pi(J0)} x_J^2 |pi(J)|^alpha, maximized over J0 in
/// lexicographic order. At the maximum this equals ||T_pi x||^2 exactly.
DyadicInterval choose_base_interval(const PermutationMap& map,
                                    const CoefficientSeries& series,
                                    const CarlesonExponent& exponent) {
    const CoefficientSeries permuted = permute_coefficients(series, map);
    const std::uint32_t count = permuted.interval_count();
    std::vector<Scalar> sums(std::size_t(count) + 1, Scalar(0));
    for (std::uint32_t i = count; i >= 1; --i) {
        const Scalar& c = permuted.at_index(i);
        Scalar acc =
            c.is_zero() ? Scalar(0)
                        : c * c * exponent.level_weight(std::bit_width(i) - 1);
        if (2 * i + 1 <= count) acc += sums[2 * i] + sums[2 * i + 1];
        sums[i] = std::move(acc);
    }
    Scalar best(-1);
    DyadicInterval base = DyadicInterval::root();
    for (const auto& candidate : TruncatedTree(series.depth()).intervals()) {
        const DyadicInterval image = map.apply(candidate);
        const Scalar value = sums[image.index()] / exponent.measure_weight(image);
        if (value > best) {
            best = value;
            base = candidate;
        }
    }
    return base;
}

}  // namespace

DecompositionCertificate run_decomposition(const PermutationMap& map,
                                           const CoefficientSeries& series,
                                           const CarlesonExponent& exponent,
                                           const RunOptions& options) {
    if (series.depth() != map.depth())
        raise(ErrorKind::DepthMismatch, "series and permutation depths differ");
    if (series.is_zero())
        raise(ErrorKind::ZeroSeries, "cannot decompose the zero series");

    Scalar m_bound;
    if (options.distortion_bound.has_value()) {
        m_bound = *options.distortion_bound;
        if (m_bound < Scalar(1))
            raise(ErrorKind::InvalidArgument, "a distortion bound below 1 is impossible");
    } else {
        SearchOptions search;
        search.budgets = options.budgets;
        m_bound = distortion(map, exponent, search).value;
    }
    const Scalar k_param = options.stopping_parameter.has_value()
                               ? *options.stopping_parameter
                               : Scalar(4) * m_bound * m_bound + Scalar(1);
    if (!(k_param > m_bound * (m_bound + Scalar(1))))
        raise(ErrorKind::NonContraction,
              "K = " + k_param.str() + " <= M(M+1) = " +
                  (m_bound * (m_bound + Scalar(1))).str() +
                  "; the construction would not shrink. Pick K > M(M+1), e.g. 4M^2+1.");

    DecompositionCertificate cert{map.depth(),
                                  exponent,
                                  k_param,
                                  m_bound,
                                  map,
                                  series,
                                  DyadicInterval::root(),
                                  IntervalCollection(map.depth()),
                                  {},
                                  IntervalCollection(map.depth()),
                                  IntervalCollection(map.depth())};

    cert.j0 = choose_base_interval(map, series, exponent);
    const DyadicInterval image_root = map.apply(cert.j0);

    // B: everything mapped under pi(J0), restricted to the support of x.
    std::vector<DyadicInterval> base_members;
    for (std::uint32_t i = 1; i <= map.interval_count(); ++i) {
        const DyadicInterval candidate = DyadicInterval::from_index(i);
        if (!series.at_index(i).is_zero() && image_root.contains(map.apply(candidate)))
            base_members.push_back(candidate);
    }
    cert.base = IntervalCollection(map.depth(), std::move(base_members));

    // Level 0: the maximal members of B and their rooted pieces.
    std::vector<std::pair<DyadicInterval, IntervalCollection>> pending;
    for (const auto& root : max_collection(cert.base))
        pending.emplace_back(root, rooted_sub(cert.base, root));

    const int level_cap = int(map.interval_count()) + 1;
    int level_index = 0;
    while (!pending.empty()) {
        if (++level_index > level_cap)
            raise(ErrorKind::InvalidArgument, "internal: level iteration failed to terminate");
        DecompositionCertificate::Level level;
        std::vector<std::pair<DyadicInterval, IntervalCollection>> next_pending;
        for (auto& [root, piece] : pending) {
            SplitResult split = lemma_split(piece, root, map, k_param, exponent);
            for (const auto& next_root : split.next_roots)
                if (next_root == root)
                    raise(ErrorKind::InvalidArgument,
                          "internal: strict descent violated at '" + root.token() + "'");
            auto pieces = stopping_decomposition(split.stopped, split.next_roots);
            for (auto& [next_root, next_piece] : pieces)
                if (!next_piece.empty()) next_pending.emplace_back(next_root, next_piece);
            cert.all_roots = cert.all_roots.set_union(
                IntervalCollection(map.depth(), std::vector<DyadicInterval>{root}));
            cert.all_pulled = cert.all_pulled.set_union(split.pulled_back_max);
            level.splits.push_back(std::move(split));
        }
        std::sort(next_pending.begin(), next_pending.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        cert.levels.push_back(std::move(level));
        pending = std::move(next_pending);
    }
    return cert;
}

// ---------------------------------------------------------------------------
// verify_certificate
// ---------------------------------------------------------------------------

const VerificationCheck* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

struct ReportBuilder {
    VerificationReport report;

    void add(std::string name, std::string detail, std::string lhs, std::string rhs,
             bool pass, bool informational = false) {
        if (!pass && !informational) report.all_pass = false;
        report.checks.push_back({std::move(name), std::move(detail), std::move(lhs),
                                 std::move(rhs), pass, informational});
    }
    void add_scalar(std::string name, std::string detail, const Scalar& lhs,
                    const Scalar& rhs, bool pass, bool informational = false) {
        add(std::move(name), std::move(detail), lhs.str(), rhs.str(), pass, informational);
    }
    void add_flag(std::string name, std::string detail, bool pass,
                  bool informational = false) {
        add(std::move(name), std::move(detail), pass ? "ok" : "violated", "ok", pass,
            informational);
    }
};

std::string set_to_string(const IntervalCollection& collection) {
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

VerificationReport verify_certificate(const DecompositionCertificate& cert) {
    ReportBuilder rb;
    const CarlesonExponent& alpha = cert.alpha;
    const PermutationMap& map = cert.map;
    const CoefficientSeries& series = cert.series;
    const Scalar& k_param = cert.stopping_parameter;
    const Scalar& m_bound = cert.distortion_bound;

    // Parameters. The decay ratio q = M(M+1)/K must stay below 1 for the
    // construction to shrink and at or below 1/2 for the summed layers to
    // stay within the 2-Carleson claim.
    const Scalar q = m_bound * (m_bound + Scalar(1)) / k_param;
    rb.add_scalar("parameters_contraction", "M(M+1)/K < 1", q, Scalar(1), q < Scalar(1));
    rb.add_scalar("parameters_decay_ratio", "M(M+1)/K <= 1/2", q, Scalar(1) / Scalar(2),
                  le_with_tol(q, Scalar(1) / Scalar(2)));

    // Base choice: J0 must be the exact argmax, so that the rooted image
    // expression at J0 equals ||T_pi x||^2 on the truncation.
    const CoefficientSeries permuted = permute_coefficients(series, map);
    const Scalar permuted_norm = weighted_norm_sq(permuted, alpha);
    {
        const DyadicInterval expected = choose_base_interval(map, series, alpha);
        rb.add("j0_argmax", "stored J0 is the lexicographically first argmax",
               cert.j0.token(), expected.token(), cert.j0 == expected);
    }
    {
        const DyadicInterval image_root = map.apply(cert.j0);
        std::vector<DyadicInterval> expected_members;
        for (std::uint32_t i = 1; i <= map.interval_count(); ++i) {
            const DyadicInterval candidate = DyadicInterval::from_index(i);
            if (!series.at_index(i).is_zero() &&
                image_root.contains(map.apply(candidate)))
                expected_members.push_back(candidate);
        }
        const IntervalCollection expected(map.depth(), std::move(expected_members));
        rb.add("base_set", "B is the support below pi(J0), pulled back",
               set_to_string(cert.base), set_to_string(expected), cert.base == expected);
    }

    // Per-split structure and bounds, re-derived from G and S alone.
    IntervalCollection good_union(map.depth());
    bool goods_disjoint = true;
    IntervalCollection image_max_union(map.depth());
    std::vector<IntervalCollection> level_roots;
    for (std::size_t l = 0; l < cert.levels.size(); ++l) {
        std::vector<DyadicInterval> roots_here;
        for (const auto& split : cert.levels[l].splits) {
            const std::string where =
                "level " + std::to_string(l) + " root '" + split.root.token() + "'";
            roots_here.push_back(split.root);

            const IntervalCollection piece = split.good.set_union(split.stopped);
            bool structure = split.good.set_intersection(split.stopped).empty();
            for (const auto& member : piece)
                if (!split.root.contains(member)) structure = false;

            // Re-run the membership rule on D = G u S.
            bool membership = true;
            std::optional<SplitResult> expected;
            try {
                expected.emplace(lemma_split(piece, split.root, map, k_param, alpha));
            } catch (const Error&) {
                membership = false;
            }
            if (expected.has_value()) {
                membership = expected->good == split.good &&
                             expected->stopped == split.stopped &&
                             expected->stopped_max == split.stopped_max &&
                             expected->pulled_back_max == split.pulled_back_max &&
                             expected->next_roots == split.next_roots &&
                             expected->weight == split.weight;
            }
            rb.add_flag("split_structure", where + ": G,S partition D inside the root",
                        structure);
            rb.add_flag("split_rule", where + ": stored split matches the membership rule",
                        membership);

            for (const auto& bound :
                 check_split_bounds(split, map, series, k_param, m_bound, alpha))
                rb.add_scalar(bound.name, where, bound.lhs, bound.rhs, bound.pass);

            if (!good_union.set_intersection(split.good).empty()) goods_disjoint = false;
            good_union = good_union.set_union(split.good);
            image_max_union =
                image_max_union.set_union(max_collection(map.image(piece)));
        }
        level_roots.emplace_back(IntervalCollection(map.depth(), roots_here));
    }

    // Geometric decay of the root layers under every earlier root.
    for (std::size_t k0 = 0; k0 < level_roots.size(); ++k0) {
        for (const auto& root : level_roots[k0]) {
            Scalar ratio_power(1);
            for (std::size_t k = k0; k < level_roots.size(); ++k) {
                Scalar lhs(0);
                for (const auto& deeper : level_roots[k])
                    if (root.contains(deeper)) lhs += alpha.measure_weight(deeper);
                const Scalar rhs = ratio_power * alpha.measure_weight(root);
                rb.add_scalar("layer_decay",
                              "root '" + root.token() + "' layer " + std::to_string(k) +
                                  " (from " + std::to_string(k0) + ")",
                              lhs, rhs, le_with_tol(lhs, rhs));
                ratio_power *= q;
            }
        }
    }

    // The two Carleson claims.
    if (!cert.all_roots.empty()) {
        const Scalar cc_roots = carleson_constant(cert.all_roots, alpha);
        rb.add_scalar("roots_carleson", "CC(O) <= 2", cc_roots, Scalar(2),
                      le_with_tol(cc_roots, Scalar(2)));
    }
    if (!cert.all_pulled.empty()) {
        const Scalar cc_pulled = carleson_constant(cert.all_pulled, alpha);
        const Scalar bound = Scalar(3) * m_bound;
        rb.add_scalar("pulled_carleson", "CC(N) <= 3M", cc_pulled, bound,
                      le_with_tol(cc_pulled, bound));
    }

    // Image identity: pi(N) is exactly the union of the image maxima.
    {
        const IntervalCollection image_pulled = map.image(cert.all_pulled);
        rb.add("image_identity", "pi(N) = union of max pi(D(I))",
               set_to_string(image_pulled), set_to_string(image_max_union),
               image_pulled == image_max_union);
    }

    // The good parts partition B.
    rb.add("good_partition", "good parts tile B",
           set_to_string(good_union) + (goods_disjoint ? "" : " (overlapping)"),
           set_to_string(cert.base), goods_disjoint && good_union == cert.base);

    // Roots and pulled collections stored match the per-level records.
    {
        IntervalCollection roots_union(map.depth());
        for (const auto& layer : level_roots) roots_union = roots_union.set_union(layer);
        rb.add("roots_account", "O equals the processed roots", set_to_string(cert.all_roots),
               set_to_string(roots_union), cert.all_roots == roots_union);
        IntervalCollection pulled_union(map.depth());
        for (const auto& level : cert.levels)
            for (const auto& split : level.splits)
                pulled_union = pulled_union.set_union(split.pulled_back_max);
        rb.add("pulled_account", "N equals the union of the pulled maxima",
               set_to_string(cert.all_pulled), set_to_string(pulled_union),
               cert.all_pulled == pulled_union);
    }

    // Strict descent.
    {
        bool descent = true;
        for (const auto& level : cert.levels)
            for (const auto& split : level.splits)
                for (const auto& next_root : split.next_roots)
                    if (!(split.root.contains(next_root) && next_root != split.root))
                        descent = false;
        rb.add_flag("strict_descent", "every next root lies strictly below its split root",
                    descent);
    }

    // Assembled norm bound.
    if (!cert.all_pulled.empty()) {
        const Scalar norm = weighted_norm_sq(series, alpha);
        const Scalar cc_pulled = carleson_constant(cert.all_pulled, alpha);
        const Scalar rhs_chain = k_param * m_bound * cc_pulled * norm;
        rb.add_scalar("assembled_bound", "||T x||^2 <= K M CC(N) ||x||^2", permuted_norm,
                      rhs_chain, le_with_tol(permuted_norm, rhs_chain));
        const Scalar rhs_coarse = Scalar(3) * m_bound * m_bound * k_param * norm;
        rb.add_scalar("assembled_bound_coarse", "||T x||^2 <= 3 M^2 K ||x||^2",
                      permuted_norm, rhs_coarse, le_with_tol(permuted_norm, rhs_coarse));
    }

    // Informational: whether any interval was pulled back by two different
    // splits. The set-level claims above do not depend on it.
    {
        bool unique = true;
        std::vector<DyadicInterval> seen;
        for (const auto& level : cert.levels)
            for (const auto& split : level.splits)
                for (const auto& member : split.pulled_back_max) {
                    if (std::find(seen.begin(), seen.end(), member) != seen.end())
                        unique = false;
                    seen.push_back(member);
                }
        rb.add_flag("pulled_uniqueness",
                    "no interval pulled back by two different splits", unique,
                    /*informational=*/true);
    }

    return rb.report;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

nlohmann::json scalar_json(const Scalar& s) {
    if (s.is_exact()) return rational_to_string(s.rat());
    return s.to_double();
}

Scalar scalar_from(const nlohmann::json& v, const char* what) {
    if (v.is_string()) return Scalar(rational_from_string(v.get<std::string>()));
    if (v.is_number_integer()) return Scalar(Rational(v.get<long>()));
    if (v.is_number_float()) return Scalar::from_double(v.get<double>());
    raise(ErrorKind::InvalidArgument, std::string(what) + ": expected a number or 'num/den'");
}

nlohmann::json collection_json(const IntervalCollection& collection) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : collection) arr.push_back(m.token());
    return arr;
}

IntervalCollection collection_from(const nlohmann::json& v, int depth, const char* what) {
    if (!v.is_array())
        raise(ErrorKind::InvalidArgument, std::string(what) + ": expected an address array");
    std::vector<DyadicInterval> members;
    for (const auto& item : v)
        members.push_back(DyadicInterval::from_address(item.get<std::string>()));
    return IntervalCollection(depth, std::move(members));
}

nlohmann::json check_json(const VerificationCheck& check) {
    nlohmann::json j;
    j["name"] = check.name;
    j["bound"] = check.detail;
    j["lhs"] = check.lhs;
    j["rhs"] = check.rhs;
    j["pass"] = check.pass;
    if (check.informational) j["informational"] = true;
    return j;
}

}  // namespace

std::string report_to_json_text(const VerificationReport& report) {
    nlohmann::json j;
    j["all_pass"] = report.all_pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& check : report.checks) checks.push_back(check_json(check));
    j["checks"] = std::move(checks);
    return j.dump(2) + "\n";
}

std::string certificate_to_json_text(const DecompositionCertificate& cert,
                                     const VerificationReport* report) {
    nlohmann::json j;
    j["depth"] = cert.depth;
    j["alpha"] = rational_to_string(cert.alpha.alpha());
    j["p"] = rational_to_string(cert.alpha.p());
    j["K"] = scalar_json(cert.stopping_parameter);
    j["M"] = scalar_json(cert.distortion_bound);
    j["j0"] = cert.j0.token();
    j["base"] = collection_json(cert.base);
    j["permutation"] = nlohmann::json::parse(permutation_to_json_text(cert.map));
    j["series"] = nlohmann::json::parse(series_to_json_text(cert.series));
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& level : cert.levels) {
        nlohmann::json splits = nlohmann::json::array();
        for (const auto& split : level.splits) {
            nlohmann::json s;
            s["root"] = split.root.token();
            s["G"] = collection_json(split.good);
            s["S"] = collection_json(split.stopped);
            s["maxS"] = collection_json(split.stopped_max);
            s["N"] = collection_json(split.pulled_back_max);
            s["O"] = collection_json(split.next_roots);
            s["W"] = scalar_json(split.weight);
            splits.push_back(std::move(s));
        }
        levels.push_back(std::move(splits));
    }
    j["levels"] = std::move(levels);
    j["O"] = collection_json(cert.all_roots);
    j["N"] = collection_json(cert.all_pulled);
    if (report != nullptr) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& check : report->checks) checks.push_back(check_json(check));
        j["report"] = {{"all_pass", report->all_pass}, {"checks", std::move(checks)}};
    }
    return j.dump(2) + "\n";
}

DecompositionCertificate certificate_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::InvalidArgument, std::string("not valid JSON: ") + e.what());
    }
    for (const char* key : {"depth", "alpha", "K", "M", "j0", "base", "permutation",
                            "series", "levels", "O", "N"})
        if (!j.contains(key))
            raise(ErrorKind::InvalidArgument,
                  std::string("certificate is missing '") + key + "'");
    const int depth = j["depth"].get<int>();
    const CarlesonExponent alpha =
        CarlesonExponent::from_alpha(rational_from_string(j["alpha"].get<std::string>()));
    PermutationMap map = permutation_from_json_text(j["permutation"].dump());
    CoefficientSeries series = series_from_json_text(j["series"].dump());
    if (map.depth() != depth || series.depth() != depth)
        raise(ErrorKind::InvalidArgument, "certificate depth fields disagree");

    DecompositionCertificate cert{depth,
                                  alpha,
                                  scalar_from(j["K"], "K"),
                                  scalar_from(j["M"], "M"),
                                  std::move(map),
                                  std::move(series),
                                  DyadicInterval::from_address(j["j0"].get<std::string>()),
                                  collection_from(j["base"], depth, "base"),
                                  {},
                                  collection_from(j["O"], depth, "O"),
                                  collection_from(j["N"], depth, "N")};
    for (const auto& level_json : j["levels"]) {
        DecompositionCertificate::Level level;
        for (const auto& s : level_json) {
            SplitResult split{
                DyadicInterval::from_address(s.at("root").get<std::string>()),
                collection_from(s.at("G"), depth, "G"),
                collection_from(s.at("S"), depth, "S"),
                collection_from(s.at("maxS"), depth, "maxS"),
                collection_from(s.at("N"), depth, "N"),
                collection_from(s.at("O"), depth, "O"),
                scalar_from(s.at("W"), "W")};
            level.splits.push_back(std::move(split));
        }
        cert.levels.push_back(std::move(level));
    }
    return cert;
}

void save_certificate(const DecompositionCertificate& cert, const VerificationReport& report,
                      const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    out << certificate_to_json_text(cert, &report);
}

DecompositionCertificate load_certificate(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return certificate_from_json_text(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

}  // namespace haarperm
