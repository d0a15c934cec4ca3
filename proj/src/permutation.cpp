#include "haarperm/permutation.hpp"

#include "haarperm/errors.hpp"

#include <json.hpp>

#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace haarperm {

namespace {
constexpr int kMaxDepth = 24;  // 2^25 - 1 intervals; far beyond any budget
}

PermutationMap::PermutationMap(int depth, std::vector<std::uint32_t> forward)
    : depth_(depth), forward_(std::move(forward)) {
    if (depth < 0 || depth > kMaxDepth)
        raise(ErrorKind::InvalidArgument, "permutation depth out of range");
    const std::uint32_t count = interval_count();
    if (forward_.size() != std::size_t(count) + 1)
        raise(ErrorKind::InvalidArgument, "permutation table has the wrong size");
    inverse_.assign(std::size_t(count) + 1, 0);
    for (std::uint32_t i = 1; i <= count; ++i) {
        const std::uint32_t img = forward_[i];
        if (img < 1 || img > count)
            raise(ErrorKind::InvalidArgument,
                  "permutation maps '" + DyadicInterval::from_index(i).token() +
                      "' outside the depth-" + std::to_string(depth) + " tree");
        if (inverse_[img] != 0)
            raise(ErrorKind::InvalidArgument,
                  "permutation is not injective: '" +
                      DyadicInterval::from_index(img).token() + "' hit twice");
        inverse_[img] = i;
    }
}

PermutationMap PermutationMap::identity(int depth) {
    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    std::vector<std::uint32_t> fwd(std::size_t(count) + 1);
    std::iota(fwd.begin(), fwd.end(), 0u);
    return PermutationMap(depth, std::move(fwd));
}

DyadicInterval PermutationMap::apply(const DyadicInterval& interval) const {
    if (interval.level() > depth_)
        raise(ErrorKind::DepthMismatch, "interval deeper than the permutation");
    return DyadicInterval::from_index(forward_[interval.index()]);
}

DyadicInterval PermutationMap::apply_inverse(const DyadicInterval& interval) const {
    if (interval.level() > depth_)
        raise(ErrorKind::DepthMismatch, "interval deeper than the permutation");
    return DyadicInterval::from_index(inverse_[interval.index()]);
}

IntervalCollection PermutationMap::image(const IntervalCollection& collection) const {
    if (collection.depth_bound() != depth_)
        raise(ErrorKind::DepthMismatch, "collection depth bound != permutation depth");
    std::vector<DyadicInterval> out;
    out.reserve(collection.size());
    for (const auto& m : collection) out.push_back(apply(m));
    return IntervalCollection(depth_, std::move(out));
}

IntervalCollection PermutationMap::preimage(const IntervalCollection& collection) const {
    if (collection.depth_bound() != depth_)
        raise(ErrorKind::DepthMismatch, "collection depth bound != permutation depth");
    std::vector<DyadicInterval> out;
    out.reserve(collection.size());
    for (const auto& m : collection) out.push_back(apply_inverse(m));
    return IntervalCollection(depth_, std::move(out));
}

PermutationMap PermutationMap::inverse() const {
    std::vector<std::uint32_t> fwd = inverse_;
    return PermutationMap(depth_, std::move(fwd));
}

PermutationMap PermutationMap::compose(const PermutationMap& other) const {
    if (other.depth_ != depth_)
        raise(ErrorKind::DepthMismatch, "cannot compose permutations of different depths");
    std::vector<std::uint32_t> fwd(forward_.size());
    for (std::uint32_t i = 1; i <= interval_count(); ++i)
        fwd[i] = forward_[other.forward_[i]];
    return PermutationMap(depth_, std::move(fwd));
}

bool PermutationMap::is_identity() const {
    for (std::uint32_t i = 1; i <= interval_count(); ++i)
        if (forward_[i] != i) return false;
    return true;
}

bool is_level_preserving(const PermutationMap& map) {
    for (std::uint32_t i = 1; i <= map.interval_count(); ++i) {
        if (std::bit_width(map.apply_index(i)) != std::bit_width(i)) return false;
    }
    return true;
}

namespace {

nlohmann::json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::IoError, "cannot open '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::InvalidArgument,
              path.string() + ": not valid JSON: " + e.what());
    }
    return j;
}

}  // namespace

PermutationMap permutation_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorKind::InvalidArgument, std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("depth") || !j.contains("map"))
        raise(ErrorKind::InvalidArgument, "permutation file needs 'depth' and 'map'");
    if (!j["depth"].is_number_integer())
        raise(ErrorKind::InvalidArgument, "'depth' must be an integer");
    const int depth = j["depth"].get<int>();
    if (depth < 0 || depth > kMaxDepth)
        raise(ErrorKind::InvalidArgument, "'depth' out of range");
    const auto& map = j["map"];
    if (!map.is_object()) raise(ErrorKind::InvalidArgument, "'map' must be an object");

    const std::uint32_t count = (std::uint32_t(1) << (depth + 1)) - 1;
    std::vector<std::uint32_t> fwd(std::size_t(count) + 1, 0);
    std::size_t listed = 0;
    for (const auto& [key, value] : map.items()) {
        const DyadicInterval src = DyadicInterval::from_address(key);
        if (src.level() > depth)
            raise(ErrorKind::InvalidArgument,
                  "map key '" + key + "' deeper than the declared depth");
        if (!value.is_string())
            raise(ErrorKind::InvalidArgument, "map value for '" + key + "' must be a string");
        const DyadicInterval dst = DyadicInterval::from_address(value.get<std::string>());
        if (dst.level() > depth)
            raise(ErrorKind::InvalidArgument,
                  "map value for '" + key + "' deeper than the declared depth");
        if (fwd[src.index()] != 0)
            raise(ErrorKind::InvalidArgument, "map lists '" + key + "' twice");
        fwd[src.index()] = dst.index();
        ++listed;
    }
    if (listed != count)
        raise(ErrorKind::InvalidArgument,
              "map must list every interval of level <= " + std::to_string(depth) +
                  " exactly once (" + std::to_string(listed) + " of " +
                  std::to_string(count) + " present)");
    return PermutationMap(depth, std::move(fwd));
}

PermutationMap load_permutation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorKind::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return permutation_from_json_text(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path.string() + ": " + e.what());
    }
}

std::string permutation_to_json_text(const PermutationMap& map) {
    nlohmann::json entries = nlohmann::json::object();
    const TruncatedTree tree(map.depth());
    for (const auto& interval : tree.intervals())
        entries[interval.token()] = map.apply(interval).token();
    nlohmann::json j;
    j["depth"] = map.depth();
    j["map"] = std::move(entries);
    return j.dump(2) + "\n";
}

void save_permutation(const PermutationMap& map, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    out << permutation_to_json_text(map);
}

}  // namespace haarperm
