#pragma once

// {N,E} lattice paths attached to preference orders (+1 becomes a north
// step, -1 an east step), the drift statistic, and two bijections from
// paths of drift h onto paths with floor((n-h)/2) east steps: one by
// recoloring edges around the zenith, one by reparenthesizing.
//
// Height of a lattice point means y - x. Drift is the maximum height over
// the whole path, floored at zero. The zenith is the last point attaining
// the drift. An east step is a dip when no later point rises above the
// height of the step's endpoint; with that (endpoint, non-strict) reading
// every east step before the zenith is excluded automatically and the
// final step is a dip whenever it is east.

#include "napkin/exact.hpp"
#include "napkin/seating.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace napkin {

enum class Step : std::uint8_t { North, East };

class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    static LatticePath parse(std::string_view text) {
        std::vector<Step> steps;
        steps.reserve(text.size());
        for (size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == 'N' || c == 'n') {
                steps.push_back(Step::North);
            } else if (c == 'E' || c == 'e') {
                steps.push_back(Step::East);
            } else {
                throw std::invalid_argument("invalid path character '" + std::string(1, c) +
                                            "' at position " + std::to_string(i + 1));
            }
        }
        return LatticePath(std::move(steps));
    }

    static LatticePath of(const PreferenceOrder& prefs) {
        std::vector<Step> steps;
        steps.reserve(static_cast<size_t>(prefs.size()));
        for (Sign s : prefs.entries()) steps.push_back(s > 0 ? Step::North : Step::East);
        return LatticePath(std::move(steps));
    }

    int size() const { return static_cast<int>(steps_.size()); }

    Step step(int i) const { return steps_.at(static_cast<size_t>(i) - 1); }  // 1-based

    const std::vector<Step>& steps() const { return steps_; }

    int east_count() const {
        int count = 0;
        for (Step s : steps_) count += s == Step::East;
        return count;
    }

    /// Heights y_i - x_i at points 0..n.
    std::vector<int> heights() const {
        std::vector<int> h(static_cast<size_t>(size()) + 1, 0);
        for (int i = 1; i <= size(); ++i)
            h[static_cast<size_t>(i)] =
                h[static_cast<size_t>(i) - 1] + (step(i) == Step::North ? 1 : -1);
        return h;
    }

    /// Lattice point (x_i, y_i) after step i.
    std::pair<int, int> point(int i) const {
        if (i < 0 || i > size()) throw std::out_of_range("point index out of range");
        int x = 0, y = 0;
        for (int s = 1; s <= i; ++s) (step(s) == Step::East ? x : y) += 1;
        return {x, y};
    }

    std::string to_string() const {
        std::string out;
        out.reserve(steps_.size());
        for (Step s : steps_) out.push_back(s == Step::North ? 'N' : 'E');
        return out;
    }

    /// Parenthesization view: N renders as ')' and E as '('.
    std::string paren_string() const {
        std::string out;
        out.reserve(steps_.size());
        for (Step s : steps_) out.push_back(s == Step::North ? ')' : '(');
        return out;
    }

    bool operator==(const LatticePath& other) const = default;
    auto operator<=>(const LatticePath& other) const = default;

private:
    std::vector<Step> steps_;
};

inline int drift(const LatticePath& path) {
    int height = 0, best = 0;
    for (Step s : path.steps()) {
        height += s == Step::North ? 1 : -1;
        if (height > best) best = height;
    }
    return best;
}

inline int drift(const PreferenceOrder& prefs) { return drift(LatticePath::of(prefs)); }

/// max of the drifts of the path and the sign-flipped path.
inline int symmetric_drift(const PreferenceOrder& prefs) {
    int height = 0, high = 0, low = 0;
    for (Sign s : prefs.entries()) {
        height += s;
        if (height > high) high = height;
        if (height < low) low = height;
    }
    return std::max(high, -low);
}

enum class VertexColor : std::uint8_t { Black, White };
enum class EdgeColor : std::uint8_t { Black, White, Gray };

struct PathDecoration {
    int drift = 0;
    int zenith = 0;                         // point index of the last drift-attaining point
    std::vector<int> dips;                  // 1-based step indices, increasing
    std::vector<VertexColor> vertex_colors; // points 0..n
    std::vector<EdgeColor> edge_colors;     // index 0 holds step 1

    // Step counters by color; dips split by which endpoint is black.
    int black_north = 0;
    int black_east = 0;
    int white_north = 0;
    int white_east = 0;
    int dips_black_first = 0;  // black left endpoint, maps to N
    int dips_white_first = 0;  // white left endpoint, stays E
};

/// Zenith, dips, and the black/white/gray coloring used by the recoloring
/// bijection. Dip edges alternate black-to-white / white-to-black starting
/// at the zenith; vertices between consecutive dips inherit the adjacent
/// dip endpoints' color, as do trailing vertices after the last dip.
inline PathDecoration decorate(const LatticePath& path) {
    const int n = path.size();
    const std::vector<int> heights = path.heights();

    PathDecoration deco;
    deco.drift = 0;
    for (int h : heights) deco.drift = std::max(deco.drift, h);
    for (int i = 0; i <= n; ++i)
        if (heights[static_cast<size_t>(i)] == deco.drift) deco.zenith = i;

    // A step is a dip when it is east and its endpoint height is a running
    // maximum of the suffix.
    std::vector<bool> is_dip(static_cast<size_t>(n) + 1, false);
    int suffix_max = heights[static_cast<size_t>(n)];
    for (int i = n; i >= 1; --i) {
        suffix_max = std::max(suffix_max, heights[static_cast<size_t>(i)]);
        if (path.step(i) == Step::East && heights[static_cast<size_t>(i)] == suffix_max) {
            is_dip[static_cast<size_t>(i)] = true;
            deco.dips.push_back(i);
        }
    }
    std::reverse(deco.dips.begin(), deco.dips.end());

    deco.vertex_colors.assign(static_cast<size_t>(n) + 1, VertexColor::Black);
    for (int i = 0; i <= deco.zenith; ++i)
        deco.vertex_colors[static_cast<size_t>(i)] = VertexColor::Black;
    VertexColor after_dip = VertexColor::White;  // first dip runs black -> white
    size_t next_dip = 0;
    for (int i = deco.zenith + 1; i <= n; ++i) {
        if (next_dip < deco.dips.size() && i == deco.dips[next_dip]) {
            deco.vertex_colors[static_cast<size_t>(i)] = after_dip;
            after_dip = after_dip == VertexColor::White ? VertexColor::Black : VertexColor::White;
            ++next_dip;
        } else {
            // Between dips (or after the last one) the color is constant.
            deco.vertex_colors[static_cast<size_t>(i)] =
                deco.vertex_colors[static_cast<size_t>(i) - 1];
        }
    }

    deco.edge_colors.assign(static_cast<size_t>(n), EdgeColor::Black);
    for (int i = 1; i <= n; ++i) {
        const VertexColor from = deco.vertex_colors[static_cast<size_t>(i) - 1];
        const VertexColor to = deco.vertex_colors[static_cast<size_t>(i)];
        EdgeColor color;
        if (from != to) {
            color = EdgeColor::Gray;
            (from == VertexColor::Black ? deco.dips_black_first : deco.dips_white_first) += 1;
        } else if (from == VertexColor::Black) {
            color = EdgeColor::Black;
            (path.step(i) == Step::North ? deco.black_north : deco.black_east) += 1;
        } else {
            color = EdgeColor::White;
            (path.step(i) == Step::North ? deco.white_north : deco.white_east) += 1;
        }
        deco.edge_colors[static_cast<size_t>(i) - 1] = color;
    }
    return deco;
}

/// Recoloring bijection: each step keeps its type when its later endpoint
/// is black and swaps N and E when it is white. Maps drift-h paths of
/// length n onto paths with exactly floor((n-h)/2) east steps.
inline LatticePath color_bijection(const LatticePath& path) {
    const PathDecoration deco = decorate(path);
    std::vector<Step> image;
    image.reserve(static_cast<size_t>(path.size()));
    for (int i = 1; i <= path.size(); ++i) {
        const bool swap = deco.vertex_colors[static_cast<size_t>(i)] == VertexColor::White;
        const Step s = path.step(i);
        image.push_back(swap ? (s == Step::North ? Step::East : Step::North) : s);
    }
    return LatticePath(std::move(image));
}

/// Inverse of color_bijection given the drift of the original path: in the
/// image grid a vertex is black exactly when y <= x + drift, and the same
/// keep-or-swap rule applies.
inline LatticePath color_bijection_inverse(const LatticePath& image, int drift_value) {
    if (drift_value < 0) throw std::invalid_argument("drift must be nonnegative");
    std::vector<Step> steps;
    steps.reserve(static_cast<size_t>(image.size()));
    int height = 0;
    for (int i = 1; i <= image.size(); ++i) {
        const Step s = image.step(i);
        height += s == Step::North ? 1 : -1;
        const bool white = height > drift_value;
        steps.push_back(white ? (s == Step::North ? Step::East : Step::North) : s);
    }
    return LatticePath(std::move(steps));
}

struct ParenBijectionResult {
    LatticePath path;
    int conversions = 0;
};

/// Parenthesization bijection: with N read as ')' and E as '(', turn the
/// leftmost unpaired '(' into ')' until the path has floor((n-h)/2) east
/// steps, h the drift of the input.
inline ParenBijectionResult paren_bijection(const LatticePath& path) {
    const int n = path.size();
    const int h = drift(path);
    const int target_east = (n - h) / 2;

    std::vector<int> unpaired_left;  // step indices of unmatched '(' = E
    for (int i = 1; i <= n; ++i) {
        if (path.step(i) == Step::East) {
            unpaired_left.push_back(i);
        } else if (!unpaired_left.empty()) {
            unpaired_left.pop_back();  // ')' closes the nearest open '('
        }
    }

    const int conversions = path.east_count() - target_east;
    if (conversions < 0 || conversions > static_cast<int>(unpaired_left.size()))
        throw std::logic_error("paren bijection conversion count out of range");

    std::vector<Step> steps = path.steps();
    for (int i = 0; i < conversions; ++i)
        steps[static_cast<size_t>(unpaired_left[static_cast<size_t>(i)]) - 1] = Step::North;
    return {LatticePath(std::move(steps)), conversions};
}

/// Number of length-n paths of drift exactly h: C(n, floor((n-h)/2)).
inline BigInt count_paths_with_drift(int n, int h) {
    if (n < 0) throw std::invalid_argument("path length must be nonnegative");
    if (h < 0 || h > n) throw std::out_of_range("drift out of range 0..n");
    return binomial(n, (n - h) / 2);
}

/// All length-n paths with drift exactly h, in lexicographic step order
/// (N before E). Exhaustive over 2^n paths, so n is capped.
inline std::vector<LatticePath> enumerate_paths_with_drift(int n, int h, int max_n = 20) {
    if (n < 0) throw std::invalid_argument("path length must be nonnegative");
    if (h < 0 || h > n) throw std::out_of_range("drift out of range 0..n");
    if (n > max_n)
        throw std::length_error("path enumeration capped at n = " + std::to_string(max_n));
    std::vector<LatticePath> found;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        int height = 0, best = 0;
        std::vector<Step> steps(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const bool east = (mask >> i) & 1;  // bit set = E, so N sorts first
            steps[static_cast<size_t>(i)] = east ? Step::East : Step::North;
            height += east ? -1 : 1;
            if (height > best) best = height;
        }
        if (best == h) found.emplace_back(std::move(steps));
    }
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace napkin
