#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace arcrope {

/// One arc of an arc-presentation: a simple arc running from binding level x
/// to binding level y on the half-plane ("page") at angle theta around the
/// binding axis. Levels are 1-based; theta lies in [0, 2*pi).
///
/// theta_fraction, when present, records theta exactly as a reduced fraction
/// p/q of a full turn (theta = 2*pi*p/q). File round-trips preserve it.
struct ArcTriple {
    int x = 0;
    int y = 0;
    double theta = 0.0;
    std::optional<std::pair<long long, long long>> theta_fraction;
};

/// A validated arc-presentation: alpha arcs on alpha distinct pages, with
/// every level in 1..alpha used by exactly two arc endpoints.
struct ArcPresentation {
    std::vector<ArcTriple> arcs;

    int alpha() const { return static_cast<int>(arcs.size()); }
};

/// Partition of the arcs into closed cycles obtained by matching the two
/// endpoints at each level. One cycle per link component.
struct LinkStructure {
    int components = 0;
    std::vector<std::vector<int>> cycles;  // arc indices in traversal order
};

/// Checks all arc-presentation invariants and returns the validated value.
/// Throws ValidationError with code one of: "empty", "self_loop",
/// "level_out_of_range", "duplicate_page", "bad_level_multiplicity".
ArcPresentation validate(std::vector<ArcTriple> raw);

/// Total skip: sum of |x_i - y_i| over all arcs.
long long total_skip(const ArcPresentation& a);

LinkStructure link_structure(const ArcPresentation& a);

/// The zig-zag presentation alternating between the high and low halves of
/// the level range. Its total skip attains the sharp maximum: alpha^2/2 for
/// even alpha, (alpha^2-1)/2 for odd. Pages are assigned angles 2*pi*k/alpha.
ArcPresentation extremal(int alpha);

/// Exhaustive maximum of the total skip over all single-cycle presentations
/// on levels 1..alpha. Multi-cycle presentations are not enumerated: each of
/// their cycles obeys the bound on its own level set, so they never exceed
/// the single-cycle maximum. Throws "alpha_too_large" for alpha > 9.
long long max_skip_oracle(int alpha);

/// Uniform random single-cycle presentation: a random cyclic ordering of the
/// levels, pages at angles 2*pi*k/alpha in arc order.
ArcPresentation random_single_cycle(int alpha, std::mt19937_64& rng);

}  // namespace arcrope
