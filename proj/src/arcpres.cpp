#include "arcrope/arcpres.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "arcrope/errors.hpp"

namespace arcrope {

ArcPresentation validate(std::vector<ArcTriple> raw) {
    if (raw.empty()) {
        throw ValidationError("empty", "presentation has no arcs");
    }
    const int alpha = static_cast<int>(raw.size());

    // Each arc sits on its own page.
    for (int i = 0; i < alpha; ++i) {
        for (int j = i + 1; j < alpha; ++j) {
            if (raw[i].theta == raw[j].theta) {
                throw ValidationError("duplicate_page",
                                      "arcs " + std::to_string(i + 1) + " and " +
                                          std::to_string(j + 1) + " share page angle");
            }
        }
    }

    for (int i = 0; i < alpha; ++i) {
        const ArcTriple& arc = raw[i];
        if (arc.x == arc.y) {
            throw ValidationError("self_loop",
                                  "arc " + std::to_string(i + 1) + " joins level " +
                                      std::to_string(arc.x) + " to itself");
        }
        if (arc.x < 1 || arc.x > alpha || arc.y < 1 || arc.y > alpha) {
            throw ValidationError("level_out_of_range",
                                  "arc " + std::to_string(i + 1) + " uses a level outside 1.." +
                                      std::to_string(alpha) +
                                      "; renumber sparse level sets to consecutive integers");
        }
    }

    // Every level is hit by exactly two arc endpoints.
    std::vector<int> multiplicity(alpha + 1, 0);
    for (const ArcTriple& arc : raw) {
        ++multiplicity[arc.x];
        ++multiplicity[arc.y];
    }
    for (int level = 1; level <= alpha; ++level) {
        if (multiplicity[level] != 2) {
            throw ValidationError(
                "bad_level_multiplicity",
                "level " + std::to_string(level) + " is used " +
                    std::to_string(multiplicity[level]) +
                    " times (want 2); levels must be exactly 1.." + std::to_string(alpha) +
                    ", renumber sparse level sets to consecutive integers");
        }
    }

    return ArcPresentation{std::move(raw)};
}

long long total_skip(const ArcPresentation& a) {
    long long sum = 0;
    for (const ArcTriple& arc : a.arcs) {
        sum += std::llabs(static_cast<long long>(arc.x) - arc.y);
    }
    return sum;
}

LinkStructure link_structure(const ArcPresentation& a) {
    const int alpha = a.alpha();

    // incidence[level] -> the (at most two) arcs with an endpoint there
    std::vector<std::vector<int>> incidence(alpha + 1);
    for (int i = 0; i < alpha; ++i) {
        incidence[a.arcs[i].x].push_back(i);
        incidence[a.arcs[i].y].push_back(i);
    }

    LinkStructure out;
    std::vector<bool> visited(alpha, false);
    for (int start = 0; start < alpha; ++start) {
        if (visited[start]) continue;
        std::vector<int> cycle;
        int arc = start;
        int enter_level = a.arcs[start].x;  // traverse the first arc x -> y
        while (!visited[arc]) {
            visited[arc] = true;
            cycle.push_back(arc);
            const int exit_level = (a.arcs[arc].x == enter_level) ? a.arcs[arc].y : a.arcs[arc].x;
            const auto& pair = incidence[exit_level];
            const int next = (pair[0] == arc) ? pair[1] : pair[0];
            enter_level = exit_level;
            arc = next;
        }
        out.cycles.push_back(std::move(cycle));
    }
    out.components = static_cast<int>(out.cycles.size());
    return out;
}

namespace {

std::pair<long long, long long> turn_fraction(int k, int n) {
    const long long g = std::gcd(static_cast<long long>(k), static_cast<long long>(n));
    return {k / g, n / g};
}

ArcPresentation presentation_from_level_cycle(const std::vector<int>& levels) {
    const int alpha = static_cast<int>(levels.size());
    std::vector<ArcTriple> arcs(alpha);
    for (int i = 0; i < alpha; ++i) {
        arcs[i].x = levels[i];
        arcs[i].y = levels[(i + 1) % alpha];
        arcs[i].theta = 2.0 * std::numbers::pi * i / alpha;
        arcs[i].theta_fraction = turn_fraction(i, alpha);
    }
    return validate(std::move(arcs));
}

long long cycle_skip(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    long long sum = 0;
    for (int i = 0; i < n; ++i) {
        sum += std::abs(levels[i] - levels[(i + 1) % n]);
    }
    return sum;
}

}  // namespace

ArcPresentation extremal(int alpha) {
    if (alpha < 2) {
        throw ValidationError("alpha_too_small", "extremal presentations need alpha >= 2");
    }
    // Interleave the descending high half with the descending low half:
    // even alpha = 2k:   a, a/2, a-1, a/2-1, ..., a/2+1, 1
    // odd  alpha = 2k+1: a, k,   a-1, k-1,   ..., 1,     k+1
    std::vector<int> levels;
    levels.reserve(alpha);
    const int k = alpha / 2;
    if (alpha % 2 == 0) {
        for (int i = 0; i < k; ++i) {
            levels.push_back(alpha - i);
            levels.push_back(k - i);
        }
    } else {
        for (int i = 0; i < k; ++i) {
            levels.push_back(alpha - i);
            levels.push_back(k - i);
        }
        levels.push_back(k + 1);
    }
    return presentation_from_level_cycle(levels);
}

long long max_skip_oracle(int alpha) {
    if (alpha < 2) {
        throw ValidationError("alpha_too_small", "oracle needs alpha >= 2");
    }
    if (alpha > 9) {
        throw ValidationError("alpha_too_large",
                              "exhaustive skip search is capped at alpha = 9");
    }
    // Fix the first level to quotient out cyclic rotations; (alpha-1)! remain.
    std::vector<int> rest(alpha - 1);
    std::iota(rest.begin(), rest.end(), 1);
    long long best = 0;
    std::vector<int> cycle(alpha);
    cycle[0] = alpha;
    do {
        std::copy(rest.begin(), rest.end(), cycle.begin() + 1);
        best = std::max(best, cycle_skip(cycle));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

ArcPresentation random_single_cycle(int alpha, std::mt19937_64& rng) {
    std::vector<int> levels(alpha);
    std::iota(levels.begin(), levels.end(), 1);
    std::shuffle(levels.begin(), levels.end(), rng);
    ArcPresentation a = presentation_from_level_cycle(levels);

    // Also shuffle which page angle each arc gets; cycle-ordered pages would
    // only ever put consecutive arcs on adjacent faces.
    std::vector<int> rank(alpha);
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    for (int i = 0; i < alpha; ++i) {
        a.arcs[i].theta = 2.0 * std::numbers::pi * rank[i] / alpha;
        a.arcs[i].theta_fraction = turn_fraction(rank[i], alpha);
    }
    return a;
}

}  // namespace arcrope
