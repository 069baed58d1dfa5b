#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <random>
#include <vector>

namespace liar {

using BigInt = boost::multiprecision::cpp_int;

/// Default upper bound on m for brute-force enumeration ((m-1)! * 2^(m-1) grows fast).
inline constexpr int kEnumerationBound = 8;

/// One m-sentence Liar configuration: sentence i speaks about referent[i-1]
/// and either affirms ("... is true") or negates ("... is false") it.
/// Sentence ids are 1-based everywhere.
struct Configuration {
    int m = 0;
    std::vector<int> referent;
    std::vector<bool> negating;

    int referent_of(int sentence) const { return referent.at(sentence - 1); }
    bool is_negating(int sentence) const { return negating.at(sentence - 1); }

    bool operator==(const Configuration&) const = default;
};

/// Returns `config` unchanged when the referent map is a single m-cycle
/// (identity allowed only for m == 1). Throws Error{OutOfRange | NotSingleCycle}.
Configuration validate(Configuration config);

/// Odd number of negating claims.
bool is_paradoxical(const Configuration& config);

/// Exact (m-1)! * sum_{k odd} C(m, k).
BigInt count_paradoxical(int m);

/// Visits every validated paradoxical configuration of size m exactly once.
/// Throws Error{BoundExceeded} when m > bound, Error{OutOfRange} when m < 1.
void for_each_paradoxical(int m, const std::function<void(const Configuration&)>& visit,
                          int bound = kEnumerationBound);

std::vector<Configuration> enumerate_paradoxical(int m, int bound = kEnumerationBound);

/// Uniform random single m-cycle with a uniform odd-size negation set.
Configuration random_paradoxical(int m, std::mt19937_64& rng);

// Presets.
Configuration one_liar();
/// Eight-sentence configuration 1->3->8->2->7->4->6->5->1 with negations on {1,2,5,6,7}.
/// Reconstructed from its reasoning sequence {1T,3F,8F,2F,7T,4F,6F,5T}.
Configuration eight_liar();
/// Chain 1->2->...->m->1 with only sentence m negating.
Configuration chain_liar(int m);

} // namespace liar
