#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sizefn {

// Reparametrization-invariant seminorms on finite value lists: sup is
// max |v|, range is max v - min v. Both are invariant under permutations of
// the list, which is what a homeomorphism acts by on a finite vertex set.
enum class SeminormId { sup, range };

SeminormId parse_seminorm(const std::string& name); // "sup" | "range"
std::string seminorm_name(SeminormId s);

// Rejects empty lists.
double evaluate(SeminormId s, const std::vector<double>& values);

struct AxiomReport {
    int trials = 0;
    bool nonnegative = true;
    bool homogeneous = true;        // |lambda| * S(v) == S(lambda v), within float slack
    bool triangle = true;           // S(u + v) <= S(u) + S(v)
    bool permutation_invariant = true;
    std::string counterexample;     // description of the first failure, if any

    bool all_pass() const {
        return nonnegative && homogeneous && triangle && permutation_invariant;
    }
};

// Randomized check of the four seminorm axioms on value lists of length
// 1..8 with components in [-5, 5]. Deterministic for a fixed seed.
AxiomReport check_axioms(SeminormId s, int trials, std::uint64_t seed);

} // namespace sizefn
