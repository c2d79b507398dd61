#pragma once

#include "sizefn/matching.hpp"
#include "sizefn/persistence.hpp"
#include "sizefn/reparam.hpp"
#include "sizefn/size_pair.hpp"

#include <string>

namespace sizefn {

enum class BoundKind { natural_lower, lambda_lower };

// Certified lower bound for a pseudodistance between two pairs, together
// with the diagrams and the optimal matching that realize it. The
// pseudodistances themselves are infima over all homeomorphisms and are
// never computed exactly; lower bounds here pair with the upper estimates
// of estimate_upper.
struct BoundReport {
    BoundKind kind = BoundKind::natural_lower;
    ExtendedReal value;
    SizeFunctionDiagram left, right;
    MatchingResult matching;
    // The bound presumes the two spaces are homeomorphic; flagged false when
    // component counts differ and the comparison is void.
    bool comparable = true;
    std::string provenance;
};

// Matching distance of the two size function diagrams: a lower bound for
// the natural pseudodistance.
BoundReport natural_lower_bound(const DiscreteSizePair& a, const DiscreteSizePair& b);

// Matching distance of the diagrams of the product pairs (values
// phi(p)-phi(q)): a lower bound for the range-seminorm pseudodistance.
BoundReport lambda_lower_bound(const DiscreteSizePair& a, const DiscreteSizePair& b,
                               Connectivity connectivity = Connectivity::strong);

struct RestrictionIdentityReport {
    double aligned_pair_max = 0.0; // max |(a_i - b_j) - (a_i' - b_j')| over step pairs
    double range_of_diffs = 0.0;   // range seminorm of the aligned differences
    bool equal = false;            // exact equality; holds algebraically
};

// For an alignment h between interval pairs, the product-space cost of the
// pair map (h,h) equals the range of the aligned differences: the max over
// step pairs of |(a_i - b_j) - (a_i' - b_j')| is exactly max diff - min diff.
RestrictionIdentityReport restriction_identity_check(const IntervalSamples& a,
                                                     const IntervalSamples& b,
                                                     const MonotonePath& h);

} // namespace sizefn
