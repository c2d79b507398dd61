#include "sizefn/bounds.hpp"

#include <cmath>
#include <string>

namespace sizefn {

static BoundReport make_report(BoundKind kind, const DiscreteSizePair& a,
                               const DiscreteSizePair& b, std::string provenance) {
    BoundReport rep;
    rep.kind = kind;
    rep.left = compute_diagram(a);
    rep.right = compute_diagram(b);
    rep.matching = compute_matching(rep.left, rep.right);
    rep.value = rep.matching.distance;
    rep.comparable = rep.left.at_infinity.size() == rep.right.at_infinity.size();
    rep.provenance = std::move(provenance);
    if (!rep.comparable)
        rep.provenance += "; component counts differ, spaces are not homeomorphic and the "
                          "bound interpretation is void";
    return rep;
}

BoundReport natural_lower_bound(const DiscreteSizePair& a, const DiscreteSizePair& b) {
    return make_report(BoundKind::natural_lower, a, b,
                       "matching distance of the size function diagrams");
}

BoundReport lambda_lower_bound(const DiscreteSizePair& a, const DiscreteSizePair& b,
                               Connectivity connectivity) {
    const std::string conn = connectivity == Connectivity::strong ? "strong" : "4";
    return make_report(BoundKind::lambda_lower, product_pair(a, connectivity),
                       product_pair(b, connectivity),
                       "matching distance of the product-pair diagrams (" + conn +
                           " connectivity)");
}

RestrictionIdentityReport restriction_identity_check(const IntervalSamples& a,
                                                     const IntervalSamples& b,
                                                     const MonotonePath& h) {
    // The product-space cost of (h,h) only ever sees differences of aligned
    // differences: Phi - Psi at ((i,j),(i',j')) is (a_i - b_j) - (a_i' - b_j').
    const int n = static_cast<int>(a.values.size());
    const int m = static_cast<int>(b.values.size());
    validate_path(h, n, m);
    const bool rev = h.orientation == MonotonePath::Orientation::reversed;
    std::vector<double> diffs;
    diffs.reserve(h.steps.size());
    for (auto [i, j] : h.steps) diffs.push_back(a.values[i] - b.values[rev ? m - 1 - j : j]);

    RestrictionIdentityReport rep;
    for (double d1 : diffs)
        for (double d2 : diffs) rep.aligned_pair_max = std::max(rep.aligned_pair_max, std::abs(d1 - d2));
    rep.range_of_diffs = evaluate(SeminormId::range, diffs);
    rep.equal = rep.aligned_pair_max == rep.range_of_diffs;
    return rep;
}

} // namespace sizefn
