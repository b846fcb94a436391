#pragma once

#include "curvco/map.hpp"

#include <vector>

namespace curvco {

// One factor of a pure tensor of maps: `map` is applied to a segment of
// `consume` letters of the source word (for Tuple sources), or to one whole
// factor element (Product sources, consume = 1).
struct Factor {
    const GradedMap* map;
    int consume;
};

// Accumulates sums of tensor products of component maps into a GradedMap.
// Koszul sign: applying (h_1 (x) ... (x) h_r) to a split word multiplies by
// (-1)^{ sum_{p<q} deg(h_p) * z(segment_q) }, z of a segment being the sum of
// the z-degrees of its letters. Signs only ever involve z, never w.
class MapBuilder {
  public:
    MapBuilder(CoeffRing ring, SpacePtr src, SpacePtr tgt, int degree)
        : out_(ring, std::move(src), std::move(tgt), degree) {}

    // Add coeff * (factors_1 (x) ... (x) factors_r) over all source basis
    // elements of tag `src_tag` (-1 = the unique tag / all Product elements).
    // Target elements are resolved in tag `tgt_tag` (-1 = by arity for Tuple
    // targets with unique arity tags). When `allow_drop` is set, target
    // elements missing from a capped target space are discarded (weight
    // truncation); otherwise they raise.
    void add_factors(const std::vector<Factor>& factors, int64_t coeff = 1, int src_tag = -1,
                     int tgt_tag = -1, bool allow_drop = false);

    void add_entry(Bidegree b, int i, int j, int64_t c) { out_.add_entry(b, i, j, c); }

    GradedMap take() {
        out_.normalize();
        return std::move(out_);
    }

  private:
    GradedMap out_;
};

// Tensor product of maps with Koszul signs; source/target are Product spaces
// of the factors' sources/targets.
GradedMap tensor(const GradedMap& f, const GradedMap& g);
GradedMap tensor_many(const std::vector<const GradedMap*>& fs);

// Identity-coefficient reindexings between spaces with matching tuple bases.
GradedMap inject_tag(CoeffRing r, const SpacePtr& words, int tag);  // power -> words (that tag)
GradedMap project_tag(CoeffRing r, const SpacePtr& words, int tag); // words -> power (that tag)

// Convenience: the canonical power space over the alphabet of `carrier`,
// truncated the same way the carrier would be.
SpacePtr power_of(const SpacePtr& carrier, int n, int wcap = -1);

} // namespace curvco
