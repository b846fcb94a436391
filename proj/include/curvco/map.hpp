#pragma once

#include "curvco/linalg.hpp"
#include "curvco/module.hpp"
#include "curvco/ring.hpp"

#include <map>

namespace curvco {

// Degree-d morphism of bigraded modules: blocks send the component at (z, w)
// to (z + d, w). Values are row vectors, so composition "f then g" is the
// blockwise product f.block * g.block. Absent blocks are zero.
class GradedMap {
  public:
    GradedMap() = default;
    GradedMap(CoeffRing ring, SpacePtr src, SpacePtr tgt, int degree)
        : ring_(ring), src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree) {}

    static GradedMap zero(CoeffRing r, SpacePtr src, SpacePtr tgt, int degree) {
        return GradedMap(r, std::move(src), std::move(tgt), degree);
    }
    static GradedMap identity(CoeffRing r, SpacePtr s);

    const CoeffRing& ring() const { return ring_; }
    const SpacePtr& src() const { return src_; }
    const SpacePtr& tgt() const { return tgt_; }
    int degree() const { return degree_; }
    const std::map<Bidegree, Mat>& blocks() const { return blocks_; }

    // Block at source bidegree b: dim_src(b) x dim_tgt(b + degree) (zero if absent).
    Mat block(Bidegree b) const;
    bool has_block(Bidegree b) const { return blocks_.count(b) != 0; }
    void set_block(Bidegree b, Mat m);
    void add_entry(Bidegree b, int i, int j, int64_t c);
    int64_t entry(Bidegree b, int i, int j) const;

    GradedMap then(const GradedMap& g) const; // this first, then g
    GradedMap operator+(const GradedMap& o) const;
    GradedMap operator-(const GradedMap& o) const;
    GradedMap scaled(int64_t c) const;
    GradedMap negated() const { return scaled(-1); }

    bool is_zero() const;
    void normalize(); // normalize entries, drop zero blocks
    void validate() const;

    friend bool maps_equal(const GradedMap& a, const GradedMap& b);

  private:
    CoeffRing ring_ = CoeffRing::integers();
    SpacePtr src_, tgt_;
    int degree_ = 0;
    std::map<Bidegree, Mat> blocks_;
};

bool maps_equal(const GradedMap& a, const GradedMap& b);

// sigma(M, n): M -> M[n], degree -n, identity blocks. shift_space(S, n) is the
// atomic space with ranks (z, w) -> S(z + n, w) in the same per-bidegree order.
SpacePtr shift_space(const SpacePtr& s, int n);
GradedMap sigma(CoeffRing r, const SpacePtr& s, int n);
GradedMap sigma_inv(CoeffRing r, const SpacePtr& s, int n); // M[n] -> M, degree n

// f[n] = (-1)^{n deg f} sigma^{-n} . f . sigma^{n}
GradedMap shift_map(const GradedMap& f, int n);

} // namespace curvco
