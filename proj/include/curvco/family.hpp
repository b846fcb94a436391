#pragma once

#include "curvco/kernel.hpp"

#include <map>

namespace curvco {

// Memoized power spaces over an alphabet (keyed by alphabet identity).
SpacePtr cached_power(const AlphabetPtr& a, int n, int wcap = -1);

// Finite-support family { k -> f_k : X^{(x)k} -> Y } of a fixed degree; the
// components of morphisms (degree 0), coderivations, and curvature
// functionals (Y = unit) all live here. Component k has source
// cached_power(alpha, k) and is absent when zero.
class ComponentFamily {
  public:
    ComponentFamily() = default;
    ComponentFamily(CoeffRing ring, AlphabetPtr alpha, SpacePtr target, int degree, int bound)
        : ring_(ring), alpha_(std::move(alpha)), target_(std::move(target)), degree_(degree),
          bound_(bound) {}

    static ComponentFamily zero(CoeffRing r, AlphabetPtr a, SpacePtr y, int degree) {
        return ComponentFamily(r, std::move(a), std::move(y), degree, 0);
    }
    // pr_1: the identity morphism family on the carrier with this alphabet.
    static ComponentFamily identity(CoeffRing r, AlphabetPtr a);

    const CoeffRing& ring() const { return ring_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    const SpacePtr& target() const { return target_; }
    int degree() const { return degree_; }
    int bound() const { return bound_; }
    const std::map<int, GradedMap>& components() const { return comps_; }

    SpacePtr source_power(int k) const { return cached_power(alpha_, k); }
    const GradedMap* component(int k) const;
    GradedMap component_or_zero(int k) const;
    void set_component(int k, GradedMap f);

    ComponentFamily operator+(const ComponentFamily& o) const;
    ComponentFamily operator-(const ComponentFamily& o) const;
    ComponentFamily scaled(int64_t c) const;
    bool is_zero() const;

    friend bool families_equal(const ComponentFamily& a, const ComponentFamily& b);

  private:
    CoeffRing ring_ = CoeffRing::integers();
    AlphabetPtr alpha_;
    SpacePtr target_;
    int degree_ = 0;
    int bound_ = 0;
    std::map<int, GradedMap> comps_;
};

bool families_equal(const ComponentFamily& a, const ComponentFamily& b);

// Components of the composite of lifted morphisms (f then g):
//   h_m = sum_{k_1+...+k_l = m, k_i <= K, l <= L} (f_{k_1} (x)...(x) f_{k_l}) . g_l
// Also computes h . xi for a coderivation family xi in place of g (the
// pre-composition formula has the same shape).
ComponentFamily family_precompose(const ComponentFamily& f, const ComponentFamily& g);

// Components of xi then h, for an (f, g)-coderivation family xi:
//   theta_m = sum (f_{k_1} (x)...(x) f_{k_a} (x) xi_n (x) g_{l_1} (x)...(x) g_{l_c}) . h_{a+1+c}
ComponentFamily family_postcompose_coderivation(const ComponentFamily& f, const ComponentFamily& g,
                                                const ComponentFamily& xi, const ComponentFamily& h);

// Components of xi^2 for an odd-degree coderivation family xi (f = g = id):
//   theta_m = sum_{a+n+c=m, n <= K, a+1+c <= K} (1^a (x) xi_n (x) 1^c) . xi_{a+1+c}
ComponentFamily square_coderivation(const ComponentFamily& xi);

// The block of `f` (whose source is a words/tagged space) at one source tag,
// as a map from the full power of that arity.
GradedMap tag_block(const GradedMap& f, int tag);

} // namespace curvco
