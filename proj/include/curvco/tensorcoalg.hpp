#pragma once

#include "curvco/family.hpp"
#include "curvco/ordcat.hpp"
#include "curvco/report.hpp"

namespace curvco {

// The tensor coalgebra XT = sum of X^{(x)n}, materialized up to the weight
// cap (and an arity cap; derived from the weight cap when every generator of
// X has weight >= 1, mandatory otherwise).
struct TensorCoalgebra {
    CoeffRing ring = CoeffRing::integers();
    AlphabetPtr alpha; // letters of X
    int wcap = -1;
    int acap = 0;
    SpacePtr XT;
};

TensorCoalgebra make_tensor_coalgebra(CoeffRing ring, const SpacePtr& X, int wcap, int acap = -1);
TensorCoalgebra make_tensor_coalgebra(CoeffRing ring, AlphabetPtr alpha, int wcap, int acap = -1);

// Delta_I: XT -> XT^{(x)I} splitting each word into I ordered blocks.
// Delta_1 = id, Delta_0 = counit.
GradedMap cut_comultiplication(const TensorCoalgebra& T, int I);
SpacePtr xt_power(const TensorCoalgebra& T, int I); // target space of Delta_I

GradedMap xt_counit(const TensorCoalgebra& T);       // pr_0 : XT -> 1
GradedMap xt_unit_section(const TensorCoalgebra& T); // inj_0 : 1 -> XT

// An ordinary counital coassociative coalgebra on an arbitrary based carrier.
struct OrdinaryCoalgebraData {
    CoeffRing ring = CoeffRing::integers();
    SpacePtr C;
    AlphabetPtr alpha; // letters of C
    int wcap = -1;     // cap for iterated comultiplication targets
    GradedMap delta;   // C -> C^{(x)2}, degree 0
    GradedMap eps;     // C -> 1, degree 0
};

OrdinaryCoalgebraData make_ordinary_coalgebra(CoeffRing ring, SpacePtr C, GradedMap delta,
                                              GradedMap eps, int wcap = -1);
CheckReport check_ordinary_coalgebra(const OrdinaryCoalgebraData& C);

// Iterated comultiplication Delta_I : C -> C^{(x)I} (Delta_0 = eps).
GradedMap iterated_delta(const OrdinaryCoalgebraData& C, int I);

// ---------------------------------------------------------------------------
// Lifts of finite-support component families to the relatively cofree
// homotopy coalgebra X-tilde-T, exposed through their pr_n components only.

// Source of the (I, n) component: the direct sum of X^{(x)||m||} over
// m <= K*n, tagged by m in lexicographic order.
SpacePtr lift_source_space(const ComponentFamily& f, const MultiIndex& n);

// f-hat(I) . pr_n for a degree-0 family f (I = n.size()).
GradedMap lift_morphism_component(const ComponentFamily& f, const MultiIndex& n);

// f-hat between tagged products: block at target tag l sums over k in
// [K]^{||l||}; the source tags must contain every block pushforward.
GradedMap lift_morphism_between(const ComponentFamily& f, const std::vector<MultiIndex>& src_tags,
                                const std::vector<MultiIndex>& tgt_tags);

// xi(I) . pr_n for an (f, g)-coderivation family xi.
GradedMap lift_coderivation_component(const ComponentFamily& f, const ComponentFamily& g,
                                      const ComponentFamily& xi, const MultiIndex& n);

// Extract the component family back from the lift (Prop. reconstruction):
// reads the tag blocks of the (I = 1, n = (1)) component.
ComponentFamily extract_lift_components(const ComponentFamily& f_used_for_lift,
                                        const GradedMap& component_1_1);

// ---------------------------------------------------------------------------
// Word-level lifts XT -> YT (finite thanks to the caps).

// Coalgebra morphism: inj_m f-hat pr_n = sum_{k_1+...+k_n=m} f_{k_1}(x)...(x)f_{k_n}.
GradedMap lift_coalg_morphism_words(const ComponentFamily& f, const TensorCoalgebra& src,
                                    const TensorCoalgebra& tgt);

// (f, g)-coderivation on words from the family xi.
GradedMap lift_coderivation_words(const ComponentFamily& f, const ComponentFamily& g,
                                  const ComponentFamily& xi, const TensorCoalgebra& src,
                                  const TensorCoalgebra& tgt);

// Functional XT -> 1 extending the family by zeroes.
GradedMap extend_functional_words(const ComponentFamily& d0, const TensorCoalgebra& src);

// ---------------------------------------------------------------------------
// Cofreeness: morphisms from an ordinary coalgebra into X-tilde-T are in
// bijection with maps C -> X; pr_I of the lift is Delta_I . t^(x)I.
GradedMap cofree_lift_component(const OrdinaryCoalgebraData& C, const GradedMap& t1, int I);
GradedMap cofree_lift_words(const OrdinaryCoalgebraData& C, const GradedMap& t1,
                            const TensorCoalgebra& tgt);

} // namespace curvco
