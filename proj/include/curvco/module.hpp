#pragma once

#include "curvco/grading.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace curvco {

// Free bigraded module of finite total rank: finite map Bidegree -> rank > 0.
class BigradedModule {
  public:
    BigradedModule() = default;

    void set_rank(Bidegree b, int r);
    int rank(Bidegree b) const;
    const std::map<Bidegree, int>& ranks() const { return ranks_; }
    int total_dim() const;
    bool operator==(const BigradedModule& o) const { return ranks_ == o.ranks_; }

    BigradedModule shifted(int n) const; // M[n]: ranks(z, w) = M(z + n, w)
    int min_weight() const;              // smallest w with a generator; INT_MAX if empty

  private:
    std::map<Bidegree, int> ranks_;
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// Alphabet: the letters that tuple bases are built from. Each letter has a
// bidegree; when the alphabet is derived from a Space, letter i is that
// space's i-th global basis element.
struct Alphabet {
    std::vector<Bidegree> deg;
    SpacePtr origin; // may be null

    int size() const { return int(deg.size()); }
};
using AlphabetPtr = std::shared_ptr<const Alphabet>;

using MultiIndex = std::vector<int>;

inline int mi_norm(const MultiIndex& m) {
    int s = 0;
    for (int v : m) s += v;
    return s;
}

struct BasisEl {
    int tag = 0;
    std::vector<int> word;
    bool operator==(const BasisEl& o) const { return tag == o.tag && word == o.word; }
};

// A Space is a bigraded module together with an explicit ordered basis.
//   Tuple spaces: elements are (tag, word) with `word` a tuple of alphabet
//     letters; each tag fixes an arity. Powers, tensor words and tagged
//     direct sums of powers are all Tuple spaces.
//   Product spaces: elements are tuples picking one global basis element
//     from each factor (used for binary/n-ary tensor products of maps).
class Space : public std::enable_shared_from_this<Space> {
  public:
    enum class Kind { Tuple, Product };

    // -- constructors ------------------------------------------------------
    static SpacePtr atomic(const BigradedModule& m);
    static SpacePtr unit();
    // X^{(x)n}, truncated to total weight <= wcap (no truncation if wcap < 0)
    static SpacePtr power(AlphabetPtr a, int n, int wcap = -1);
    // XT = sum of X^{(x)n} for n = 0..acap, weight-capped
    static SpacePtr words(AlphabetPtr a, int acap, int wcap = -1);
    // Direct sum of X^{(x)|m|} over the listed multi-indices (in order).
    static SpacePtr tagged(AlphabetPtr a, std::vector<MultiIndex> tags);
    static SpacePtr product(std::vector<SpacePtr> factors);

    // -- shape ---------------------------------------------------------------
    Kind kind() const { return kind_; }
    const BigradedModule& module() const { return mod_; }
    int dim(Bidegree b) const { return mod_.rank(b); }
    int total_dim() const { return mod_.total_dim(); }
    const AlphabetPtr& alphabet() const { return alpha_; }
    const std::vector<SpacePtr>& factors() const { return factors_; }
    bool is_unit() const;

    int tag_count() const { return int(tag_arity_.size()); }
    int tag_arity(int t) const { return tag_arity_[t]; }
    const std::vector<MultiIndex>& tag_mindex() const { return tag_mindex_; }
    // Tag whose arity is `k`; requires exactly one such tag.
    std::optional<int> tag_of_arity(int k) const;

    // -- basis ---------------------------------------------------------------
    const std::vector<BasisEl>& elements(Bidegree b) const;
    std::optional<int> index_of(Bidegree b, const BasisEl& el) const;
    Bidegree tuple_bidegree(const std::vector<int>& word) const; // Tuple spaces

    int global_dim() const { return int(global_.size()); }
    int global_index(Bidegree b, int idx) const;
    std::pair<Bidegree, int> global_element(int gi) const { return global_[gi]; }
    const BasisEl& element(Bidegree b, int idx) const { return basis_.at(b)[idx]; }

    // letter degrees of this space's own alphabet
    int letter_z(int l) const { return alpha_->deg[l].z; }
    int letter_w(int l) const { return alpha_->deg[l].w; }

    std::string describe() const;

  private:
    Space() = default;
    void finalize(); // derive module, global enumeration, lookup tables

    Kind kind_ = Kind::Tuple;
    AlphabetPtr alpha_;
    std::vector<int> tag_arity_;
    std::vector<MultiIndex> tag_mindex_;
    std::vector<SpacePtr> factors_;
    int wcap_ = -1;

    std::map<Bidegree, std::vector<BasisEl>> basis_;
    struct KeyHash {
        size_t operator()(const std::vector<int>& v) const noexcept {
            size_t h = 1469598103934665603ull;
            for (int x : v) h = (h ^ size_t(uint32_t(x))) * 1099511628211ull;
            return h;
        }
    };
    std::unordered_map<std::vector<int>, std::pair<Bidegree, int>, KeyHash> lookup_;
    BigradedModule mod_;
    std::vector<std::pair<Bidegree, int>> global_;
    std::map<Bidegree, int> global_offset_;
};

// Alphabet helpers.
AlphabetPtr alphabet_of_module(const BigradedModule& m);
AlphabetPtr alphabet_of_space(SpacePtr s);

// Enumerate the generators of a module in the canonical order
// (bidegrees ascending, then local index).
std::vector<Bidegree> module_letters(const BigradedModule& m);

} // namespace curvco
