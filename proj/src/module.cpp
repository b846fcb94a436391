#include "curvco/module.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace curvco {

void BigradedModule::set_rank(Bidegree b, int r) {
    if (b.w < 0) throw std::invalid_argument("BigradedModule: weight must be >= 0");
    if (r < 0) throw std::invalid_argument("BigradedModule: negative rank");
    if (r == 0)
        ranks_.erase(b);
    else
        ranks_[b] = r;
}

int BigradedModule::rank(Bidegree b) const {
    auto it = ranks_.find(b);
    return it == ranks_.end() ? 0 : it->second;
}

int BigradedModule::total_dim() const {
    int d = 0;
    for (auto& [b, r] : ranks_) d += r;
    return d;
}

BigradedModule BigradedModule::shifted(int n) const {
    BigradedModule out;
    for (auto& [b, r] : ranks_) out.set_rank(Bidegree{b.z - n, b.w}, r);
    return out;
}

int BigradedModule::min_weight() const {
    int w = INT_MAX;
    for (auto& [b, r] : ranks_) w = std::min(w, b.w);
    return w;
}

std::vector<Bidegree> module_letters(const BigradedModule& m) {
    std::vector<Bidegree> out;
    for (auto& [b, r] : m.ranks())
        for (int i = 0; i < r; ++i) out.push_back(b);
    return out;
}

AlphabetPtr alphabet_of_module(const BigradedModule& m) {
    auto a = std::make_shared<Alphabet>();
    a->deg = module_letters(m);
    return a;
}

AlphabetPtr alphabet_of_space(SpacePtr s) {
    auto a = std::make_shared<Alphabet>();
    a->deg.reserve(s->global_dim());
    for (int gi = 0; gi < s->global_dim(); ++gi) a->deg.push_back(s->global_element(gi).first);
    a->origin = std::move(s);
    return a;
}

namespace {

// Enumerate all words of the given arity over the alphabet, lexicographically,
// dropping words whose total weight exceeds wcap (when wcap >= 0).
void enumerate_words(const Alphabet& a, int arity, int wcap,
                     const std::function<void(const std::vector<int>&, Bidegree)>& emit) {
    std::vector<int> word(arity);
    std::function<void(int, Bidegree)> rec = [&](int pos, Bidegree acc) {
        if (pos == arity) {
            emit(word, acc);
            return;
        }
        for (int l = 0; l < a.size(); ++l) {
            Bidegree nb = acc + a.deg[l];
            if (wcap >= 0 && nb.w > wcap) continue;
            word[pos] = l;
            rec(pos + 1, nb);
        }
    };
    rec(0, Bidegree{0, 0});
}

} // namespace

SpacePtr Space::atomic(const BigradedModule& m) {
    auto s = std::shared_ptr<Space>(new Space());
    s->kind_ = Kind::Tuple;
    s->alpha_ = alphabet_of_module(m);
    s->tag_arity_ = {1};
    s->finalize();
    if (!(s->mod_ == m)) throw std::logic_error("atomic space rank mismatch");
    return s;
}

SpacePtr Space::unit() {
    static SpacePtr cached = [] {
        auto s = std::shared_ptr<Space>(new Space());
        s->kind_ = Kind::Tuple;
        s->alpha_ = std::make_shared<Alphabet>();
        s->tag_arity_ = {0};
        s->finalize();
        return SpacePtr(s);
    }();
    return cached;
}

SpacePtr Space::power(AlphabetPtr a, int n, int wcap) {
    if (n < 0) throw std::invalid_argument("power: negative arity");
    auto s = std::shared_ptr<Space>(new Space());
    s->kind_ = Kind::Tuple;
    s->alpha_ = std::move(a);
    s->tag_arity_ = {n};
    s->wcap_ = wcap;
    s->finalize();
    return s;
}

SpacePtr Space::words(AlphabetPtr a, int acap, int wcap) {
    if (acap < 0) throw std::invalid_argument("words: negative arity cap");
    auto s = std::shared_ptr<Space>(new Space());
    s->kind_ = Kind::Tuple;
    s->alpha_ = std::move(a);
    for (int n = 0; n <= acap; ++n) s->tag_arity_.push_back(n);
    s->wcap_ = wcap;
    s->finalize();
    return s;
}

SpacePtr Space::tagged(AlphabetPtr a, std::vector<MultiIndex> tags) {
    auto s = std::shared_ptr<Space>(new Space());
    s->kind_ = Kind::Tuple;
    s->alpha_ = std::move(a);
    for (auto& m : tags) s->tag_arity_.push_back(mi_norm(m));
    s->tag_mindex_ = std::move(tags);
    s->finalize();
    return s;
}

SpacePtr Space::product(std::vector<SpacePtr> factors) {
    auto s = std::shared_ptr<Space>(new Space());
    s->kind_ = Kind::Product;
    s->factors_ = std::move(factors);
    s->tag_arity_ = {int(s->factors_.size())};
    s->finalize();
    return s;
}

bool Space::is_unit() const {
    return kind_ == Kind::Tuple && tag_arity_.size() == 1 && tag_arity_[0] == 0;
}

std::optional<int> Space::tag_of_arity(int k) const {
    std::optional<int> found;
    for (int t = 0; t < int(tag_arity_.size()); ++t)
        if (tag_arity_[t] == k) {
            if (found) return std::nullopt; // ambiguous
            found = t;
        }
    return found;
}

void Space::finalize() {
    if (kind_ == Kind::Tuple) {
        for (int t = 0; t < int(tag_arity_.size()); ++t) {
            enumerate_words(*alpha_, tag_arity_[t], wcap_, [&](const std::vector<int>& w, Bidegree b) {
                basis_[b].push_back(BasisEl{t, w});
            });
        }
    } else {
        int n = int(factors_.size());
        std::vector<int> word(n);
        std::function<void(int, Bidegree)> rec = [&](int pos, Bidegree acc) {
            if (pos == n) {
                basis_[acc].push_back(BasisEl{0, word});
                return;
            }
            const Space& f = *factors_[pos];
            for (int gi = 0; gi < f.global_dim(); ++gi) {
                word[pos] = gi;
                rec(pos + 1, acc + f.global_element(gi).first);
            }
        };
        rec(0, Bidegree{0, 0});
    }
    // Within each bidegree the construction order above is the basis order;
    // it is (tag, word) lexicographic for Tuple and tuple-lex for Product.
    for (auto& [b, els] : basis_) {
        if (els.empty()) continue;
        mod_.set_rank(b, int(els.size()));
        global_offset_[b] = 0; // filled below
    }
    int gi = 0;
    for (auto& [b, els] : basis_) {
        global_offset_[b] = gi;
        for (int i = 0; i < int(els.size()); ++i) {
            std::vector<int> key;
            key.reserve(els[i].word.size() + 1);
            key.push_back(els[i].tag);
            key.insert(key.end(), els[i].word.begin(), els[i].word.end());
            lookup_.emplace(std::move(key), std::make_pair(b, i));
            global_.emplace_back(b, i);
            ++gi;
        }
    }
}

const std::vector<BasisEl>& Space::elements(Bidegree b) const {
    static const std::vector<BasisEl> empty;
    auto it = basis_.find(b);
    return it == basis_.end() ? empty : it->second;
}

std::optional<int> Space::index_of(Bidegree b, const BasisEl& el) const {
    std::vector<int> key;
    key.reserve(el.word.size() + 1);
    key.push_back(el.tag);
    key.insert(key.end(), el.word.begin(), el.word.end());
    auto it = lookup_.find(key);
    if (it == lookup_.end() || !(it->second.first == b)) return std::nullopt;
    return it->second.second;
}

Bidegree Space::tuple_bidegree(const std::vector<int>& word) const {
    Bidegree b{0, 0};
    for (int l : word) b = b + alpha_->deg[l];
    return b;
}

int Space::global_index(Bidegree b, int idx) const {
    auto it = global_offset_.find(b);
    if (it == global_offset_.end()) throw std::out_of_range("global_index: empty bidegree");
    return it->second + idx;
}

std::string Space::describe() const {
    std::ostringstream os;
    os << (kind_ == Kind::Tuple ? "tuple" : "product") << " space, dim " << total_dim() << " {";
    bool first = true;
    for (auto& [b, r] : mod_.ranks()) {
        if (!first) os << ", ";
        os << b << ":" << r;
        first = false;
    }
    os << "}";
    return os.str();
}

} // namespace curvco
