#include "curvco/family.hpp"

#include "curvco/ordcat.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace curvco {

SpacePtr cached_power(const AlphabetPtr& a, int n, int wcap) {
    static std::mutex mu;
    static std::map<std::tuple<const Alphabet*, int, int>, SpacePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(a.get(), n, wcap);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SpacePtr s = Space::power(a, n, wcap);
    cache.emplace(key, s);
    return s;
}

ComponentFamily ComponentFamily::identity(CoeffRing r, AlphabetPtr a) {
    SpacePtr p1 = cached_power(a, 1);
    ComponentFamily f(r, a, p1, 0, 1);
    f.set_component(1, GradedMap::identity(r, p1));
    return f;
}

const GradedMap* ComponentFamily::component(int k) const {
    auto it = comps_.find(k);
    return it == comps_.end() ? nullptr : &it->second;
}

GradedMap ComponentFamily::component_or_zero(int k) const {
    auto it = comps_.find(k);
    if (it != comps_.end()) return it->second;
    return GradedMap::zero(ring_, source_power(k), target_, degree_);
}

void ComponentFamily::set_component(int k, GradedMap f) {
    if (f.degree() != degree_) throw std::invalid_argument("set_component: degree mismatch");
    f.normalize();
    if (f.is_zero()) {
        comps_.erase(k);
        return;
    }
    if (k > bound_) bound_ = k;
    comps_[k] = std::move(f);
}

ComponentFamily ComponentFamily::operator+(const ComponentFamily& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("family sum: degree mismatch");
    ComponentFamily out(ring_, alpha_, target_, degree_, std::max(bound_, o.bound_));
    for (int k = 0; k <= out.bound_; ++k) {
        const GradedMap* a = component(k);
        const GradedMap* b = o.component(k);
        if (!a && !b) continue;
        if (a && b)
            out.set_component(k, *a + *b);
        else
            out.set_component(k, a ? *a : *b);
    }
    return out;
}

ComponentFamily ComponentFamily::operator-(const ComponentFamily& o) const {
    return *this + o.scaled(-1);
}

ComponentFamily ComponentFamily::scaled(int64_t c) const {
    ComponentFamily out(ring_, alpha_, target_, degree_, bound_);
    for (auto& [k, f] : comps_) out.set_component(k, f.scaled(c));
    return out;
}

bool ComponentFamily::is_zero() const {
    for (auto& [k, f] : comps_)
        if (!f.is_zero()) return false;
    return true;
}

bool families_equal(const ComponentFamily& a, const ComponentFamily& b) {
    if (a.degree_ != b.degree_) return false;
    int K = std::max(a.bound_, b.bound_);
    for (int k = 0; k <= K; ++k) {
        const GradedMap* fa = a.component(k);
        const GradedMap* fb = b.component(k);
        if (!fa && !fb) continue;
        if (fa && fb) {
            if (!maps_equal(*fa, *fb)) return false;
        } else {
            if ((fa ? fa : fb)->is_zero() == false) return false;
        }
    }
    return true;
}

ComponentFamily family_precompose(const ComponentFamily& f, const ComponentFamily& g) {
    if (f.degree() != 0) throw std::invalid_argument("family_precompose: f must have degree 0");
    if (!(f.target()->module() == cached_power(g.alphabet(), 1)->module()))
        throw std::invalid_argument("family_precompose: carriers do not chain");
    int K = f.bound(), L = g.bound();
    ComponentFamily out(f.ring(), f.alphabet(), g.target(), f.degree() + g.degree(), 0);
    for (int m = 0; m <= K * L; ++m) {
        GradedMap acc = GradedMap::zero(f.ring(), f.source_power(m), g.target(),
                                        f.degree() + g.degree());
        for (int l = 0; l <= L; ++l) {
            const GradedMap* gl = g.component(l);
            if (!gl) continue;
            MapBuilder b(f.ring(), f.source_power(m), cached_power(g.alphabet(), l), l * f.degree());
            bool any = false;
            for (auto& ks : compositions(m, l, 0, K)) {
                std::vector<Factor> factors;
                factors.reserve(l);
                bool ok = true;
                for (int kp : ks) {
                    const GradedMap* fk = f.component(kp);
                    if (!fk) {
                        ok = false;
                        break;
                    }
                    factors.push_back(Factor{fk, kp});
                }
                if (!ok) continue;
                b.add_factors(factors);
                any = true;
            }
            if (any) acc = acc + b.take().then(*gl);
        }
        out.set_component(m, std::move(acc));
    }
    return out;
}

ComponentFamily family_postcompose_coderivation(const ComponentFamily& f, const ComponentFamily& g,
                                                const ComponentFamily& xi,
                                                const ComponentFamily& h) {
    if (f.degree() != 0 || g.degree() != 0)
        throw std::invalid_argument("family_postcompose_coderivation: f, g must have degree 0");
    int K = std::max(std::max(f.bound(), g.bound()), xi.bound());
    int L = h.bound();
    ComponentFamily out(f.ring(), f.alphabet(), h.target(), xi.degree() + h.degree(), 0);
    for (int m = 0; m <= K * L; ++m) {
        GradedMap acc =
            GradedMap::zero(f.ring(), f.source_power(m), h.target(), xi.degree() + h.degree());
        for (int l = 1; l <= L; ++l) {
            const GradedMap* hl = h.component(l);
            if (!hl) continue;
            MapBuilder b(f.ring(), f.source_power(m), cached_power(xi.alphabet(), l),
                         (l - 1) * f.degree() + xi.degree());
            bool any = false;
            for (int u = 1; u <= l; ++u) {
                for (auto& ks : compositions(m, l, 0, K)) {
                    std::vector<Factor> factors;
                    factors.reserve(l);
                    bool ok = true;
                    for (int p = 1; p <= l; ++p) {
                        const ComponentFamily& fam = (p < u) ? f : (p == u ? xi : g);
                        const GradedMap* c = fam.component(ks[p - 1]);
                        if (!c) {
                            ok = false;
                            break;
                        }
                        factors.push_back(Factor{c, ks[p - 1]});
                    }
                    if (!ok) continue;
                    b.add_factors(factors);
                    any = true;
                }
            }
            if (any) acc = acc + b.take().then(*hl);
        }
        out.set_component(m, std::move(acc));
    }
    return out;
}

ComponentFamily square_coderivation(const ComponentFamily& xi) {
    if (((xi.degree() % 2) + 2) % 2 != 1)
        throw std::invalid_argument("square_coderivation: degree must be odd");
    ComponentFamily id = ComponentFamily::identity(xi.ring(), xi.alphabet());
    return family_postcompose_coderivation(id, id, xi, xi);
}

GradedMap tag_block(const GradedMap& f, int tag) {
    const Space& S = *f.src();
    SpacePtr p = cached_power(S.alphabet(), S.tag_arity(tag));
    GradedMap out(f.ring(), p, f.tgt(), f.degree());
    for (auto& [bd, rk] : p->module().ranks()) {
        (void)rk;
        const auto& els = p->elements(bd);
        for (int i = 0; i < int(els.size()); ++i) {
            auto row = S.index_of(bd, BasisEl{tag, els[i].word});
            if (!row || !f.has_block(bd)) continue;
            const Mat& blk = f.blocks().at(bd);
            for (int j = 0; j < blk.cols(); ++j)
                if (blk.at(*row, j) != 0) out.add_entry(bd, i, j, blk.at(*row, j));
        }
    }
    out.normalize();
    return out;
}

} // namespace curvco
