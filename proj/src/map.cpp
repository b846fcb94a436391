#include "curvco/map.hpp"

#include <stdexcept>

namespace curvco {

GradedMap GradedMap::identity(CoeffRing r, SpacePtr s) {
    GradedMap f(r, s, s, 0);
    for (auto& [b, rank] : s->module().ranks()) f.blocks_[b] = Mat::identity(rank);
    return f;
}

Mat GradedMap::block(Bidegree b) const {
    auto it = blocks_.find(b);
    if (it != blocks_.end()) return it->second;
    return Mat(src_->dim(b), tgt_->dim(b.shifted_z(degree_)));
}

void GradedMap::set_block(Bidegree b, Mat m) {
    if (m.rows() != src_->dim(b) || m.cols() != tgt_->dim(b.shifted_z(degree_)))
        throw std::invalid_argument("set_block: shape mismatch at " + std::to_string(b.z) + "," +
                                    std::to_string(b.w));
    if (m.is_zero())
        blocks_.erase(b);
    else
        blocks_[b] = std::move(m);
}

void GradedMap::add_entry(Bidegree b, int i, int j, int64_t c) {
    c = ring_.normalize(c);
    if (c == 0) return;
    auto it = blocks_.find(b);
    if (it == blocks_.end()) {
        int rows = src_->dim(b), cols = tgt_->dim(b.shifted_z(degree_));
        if (i >= rows || j >= cols) throw std::out_of_range("add_entry: index out of range");
        it = blocks_.emplace(b, Mat(rows, cols)).first;
    }
    it->second.at(i, j) = ring_.add(it->second.at(i, j), c);
}

int64_t GradedMap::entry(Bidegree b, int i, int j) const {
    auto it = blocks_.find(b);
    return it == blocks_.end() ? 0 : it->second.at(i, j);
}

GradedMap GradedMap::then(const GradedMap& g) const {
    if (!(tgt_->module() == g.src_->module()))
        throw std::invalid_argument("then: target/source mismatch (" + tgt_->describe() + " vs " +
                                    g.src_->describe() + ")");
    GradedMap h(ring_, src_, g.tgt_, degree_ + g.degree_);
    for (auto& [b, m] : blocks_) {
        Bidegree mid = b.shifted_z(degree_);
        auto it = g.blocks_.find(mid);
        if (it == g.blocks_.end()) continue;
        Mat prod = mat_mul(ring_, m, it->second);
        if (!prod.is_zero()) h.blocks_[b] = std::move(prod);
    }
    h.normalize();
    return h;
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    if (!(src_->module() == o.src_->module()) || !(tgt_->module() == o.tgt_->module()) ||
        degree_ != o.degree_)
        throw std::invalid_argument("map sum: incompatible maps");
    GradedMap h(ring_, src_, tgt_, degree_);
    h.blocks_ = blocks_;
    for (auto& [b, m] : o.blocks_) {
        auto it = h.blocks_.find(b);
        if (it == h.blocks_.end())
            h.blocks_[b] = m;
        else
            it->second = mat_add(ring_, it->second, m);
    }
    h.normalize();
    return h;
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + o.scaled(-1); }

GradedMap GradedMap::scaled(int64_t c) const {
    GradedMap h(ring_, src_, tgt_, degree_);
    for (auto& [b, m] : blocks_) h.blocks_[b] = mat_scale(ring_, c, m);
    h.normalize();
    return h;
}

bool GradedMap::is_zero() const {
    for (auto& [b, m] : blocks_) {
        Mat n = m;
        mat_normalize(ring_, n);
        if (!n.is_zero()) return false;
    }
    return true;
}

void GradedMap::normalize() {
    for (auto it = blocks_.begin(); it != blocks_.end();) {
        mat_normalize(ring_, it->second);
        if (it->second.is_zero())
            it = blocks_.erase(it);
        else
            ++it;
    }
}

void GradedMap::validate() const {
    for (auto& [b, m] : blocks_) {
        if (m.rows() != src_->dim(b) || m.cols() != tgt_->dim(b.shifted_z(degree_)))
            throw std::logic_error("GradedMap: inconsistent block at z=" + std::to_string(b.z) +
                                   " w=" + std::to_string(b.w));
    }
}

bool maps_equal(const GradedMap& a, const GradedMap& b) {
    if (a.degree_ != b.degree_) return false;
    if (!(a.src_->module() == b.src_->module())) return false;
    if (!(a.tgt_->module() == b.tgt_->module())) return false;
    GradedMap d = a - b;
    return d.is_zero();
}

SpacePtr shift_space(const SpacePtr& s, int n) { return Space::atomic(s->module().shifted(n)); }

GradedMap sigma(CoeffRing r, const SpacePtr& s, int n) {
    SpacePtr t = shift_space(s, n);
    GradedMap f(r, s, t, -n);
    for (auto& [b, rank] : s->module().ranks()) f.set_block(b, Mat::identity(rank));
    return f;
}

GradedMap sigma_inv(CoeffRing r, const SpacePtr& s, int n) {
    SpacePtr t = shift_space(s, n);
    GradedMap f(r, t, s, n);
    for (auto& [b, rank] : t->module().ranks()) f.set_block(b, Mat::identity(rank));
    return f;
}

GradedMap shift_map(const GradedMap& f, int n) {
    // (-1)^{n deg f} sigma^{-n} . f . sigma^{n}
    GradedMap a = sigma_inv(f.ring(), f.src(), n); // src[n] -> src, degree n
    GradedMap b = sigma(f.ring(), f.tgt(), n);     // tgt -> tgt[n], degree -n
    GradedMap out = a.then(f).then(b);
    if (((int64_t(n) * f.degree()) % 2 + 2) % 2 == 1) out = out.scaled(-1);
    return out;
}

} // namespace curvco
