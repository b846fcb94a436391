#include "curvco/ordcat.hpp"

#include <functional>
#include <stdexcept>

namespace curvco {

OrdMap OrdMap::id(int n) {
    OrdMap m;
    m.source = m.target = n;
    m.values.resize(n);
    for (int i = 0; i < n; ++i) m.values[i] = i + 1;
    return m;
}

bool OrdMap::valid() const {
    if (int(values.size()) != source) return false;
    int prev = 1;
    for (int v : values) {
        if (v < prev || v > target) return false;
        prev = v;
    }
    return true;
}

OrdMap compose_ord(const OrdMap& phi, const OrdMap& psi) {
    if (phi.target != psi.source) throw std::invalid_argument("compose_ord: target/source mismatch");
    OrdMap out;
    out.source = phi.source;
    out.target = psi.target;
    out.values.reserve(phi.source);
    for (int v : phi.values) out.values.push_back(psi.values[v - 1]);
    return out;
}

MultiIndex pushforward(const OrdMap& phi, const MultiIndex& n) {
    if (int(n.size()) != phi.source) throw std::invalid_argument("pushforward: length mismatch");
    MultiIndex out(phi.target, 0);
    for (int i = 0; i < phi.source; ++i) out[phi.values[i] - 1] += n[i];
    return out;
}

std::vector<OrdMap> enumerate_maps(int I, int J) {
    std::vector<OrdMap> out;
    if (I == 0) {
        OrdMap m;
        m.source = 0;
        m.target = J;
        out.push_back(m);
        return out;
    }
    if (J == 0) return out; // no maps from a nonempty ordinal to 0
    OrdMap m;
    m.source = I;
    m.target = J;
    m.values.assign(I, 1);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == I) {
            out.push_back(m);
            return;
        }
        for (int v = lo; v <= J; ++v) {
            m.values[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 1);
    return out;
}

MultiIndex block_pushforward(const MultiIndex& n, const MultiIndex& k) {
    if (mi_norm(n) != int(k.size())) throw std::invalid_argument("block_pushforward: length mismatch");
    MultiIndex out(n.size(), 0);
    int p = 0;
    for (size_t i = 0; i < n.size(); ++i)
        for (int t = 0; t < n[i]; ++t) out[i] += k[p++];
    return out;
}

std::vector<MultiIndex> multi_indices_below(const MultiIndex& bound) {
    std::vector<MultiIndex> out;
    MultiIndex m(bound.size(), 0);
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == bound.size()) {
            out.push_back(m);
            return;
        }
        for (int v = 0; v <= bound[pos]; ++v) {
            m[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<MultiIndex> cube(int K, int len) { return multi_indices_below(MultiIndex(len, K)); }

std::vector<MultiIndex> compositions(int m, int parts, int lo, int hi) {
    std::vector<MultiIndex> out;
    MultiIndex c(parts, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == parts) {
            if (rem == 0) out.push_back(c);
            return;
        }
        int remaining_min = lo * (parts - pos - 1);
        for (int v = lo; v <= hi && v <= rem - remaining_min; ++v) {
            c[pos] = v;
            rec(pos + 1, rem - v);
        }
    };
    if (parts == 0) {
        if (m == 0) out.push_back(c);
        return out;
    }
    rec(0, m);
    return out;
}

} // namespace curvco
