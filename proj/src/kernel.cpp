#include "curvco/kernel.hpp"

#include <stdexcept>

namespace curvco {

namespace {

struct TermEntry {
    int64_t coeff;
    const BasisEl* el; // target element of the factor
    Bidegree bd;       // its bidegree
    int idx;           // its index within that bidegree
};

} // namespace

void MapBuilder::add_factors(const std::vector<Factor>& factors, int64_t coeff, int src_tag,
                             int tgt_tag, bool allow_drop) {
    const CoeffRing& R = out_.ring();
    const Space& S = *out_.src();
    const Space& T = *out_.tgt();

    const bool src_product = S.kind() == Space::Kind::Product;
    const bool tgt_product = T.kind() == Space::Kind::Product;

    // Resolve which source tag we iterate.
    int stag = src_tag;
    if (stag < 0) {
        if (S.tag_count() != 1)
            throw std::invalid_argument("add_factors: ambiguous source tag");
        stag = 0;
    }
    int total_consume = 0;
    for (auto& f : factors) total_consume += f.consume;
    if (src_product) {
        if (total_consume != int(S.factors().size()))
            throw std::invalid_argument("add_factors: product source arity mismatch");
        for (auto& f : factors)
            if (f.consume != 1)
                throw std::invalid_argument("add_factors: product sources consume one slot per factor");
    } else if (total_consume != S.tag_arity(stag)) {
        throw std::invalid_argument("add_factors: factor arities do not sum to the source arity");
    }

    // Per-factor source resolution: either the factor source is a tuple space
    // over the same letters (subword lookup), or the ambient letters are whole
    // basis elements of the factor source (decode one letter, consume == 1).
    std::vector<int> fsrc_tag(factors.size(), 0);
    std::vector<bool> fsrc_decode(factors.size(), false);
    for (size_t p = 0; p < factors.size(); ++p) {
        const Space& FS = *factors[p].map->src();
        if (src_product) continue; // resolved via the product factor's global elements
        if (FS.kind() == Space::Kind::Tuple &&
            (factors[p].consume == 0 ||
             (FS.alphabet() && S.alphabet() && FS.alphabet()->deg == S.alphabet()->deg))) {
            auto t = FS.tag_of_arity(factors[p].consume);
            if (t) {
                fsrc_tag[p] = *t;
                continue;
            }
        }
        const AlphabetPtr& aa = S.alphabet();
        if (factors[p].consume == 1 && aa && aa->origin && aa->origin->module() == FS.module()) {
            fsrc_decode[p] = true;
            continue;
        }
        throw std::invalid_argument("add_factors: cannot resolve factor source against ambient letters");
    }
    // Per-factor target assembly: concat words over the same letters, or
    // encode the whole factor-target element as one ambient letter.
    std::vector<bool> ftgt_encode(factors.size(), false);
    for (size_t p = 0; p < factors.size(); ++p) {
        if (tgt_product) continue;
        const Space& FT = *factors[p].map->tgt();
        if (FT.is_unit()) continue; // contributes no letters
        if (FT.kind() == Space::Kind::Tuple && FT.alphabet() && T.alphabet() &&
            FT.alphabet()->deg == T.alphabet()->deg)
            continue;
        const AlphabetPtr& ta = T.alphabet();
        if (ta && ta->origin && ta->origin->module() == FT.module()) {
            ftgt_encode[p] = true;
            continue;
        }
        throw std::invalid_argument("add_factors: cannot resolve factor target against ambient letters");
    }

    for (auto& [bd, els] : out_.src()->module().ranks()) {
        (void)els;
        const auto& basis = S.elements(bd);
        for (int row = 0; row < int(basis.size()); ++row) {
            const BasisEl& el = basis[row];
            if (!src_product && el.tag != stag) continue;

            // Split the word into factor segments; resolve each in its factor source.
            std::vector<std::vector<TermEntry>> options(factors.size());
            std::vector<int> seg_z(factors.size(), 0);
            bool dead = false;
            int pos = 0;
            for (size_t p = 0; p < factors.size() && !dead; ++p) {
                const GradedMap& fm = *factors[p].map;
                const Space& FS = *fm.src();
                Bidegree sbd{0, 0};
                int sidx = -1;
                if (src_product) {
                    int gi = el.word[pos];
                    const Space& PF = *S.factors()[pos];
                    if (!(PF.module() == FS.module()))
                        throw std::invalid_argument("add_factors: product factor/source mismatch");
                    auto ge = PF.global_element(gi);
                    sbd = ge.first;
                    sidx = ge.second;
                    pos += 1;
                } else if (fsrc_decode[p]) {
                    int letter = el.word[pos];
                    pos += 1;
                    auto ge = S.alphabet()->origin->global_element(letter);
                    sbd = ge.first;
                    sidx = ge.second;
                } else {
                    BasisEl seg;
                    seg.tag = fsrc_tag[p];
                    seg.word.assign(el.word.begin() + pos, el.word.begin() + pos + factors[p].consume);
                    pos += factors[p].consume;
                    for (int l : seg.word) sbd = sbd + Bidegree{S.letter_z(l), S.letter_w(l)};
                    auto idx = FS.index_of(sbd, seg);
                    if (!idx) {
                        dead = true; // outside the factor's (possibly capped) source: zero
                        break;
                    }
                    sidx = *idx;
                }
                seg_z[p] = sbd.z;
                if (!fm.has_block(sbd)) {
                    dead = true;
                    break;
                }
                const Mat& blk = fm.blocks().at(sbd);
                Bidegree tbd = sbd.shifted_z(fm.degree());
                const auto& tEls = fm.tgt()->elements(tbd);
                auto& opt = options[p];
                for (int j = 0; j < blk.cols(); ++j) {
                    int64_t c = blk.at(sidx, j);
                    if (c != 0) opt.push_back(TermEntry{c, &tEls[j], tbd, j});
                }
                if (opt.empty()) dead = true;
            }
            if (dead) continue;

            // Koszul sign from moving each factor past the later segments.
            int sign_exp = 0;
            for (size_t p = 0; p < factors.size(); ++p) {
                int d = factors[p].map->degree();
                if (d % 2 == 0) continue;
                for (size_t q = p + 1; q < factors.size(); ++q) sign_exp += seg_z[q];
            }
            int64_t base = (sign_exp % 2 == 0) ? coeff : R.neg(coeff);

            // Distribute over the nonzero entries of every factor.
            std::vector<size_t> pick(factors.size(), 0);
            while (true) {
                int64_t c = base;
                std::vector<int> tword;
                bool ok = true;
                for (size_t p = 0; p < factors.size(); ++p) {
                    const TermEntry& te = options[p][pick[p]];
                    c = R.mul(c, te.coeff);
                    const GradedMap& fm = *factors[p].map;
                    if (tgt_product) {
                        const Space& PT = *T.factors()[p];
                        if (!(PT.module() == fm.tgt()->module()))
                            throw std::invalid_argument("add_factors: product target mismatch");
                        tword.push_back(PT.global_index(te.bd, te.idx));
                    } else if (ftgt_encode[p]) {
                        tword.push_back(T.alphabet()->origin->global_index(te.bd, te.idx));
                    } else {
                        tword.insert(tword.end(), te.el->word.begin(), te.el->word.end());
                    }
                    (void)ok;
                }
                // Resolve the assembled target element.
                BasisEl tel;
                if (tgt_product) {
                    tel.tag = 0;
                } else if (tgt_tag >= 0) {
                    tel.tag = tgt_tag;
                } else {
                    auto t = T.tag_of_arity(int(tword.size()));
                    if (!t) throw std::invalid_argument("add_factors: ambiguous target tag");
                    tel.tag = *t;
                }
                tel.word = std::move(tword);
                Bidegree tb{0, 0};
                if (tgt_product) {
                    for (size_t p = 0; p < factors.size(); ++p) tb = tb + options[p][pick[p]].bd;
                } else {
                    tb = T.tuple_bidegree(tel.word);
                }
                auto col = T.index_of(tb, tel);
                if (!col) {
                    if (!allow_drop) throw std::logic_error("add_factors: target element not in basis");
                } else {
                    out_.add_entry(bd, row, *col, c);
                }
                // advance multi-index
                size_t p = 0;
                for (; p < factors.size(); ++p) {
                    if (++pick[p] < options[p].size()) break;
                    pick[p] = 0;
                }
                if (p == factors.size()) break;
            }
        }
    }
}

GradedMap tensor(const GradedMap& f, const GradedMap& g) { return tensor_many({&f, &g}); }

GradedMap tensor_many(const std::vector<const GradedMap*>& fs) {
    if (fs.empty()) throw std::invalid_argument("tensor_many: no factors");
    const CoeffRing& R = fs[0]->ring();
    std::vector<SpacePtr> srcs, tgts;
    std::vector<Factor> factors;
    int deg = 0;
    for (auto* f : fs) {
        srcs.push_back(f->src());
        tgts.push_back(f->tgt());
        factors.push_back(Factor{f, 1});
        deg += f->degree();
    }
    MapBuilder b(R, Space::product(std::move(srcs)), Space::product(std::move(tgts)), deg);
    b.add_factors(factors);
    return b.take();
}

GradedMap inject_tag(CoeffRing r, const SpacePtr& words, int tag) {
    SpacePtr p = Space::power(words->alphabet(), words->tag_arity(tag), -1);
    // keep only the words present in the capped target
    GradedMap f(r, p, words, 0);
    for (auto& [bd, rk] : p->module().ranks()) {
        (void)rk;
        const auto& els = p->elements(bd);
        for (int i = 0; i < int(els.size()); ++i) {
            auto j = words->index_of(bd, BasisEl{tag, els[i].word});
            if (j) f.add_entry(bd, i, *j, 1);
        }
    }
    return f;
}

GradedMap project_tag(CoeffRing r, const SpacePtr& words, int tag) {
    SpacePtr p = Space::power(words->alphabet(), words->tag_arity(tag), -1);
    GradedMap f(r, words, p, 0);
    for (auto& [bd, rk] : words->module().ranks()) {
        (void)rk;
        const auto& els = words->elements(bd);
        for (int i = 0; i < int(els.size()); ++i) {
            if (els[i].tag != tag) continue;
            auto j = p->index_of(bd, BasisEl{0, els[i].word});
            if (j) f.add_entry(bd, i, *j, 1);
        }
    }
    return f;
}

SpacePtr power_of(const SpacePtr& carrier, int n, int wcap) {
    return Space::power(alphabet_of_space(carrier), n, wcap);
}

} // namespace curvco
