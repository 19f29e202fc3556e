#include "homtwist/dg_functor.hpp"

#include <algorithm>

namespace homtwist {

DgFunctor::DgFunctor(CategoryPtr source, CategoryPtr target, std::vector<int> objectMap)
    : source_(std::move(source)), target_(std::move(target)), objectMap_(std::move(objectMap)) {
    if (!source_ || !target_) throw std::invalid_argument("DgFunctor: null category");
    if (static_cast<int>(objectMap_.size()) != source_->objectCount())
        throw std::invalid_argument("DgFunctor: object map size mismatch");
    for (int img : objectMap_)
        if (img < 0 || img >= target_->objectCount())
            throw std::invalid_argument("DgFunctor: object image out of range");
}

void DgFunctor::setBasisImage(const BasisId& b, MorCombination image) {
    const auto& elt = source_->basisElt(b);
    int tx = objectMap_[b.src], ty = objectMap_[b.dst];
    if (!image.isZero()) {
        if (image.src != tx || image.dst != ty)
            throw std::invalid_argument("DgFunctor::setBasisImage: image in wrong hom for '" +
                                        elt.label + "'");
        if (target_->degreeOfCombo(image) != elt.degree)
            throw std::invalid_argument("DgFunctor::setBasisImage: image degree mismatch for '" +
                                        elt.label + "'");
    } else {
        image.src = tx;
        image.dst = ty;
    }
    auto& vec = images_[{b.src, b.dst}];
    if (vec.empty()) vec.resize(source_->homDim(b.src, b.dst));
    vec.at(b.flat) = std::move(image);
}

MorCombination DgFunctor::apply(const BasisId& b) const {
    auto it = images_.find({b.src, b.dst});
    if (it == images_.end() || it->second.empty())
        return target_->zeroCombination(objectMap_[b.src], objectMap_[b.dst]);
    MorCombination out = it->second.at(b.flat);
    if (out.src == -1) {
        out.src = objectMap_[b.src];
        out.dst = objectMap_[b.dst];
    }
    return out;
}

MorCombination DgFunctor::applyCombo(const MorCombination& m) const {
    if (m.isZero() && m.src == -1) return m;
    MorCombination out = target_->zeroCombination(objectMap_[m.src], objectMap_[m.dst]);
    for (const auto& [flat, c] : m.terms)
        out += apply(BasisId{m.src, m.dst, flat}).scaled(c);
    return out;
}

std::optional<std::string> DgFunctor::checkAxioms() const {
    for (int i = 0; i < source_->objectCount(); ++i) {
        MorCombination img = apply(source_->identity(i));
        if (!(img == target_->basisCombination(target_->identity(objectMap_[i]))))
            return "identity of '" + source_->objectLabel(i) + "' is not sent to an identity";
    }
    auto pairs = source_->homPairs();
    for (const auto& [x, y] : pairs) {
        const HomSpace& h = source_->hom(x, y);
        for (int flat = 0; flat < static_cast<int>(h.basis.size()); ++flat) {
            BasisId b{x, y, flat};
            MorCombination lhs = applyCombo(source_->differentialOf(b));
            MorCombination rhs = target_->differentialOfCombo(apply(b));
            if (!(lhs == rhs))
                return "does not commute with d on '" + h.basis[flat].label + "'";
        }
    }
    for (const auto& [x, y] : pairs) {
        for (const auto& [y2, z] : pairs) {
            if (y2 != y) continue;
            const HomSpace& hf = source_->hom(x, y);
            const HomSpace& hg = source_->hom(y, z);
            for (int gf = 0; gf < static_cast<int>(hg.basis.size()); ++gf)
                for (int ff = 0; ff < static_cast<int>(hf.basis.size()); ++ff) {
                    BasisId g{y, z, gf}, f{x, y, ff};
                    MorCombination lhs = applyCombo(source_->compose(g, f));
                    MorCombination rhs = target_->composeCombos(apply(g), apply(f));
                    if (!(lhs == rhs))
                        return "does not preserve composition on ('" + hg.basis[gf].label +
                               "', '" + hf.basis[ff].label + "')";
                }
        }
    }
    return std::nullopt;
}

ChainMap DgFunctor::homChainMap(int x, int y) const {
    const HomSpace& hs = source_->hom(x, y);
    const HomSpace& ht = target_->hom(objectMap_[x], objectMap_[y]);
    ChainMap map(hs.complex, ht.complex);
    std::map<int, SparseMatrix> mats;
    for (const auto& [deg, flats] : hs.byDegree)
        mats.emplace(deg, SparseMatrix(ht.dimAtDegree(deg), static_cast<int>(flats.size()),
                                       source_->field()));
    for (const auto& [deg, flats] : hs.byDegree) {
        SparseMatrix& m = mats.at(deg);
        for (int col = 0; col < static_cast<int>(flats.size()); ++col) {
            MorCombination img = apply(BasisId{x, y, flats[col]});
            for (const auto& [tf, c] : img.terms) m.addTo(ht.basis[tf].indexInDegree, col, c);
        }
    }
    for (auto& [deg, m] : mats) map.setComponent(deg, std::move(m));
    return map;
}

DgFunctor::QuasiEquivalenceReport DgFunctor::isQuasiEquivalenceOnHoms() const {
    QuasiEquivalenceReport rep;
    std::vector<int> seen(target_->objectCount(), 0);
    for (int img : objectMap_) ++seen[img];
    rep.objectsBijective = source_->objectCount() == target_->objectCount() &&
                           std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    if (!rep.objectsBijective)
        throw std::invalid_argument(
            "isQuasiEquivalenceOnHoms: functor is not bijective on objects");

    rep.pass = true;
    // every pair with content on either side
    std::map<std::pair<int, int>, bool> pairs;
    for (const auto& [x, y] : source_->homPairs()) pairs[{x, y}] = true;
    for (const auto& [tx, ty] : target_->homPairs()) {
        // pull back through the object bijection
        int x = -1, y = -1;
        for (int i = 0; i < source_->objectCount(); ++i) {
            if (objectMap_[i] == tx) x = i;
            if (objectMap_[i] == ty) y = i;
        }
        pairs[{x, y}] = true;
    }
    for (const auto& [key, unused] : pairs) {
        (void)unused;
        auto [x, y] = key;
        ChainMap cm = homChainMap(x, y);
        auto induced = cm.inducedOnCohomology();
        HomPairCertificate cert;
        cert.srcX = x;
        cert.srcY = y;
        cert.sourceH = induced.sourceH;
        cert.targetH = induced.targetH;
        cert.quasiIso = induced.isQuasiIso;
        if (!cert.quasiIso) rep.pass = false;
        rep.pairs.push_back(std::move(cert));
    }
    return rep;
}

DgFunctor identityFunctor(CategoryPtr cat) {
    std::vector<int> objectMap(cat->objectCount());
    for (int i = 0; i < cat->objectCount(); ++i) objectMap[i] = i;
    DgFunctor f(cat, cat, std::move(objectMap));
    for (const auto& [x, y] : cat->homPairs()) {
        int dim = cat->homDim(x, y);
        for (int flat = 0; flat < dim; ++flat)
            f.setBasisImage(BasisId{x, y, flat}, cat->basisCombination(BasisId{x, y, flat}));
    }
    return f;
}

DgFunctor leftTensorWith(const TensorProduct& sourceTensor, const TensorProduct& targetTensor,
                         const DgFunctor& f) {
    if (sourceTensor.leftObjects != targetTensor.leftObjects)
        throw std::invalid_argument("leftTensorWith: left factors differ");
    const FiniteDgCategory& src = *sourceTensor.category;
    const FiniteDgCategory& tgt = *targetTensor.category;
    int rightSrc = sourceTensor.rightObjects;

    std::vector<int> objectMap(src.objectCount());
    for (int c = 0; c < sourceTensor.leftObjects; ++c)
        for (int d = 0; d < rightSrc; ++d)
            objectMap[sourceTensor.objectOf(c, d)] = targetTensor.objectOf(c, f.objectImage(d));

    DgFunctor out(sourceTensor.category, targetTensor.category, std::move(objectMap));

    // basis (m (x) g) maps to m (x) F(g); recover the (m, g) pair from the
    // tensor index maps
    for (const auto& [key, index] : sourceTensor.pairIndex) {
        auto [srcObj, dstObj] = key;
        int c = srcObj / rightSrc, d = srcObj % rightSrc;
        int c2 = dstObj / rightSrc, d2 = dstObj % rightSrc;
        for (const auto& [fg, flat] : index) {
            auto [mFlat, gFlat] = fg;
            MorCombination gImg = f.apply(BasisId{d, d2, gFlat});
            MorCombination img = tgt.zeroCombination(out.objectImage(srcObj), out.objectImage(dstObj));
            for (const auto& [tf, coeff] : gImg.terms) {
                int tflat = targetTensor.basisOf(c, f.objectImage(d), c2, f.objectImage(d2), mFlat, tf);
                if (tflat < 0)
                    throw std::logic_error("leftTensorWith: missing target basis element");
                img.addTerm(tflat, coeff);
            }
            out.setBasisImage(BasisId{srcObj, dstObj, flat}, std::move(img));
        }
    }
    return out;
}

}  // namespace homtwist
