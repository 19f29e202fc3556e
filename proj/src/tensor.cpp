#include "homtwist/dg_category.hpp"

namespace homtwist {

namespace {

std::string pairLabel(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

}  // namespace

int TensorProduct::basisOf(int c, int d, int c2, int d2, int fFlat, int gFlat) const {
    auto hom = pairIndex.find({objectOf(c, d), objectOf(c2, d2)});
    if (hom == pairIndex.end()) return -1;
    auto it = hom->second.find({fFlat, gFlat});
    return it == hom->second.end() ? -1 : it->second;
}

TensorProduct tensorProduct(const FiniteDgCategory& left, const FiniteDgCategory& right) {
    if (left.field() != right.field())
        throw std::invalid_argument("tensorProduct: field mismatch");
    const Field& field = left.field();

    TensorProduct out;
    out.leftObjects = left.objectCount();
    out.rightObjects = right.objectCount();

    std::vector<std::string> objects;
    objects.reserve(static_cast<std::size_t>(out.leftObjects) * out.rightObjects);
    for (int c = 0; c < out.leftObjects; ++c)
        for (int d = 0; d < out.rightObjects; ++d)
            objects.push_back(pairLabel(left.objectLabel(c), right.objectLabel(d)));
    auto cat = std::make_shared<FiniteDgCategory>(field, std::move(objects));

    // basis: pairs (f: c -> c2, g: d -> d2), degree-major insertion for a
    // stable per-degree order, then (fFlat, gFlat)
    auto leftPairs = left.homPairs();
    auto rightPairs = right.homPairs();
    for (const auto& [c, c2] : leftPairs) {
        const HomSpace& hf = left.hom(c, c2);
        for (const auto& [d, d2] : rightPairs) {
            const HomSpace& hg = right.hom(d, d2);
            int srcObj = out.objectOf(c, d);
            int dstObj = out.objectOf(c2, d2);
            auto& index = out.pairIndex[{srcObj, dstObj}];
            std::map<int, std::vector<std::pair<int, int>>> byDegree;
            for (int ff = 0; ff < static_cast<int>(hf.basis.size()); ++ff)
                for (int gf = 0; gf < static_cast<int>(hg.basis.size()); ++gf)
                    byDegree[hf.basis[ff].degree + hg.basis[gf].degree].emplace_back(ff, gf);
            for (const auto& [deg, elts] : byDegree) {
                for (const auto& [ff, gf] : elts) {
                    std::string label = hf.basis[ff].label + " (x) " + hg.basis[gf].label;
                    int flat = cat->addBasisElement(srcObj, dstObj, label, deg);
                    index[{ff, gf}] = flat;
                }
            }
        }
    }

    // differential: d(f (x) g) = df (x) g + (-1)^{|f|} f (x) dg
    for (const auto& [c, c2] : leftPairs) {
        const HomSpace& hf = left.hom(c, c2);
        for (const auto& [d, d2] : rightPairs) {
            const HomSpace& hg = right.hom(d, d2);
            int srcObj = out.objectOf(c, d);
            int dstObj = out.objectOf(c2, d2);
            for (int ff = 0; ff < static_cast<int>(hf.basis.size()); ++ff) {
                MorCombination df = left.differentialOf(BasisId{c, c2, ff});
                for (int gf = 0; gf < static_cast<int>(hg.basis.size()); ++gf) {
                    int from = out.basisOf(c, d, c2, d2, ff, gf);
                    for (const auto& [dff, coeff] : df.terms) {
                        int to = out.basisOf(c, d, c2, d2, dff, gf);
                        cat->addDifferentialTerm(BasisId{srcObj, dstObj, from},
                                                 BasisId{srcObj, dstObj, to}, coeff);
                    }
                    MorCombination dg = right.differentialOf(BasisId{d, d2, gf});
                    FieldScalar sign =
                        FieldScalar::ofInt(field, hf.basis[ff].degree % 2 == 0 ? 1 : -1);
                    for (const auto& [dgf, coeff] : dg.terms) {
                        int to = out.basisOf(c, d, c2, d2, ff, dgf);
                        cat->addDifferentialTerm(BasisId{srcObj, dstObj, from},
                                                 BasisId{srcObj, dstObj, to}, coeff * sign);
                    }
                }
            }
        }
    }

    // composition with the Koszul sign:
    // (f2 (x) g2) o (f1 (x) g1) = (-1)^{|g2||f1|} (f2 o f1) (x) (g2 o g1)
    for (const auto& [c, c2] : leftPairs) {
        const HomSpace& hf1 = left.hom(c, c2);
        for (const auto& [cc, c3] : leftPairs) {
            if (cc != c2) continue;
            const HomSpace& hf2 = left.hom(c2, c3);
            for (const auto& [d, d2] : rightPairs) {
                const HomSpace& hg1 = right.hom(d, d2);
                for (const auto& [dd, d3] : rightPairs) {
                    if (dd != d2) continue;
                    const HomSpace& hg2 = right.hom(d2, d3);
                    for (int f2 = 0; f2 < static_cast<int>(hf2.basis.size()); ++f2) {
                        for (int f1 = 0; f1 < static_cast<int>(hf1.basis.size()); ++f1) {
                            MorCombination fcomp =
                                left.compose(BasisId{c2, c3, f2}, BasisId{c, c2, f1});
                            if (fcomp.isZero()) continue;
                            for (int g2 = 0; g2 < static_cast<int>(hg2.basis.size()); ++g2) {
                                FieldScalar sign = FieldScalar::ofInt(
                                    field,
                                    (hg2.basis[g2].degree * hf1.basis[f1].degree) % 2 == 0 ? 1 : -1);
                                for (int g1 = 0; g1 < static_cast<int>(hg1.basis.size()); ++g1) {
                                    MorCombination gcomp =
                                        right.compose(BasisId{d2, d3, g2}, BasisId{d, d2, g1});
                                    if (gcomp.isZero()) continue;
                                    MorCombination result;
                                    result.src = out.objectOf(c, d);
                                    result.dst = out.objectOf(c3, d3);
                                    for (const auto& [fr, fc] : fcomp.terms)
                                        for (const auto& [gr, gc] : gcomp.terms)
                                            result.addTerm(out.basisOf(c, d, c3, d3, fr, gr),
                                                           fc * gc * sign);
                                    cat->setComposition(
                                        BasisId{out.objectOf(c2, d2), out.objectOf(c3, d3),
                                                out.basisOf(c2, d2, c3, d3, f2, g2)},
                                        BasisId{out.objectOf(c, d), out.objectOf(c2, d2),
                                                out.basisOf(c, d, c2, d2, f1, g1)},
                                        std::move(result));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    for (int c = 0; c < out.leftObjects; ++c)
        for (int d = 0; d < out.rightObjects; ++d) {
            int obj = out.objectOf(c, d);
            int flat = out.basisOf(c, d, c, d, left.identity(c).flat, right.identity(d).flat);
            cat->setIdentity(obj, BasisId{obj, obj, flat});
        }

    cat->seal();
    out.category = cat;
    return out;
}

}  // namespace homtwist
