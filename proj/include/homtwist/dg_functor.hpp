#pragma once

#include "homtwist/dg_category.hpp"

namespace homtwist {

/// Dg functor between sealed finite dg categories, given on basis morphisms
/// by degree-0 combinations.
class DgFunctor {
public:
    DgFunctor(CategoryPtr source, CategoryPtr target, std::vector<int> objectMap);

    const FiniteDgCategory& source() const { return *source_; }
    const FiniteDgCategory& target() const { return *target_; }
    CategoryPtr sourcePtr() const { return source_; }
    CategoryPtr targetPtr() const { return target_; }
    int objectImage(int obj) const { return objectMap_.at(obj); }

    void setBasisImage(const BasisId& b, MorCombination image);

    MorCombination apply(const BasisId& b) const;
    MorCombination applyCombo(const MorCombination& m) const;

    /// nullopt when the functor axioms hold; otherwise a description of the
    /// first failure (chain map, composition, or identity).
    std::optional<std::string> checkAxioms() const;

    /// Components of the hom-level chain map hom(x, y) -> hom(Fx, Fy).
    ChainMap homChainMap(int x, int y) const;

    struct HomPairCertificate {
        int srcX, srcY;
        std::map<int, int> sourceH;
        std::map<int, int> targetH;
        bool quasiIso = false;
    };
    struct QuasiEquivalenceReport {
        bool objectsBijective = false;
        bool pass = false;
        std::vector<HomPairCertificate> pairs;
    };
    /// Hom-level quasi-isomorphism check; requires a bijective object map
    /// (throws std::invalid_argument otherwise).
    QuasiEquivalenceReport isQuasiEquivalenceOnHoms() const;

private:
    CategoryPtr source_, target_;
    std::vector<int> objectMap_;
    std::map<std::pair<int, int>, std::vector<MorCombination>> images_;  // per hom, per flat
};

DgFunctor identityFunctor(CategoryPtr cat);

/// id (x) F : L (x) C -> L (x) D for a functor F : C -> D identical on the
/// left factor. Both tensor products must be built from the same left
/// category.
DgFunctor leftTensorWith(const TensorProduct& sourceTensor, const TensorProduct& targetTensor,
                         const DgFunctor& f);

}  // namespace homtwist
