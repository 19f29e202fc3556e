#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homtwist/chain.hpp"

namespace homtwist {

/// A basis morphism of a finite dg category: source object, target object,
/// flat index into the hom basis.
struct BasisId {
    int src = -1;
    int dst = -1;
    int flat = -1;
    bool operator==(const BasisId& o) const { return src == o.src && dst == o.dst && flat == o.flat; }
    bool operator<(const BasisId& o) const {
        if (src != o.src) return src < o.src;
        if (dst != o.dst) return dst < o.dst;
        return flat < o.flat;
    }
};

/// Linear combination of basis morphisms in a single hom space.
struct MorCombination {
    int src = -1;
    int dst = -1;
    std::vector<std::pair<int, FieldScalar>> terms;  // (flat, coeff), sorted by flat

    bool isZero() const { return terms.empty(); }
    void addTerm(int flat, const FieldScalar& c);
    MorCombination& operator+=(const MorCombination& o);
    MorCombination scaled(const FieldScalar& c) const;
    bool operator==(const MorCombination& o) const;
};

struct HomBasisElt {
    std::string label;
    int degree = 0;
    int indexInDegree = 0;
};

/// Basis data of one hom complex.
struct HomSpace {
    std::vector<HomBasisElt> basis;            // flat order
    std::map<int, std::vector<int>> byDegree;  // degree -> flat ids in order
    std::map<std::string, int> byLabel;
    ChainComplex complex;                      // indexed by (degree, indexInDegree)

    explicit HomSpace(const Field& f) : complex(f) {}
    int dimAtDegree(int d) const;
};

/// Object order certifying finite word bases: every non-identity basis
/// morphism strictly increases the rank, and hom(x,x) is spanned by the
/// identity alone.
struct DirectednessWitness {
    std::vector<int> rank;  // per object index
};

struct AxiomCheck {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::string firstCounterexample;
};

struct ValidationReport {
    std::vector<std::string> structuralErrors;
    std::vector<AxiomCheck> axioms;
    bool structuralOk() const { return structuralErrors.empty(); }
    bool allPass() const;
    const AxiomCheck* axiom(const std::string& name) const;
};

/// Finite dg category given by explicit bases, differentials, and
/// composition structure constants. Build with the mutating calls, then
/// seal(); sealed categories are immutable.
class FiniteDgCategory {
public:
    FiniteDgCategory(const Field& f, std::vector<std::string> objects);

    const Field& field() const { return field_; }
    int objectCount() const { return static_cast<int>(objects_.size()); }
    const std::string& objectLabel(int i) const { return objects_[i]; }
    int objectIndex(const std::string& label) const;  // -1 when absent

    // --- construction ---
    int addBasisElement(int src, int dst, const std::string& label, int degree);
    /// Accumulates coeff * to into d(from); from/to by flat index.
    void addDifferentialTerm(const BasisId& from, const BasisId& to, const FieldScalar& coeff);
    void setComposition(const BasisId& g, const BasisId& f, MorCombination result);
    void setIdentity(int obj, const BasisId& id);
    /// Builds hom complexes and fills implied identity compositions. Throws
    /// std::invalid_argument on malformed structure (input errors).
    void seal();
    bool sealed() const { return sealed_; }

    // --- queries (sealed) ---
    bool hasHom(int x, int y) const;
    const HomSpace& hom(int x, int y) const;  // empty static when absent
    int homDim(int x, int y) const;
    const HomBasisElt& basisElt(const BasisId& b) const;
    int degreeOf(const BasisId& b) const { return basisElt(b).degree; }
    const std::string& labelOf(const BasisId& b) const { return basisElt(b).label; }
    BasisId identity(int obj) const;
    bool isIdentity(const BasisId& b) const;

    MorCombination zeroCombination(int src, int dst) const;
    MorCombination basisCombination(const BasisId& b) const;

    /// Structure constants; identity pairs are materialized at seal().
    MorCombination compose(const BasisId& g, const BasisId& f) const;
    MorCombination composeCombos(const MorCombination& g, const MorCombination& f) const;

    MorCombination differentialOf(const BasisId& b) const;
    MorCombination differentialOfCombo(const MorCombination& m) const;

    /// Degree of a homogeneous combination (throws on mixed degrees).
    int degreeOfCombo(const MorCombination& m) const;

    std::string describeCombo(const MorCombination& m) const;

    /// All (x, y) pairs with nonzero hom, in order.
    std::vector<std::pair<int, int>> homPairs() const;

    std::optional<DirectednessWitness> directednessWitness(std::string* whyNot = nullptr) const;

    /// Exhaustive axiom sweep: d^2, units, Leibniz, associativity.
    ValidationReport validate() const;

private:
    void requireSealed() const;
    void requireUnsealed() const;
    HomSpace& homMutable(int x, int y);
    static std::uint64_t compKey(const BasisId& g, const BasisId& f);

    Field field_;
    std::vector<std::string> objects_;
    std::map<std::string, int> objectIndex_;
    std::map<std::pair<int, int>, HomSpace> homs_;
    std::unordered_map<std::uint64_t, MorCombination> comp_;
    std::vector<int> identityFlat_;  // per object, -1 until set
    // differential accumulation before seal: (src,dst) -> list of (fromFlat, toFlat, coeff)
    std::map<std::pair<int, int>, std::vector<std::tuple<int, int, FieldScalar>>> pendingDiff_;
    bool sealed_ = false;
};

using CategoryPtr = std::shared_ptr<const FiniteDgCategory>;

/// The poset 0 < 1 < ... < n linearized over the field: hom(i, j) is
/// one-dimensional in degree 0 for i <= j and zero otherwise.
CategoryPtr interval(int n, const Field& f);
/// Label of the unique basis morphism i -> j.
std::string intervalLabel(int i, int j);

/// Classical tensor product with index maps for objects and basis pairs.
struct TensorProduct {
    CategoryPtr category;
    int leftObjects = 0;
    int rightObjects = 0;

    int objectOf(int c, int d) const { return c * rightObjects + d; }
    /// Flat index of (fFlat x gFlat) inside hom((c,d),(c2,d2)); -1 if absent.
    int basisOf(int c, int d, int c2, int d2, int fFlat, int gFlat) const;

    std::map<std::pair<int, int>, std::map<std::pair<int, int>, int>> pairIndex;
};
TensorProduct tensorProduct(const FiniteDgCategory& left, const FiniteDgCategory& right);

}  // namespace homtwist
