#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homtwist/linalg.hpp"

namespace homtwist {

/// Finite-support cochain complex; the differential raises degree by one.
/// diff(d) has shape dim(d+1) x dim(d).
class ChainComplex {
public:
    explicit ChainComplex(const Field& f) : field_(f) {}

    const Field& field() const { return field_; }

    void setDim(int degree, int dim);
    int dim(int degree) const;
    const std::map<int, int>& dims() const { return dims_; }
    int totalDim() const;

    void setDifferential(int degree, SparseMatrix m);
    /// Zero matrix of the right shape when unset.
    SparseMatrix differential(int degree) const;
    bool hasDifferential(int degree) const { return diffs_.count(degree) > 0; }

    void setLabels(int degree, std::vector<std::string> labels);
    const std::vector<std::string>& labels(int degree) const;

    int minDegree() const;
    int maxDegree() const;

    /// Shape consistency; throws on violation.
    void validateShapes() const;
    /// First degree d with diff(d+1) * diff(d) != 0, if any.
    std::optional<int> dSquaredViolation() const;

    long long eulerCharacteristic() const;

    struct Cohomology {
        std::map<int, int> dims;
        /// Cocycle representatives per degree, reduced modulo the image;
        /// deterministic choice.
        std::map<int, std::vector<SparseVector>> representatives;
    };
    /// Throws std::invalid_argument when d^2 != 0.
    Cohomology cohomology() const;

    bool operator==(const ChainComplex& o) const;

private:
    Field field_;
    std::map<int, int> dims_;
    std::map<int, SparseMatrix> diffs_;
    std::map<int, std::vector<std::string>> labels_;
};

/// Degreewise map of complexes, commuting with the differentials.
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target)
        : source_(std::move(source)), target_(std::move(target)) {}

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }

    void setComponent(int degree, SparseMatrix m);
    SparseMatrix component(int degree) const;

    /// First degree where target.diff * f != f * source.diff, if any.
    std::optional<int> commutationViolation() const;

    struct Induced {
        std::map<int, SparseMatrix> onCohomology;  // per degree, H(tgt) x H(src)
        bool isQuasiIso = false;
        std::map<int, int> sourceH;
        std::map<int, int> targetH;
    };
    /// Throws std::invalid_argument (reporting the first violating degree)
    /// when the map is not a chain map.
    Induced inducedOnCohomology() const;

private:
    ChainComplex source_, target_;
    std::map<int, SparseMatrix> components_;
};

}  // namespace homtwist
