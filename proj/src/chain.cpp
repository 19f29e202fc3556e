#include "homtwist/chain.hpp"

#include <stdexcept>

namespace homtwist {

void ChainComplex::setDim(int degree, int dim) {
    if (dim < 0) throw std::invalid_argument("ChainComplex::setDim negative");
    if (dim == 0)
        dims_.erase(degree);
    else
        dims_[degree] = dim;
}

int ChainComplex::dim(int degree) const {
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
}

int ChainComplex::totalDim() const {
    int t = 0;
    for (const auto& [d, n] : dims_) t += n;
    return t;
}

void ChainComplex::setDifferential(int degree, SparseMatrix m) {
    if (m.rows() != dim(degree + 1) || m.cols() != dim(degree))
        throw std::invalid_argument("ChainComplex::setDifferential shape mismatch at degree " +
                                    std::to_string(degree));
    if (m.isZero())
        diffs_.erase(degree);
    else
        diffs_[degree] = std::move(m);
}

SparseMatrix ChainComplex::differential(int degree) const {
    auto it = diffs_.find(degree);
    if (it != diffs_.end()) return it->second;
    return SparseMatrix(dim(degree + 1), dim(degree), field_);
}

void ChainComplex::setLabels(int degree, std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != dim(degree))
        throw std::invalid_argument("ChainComplex::setLabels size mismatch");
    labels_[degree] = std::move(labels);
}

const std::vector<std::string>& ChainComplex::labels(int degree) const {
    static const std::vector<std::string> kEmpty;
    auto it = labels_.find(degree);
    return it == labels_.end() ? kEmpty : it->second;
}

int ChainComplex::minDegree() const {
    return dims_.empty() ? 0 : dims_.begin()->first;
}

int ChainComplex::maxDegree() const {
    return dims_.empty() ? 0 : dims_.rbegin()->first;
}

void ChainComplex::validateShapes() const {
    for (const auto& [d, m] : diffs_) {
        if (m.rows() != dim(d + 1) || m.cols() != dim(d))
            throw std::invalid_argument("ChainComplex: differential shape mismatch at degree " +
                                        std::to_string(d));
        if (m.field() != field_)
            throw std::invalid_argument("ChainComplex: differential field mismatch");
    }
}

std::optional<int> ChainComplex::dSquaredViolation() const {
    for (const auto& [d, m] : diffs_) {
        if (diffs_.count(d + 1) == 0) continue;
        if (!diffs_.at(d + 1).multiply(m).isZero()) return d;
    }
    return std::nullopt;
}

long long ChainComplex::eulerCharacteristic() const {
    long long chi = 0;
    for (const auto& [d, n] : dims_) chi += (d % 2 == 0) ? n : -n;
    return chi;
}

ChainComplex::Cohomology ChainComplex::cohomology() const {
    validateShapes();
    if (auto bad = dSquaredViolation())
        throw std::invalid_argument("ChainComplex::cohomology: d^2 != 0 at degree " +
                                    std::to_string(*bad));
    Cohomology h;
    for (const auto& [d, n] : dims_) {
        SparseMatrix out = differential(d);        // degree d -> d+1
        SparseMatrix in = differential(d - 1);     // degree d-1 -> d

        auto kernel = out.kernelBasis();
        RowSpace image(n, field_);
        for (int c = 0; c < in.cols(); ++c) image.insert(in.column(c));

        int hdim = static_cast<int>(kernel.size()) - image.rank();
        if (hdim < 0) throw std::logic_error("ChainComplex::cohomology: negative dimension");
        if (hdim == 0) continue;
        h.dims[d] = hdim;

        // Representatives: kernel vectors (deterministic order) whose
        // reductions modulo the image stay independent.
        RowSpace span(n, field_);
        for (int c = 0; c < in.cols(); ++c) span.insert(in.column(c));
        std::vector<SparseVector> reps;
        for (const auto& k : kernel) {
            if (static_cast<int>(reps.size()) == hdim) break;
            SparseVector reduced = image.reduce(k);
            if (span.insert(reduced)) reps.push_back(std::move(reduced));
        }
        if (static_cast<int>(reps.size()) != hdim)
            throw std::logic_error("ChainComplex::cohomology: representative selection failed");
        h.representatives[d] = std::move(reps);
    }
    return h;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (field_ != o.field_ || dims_ != o.dims_) return false;
    for (const auto& [d, n] : dims_) {
        (void)n;
        if (!(differential(d) == o.differential(d))) return false;
    }
    return true;
}

void ChainMap::setComponent(int degree, SparseMatrix m) {
    if (m.rows() != target_.dim(degree) || m.cols() != source_.dim(degree))
        throw std::invalid_argument("ChainMap::setComponent shape mismatch at degree " +
                                    std::to_string(degree));
    if (m.isZero())
        components_.erase(degree);
    else
        components_[degree] = std::move(m);
}

SparseMatrix ChainMap::component(int degree) const {
    auto it = components_.find(degree);
    if (it != components_.end()) return it->second;
    return SparseMatrix(target_.dim(degree), source_.dim(degree), source_.field());
}

std::optional<int> ChainMap::commutationViolation() const {
    // degrees where either side could be nonzero
    std::map<int, bool> degrees;
    for (const auto& [d, n] : source_.dims()) degrees[d] = true, (void)n;
    for (const auto& [d, n] : target_.dims()) degrees[d] = true, (void)n;
    for (const auto& [d, unused] : degrees) {
        (void)unused;
        SparseMatrix lhs = target_.differential(d).multiply(component(d));
        SparseMatrix rhs = component(d + 1).multiply(source_.differential(d));
        if (!(lhs == rhs)) return d;
    }
    return std::nullopt;
}

ChainMap::Induced ChainMap::inducedOnCohomology() const {
    if (auto bad = commutationViolation())
        throw std::invalid_argument("ChainMap: does not commute with differentials at degree " +
                                    std::to_string(*bad));
    auto hs = source_.cohomology();
    auto ht = target_.cohomology();

    Induced out;
    out.sourceH = hs.dims;
    out.targetH = ht.dims;
    out.isQuasiIso = true;

    std::map<int, bool> degrees;
    for (const auto& [d, n] : hs.dims) degrees[d] = true, (void)n;
    for (const auto& [d, n] : ht.dims) degrees[d] = true, (void)n;

    for (const auto& [d, unused] : degrees) {
        (void)unused;
        int sdim = hs.dims.count(d) ? hs.dims.at(d) : 0;
        int tdim = ht.dims.count(d) ? ht.dims.at(d) : 0;
        SparseMatrix m(tdim, sdim, source_.field());
        if (sdim > 0 && tdim > 0) {
            // coordinates of f(rep) over (image basis, representative basis)
            RowSpace space(target_.dim(d), source_.field());
            SparseMatrix in = target_.differential(d - 1);
            int imageRank = 0;
            for (int c = 0; c < in.cols(); ++c)
                if (space.insert(in.column(c))) ++imageRank;
            for (const auto& rep : ht.representatives.at(d)) space.insert(rep);

            const auto& reps = hs.representatives.at(d);
            SparseMatrix f = component(d);
            for (int j = 0; j < sdim; ++j) {
                auto coords = space.coordinates(f.apply(reps[j]));
                if (!coords)
                    throw std::logic_error("ChainMap::inducedOnCohomology: image of a cocycle "
                                           "escaped the cocycle space");
                for (int i = 0; i < tdim; ++i) m.set(i, j, (*coords)[imageRank + i]);
            }
        } else if (sdim > 0 && tdim == 0) {
            // nothing to record; map is zero onto zero space
        }
        if (sdim != tdim || (sdim > 0 && m.rank() != sdim)) out.isQuasiIso = false;
        out.onCohomology[d] = std::move(m);
    }
    return out;
}

}  // namespace homtwist
