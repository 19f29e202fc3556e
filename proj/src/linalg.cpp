#include "homtwist/linalg.hpp"

#include <algorithm>

namespace homtwist {

void SparseVector::set(int i, const FieldScalar& v) {
    if (i < 0 || i >= dim_) throw std::out_of_range("SparseVector::set index");
    if (v.isZero())
        entries_.erase(i);
    else
        entries_[i] = v;
}

void SparseVector::addTo(int i, const FieldScalar& v) {
    if (v.isZero()) return;
    if (i < 0 || i >= dim_) throw std::out_of_range("SparseVector::addTo index");
    auto it = entries_.find(i);
    if (it == entries_.end()) {
        entries_.emplace(i, v);
    } else {
        it->second += v;
        if (it->second.isZero()) entries_.erase(it);
    }
}

FieldScalar SparseVector::at(int i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? FieldScalar::zero(field_) : it->second;
}

SparseVector& SparseVector::operator+=(const SparseVector& o) {
    for (const auto& [i, v] : o.entries_) addTo(i, v);
    return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
    for (const auto& [i, v] : o.entries_) addTo(i, -v);
    return *this;
}

SparseVector SparseVector::scaled(const FieldScalar& c) const {
    SparseVector r(dim_, field_);
    if (c.isZero()) return r;
    for (const auto& [i, v] : entries_) r.entries_.emplace(i, v * c);
    return r;
}

bool SparseVector::operator==(const SparseVector& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
}

SparseMatrix::SparseMatrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), rowData_(rows) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatrix: negative shape");
}

SparseMatrix SparseMatrix::identity(int n, const Field& f) {
    SparseMatrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.rowData_[i].emplace(i, FieldScalar::one(f));
    return m;
}

void SparseMatrix::set(int r, int c, const FieldScalar& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::set index");
    if (v.isZero())
        rowData_[r].erase(c);
    else
        rowData_[r][c] = v;
}

void SparseMatrix::addTo(int r, int c, const FieldScalar& v) {
    if (v.isZero()) return;
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::addTo index");
    auto& row = rowData_[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.isZero()) row.erase(it);
    }
}

FieldScalar SparseMatrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMatrix::at index");
    auto it = rowData_[r].find(c);
    return it == rowData_[r].end() ? FieldScalar::zero(field_) : it->second;
}

bool SparseMatrix::isZero() const {
    for (const auto& row : rowData_)
        if (!row.empty()) return false;
    return true;
}

long SparseMatrix::nnz() const {
    long n = 0;
    for (const auto& row : rowData_) n += static_cast<long>(row.size());
    return n;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_, field_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rowData_[r]) t.rowData_[c].emplace(r, v);
    return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& rhs) const {
    if (cols_ != rhs.rows_ || field_ != rhs.field_)
        throw std::invalid_argument("SparseMatrix::multiply shape/field mismatch");
    SparseMatrix out(rows_, rhs.cols_, field_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, a] : rowData_[r])
            for (const auto& [c, b] : rhs.rowData_[k]) out.addTo(r, c, a * b);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw std::invalid_argument("SparseMatrix::operator- shape/field mismatch");
    SparseMatrix out(*this);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rhs.rowData_[r]) out.addTo(r, c, -v);
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_)
        throw std::invalid_argument("SparseMatrix::operator+ shape/field mismatch");
    SparseMatrix out(*this);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rhs.rowData_[r]) out.addTo(r, c, v);
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && rowData_ == o.rowData_;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    if (v.dim() != cols_) throw std::invalid_argument("SparseMatrix::apply dim mismatch");
    SparseVector out(rows_, field_);
    for (int r = 0; r < rows_; ++r) {
        FieldScalar acc = FieldScalar::zero(field_);
        const auto& row = rowData_[r];
        if (row.size() <= static_cast<std::size_t>(v.nnz())) {
            for (const auto& [c, a] : row) acc += a * v.at(c);
        } else {
            for (const auto& [c, x] : v.entries()) acc += at(r, c) * x;
        }
        if (!acc.isZero()) out.set(r, acc);
    }
    return out;
}

SparseVector SparseMatrix::column(int c) const {
    SparseVector out(rows_, field_);
    for (int r = 0; r < rows_; ++r) {
        auto it = rowData_[r].find(c);
        if (it != rowData_[r].end()) out.set(r, it->second);
    }
    return out;
}

void SparseMatrix::setColumn(int c, const SparseVector& v) {
    if (v.dim() != rows_) throw std::invalid_argument("SparseMatrix::setColumn dim mismatch");
    for (int r = 0; r < rows_; ++r) rowData_[r].erase(c);
    for (const auto& [r, x] : v.entries()) rowData_[r].emplace(c, x);
}

SparseMatrix::Echelon SparseMatrix::reducedRowEchelon() const {
    std::vector<std::map<int, FieldScalar>> work = rowData_;
    std::vector<bool> used(rows_, false);
    std::vector<int> pivotRowIdx;
    Echelon e;
    for (int col = 0; col < cols_; ++col) {
        int best = -1;
        std::size_t bestNnz = 0;
        for (int r = 0; r < rows_; ++r) {
            if (used[r]) continue;
            auto it = work[r].find(col);
            if (it == work[r].end()) continue;
            if (best == -1 || work[r].size() < bestNnz) {
                best = r;
                bestNnz = work[r].size();
            }
        }
        if (best == -1) continue;
        used[best] = true;
        FieldScalar inv = work[best].at(col).inverse();
        if (!inv.isOne()) {
            for (auto& [c, v] : work[best]) v *= inv;
        }
        const std::map<int, FieldScalar>& pivotRow = work[best];
        for (int r = 0; r < rows_; ++r) {
            if (r == best) continue;
            auto it = work[r].find(col);
            if (it == work[r].end()) continue;
            FieldScalar factor = it->second;
            for (const auto& [c, v] : pivotRow) {
                auto jt = work[r].find(c);
                FieldScalar nv = (jt == work[r].end() ? FieldScalar::zero(field_) : jt->second) - factor * v;
                if (nv.isZero()) {
                    if (jt != work[r].end()) work[r].erase(jt);
                } else if (jt == work[r].end()) {
                    work[r].emplace(c, nv);
                } else {
                    jt->second = nv;
                }
            }
        }
        pivotRowIdx.push_back(best);
        e.pivotCols.push_back(col);
        ++e.rank;
    }
    // Rows must be collected after all eliminations so every pivot column is
    // cleared from every other row.
    e.rows.reserve(pivotRowIdx.size());
    for (int r : pivotRowIdx) e.rows.push_back(std::move(work[r]));
    return e;
}

int SparseMatrix::rank() const {
    return reducedRowEchelon().rank;
}

std::vector<SparseVector> SparseMatrix::kernelBasis() const {
    Echelon e = reducedRowEchelon();
    std::vector<bool> isPivot(cols_, false);
    for (int c : e.pivotCols) isPivot[c] = true;
    std::vector<SparseVector> basis;
    for (int free = cols_ - 1; free >= 0; --free) {
        if (isPivot[free]) continue;
        SparseVector v(cols_, field_);
        v.set(free, FieldScalar::one(field_));
        for (int i = 0; i < e.rank; ++i) {
            auto it = e.rows[i].find(free);
            if (it != e.rows[i].end()) v.set(e.pivotCols[i], -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SparseVector> SparseMatrix::solve(const SparseVector& b) const {
    if (b.dim() != rows_) throw std::invalid_argument("SparseMatrix::solve dim mismatch");
    RowSpace space(rows_, field_);
    std::vector<int> insertedCols;
    for (int c = 0; c < cols_; ++c)
        if (space.insert(column(c))) insertedCols.push_back(c);
    auto coords = space.coordinates(b);
    if (!coords) return std::nullopt;
    SparseVector x(cols_, field_);
    for (std::size_t i = 0; i < insertedCols.size(); ++i) x.set(insertedCols[i], (*coords)[i]);
    return x;
}

std::vector<std::tuple<int, int, std::string, std::string>> SparseMatrix::triplets() const {
    std::vector<std::tuple<int, int, std::string, std::string>> out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rowData_[r]) {
            auto [num, den] = v.numeratorDenominator();
            out.emplace_back(r, c, num, den);
        }
    return out;
}

SparseVector RowSpace::reduce(const SparseVector& v) const {
    SparseVector r = v;
    for (const auto& row : rows_) {
        FieldScalar c = r.at(row.pivot);
        if (!c.isZero()) r -= row.vec.scaled(c);
    }
    return r;
}

namespace {
// Reduction with coefficient tracking against echelon rows sorted by pivot.
template <typename Rows>
std::pair<SparseVector, std::vector<FieldScalar>> reduceTracked(const SparseVector& v,
                                                                const Rows& rows,
                                                                const Field& field) {
    SparseVector r = v;
    std::vector<FieldScalar> coeffs(rows.size(), FieldScalar::zero(field));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        FieldScalar c = r.at(rows[i].pivot);
        if (!c.isZero()) {
            r -= rows[i].vec.scaled(c);
            coeffs[i] = c;
        }
    }
    return {std::move(r), std::move(coeffs)};
}
}  // namespace

bool RowSpace::insert(const SparseVector& v) {
    if (v.dim() != dim_) throw std::invalid_argument("RowSpace::insert dim mismatch");
    auto [r, coeffs] = reduceTracked(v, rows_, field_);
    if (r.isZero()) return false;

    // history of r over inserted vectors: e_new - sum coeffs_i * history_i
    std::vector<FieldScalar> hist(insertedCount_ + 1, FieldScalar::zero(field_));
    hist[insertedCount_] = FieldScalar::one(field_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (coeffs[i].isZero()) continue;
        for (std::size_t j = 0; j < rows_[i].history.size(); ++j)
            hist[j] -= coeffs[i] * rows_[i].history[j];
    }

    int pivot = r.entries().begin()->first;
    FieldScalar pv = r.entries().begin()->second;
    FieldScalar inv = pv.inverse();
    SparseVector vec = r.scaled(inv);
    for (auto& h : hist) h *= inv;

    // keep existing rows reduced against the new pivot
    for (auto& row : rows_) {
        FieldScalar c = row.vec.at(pivot);
        if (c.isZero()) continue;
        row.vec -= vec.scaled(c);
        row.history.resize(insertedCount_ + 1, FieldScalar::zero(field_));
        for (std::size_t j = 0; j < hist.size(); ++j) row.history[j] -= c * hist[j];
    }

    Row nr{pivot, std::move(vec), std::move(hist)};
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), nr,
                                [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    rows_.insert(pos, std::move(nr));
    ++insertedCount_;
    return true;
}

std::optional<std::vector<FieldScalar>> RowSpace::coordinates(const SparseVector& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("RowSpace::coordinates dim mismatch");
    auto [r, coeffs] = reduceTracked(v, rows_, field_);
    if (!r.isZero()) return std::nullopt;
    std::vector<FieldScalar> out(insertedCount_, FieldScalar::zero(field_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (coeffs[i].isZero()) continue;
        for (std::size_t j = 0; j < rows_[i].history.size(); ++j)
            out[j] += coeffs[i] * rows_[i].history[j];
    }
    return out;
}

}  // namespace homtwist
