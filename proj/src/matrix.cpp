#include "holseries/matrix.hpp"

#include <algorithm>

namespace holseries {

SparseRow row_axpy(SparseRow r, const Rational& c, const SparseRow& p) {
    SparseRow out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.push_back(std::move(r[i]));
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -c * p[j].second);
            ++j;
        } else {
            Rational v = r[i].second - c * p[j].second;
            if (!is_zero(v)) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow Eliminator::reduce(SparseRow r) const {
    while (!r.empty()) {
        int lead = r.front().first;
        int pi = pivot_of_col_[lead];
        if (pi < 0) break;
        Rational c = r.front().second;
        r = row_axpy(std::move(r), c, rows_[pi]);
    }
    return r;
}

bool Eliminator::insert(SparseRow r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    // store monic
    Rational lead = r.front().second;
    if (lead != Rational(1))
        for (auto& [c, v] : r) v /= lead;
    pivot_of_col_[r.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

void Eliminator::back_substitute() {
    // process pivots from the rightmost column leftwards
    std::vector<int> order;
    for (int c = cols_ - 1; c >= 0; --c)
        if (pivot_of_col_[c] >= 0) order.push_back(pivot_of_col_[c]);
    for (size_t k = 0; k < order.size(); ++k) {
        int ri = order[k];
        int lead = rows_[ri].front().first;
        for (auto& row : rows_) {
            if (&row == &rows_[ri]) continue;
            // find entry at column `lead`
            auto it = std::lower_bound(
                row.begin(), row.end(), lead,
                [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
            if (it != row.end() && it->first == lead) {
                Rational c = it->second;
                row = row_axpy(std::move(row), c, rows_[ri]);
            }
        }
    }
}

SparseRow RationalMatrix::sparse_row(int r) const {
    SparseRow out;
    for (int c = 0; c < cols_; ++c)
        if (!is_zero(at(r, c))) out.emplace_back(c, at(r, c));
    return out;
}

SparseRow RationalMatrix::sparse_col(int c) const {
    SparseRow out;
    for (int r = 0; r < rows_; ++r)
        if (!is_zero(at(r, c))) out.emplace_back(r, at(r, c));
    return out;
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw parameter_error("apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!is_zero(at(r, c))) out[r] += at(r, c) * v[c];
    return out;
}

int rank(const RationalMatrix& m) {
    Eliminator e(m.cols());
    for (int r = 0; r < m.rows(); ++r) e.insert(m.sparse_row(r));
    return e.rank();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    Eliminator e(m.cols());
    for (int r = 0; r < m.rows(); ++r) e.insert(m.sparse_row(r));
    e.back_substitute();
    const auto& pivot_of_col = e.pivot_of_col();
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (pivot_of_col[f] >= 0) continue;  // pivot column
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = 1;
        for (const auto& row : e.pivot_rows()) {
            if (row.empty()) continue;
            int p = row.front().first;
            for (auto& [c, val] : row) {
                if (c == f) {
                    v[p] = -val;
                    break;
                }
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Rational>> image_basis(const RationalMatrix& m) {
    Eliminator e(m.rows());
    std::vector<std::vector<Rational>> out;
    for (int c = 0; c < m.cols(); ++c) {
        if (e.insert(m.sparse_col(c))) {
            std::vector<Rational> col(m.rows());
            for (int r = 0; r < m.rows(); ++r) col[r] = m.at(r, c);
            out.push_back(std::move(col));
        }
    }
    return out;
}

int sparse_rank(int cols, std::vector<SparseRow>&& rows) {
    Eliminator e(cols);
    for (auto& r : rows) e.insert(std::move(r));
    return e.rank();
}

}  // namespace holseries
