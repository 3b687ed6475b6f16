#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exlie/scalar.hpp"

namespace exlie {

// Sparse vector: index -> nonzero entry.
template <class K>
using SpVec = std::map<int, K>;

template <class K>
void vec_add_scaled(SpVec<K>& dst, const SpVec<K>& src, const K& c) {
    if (is_zero(c)) return;
    for (const auto& [j, v] : src) {
        auto it = dst.find(j);
        if (it == dst.end()) {
            K nv = c * v;
            if (!is_zero(nv)) dst.emplace(j, std::move(nv));
        } else {
            it->second += c * v;
            if (is_zero(it->second)) dst.erase(it);
        }
    }
}

template <class K>
void vec_scale(SpVec<K>& v, const K& c) {
    if (is_zero(c)) { v.clear(); return; }
    for (auto& [j, x] : v) x = x * c;
}

template <class K>
K vec_get(const SpVec<K>& v, int j) {
    auto it = v.find(j);
    return it == v.end() ? K() : it->second;
}

// Sparse matrix, row-major; no zero entry is ever stored.
template <class K>
class SparseMat {
public:
    SparseMat() : rows_(0), cols_(0) {}
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMat identity(int n) {
        SparseMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, K(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, const K& v) {
        check(i, j);
        if (is_zero(v)) data_[i].erase(j);
        else data_[i][j] = v;
    }
    void add(int i, int j, const K& v) {
        check(i, j);
        auto it = data_[i].find(j);
        if (it == data_[i].end()) {
            if (!is_zero(v)) data_[i].emplace(j, v);
        } else {
            it->second += v;
            if (is_zero(it->second)) data_[i].erase(it);
        }
    }
    K get(int i, int j) const {
        check(i, j);
        return vec_get(data_[i], j);
    }
    const SpVec<K>& row(int i) const { return data_[i]; }
    SpVec<K>& row_mut(int i) { return data_[i]; }

    size_t nnz() const {
        size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    SpVec<K> apply(const SpVec<K>& v) const {
        SpVec<K> out;
        for (int i = 0; i < rows_; ++i) {
            K acc{};
            bool any = false;
            for (const auto& [j, a] : data_[i]) {
                auto it = v.find(j);
                if (it != v.end()) { acc += a * it->second; any = true; }
            }
            if (any && !is_zero(acc)) out[i] = acc;
        }
        return out;
    }

    SparseMat operator*(const SparseMat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        SparseMat out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [k, a] : data_[i])
                vec_add_scaled(out.data_[i], o.data_[k], a);
        return out;
    }

    SparseMat operator+(const SparseMat& o) const {
        SparseMat out = *this;
        for (int i = 0; i < rows_; ++i) vec_add_scaled(out.data_[i], o.data_[i], K(1));
        return out;
    }
    SparseMat operator-(const SparseMat& o) const {
        SparseMat out = *this;
        for (int i = 0; i < rows_; ++i) vec_add_scaled(out.data_[i], o.data_[i], K(-1));
        return out;
    }
    SparseMat scaled(const K& c) const {
        SparseMat out = *this;
        for (int i = 0; i < rows_; ++i) vec_scale(out.data_[i], c);
        return out;
    }
    bool operator==(const SparseMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    SparseMat transpose() const {
        SparseMat out(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i]) out.data_[j][i] = v;
        return out;
    }

private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index");
    }
    int rows_, cols_;
    std::vector<SpVec<K>> data_;
};

// Incremental row reduction.  Rows are kept pivot-normalized; each added
// vector is reduced against the current span and either absorbed (pivot
// chosen as its sparsest-column nonzero) or rejected as dependent.
template <class K>
class RowReducer {
public:
    // returns true if v enlarged the span
    bool add(SpVec<K> v) {
        reduce(v);
        if (v.empty()) return false;
        int piv = v.begin()->first;
        K inv = inverse(v.begin()->second);
        vec_scale(v, inv);
        // back-substitute into existing rows to keep reduced form
        for (auto& [p, row] : rows_) {
            auto it = row.find(piv);
            if (it != row.end()) {
                K c = -it->second;
                vec_add_scaled(row, v, c);
            }
        }
        rows_.emplace(piv, std::move(v));
        return true;
    }

    // reduce v against the span in place; empty result means v was in span
    void reduce(SpVec<K>& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto rit = rows_.find(it->first);
            if (rit != rows_.end()) {
                int p = it->first;
                K c = -it->second;
                vec_add_scaled(v, rit->second, c);
                it = v.upper_bound(p);
            } else {
                ++it;
            }
        }
    }

    bool contains(SpVec<K> v) const {
        reduce(v);
        return v.empty();
    }

    int rank() const { return (int)rows_.size(); }
    const std::map<int, SpVec<K>>& rows() const { return rows_; }

private:
    std::map<int, SpVec<K>> rows_;  // pivot column -> normalized row
};

template <class K>
int rank(const SparseMat<K>& m) {
    RowReducer<K> rr;
    for (int i = 0; i < m.rows(); ++i) rr.add(m.row(i));
    return rr.rank();
}

// Exact basis of the right null space { v : m v = 0 }.
template <class K>
std::vector<SpVec<K>> kernel_basis(const SparseMat<K>& m) {
    RowReducer<K> rr;
    for (int i = 0; i < m.rows(); ++i) rr.add(m.row(i));
    std::vector<SpVec<K>> out;
    const auto& rows = rr.rows();
    for (int j = 0; j < m.cols(); ++j) {
        if (rows.count(j)) continue;  // pivot column
        SpVec<K> v;
        v[j] = K(1);
        for (const auto& [p, row] : rows) {
            auto it = row.find(j);
            if (it != row.end()) v[p] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Exact solution of m x = b, if consistent.
template <class K>
std::optional<SpVec<K>> solve_linear(const SparseMat<K>& m, const SpVec<K>& b) {
    if (!b.empty() && b.rbegin()->first >= m.rows())
        throw std::invalid_argument("rhs dimension mismatch");
    // eliminate on [m | b] columns-augmented: append b as column index cols()
    RowReducer<K> rr;
    const int bc = m.cols();
    for (int i = 0; i < m.rows(); ++i) {
        SpVec<K> row = m.row(i);
        K bv = vec_get(b, i);
        if (!is_zero(bv)) row[bc] = bv;
        rr.add(std::move(row));
    }
    const auto& rows = rr.rows();
    if (rows.count(bc)) return std::nullopt;  // inconsistent
    SpVec<K> x;
    for (const auto& [p, row] : rows) {
        // reduced form: row = e_p + (free columns) + coeff on bc
        auto it = row.find(bc);
        if (it != row.end()) x[p] = it->second;
    }
    // reduced echelon with free vars set to zero: x_p = b-coeff directly
    return x;
}

// Membership of v in the column span of the given vectors; if inside,
// returns the coefficient vector.
template <class K>
std::optional<std::vector<K>> coords_in_span(const std::vector<SpVec<K>>& basis,
                                             const SpVec<K>& v, int ambient_dim) {
    SparseMat<K> m(ambient_dim, (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j)
        for (const auto& [i, val] : basis[j]) m.add(i, j, val);
    auto sol = solve_linear(m, v);
    if (!sol) return std::nullopt;
    std::vector<K> c(basis.size(), K());
    for (const auto& [j, val] : *sol) c[j] = val;
    return c;
}

}  // namespace exlie
