#pragma once

#include "h4t/poly.hpp"
#include "h4t/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace h4t {

/* Sorted by column, no stored zeros. */
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, F>>;

template <class F>
SparseVec<F> to_sparse(const std::vector<F>& dense)
{
    SparseVec<F> out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!is_zero(dense[i]))
            out.emplace_back(i, dense[i]);
    return out;
}

template <class F>
std::vector<F> to_dense(const SparseVec<F>& v, std::size_t n)
{
    std::vector<F> out(n, F(0));
    for (const auto& [c, x] : v)
        out.at(c) = x;
    return out;
}

/* a*x + b*y, merged. */
template <class F>
SparseVec<F> combine(const F& a, const SparseVec<F>& x, const F& b, const SparseVec<F>& y)
{
    SparseVec<F> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            F v = a * x[i].second;
            if (!is_zero(v))
                out.emplace_back(x[i].first, std::move(v));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            F v = b * y[j].second;
            if (!is_zero(v))
                out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            F v = a * x[i].second + b * y[j].second;
            if (!is_zero(v))
                out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

/* Row-echelon accumulator over a field (Rational or RatFuncK). Each
 * stored row has a distinct leading column and a leading entry of 1.
 */
template <class F>
class RowEchelon {
public:
    explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return pivots_.size(); }

    SparseVec<F> reduce(SparseVec<F> v) const
    {
        std::size_t start = 0;
        while (start < v.size()) {
            auto it = pivots_.find(v[start].first);
            if (it == pivots_.end()) {
                ++start;
                continue;
            }
            F factor = v[start].second;
            SparseVec<F> tail(v.begin() + static_cast<std::ptrdiff_t>(start), v.end());
            SparseVec<F> reduced = combine<F>(F(1), tail, F(-factor), it->second);
            v.resize(start);
            v.insert(v.end(), reduced.begin(), reduced.end());
        }
        return v;
    }

    /* Returns true when `v` was independent of the rows already held. */
    bool insert(SparseVec<F> v)
    {
        check(v);
        v = reduce(std::move(v));
        if (v.empty())
            return false;
        F inv = F(1) / v.front().second;
        for (auto& e : v)
            e.second = e.second * inv;
        pivots_.emplace(v.front().first, std::move(v));
        return true;
    }

    bool contains(const SparseVec<F>& v) const
    {
        check(v);
        return reduce(v).empty();
    }

    /* Stored rows ordered by leading column. */
    std::vector<SparseVec<F>> rows() const
    {
        std::vector<SparseVec<F>> out;
        out.reserve(pivots_.size());
        for (const auto& [c, row] : pivots_)
            out.push_back(row);
        return out;
    }

    /* Basis of the solution space of rows * x = 0, each vector scaled so
     * that its first nonzero entry is 1.
     */
    std::vector<SparseVec<F>> nullspace() const
    {
        std::map<std::size_t, SparseVec<F>> rref;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            SparseVec<F> row = it->second;
            std::vector<std::size_t> hits;
            for (std::size_t i = 1; i < row.size(); ++i)
                if (pivots_.count(row[i].first))
                    hits.push_back(row[i].first);
            for (std::size_t c : hits) {
                F factor(0);
                for (const auto& e : row)
                    if (e.first == c)
                        factor = e.second;
                if (!is_zero(factor))
                    row = combine<F>(F(1), row, F(-factor), rref.at(c));
            }
            rref.emplace(it->first, std::move(row));
        }
        std::map<std::size_t, SparseVec<F>> by_free;
        for (const auto& [p, row] : rref)
            for (std::size_t i = 1; i < row.size(); ++i)
                by_free[row[i].first].emplace_back(p, F(-row[i].second));
        std::vector<SparseVec<F>> out;
        for (std::size_t f = 0; f < ncols_; ++f) {
            if (pivots_.count(f))
                continue;
            SparseVec<F> v;
            if (auto it = by_free.find(f); it != by_free.end())
                v = it->second;
            v.emplace_back(f, F(1));
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            F inv = F(1) / v.front().second;
            for (auto& e : v)
                e.second = e.second * inv;
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    void check(const SparseVec<F>& v) const
    {
        if (!v.empty() && v.back().first >= ncols_)
            throw std::invalid_argument("vector index out of range for echelon");
    }

    std::size_t ncols_;
    std::map<std::size_t, SparseVec<F>> pivots_;
};

/* Divides out the polynomial gcd and the rational content of a row and
 * makes the first leading coefficient positive.
 */
void make_primitive(SparseVec<PolyK>& row);

/* Multiplies a rational-function row by the lcm of its denominators and
 * makes it primitive.
 */
SparseVec<PolyK> clear_denominators(const SparseVec<RatFuncK>& row);

/* Fraction-free echelon over Q[k]: rows are combined as
 * lead(p)*r - lead(r)*p and kept primitive, so no rational-function
 * arithmetic happens during elimination.
 */
class FractionFreeEchelon {
public:
    explicit FractionFreeEchelon(std::size_t ncols) : ncols_(ncols) {}

    std::size_t cols() const { return ncols_; }
    std::size_t rank() const { return pivots_.size(); }

    SparseVec<PolyK> reduce(SparseVec<PolyK> v) const;
    bool insert(SparseVec<PolyK> v);
    bool contains(const SparseVec<PolyK>& v) const { return reduce(v).empty(); }
    std::vector<SparseVec<PolyK>> rows() const
    {
        std::vector<SparseVec<PolyK>> out;
        for (const auto& [c, row] : pivots_)
            out.push_back(row);
        return out;
    }

    /* Nullspace over Q(k), first nonzero entry normalized to 1. */
    std::vector<SparseVec<RatFuncK>> nullspace() const;

private:
    std::size_t ncols_;
    std::map<std::size_t, SparseVec<PolyK>> pivots_;
};

template <class F>
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, F value)
    {
        if (r >= rows_ || c >= cols_)
            throw std::out_of_range("matrix index out of range");
        if (is_zero(value))
            entries_.erase({r, c});
        else
            entries_[{r, c}] = std::move(value);
    }

    F get(std::size_t r, std::size_t c) const
    {
        auto it = entries_.find({r, c});
        return it == entries_.end() ? F(0) : it->second;
    }

    std::size_t nonzeros() const { return entries_.size(); }

    std::vector<SparseVec<F>> row_vectors() const
    {
        std::vector<SparseVec<F>> out(rows_);
        for (const auto& [rc, v] : entries_)
            out[rc.first].emplace_back(rc.second, v);
        return out;
    }

    static SparseMatrix from_dense(const std::vector<std::vector<F>>& rows, std::size_t cols)
    {
        SparseMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                m.set(r, c, rows[r][c]);
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, F> entries_;
};

std::vector<std::vector<Rational>> nullspace(const SparseMatrix<Rational>& m);
std::vector<std::vector<RatFuncK>> nullspace(const SparseMatrix<RatFuncK>& m);
std::size_t rank(const SparseMatrix<Rational>& m);
std::size_t rank(const SparseMatrix<RatFuncK>& m);

/* Throws std::invalid_argument on dimension mismatch. */
bool in_span(const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& s);
bool in_span(const std::vector<RatFuncK>& v, const std::vector<std::vector<RatFuncK>>& s);

} // namespace h4t
