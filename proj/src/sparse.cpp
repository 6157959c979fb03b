#include "h4t/sparse.hpp"

namespace h4t {

namespace {

std::size_t first_pivot_hit(const SparseVec<PolyK>& v, const std::map<std::size_t, SparseVec<PolyK>>& pivots,
                            std::size_t from = 0)
{
    for (std::size_t i = from; i < v.size(); ++i)
        if (pivots.count(v[i].first))
            return i;
    return v.size();
}

template <class F>
void check_dims(const std::vector<F>& v, const std::vector<std::vector<F>>& s)
{
    for (const auto& row : s)
        if (row.size() != v.size())
            throw std::invalid_argument("in_span: dimension mismatch");
}

} // namespace

void make_primitive(SparseVec<PolyK>& row)
{
    if (row.empty())
        return;
    PolyK g;
    for (const auto& e : row) {
        g = PolyK::gcd(g, e.second);
        if (g.degree() == 0)
            break;
    }
    if (g.degree() > 0)
        for (auto& e : row)
            e.second = PolyK::exact_div(e.second, g);

    mpz_class den_lcm = 1;
    for (const auto& e : row)
        for (const auto& c : e.second.coeffs())
            den_lcm = lcm(den_lcm, mpz_class(c.get_den()));
    mpz_class num_gcd = 0;
    for (const auto& e : row)
        for (const auto& c : e.second.coeffs())
            num_gcd = gcd(num_gcd, mpz_class(c.get_num() * (den_lcm / c.get_den())));
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(row.front().second.leading()) < 0)
        scale = -scale;
    if (scale != 1)
        for (auto& e : row)
            e.second *= scale;
}

SparseVec<PolyK> clear_denominators(const SparseVec<RatFuncK>& row)
{
    PolyK l(Rational(1));
    for (const auto& e : row) {
        const PolyK& d = e.second.den();
        PolyK g = PolyK::gcd(l, d);
        l = PolyK::exact_div(l * d, g);
    }
    SparseVec<PolyK> out;
    out.reserve(row.size());
    for (const auto& e : row)
        out.emplace_back(e.first, PolyK::exact_div(e.second.num() * l, e.second.den()));
    make_primitive(out);
    return out;
}

SparseVec<PolyK> FractionFreeEchelon::reduce(SparseVec<PolyK> v) const
{
    std::size_t i = first_pivot_hit(v, pivots_);
    while (i < v.size()) {
        const auto& p = pivots_.at(v[i].first);
        PolyK a = p.front().second;
        PolyK b = v[i].second;
        v = combine(a, v, -b, p);
        make_primitive(v);
        i = first_pivot_hit(v, pivots_);
    }
    return v;
}

bool FractionFreeEchelon::insert(SparseVec<PolyK> v)
{
    if (!v.empty() && v.back().first >= ncols_)
        throw std::invalid_argument("vector index out of range for echelon");
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    make_primitive(v);
    pivots_.emplace(v.front().first, std::move(v));
    return true;
}

std::vector<SparseVec<RatFuncK>> FractionFreeEchelon::nullspace() const
{
    std::map<std::size_t, SparseVec<PolyK>> rref;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseVec<PolyK> row = it->second;
        std::size_t i = first_pivot_hit(row, pivots_, 1);
        while (i < row.size()) {
            const auto& q = rref.at(row[i].first);
            PolyK a = q.front().second;
            PolyK b = row[i].second;
            row = combine(a, row, -b, q);
            make_primitive(row);
            i = first_pivot_hit(row, pivots_, 1);
        }
        rref.emplace(it->first, std::move(row));
    }

    std::map<std::size_t, SparseVec<RatFuncK>> by_free;
    for (const auto& [p, row] : rref) {
        const PolyK& lead = row.front().second;
        for (std::size_t i = 1; i < row.size(); ++i)
            by_free[row[i].first].emplace_back(p, RatFuncK(-row[i].second, lead));
    }
    std::vector<SparseVec<RatFuncK>> out;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (pivots_.count(f))
            continue;
        SparseVec<RatFuncK> v;
        if (auto it = by_free.find(f); it != by_free.end())
            v = it->second;
        v.emplace_back(f, RatFuncK(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        RatFuncK inv = RatFuncK(1) / v.front().second;
        for (auto& e : v)
            e.second *= inv;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::vector<Rational>> nullspace(const SparseMatrix<Rational>& m)
{
    RowEchelon<Rational> ech(m.cols());
    for (auto& row : m.row_vectors())
        ech.insert(std::move(row));
    std::vector<std::vector<Rational>> out;
    for (const auto& v : ech.nullspace())
        out.push_back(to_dense(v, m.cols()));
    return out;
}

std::vector<std::vector<RatFuncK>> nullspace(const SparseMatrix<RatFuncK>& m)
{
    FractionFreeEchelon ech(m.cols());
    for (const auto& row : m.row_vectors())
        ech.insert(clear_denominators(row));
    std::vector<std::vector<RatFuncK>> out;
    for (const auto& v : ech.nullspace())
        out.push_back(to_dense(v, m.cols()));
    return out;
}

std::size_t rank(const SparseMatrix<Rational>& m)
{
    RowEchelon<Rational> ech(m.cols());
    for (auto& row : m.row_vectors())
        ech.insert(std::move(row));
    return ech.rank();
}

std::size_t rank(const SparseMatrix<RatFuncK>& m)
{
    FractionFreeEchelon ech(m.cols());
    for (const auto& row : m.row_vectors())
        ech.insert(clear_denominators(row));
    return ech.rank();
}

bool in_span(const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& s)
{
    check_dims(v, s);
    RowEchelon<Rational> ech(v.size());
    for (const auto& row : s)
        ech.insert(to_sparse(row));
    return ech.contains(to_sparse(v));
}

bool in_span(const std::vector<RatFuncK>& v, const std::vector<std::vector<RatFuncK>>& s)
{
    check_dims(v, s);
    FractionFreeEchelon ech(v.size());
    for (const auto& row : s)
        ech.insert(clear_denominators(to_sparse(row)));
    return ech.contains(clear_denominators(to_sparse(v)));
}

} // namespace h4t
