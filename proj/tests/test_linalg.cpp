#include "oracles.hpp"

#include "h4t/poly.hpp"
#include "h4t/sparse.hpp"

#include <doctest.h>

#include <random>

using namespace h4t;

namespace {

Rational small(std::mt19937& rng)
{
    return Rational(static_cast<int>(rng() % 19) - 9);
}

PolyK small_poly(std::mt19937& rng)
{
    std::vector<Rational> c;
    std::size_t deg = rng() % 3;
    for (std::size_t i = 0; i <= deg; ++i)
        c.push_back(rng() % 3 == 0 ? Rational(0) : small(rng));
    return PolyK(c);
}

template <class F>
std::vector<F> times(const SparseMatrix<F>& m, const std::vector<F>& v)
{
    std::vector<F> out(m.rows(), F(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r] = out[r] + m.get(r, c) * v[c];
    return out;
}

PolyK poly(std::vector<Rational> c)
{
    return PolyK(std::move(c));
}

} // namespace

TEST_CASE("nullspace examples")
{
    auto id = SparseMatrix<Rational>::from_dense({{1, 0}, {0, 1}}, 2);
    CHECK(nullspace(id).empty());
    auto row = SparseMatrix<Rational>::from_dense({{1, -1}}, 2);
    auto n = nullspace(row);
    REQUIRE(n.size() == 1);
    CHECK(n[0] == std::vector<Rational>{1, 1});

    SparseMatrix<RatFuncK> mk(1, 2);
    mk.set(0, 0, RatFuncK(PolyK::k()));
    mk.set(0, 1, RatFuncK(-1));
    auto nk = nullspace(mk);
    REQUIRE(nk.size() == 1);
    CHECK(nk[0][0] == RatFuncK(1));
    CHECK(nk[0][1] == RatFuncK(PolyK::k()));
}

TEST_CASE("rank and span examples")
{
    CHECK(rank(SparseMatrix<Rational>(3, 3)) == 0);
    SparseMatrix<Rational> i4(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        i4.set(i, i, 1);
    CHECK(rank(i4) == 4);
    CHECK(rank(SparseMatrix<Rational>::from_dense({{1, 2}, {2, 4}}, 2)) == 1);

    CHECK(in_span(std::vector<Rational>{0, 0}, {}));
    CHECK(!in_span(std::vector<Rational>{1, 0}, {{0, 1}}));
    CHECK(in_span(std::vector<Rational>{2, 4, 6}, {{1, 2, 3}}));
    CHECK_THROWS_AS(in_span(std::vector<Rational>{1, 2}, {{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("random rational matrices against dense elimination")
{
    std::mt19937 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        oracle::Dense dense(r, std::vector<Rational>(c));
        for (auto& row : dense)
            for (auto& x : row)
                x = rng() % 3 == 0 ? Rational(0) : small(rng);
        auto m = SparseMatrix<Rational>::from_dense(dense, c);
        auto ns = nullspace(m);
        std::size_t rk = rank(m);
        CHECK(rk + ns.size() == c);
        CHECK(rk == oracle::rank(dense, c));
        for (const auto& v : ns)
            for (const auto& x : times(m, v))
                CHECK(is_zero(x));
        CHECK(oracle::rank(ns, c) == ns.size());
    }
}

TEST_CASE("elimination over Q(k) agrees with substitution")
{
    std::mt19937 rng(321);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        SparseMatrix<RatFuncK> m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.set(i, j, RatFuncK(small_poly(rng)));
        auto ns = nullspace(m);
        std::size_t rk = rank(m);
        CHECK(rk + ns.size() == c);
        for (int s = 0; s < 10; ++s) {
            Rational k0 = oracle::frac(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 97);
            bool ok = true;
            for (const auto& v : ns)
                for (const auto& x : v)
                    ok = ok && !is_zero(x.den().eval(k0));
            if (!ok)
                continue;
            oracle::Dense at(r, std::vector<Rational>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    at[i][j] = m.get(i, j).eval(k0);
            CHECK(oracle::rank(at, c) == rk);
            oracle::Dense subs;
            for (const auto& v : ns) {
                std::vector<Rational> x;
                for (const auto& e : v)
                    x.push_back(e.eval(k0));
                for (const auto& row : at) {
                    Rational dot = 0;
                    for (std::size_t j = 0; j < c; ++j)
                        dot += row[j] * x[j];
                    CHECK(is_zero(dot));
                }
                subs.push_back(std::move(x));
            }
            CHECK(oracle::rank(subs, c) == ns.size());
        }
    }
}

TEST_CASE("fraction-free echelon spans the same rows as rational elimination")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        FractionFreeEchelon ff(c);
        SparseMatrix<RatFuncK> m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<PolyK> row;
            for (std::size_t j = 0; j < c; ++j) {
                row.push_back(small_poly(rng));
                m.set(i, j, RatFuncK(row.back()));
            }
            ff.insert(to_sparse(row));
        }
        CHECK(ff.rank() == rank(m));
        auto ns = ff.nullspace();
        CHECK(ns.size() == c - ff.rank());
        for (const auto& v : ns) {
            auto dense = to_dense(v, c);
            for (const auto& x : times(m, dense))
                CHECK(x.is_zero());
            SparseVec<PolyK> cleared = clear_denominators(v);
            CHECK(!cleared.empty());
        }
    }
}

TEST_CASE("scalar arithmetic laws")
{
    std::vector<Rational> qs{0, 1, -1, Rational(2, 3), Rational(-7, 5)};
    std::vector<PolyK> ps{PolyK(0), PolyK(1), PolyK::k(), poly({1, -2, 3}), poly({Rational(1, 2), 0, -1})};
    std::vector<RatFuncK> rs{RatFuncK(0L), RatFuncK(1), RatFuncK(PolyK::k()), RatFuncK(PolyK(1), poly({1, 1})),
                             RatFuncK(poly({0, 2}), poly({-3, 0, 1}))};
    auto laws = [](const auto& xs) {
        for (const auto& a : xs)
            for (const auto& b : xs) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const auto& c : xs) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
    };
    laws(qs);
    laws(ps);
    laws(rs);
    for (const auto& a : rs)
        if (!a.is_zero())
            CHECK(a / a == RatFuncK(1));
    CHECK(RatFuncK(poly({-1, 0, 1}), poly({-1, 1})) == RatFuncK(poly({1, 1})));
    CHECK(PolyK::gcd(poly({-1, 0, 1}), poly({1, 1})) == poly({1, 1}));
}

TEST_CASE("rational text")
{
    CHECK(to_string(oracle::frac(3, -6)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
