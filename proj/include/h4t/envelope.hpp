#pragma once

#include "h4t/algebra.hpp"
#include "h4t/context.hpp"
#include "h4t/monomial.hpp"
#include "h4t/poly.hpp"
#include "h4t/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace h4t {

/* Finitely supported PBWMonomial -> R, R = Rational or PolyK. */
template <class R>
class ModuleVector {
public:
    using Terms = std::map<PBWMonomial, R>;

    ModuleVector() = default;
    explicit ModuleVector(const PBWMonomial& m, const R& c = R(1)) { add(m, c); }

    void add(const PBWMonomial& m, const R& c)
    {
        if (is_zero_scalar(c))
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero_scalar(it->second))
                terms_.erase(it);
        }
    }

    /* this += c * v */
    void add_scaled(const ModuleVector& v, const R& c)
    {
        if (is_zero_scalar(c))
            return;
        for (const auto& [m, x] : v.terms_)
            add(m, x * c);
    }

    ModuleVector& operator+=(const ModuleVector& v)
    {
        for (const auto& [m, x] : v.terms_)
            add(m, x);
        return *this;
    }
    ModuleVector& operator-=(const ModuleVector& v)
    {
        for (const auto& [m, x] : v.terms_)
            add(m, R(-x));
        return *this;
    }
    ModuleVector& operator*=(const R& c)
    {
        if (is_zero_scalar(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, x] : terms_)
            x = x * c;
        return *this;
    }
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
    friend ModuleVector operator*(const R& c, ModuleVector a) { return a *= c; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    R coefficient(const PBWMonomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? R(0) : it->second;
    }

    /* -1 for the zero vector. */
    int max_degree() const
    {
        int d = -1;
        for (const auto& [m, x] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
    static bool is_zero_scalar(const R& c) { return h4t::is_zero(c); }

    Terms terms_;
};

/* Canonical text: "3/2*A(0)^2*B(-1)*w + k*c(-3)*w", "0" for zero. */
std::string format(const ModuleVector<Rational>& v);
std::string format(const ModuleVector<PolyK>& v);

int degree(const PBWMonomial& m);

/* A scalar times a product of generators, applied to the cyclic vector
 * (rightmost generator acts first).
 */
struct Word {
    PolyK scalar{Rational(1)};
    std::vector<Generator> gens;
};

/* Rational -> Q[k] with k^t folded into the coefficient, and back. */
ModuleVector<Rational> unfold(const ModuleVector<PolyK>& v);
ModuleVector<PolyK> fold(const ModuleVector<Rational>& v);

/* PBW normal-ordering engine. The action of g on f1*rest is
 *   g f1 rest = f1 (g rest) + [g, f1] rest
 * applied recursively; results are memoized per (g, monomial). Universal
 * contexts require R = PolyK, the others R = Rational. Not thread-safe;
 * use one instance per thread.
 */
template <class R>
class Rewriter {
public:
    explicit Rewriter(ModuleContext ctx);

    const ModuleContext& context() const { return ctx_; }

    const ModuleVector<R>& act(const Generator& g, const PBWMonomial& m);
    ModuleVector<R> act(const Generator& g, const ModuleVector<R>& v);
    /* Action of a Lie algebra element (linear combination). */
    ModuleVector<R> act(const LieElement& x, const ModuleVector<R>& v);

    ModuleVector<R> reduce(const Word& w);

    /* k in a scalar is replaced by xi outside Universal contexts. */
    R scalar(const PolyK& p) const;

    std::size_t cache_size() const { return cache_.size(); }

private:
    struct Key {
        Generator g;
        PBWMonomial m;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const
        {
            return k.m.hash() * 31 + static_cast<std::size_t>(k.g.letter()) * 1009
                + static_cast<std::size_t>(k.g.mode() + 4096);
        }
    };

    ModuleVector<R> compute(const Generator& g, const PBWMonomial& m);

    ModuleContext ctx_;
    R central_;
    std::unordered_map<Key, ModuleVector<R>, KeyHash> cache_;
};

/* Reduces a word in one shot with a fresh rewriter of the right ring. */
ModuleVector<Rational> reduce_word(const Word& w, const ModuleContext& ctx);
ModuleVector<PolyK> reduce_word_universal(const Word& w, const ModuleContext& ctx);

enum class Strategy { Leftmost, Rightmost };

/* (word length, inversions against the target order); every rewrite step
 * strictly decreases it lexicographically.
 */
struct RewriteMeasure {
    std::size_t length = 0;
    std::size_t inversions = 0;
    friend auto operator<=>(const RewriteMeasure&, const RewriteMeasure&) = default;
};

using RewriteObserver = std::function<void(const RewriteMeasure& before, const RewriteMeasure& after)>;

/* Independent reference engine: plain string rewriting on words with the
 * rules
 *   k -> scalar,
 *   trailing raising generator -> its eigenvalue,
 *   x y -> y x + [x, y] for an adjacent pair out of target order.
 * Target order: non-raising generators by (block, -mode), then raising
 * generators by (letter, mode). No memoization.
 */
template <class R>
class WordRewriter {
public:
    WordRewriter(ModuleContext ctx, Strategy strategy);

    void set_observer(RewriteObserver observer) { observer_ = std::move(observer); }

    ModuleVector<R> reduce(const std::vector<Generator>& word, const R& scalar = R(1));

    std::size_t steps() const { return steps_; }

    RewriteMeasure measure(const std::vector<Generator>& word) const;

private:
    bool out_of_order(const Generator& x, const Generator& y) const;

    ModuleContext ctx_;
    Strategy strategy_;
    R central_;
    RewriteObserver observer_;
    std::size_t steps_ = 0;
};

} // namespace h4t
