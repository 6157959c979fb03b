#include "h4t/envelope.hpp"

#include <stdexcept>
#include <type_traits>

namespace h4t {

namespace {

void append_term(std::string& s, bool negative, const std::string& body)
{
    if (negative)
        s += s.empty() ? "-" : " - ";
    else if (!s.empty())
        s += " + ";
    s += body;
}

std::string rational_prefix(const Rational& mag)
{
    return mag == 1 ? std::string() : h4t::to_string(mag) + "*";
}

std::string k_power(int e)
{
    return e == 1 ? "k*" : "k^" + std::to_string(e) + "*";
}

template <class R>
R central_value(const ModuleContext& ctx)
{
    if constexpr (std::is_same_v<R, PolyK>) {
        if (ctx.kind() != ModuleKind::Universal)
            throw std::invalid_argument("polynomial coefficients are only used in universal contexts");
        return PolyK::k();
    } else {
        if (ctx.kind() == ModuleKind::Universal)
            throw std::invalid_argument("universal contexts need polynomial coefficients");
        return ctx.xi();
    }
}

} // namespace

std::string format(const ModuleVector<Rational>& v)
{
    if (v.is_zero())
        return "0";
    std::string s;
    for (const auto& [m, c] : v)
        append_term(s, sgn(c) < 0, rational_prefix(abs(c)) + m.to_string());
    return s;
}

std::string format(const ModuleVector<PolyK>& v)
{
    if (v.is_zero())
        return "0";
    std::string s;
    for (const auto& [m, p] : v) {
        int nonzero = 0, e = 0;
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            if (!is_zero(p.coeffs()[i])) {
                ++nonzero;
                e = static_cast<int>(i);
            }
        if (nonzero == 1) {
            const Rational& c = p.coeffs()[static_cast<std::size_t>(e)];
            std::string body = rational_prefix(abs(c)) + (e > 0 ? k_power(e) : std::string()) + m.to_string();
            append_term(s, sgn(c) < 0, body);
        } else {
            append_term(s, false, "(" + p.to_string() + ")*" + m.to_string());
        }
    }
    return s;
}

int degree(const PBWMonomial& m)
{
    return m.degree();
}

ModuleVector<Rational> unfold(const ModuleVector<PolyK>& v)
{
    ModuleVector<Rational> out;
    for (const auto& [m, p] : v) {
        if (m.kexp() != 0)
            throw std::invalid_argument("unfold expects k folded into coefficients");
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            out.add(m.with_kexp(static_cast<int>(i)), p.coeffs()[i]);
    }
    return out;
}

ModuleVector<PolyK> fold(const ModuleVector<Rational>& v)
{
    ModuleVector<PolyK> out;
    for (const auto& [m, c] : v)
        out.add(m.with_kexp(0), PolyK::monomial(c, m.kexp()));
    return out;
}

template <class R>
Rewriter<R>::Rewriter(ModuleContext ctx)
    : ctx_(std::move(ctx))
    , central_(central_value<R>(ctx_))
{
}

template <class R>
R Rewriter<R>::scalar(const PolyK& p) const
{
    if constexpr (std::is_same_v<R, PolyK>)
        return p;
    else
        return p.eval(ctx_.xi());
}

template <class R>
const ModuleVector<R>& Rewriter<R>::act(const Generator& g, const PBWMonomial& m)
{
    Key key{g, m};
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    ModuleVector<R> v = compute(g, m);
    return cache_.emplace(std::move(key), std::move(v)).first->second;
}

template <class R>
ModuleVector<R> Rewriter<R>::compute(const Generator& g, const PBWMonomial& m)
{
    if (m.kexp() != 0)
        throw std::invalid_argument("monomials carry no k power inside the rewriter: " + m.to_string());
    if (g.is_central())
        return ModuleVector<R>(m, central_);
    const bool up = ctx_.raises(g);
    auto f = m.first();
    if (!f) {
        if (up)
            return ModuleVector<R>(m, R(ctx_.eigenvalue(g)));
        return ModuleVector<R>(m.with_factor(g));
    }
    if (!up && block_of(g.letter()) <= block_of(f->letter()))
        return ModuleVector<R>(m.with_factor(g));

    // g f rest = f (g rest) + [g, f] rest
    const PBWMonomial rest = m.without_first();
    ModuleVector<R> out = act(*f, act(g, rest));
    const LieElement b = bracket(g, *f);
    for (const auto& [h, c] : b.terms())
        out.add_scaled(act(h, rest), R(c));
    return out;
}

template <class R>
ModuleVector<R> Rewriter<R>::act(const Generator& g, const ModuleVector<R>& v)
{
    ModuleVector<R> out;
    for (const auto& [m, c] : v)
        out.add_scaled(act(g, m), c);
    return out;
}

template <class R>
ModuleVector<R> Rewriter<R>::act(const LieElement& x, const ModuleVector<R>& v)
{
    ModuleVector<R> out;
    for (const auto& [g, c] : x.terms())
        out.add_scaled(act(g, v), R(c));
    return out;
}

template <class R>
ModuleVector<R> Rewriter<R>::reduce(const Word& w)
{
    ModuleVector<R> v(PBWMonomial(), scalar(w.scalar));
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it)
        v = act(*it, v);
    return v;
}

template class Rewriter<Rational>;
template class Rewriter<PolyK>;

ModuleVector<Rational> reduce_word(const Word& w, const ModuleContext& ctx)
{
    return Rewriter<Rational>(ctx).reduce(w);
}

ModuleVector<PolyK> reduce_word_universal(const Word& w, const ModuleContext& ctx)
{
    return Rewriter<PolyK>(ctx).reduce(w);
}

template <class R>
WordRewriter<R>::WordRewriter(ModuleContext ctx, Strategy strategy)
    : ctx_(std::move(ctx))
    , strategy_(strategy)
    , central_(central_value<R>(ctx_))
{
}

namespace {

struct OrderKey {
    int raising;
    int a;
    int b;
    friend auto operator<=>(const OrderKey&, const OrderKey&) = default;
};

OrderKey order_key(const ModuleContext& ctx, const Generator& g)
{
    if (ctx.raises(g))
        return {1, static_cast<int>(g.letter()), g.mode()};
    return {0, block_of(g.letter()), -g.mode()};
}

} // namespace

template <class R>
bool WordRewriter<R>::out_of_order(const Generator& x, const Generator& y) const
{
    if (x.is_central() || y.is_central())
        return false;
    return order_key(ctx_, x) > order_key(ctx_, y);
}

template <class R>
RewriteMeasure WordRewriter<R>::measure(const std::vector<Generator>& word) const
{
    RewriteMeasure out;
    out.length = word.size();
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (out_of_order(word[i], word[j]))
                ++out.inversions;
    return out;
}

template <class R>
ModuleVector<R> WordRewriter<R>::reduce(const std::vector<Generator>& word, const R& scalar)
{
    enum class Rule { None, Central, Raise, Swap };
    std::map<std::vector<Generator>, R> pending;
    auto push = [&pending](std::vector<Generator> w, const R& c) {
        if (is_zero(c))
            return;
        auto [it, inserted] = pending.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero(it->second))
                pending.erase(it);
        }
    };
    push(word, scalar);

    ModuleVector<R> out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        std::vector<Generator> w = std::move(node.key());
        R c = std::move(node.mapped());
        const std::size_t n = w.size();

        Rule rule = Rule::None;
        std::size_t pos = 0;
        auto probe = [&](std::size_t i) {
            if (w[i].is_central())
                rule = Rule::Central;
            else if (i + 1 == n && ctx_.raises(w[i]))
                rule = Rule::Raise;
            else if (i + 1 < n && out_of_order(w[i], w[i + 1]))
                rule = Rule::Swap;
            pos = i;
            return rule != Rule::None;
        };
        if (strategy_ == Strategy::Leftmost) {
            for (std::size_t i = 0; i < n; ++i)
                if (probe(i))
                    break;
        } else {
            for (std::size_t i = n; i-- > 0;)
                if (probe(i))
                    break;
        }

        if (rule == Rule::None) {
            out.add(monomial_from_factors(w), c);
            continue;
        }
        ++steps_;
        const RewriteMeasure before = observer_ ? measure(w) : RewriteMeasure{};
        auto emit = [&](std::vector<Generator> next, const R& coeff) {
            if (observer_)
                observer_(before, measure(next));
            push(std::move(next), coeff);
        };
        if (rule == Rule::Central || rule == Rule::Raise) {
            R factor = rule == Rule::Central ? central_ : R(ctx_.eigenvalue(w[pos]));
            std::vector<Generator> next = w;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(pos));
            emit(std::move(next), c * factor);
        } else {
            std::vector<Generator> swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            emit(std::move(swapped), c);
            const LieElement b = bracket(w[pos], w[pos + 1]);
            for (const auto& [h, d] : b.terms()) {
                std::vector<Generator> next = w;
                next[pos] = h;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(pos + 1));
                emit(std::move(next), c * R(d));
            }
        }
    }
    return out;
}

template class WordRewriter<Rational>;
template class WordRewriter<PolyK>;

} // namespace h4t
