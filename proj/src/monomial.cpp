#include "h4t/monomial.hpp"

#include <stdexcept>

namespace h4t {

int block_of(Letter l)
{
    switch (l) {
    case Letter::A: return 0;
    case Letter::B: return 1;
    case Letter::D: return 2;
    case Letter::C: return 3;
    case Letter::K: break;
    }
    throw std::invalid_argument("k is not a monomial factor");
}

PBWMonomial::PBWMonomial(EvenPseudoPartition mu, OddPartition nu, OddPartition lam, OddPartition eta, int kexp)
    : mu_(std::move(mu))
    , nu_(std::move(nu))
    , lam_(std::move(lam))
    , eta_(std::move(eta))
    , kexp_(kexp)
{
    if (kexp < 0)
        throw std::invalid_argument("k exponent must be >= 0");
    rehash();
}

void PBWMonomial::rehash()
{
    std::size_t h = static_cast<std::size_t>(kexp_) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (int p : mu_.parts())
        mix(static_cast<std::size_t>(p));
    mix(1000003);
    for (int p : nu_.parts())
        mix(static_cast<std::size_t>(p));
    mix(1000033);
    for (int p : lam_.parts())
        mix(static_cast<std::size_t>(p));
    mix(1000037);
    for (int p : eta_.parts())
        mix(static_cast<std::size_t>(p));
    hash_ = h;
}

std::vector<Generator> PBWMonomial::factors() const
{
    std::vector<Generator> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (int p : mu_.parts())
        out.push_back(Generator::A(-p));
    for (int p : nu_.parts())
        out.push_back(Generator::B(-p));
    for (int p : lam_.parts())
        out.push_back(Generator::D(-p));
    for (int p : eta_.parts())
        out.push_back(Generator::C(-p));
    return out;
}

std::optional<Generator> PBWMonomial::first() const
{
    if (!mu_.empty())
        return Generator::A(-mu_.front());
    if (!nu_.empty())
        return Generator::B(-nu_.front());
    if (!lam_.empty())
        return Generator::D(-lam_.front());
    if (!eta_.empty())
        return Generator::C(-eta_.front());
    return std::nullopt;
}

PBWMonomial PBWMonomial::without_first() const
{
    PBWMonomial out = *this;
    if (!mu_.empty())
        out.mu_ = mu_.without_index(0);
    else if (!nu_.empty())
        out.nu_ = nu_.without_index(0);
    else if (!lam_.empty())
        out.lam_ = lam_.without_index(0);
    else if (!eta_.empty())
        out.eta_ = eta_.without_index(0);
    else
        throw std::logic_error("without_first on the cyclic vector");
    out.rehash();
    return out;
}

PBWMonomial PBWMonomial::with_factor(const Generator& g) const
{
    if (g.is_central() || g.is_positive())
        throw std::invalid_argument("only non-positive generators are monomial factors: " + g.to_string());
    if (auto f = first(); f && block_of(g.letter()) > block_of(f->letter()))
        throw std::logic_error("with_factor would skip an earlier block");
    PBWMonomial out = *this;
    switch (g.letter()) {
    case Letter::A: out.mu_ = mu_.with(-g.mode()); break;
    case Letter::B: out.nu_ = nu_.with(-g.mode()); break;
    case Letter::D: out.lam_ = lam_.with(-g.mode()); break;
    case Letter::C: out.eta_ = eta_.with(-g.mode()); break;
    case Letter::K: break;
    }
    out.rehash();
    return out;
}

PBWMonomial PBWMonomial::with_kexp(int kexp) const
{
    PBWMonomial out = *this;
    if (kexp < 0)
        throw std::invalid_argument("k exponent must be >= 0");
    out.kexp_ = kexp;
    out.rehash();
    return out;
}

std::string PBWMonomial::to_string() const
{
    std::string s;
    if (kexp_ == 1)
        s += "k*";
    else if (kexp_ > 1)
        s += "k^" + std::to_string(kexp_) + "*";
    auto fs = factors();
    for (std::size_t i = 0; i < fs.size();) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i])
            ++j;
        s += fs[i].to_string();
        if (j - i > 1)
            s += "^" + std::to_string(j - i);
        s += "*";
        i = j;
    }
    return s + "w";
}

std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    if (auto c = a.mu_ <=> b.mu_; c != 0)
        return c;
    if (auto c = a.nu_ <=> b.nu_; c != 0)
        return c;
    if (auto c = a.lam_ <=> b.lam_; c != 0)
        return c;
    if (auto c = a.eta_ <=> b.eta_; c != 0)
        return c;
    return a.kexp_ <=> b.kexp_;
}

PBWMonomial monomial_from_factors(const std::vector<Generator>& factors, int kexp)
{
    std::vector<int> parts[4];
    int last_block = 0;
    for (const auto& g : factors) {
        if (g.is_central() || g.is_positive())
            throw std::invalid_argument("not a monomial factor: " + g.to_string());
        int b = block_of(g.letter());
        if (b < last_block || (!parts[b].empty() && parts[b].back() > -g.mode()))
            throw std::invalid_argument("factors are not in canonical order");
        last_block = b;
        parts[b].push_back(-g.mode());
    }
    return PBWMonomial(EvenPseudoPartition(parts[0]), OddPartition(parts[1]), OddPartition(parts[2]),
                       OddPartition(parts[3]), kexp);
}

} // namespace h4t
