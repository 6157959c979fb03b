#include "h4t/algebra.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace h4t {

char letter_symbol(Letter l)
{
    switch (l) {
    case Letter::A: return 'A';
    case Letter::B: return 'B';
    case Letter::C: return 'c';
    case Letter::D: return 'd';
    case Letter::K: return 'k';
    }
    return '?';
}

bool valid_mode(Letter letter, int mode)
{
    switch (letter) {
    case Letter::A: return mode % 2 == 0;
    case Letter::B:
    case Letter::C:
    case Letter::D: return mode % 2 != 0;
    case Letter::K: return mode == 0;
    }
    return false;
}

Generator::Generator(Letter letter, int mode)
    : letter_(letter)
    , mode_(mode)
{
    if (!valid_mode(letter, mode)) {
        std::string need = letter == Letter::A ? "an even mode" : letter == Letter::K ? "mode 0" : "an odd mode";
        throw std::invalid_argument(std::string(1, letter_symbol(letter)) + " requires " + need + ", got "
                                    + std::to_string(mode));
    }
}

std::string Generator::to_string() const
{
    if (letter_ == Letter::K)
        return "k";
    return std::string(1, letter_symbol(letter_)) + "(" + std::to_string(mode_) + ")";
}

Generator parse_generator(std::string_view text)
{
    if (text == "k" || text == "K")
        return Generator::K();
    if (text.size() < 4 || text[1] != '(' || text.back() != ')')
        throw std::invalid_argument("bad generator '" + std::string(text) + "'");
    Letter letter;
    switch (text[0]) {
    case 'A': case 'E': letter = Letter::A; break;
    case 'B': case 'F': letter = Letter::B; break;
    case 'c': case 'C': letter = Letter::C; break;
    case 'd': case 'D': letter = Letter::D; break;
    default: throw std::invalid_argument("unknown generator letter in '" + std::string(text) + "'");
    }
    auto body = text.substr(2, text.size() - 3);
    int mode = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), mode);
    if (ec != std::errc() || ptr != body.data() + body.size())
        throw std::invalid_argument("bad mode in '" + std::string(text) + "'");
    return Generator(letter, mode);
}

void LieElement::add(const Generator& g, const Rational& c)
{
    if (h4t::is_zero(c))
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (h4t::is_zero(it->second))
            terms_.erase(it);
    }
}

LieElement& LieElement::operator+=(const LieElement& o)
{
    for (const auto& [g, c] : o.terms_)
        add(g, c);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c)
{
    if (h4t::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, x] : terms_)
        x *= c;
    return *this;
}

Rational LieElement::coefficient(const Generator& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string LieElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [g, c] : terms_) {
        Rational mag = abs(c);
        if (sgn(c) < 0)
            s += s.empty() ? "-" : " - ";
        else if (!s.empty())
            s += " + ";
        if (mag != 1)
            s += h4t::to_string(mag) + "*";
        s += g.to_string();
    }
    return s;
}

LieElement bracket(const Generator& x, const Generator& y)
{
    LieElement out;
    if (x.is_central() || y.is_central())
        return out;
    const int m = x.mode(), n = y.mode();
    const bool dual = m + n == 0;
    auto central = [&](const Rational& c) {
        if (dual)
            out.add(Generator::K(), c);
    };
    using L = Letter;
    const L a = x.letter(), b = y.letter();
    if (a == L::A && b == L::A) {
        central(Rational(2 * m));
    } else if (a == L::B && b == L::B) {
        central(Rational(-2 * m));
    } else if (a == L::A && b == L::B) {
        out.add(Generator::C(m + n), Rational(-2));
    } else if (a == L::B && b == L::A) {
        out.add(Generator::C(m + n), Rational(2));
    } else if (a == L::D && b == L::A) {
        out.add(Generator::B(m + n), Rational(1));
    } else if (a == L::A && b == L::D) {
        out.add(Generator::B(m + n), Rational(-1));
    } else if (a == L::D && b == L::B) {
        out.add(Generator::A(m + n), Rational(1));
    } else if (a == L::B && b == L::D) {
        out.add(Generator::A(m + n), Rational(-1));
    } else if ((a == L::C && b == L::D) || (a == L::D && b == L::C)) {
        central(Rational(m));
    }
    return out;
}

LieElement bracket(const LieElement& x, const LieElement& y)
{
    LieElement out;
    for (const auto& [g, c] : x.terms())
        for (const auto& [h, d] : y.terms()) {
            LieElement t = bracket(g, h);
            t *= c * d;
            out += t;
        }
    return out;
}

Rational invariant_form(Letter x, Letter y)
{
    if (x == Letter::K || y == Letter::K)
        throw std::invalid_argument("the invariant form is defined on A, B, C, D only");
    if (x == Letter::A && y == Letter::A)
        return 2;
    if (x == Letter::B && y == Letter::B)
        return -2;
    if ((x == Letter::C && y == Letter::D) || (x == Letter::D && y == Letter::C))
        return 1;
    return 0;
}

WhittakerType::WhittakerType(Rational c1, Rational sigma1, std::map<int, Rational> dvals)
    : c1_(std::move(c1))
    , sigma1_(std::move(sigma1))
{
    for (auto& [m, v] : dvals) {
        if (m < 1 || m % 2 == 0)
            throw std::invalid_argument("psi(d(m)) is defined for odd m >= 1, got m = " + std::to_string(m));
        if (!h4t::is_zero(v))
            dvals_.emplace(m, v);
    }
}

Rational WhittakerType::d(int m) const
{
    auto it = dvals_.find(m);
    return it == dvals_.end() ? Rational(0) : it->second;
}

bool WhittakerType::is_zero() const
{
    return h4t::is_zero(c1_) && h4t::is_zero(sigma1_) && dvals_.empty();
}

Rational psi_eval(const WhittakerType& psi, const Generator& g)
{
    if (!g.is_positive())
        throw std::domain_error("psi is defined on positive-mode generators only, got " + g.to_string());
    switch (g.letter()) {
    case Letter::A: return 0;
    case Letter::B: return g.mode() == 1 ? psi.sigma1() : Rational(0);
    case Letter::C: return g.mode() == 1 ? psi.c1() : Rational(0);
    case Letter::D: return psi.d(g.mode());
    case Letter::K: break;
    }
    return 0;
}

std::vector<Generator> positive_generators(int bound)
{
    std::vector<Generator> out;
    for (int n = 2; n <= bound; n += 2)
        out.push_back(Generator::A(n));
    for (Letter l : {Letter::B, Letter::C, Letter::D})
        for (int m = 1; m <= bound; m += 2)
            out.emplace_back(l, m);
    return out;
}

std::vector<Generator> generators_up_to(int bound)
{
    std::vector<Generator> out;
    int even = bound - (bound % 2 + 2) % 2;
    for (int n = -even; n <= even; n += 2)
        out.push_back(Generator::A(n));
    int odd = bound % 2 ? bound : bound - 1;
    for (Letter l : {Letter::B, Letter::C, Letter::D})
        for (int m = -odd; m <= odd; m += 2)
            out.emplace_back(l, m);
    return out;
}

bool check_homomorphism(const PsiFunction& psi, int mode_bound)
{
    auto gens = positive_generators(mode_bound);
    for (const auto& x : gens)
        for (const auto& y : gens) {
            Rational v(0);
            const LieElement b = bracket(x, y);
            for (const auto& [g, c] : b.terms())
                v += c * psi(g);
            if (!h4t::is_zero(v))
                return false;
        }
    return true;
}

bool check_homomorphism(const WhittakerType& psi, int mode_bound)
{
    return check_homomorphism(PsiFunction([&psi](const Generator& g) { return psi_eval(psi, g); }), mode_bound);
}

} // namespace h4t
