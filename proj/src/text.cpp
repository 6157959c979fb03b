#include "h4t/text.hpp"

#include <cctype>

namespace h4t {

namespace {

class Cursor {
public:
    Cursor(std::string_view s, std::size_t base = 0) : s_(s), base_(base) {}

    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eof()
    {
        skip_ws();
        return i_ == s_.size();
    }
    char peek()
    {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++i_;
        return true;
    }
    void expect(char c, const char* what)
    {
        if (!accept(c))
            fail(std::string("expected ") + what);
    }
    std::size_t pos() const { return base_ + i_; }
    void advance(std::size_t n) { i_ += n; }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(pos(), what); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& what) { throw ParseError(at, what); }

    std::string digits()
    {
        skip_ws();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        return std::string(s_.substr(start, i_ - start));
    }

    Rational rational()
    {
        std::size_t at = pos();
        std::string num = digits();
        if (num.empty())
            fail("expected a number");
        std::string text = num;
        if (i_ < s_.size() && s_[i_] == '/') {
            ++i_;
            std::string den = digits();
            if (den.empty())
                fail("expected a denominator");
            text += "/" + den;
        }
        try {
            return parse_rational(text);
        } catch (const std::invalid_argument& e) {
            fail_at(at, e.what());
        }
    }

    int integer()
    {
        skip_ws();
        bool neg = false;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) {
            neg = s_[i_] == '-';
            ++i_;
        }
        std::string d = digits();
        if (d.empty() || d.size() > 6)
            fail("expected an integer mode");
        int v = std::stoi(d);
        return neg ? -v : v;
    }

private:
    std::string_view s_;
    std::size_t base_;
    std::size_t i_ = 0;
};

int exponent(Cursor& c)
{
    if (!c.accept('^'))
        return 1;
    std::string d = c.digits();
    if (d.empty() || d.size() > 4 || std::stoi(d) < 1)
        c.fail("expected a positive exponent");
    return std::stoi(d);
}

PolyK poly_term(Cursor& c)
{
    Rational coeff(1);
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = c.rational();
        have_number = true;
        if (!c.accept('*'))
            return PolyK(coeff);
    }
    if (c.peek() != 'k')
        c.fail(have_number ? "expected k after '*'" : "expected a number or k");
    c.advance(1);
    return PolyK::monomial(coeff, exponent(c));
}

PolyK polynomial(Cursor& c)
{
    PolyK out;
    bool neg = false;
    if (c.accept('-'))
        neg = true;
    else
        c.accept('+');
    while (true) {
        PolyK t = poly_term(c);
        out += neg ? -t : t;
        if (c.accept('+'))
            neg = false;
        else if (c.accept('-'))
            neg = true;
        else
            break;
    }
    return out;
}

Generator generator(Cursor& c)
{
    char ch = c.peek();
    const std::size_t at = c.pos();
    if (ch == 'k' || ch == 'K') {
        c.advance(1);
        return Generator::K();
    }
    Letter letter;
    switch (ch) {
    case 'A': case 'E': letter = Letter::A; break;
    case 'B': case 'F': letter = Letter::B; break;
    case 'c': case 'C': letter = Letter::C; break;
    case 'd': case 'D': letter = Letter::D; break;
    default: c.fail("expected a generator or w");
    }
    c.advance(1);
    c.expect('(', "'(' after generator letter");
    int mode = c.integer();
    c.expect(')', "')'");
    if (!valid_mode(letter, mode)) {
        std::string need = letter == Letter::A ? "an even mode" : "an odd mode";
        c.fail_at(at, std::string(1, ch) + " requires " + need + ", got " + std::to_string(mode));
    }
    return Generator(letter, mode);
}

Word term(Cursor& c)
{
    Word w;
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
        w.scalar = PolyK(c.rational());
        c.expect('*', "'*' after scalar");
    } else if (ch == '(') {
        c.advance(1);
        w.scalar = polynomial(c);
        c.expect(')', "')' closing the scalar");
        c.expect('*', "'*' after scalar");
    }
    while (true) {
        if (c.peek() == 'w') {
            c.advance(1);
            return w;
        }
        Generator g = generator(c);
        int e = exponent(c);
        for (int i = 0; i < e; ++i)
            w.gens.push_back(g);
        c.expect('*', "'*' between factors");
    }
}

} // namespace

std::vector<Word> parse_element(std::string_view text)
{
    Cursor c(text);
    std::vector<Word> out;
    std::string_view trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
        trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
        trimmed.remove_suffix(1);
    if (trimmed == "0")
        return out;
    if (c.eof())
        c.fail("empty element");
    bool neg = false;
    if (c.accept('-'))
        neg = true;
    while (true) {
        Word w = term(c);
        if (neg)
            w.scalar = -w.scalar;
        out.push_back(std::move(w));
        if (c.eof())
            return out;
        if (c.accept('+'))
            neg = false;
        else if (c.accept('-'))
            neg = true;
        else
            c.fail("expected '+' or '-' between terms");
    }
}

PolyK parse_polynomial(std::string_view text)
{
    Cursor c(text);
    PolyK p = polynomial(c);
    if (!c.eof())
        c.fail("unexpected input in polynomial");
    return p;
}

ModuleVector<Rational> evaluate(const std::vector<Word>& element, const ModuleContext& ctx)
{
    Rewriter<Rational> rw(ctx);
    ModuleVector<Rational> out;
    for (const auto& w : element)
        out += rw.reduce(w);
    return out;
}

ModuleVector<PolyK> evaluate_universal(const std::vector<Word>& element, const ModuleContext& ctx)
{
    Rewriter<PolyK> rw(ctx);
    ModuleVector<PolyK> out;
    for (const auto& w : element)
        out += rw.reduce(w);
    return out;
}

std::string format_words(const std::vector<Word>& element)
{
    if (element.empty())
        return "0";
    std::string s;
    for (const auto& w : element) {
        std::string body;
        bool neg = false;
        const PolyK& p = w.scalar;
        if (p.is_constant()) {
            Rational c = p.coeff(0);
            neg = sgn(c) < 0;
            if (abs(c) != 1)
                body += to_string(Rational(abs(c))) + "*";
        } else {
            body += "(" + p.to_string() + ")*";
        }
        for (std::size_t i = 0; i < w.gens.size();) {
            std::size_t j = i;
            while (j < w.gens.size() && w.gens[j] == w.gens[i])
                ++j;
            body += w.gens[i].to_string();
            if (j - i > 1)
                body += "^" + std::to_string(j - i);
            body += "*";
            i = j;
        }
        body += "w";
        if (neg)
            s += s.empty() ? "-" : " - ";
        else if (!s.empty())
            s += " + ";
        s += body;
    }
    return s;
}

} // namespace h4t
