#include "h4t/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace h4t {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view part, bool allow_sign) {
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
            part.remove_prefix(1);
        if (part.empty())
            return false;
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    std::string_view num = std::string_view(s).substr(0, slash);
    std::string_view den = slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw std::invalid_argument("not a rational number: '" + s + "'");
    if (num[0] == '+')
        num.remove_prefix(1);
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (sgn(d) == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

} // namespace h4t
