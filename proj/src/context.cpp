#include "h4t/context.hpp"

#include <stdexcept>

namespace h4t {

const char* to_string(ModuleKind kind)
{
    switch (kind) {
    case ModuleKind::Universal: return "universal";
    case ModuleKind::Quotient: return "quotient";
    case ModuleKind::Verma: return "verma";
    }
    return "?";
}

Rational ModuleContext::eigenvalue(const Generator& g) const
{
    if (!raises(g))
        throw std::domain_error(g.to_string() + " does not act by a scalar on the cyclic vector");
    if (kind_ == ModuleKind::Verma)
        return g.mode() == 0 ? l_ : Rational(0);
    return psi_eval(psi_, g);
}

bool ModuleContext::legal(const PBWMonomial& m) const
{
    if (m.kexp() != 0 && kind_ != ModuleKind::Universal)
        return false;
    if (kind_ == ModuleKind::Verma && m.mu().zero_count() != 0)
        return false;
    return true;
}

std::string ModuleContext::to_string() const
{
    std::string s = h4t::to_string(kind_);
    if (kind_ != ModuleKind::Verma) {
        s += "(c1=" + h4t::to_string(psi_.c1()) + ", sigma1=" + h4t::to_string(psi_.sigma1());
        for (const auto& [m, v] : psi_.dvals())
            s += ", d" + std::to_string(m) + "=" + h4t::to_string(v);
        if (kind_ == ModuleKind::Quotient)
            s += ", xi=" + h4t::to_string(xi_);
        return s + ")";
    }
    return s + "(xi=" + h4t::to_string(xi_) + ", l=" + h4t::to_string(l_) + ")";
}

Truncation::Truncation(int max_degree_, int a0_cap_, int kexp_cap_)
    : max_degree(max_degree_)
    , a0_cap(a0_cap_)
    , kexp_cap(kexp_cap_)
{
    if (max_degree < 0 || a0_cap < 0 || kexp_cap < 0)
        throw std::invalid_argument("truncation caps must be >= 0");
}

} // namespace h4t
