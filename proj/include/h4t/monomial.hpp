#pragma once

#include "h4t/algebra.hpp"
#include "h4t/partitions.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace h4t {

/* Block position of a generator inside a canonical monomial:
 * A, then B, then d, then c.
 */
int block_of(Letter l);

/* k^kexp * A(-mu) B(-nu) d(-lam) c(-eta) w, factors in exactly this order.
 * Within a block modes are non-increasing, i.e. parts ascending.
 */
class PBWMonomial {
public:
    PBWMonomial() { rehash(); }
    PBWMonomial(EvenPseudoPartition mu, OddPartition nu, OddPartition lam, OddPartition eta, int kexp = 0);

    const EvenPseudoPartition& mu() const { return mu_; }
    const OddPartition& nu() const { return nu_; }
    const OddPartition& lam() const { return lam_; }
    const OddPartition& eta() const { return eta_; }
    int kexp() const { return kexp_; }

    int degree() const { return mu_.size() + nu_.size() + lam_.size() + eta_.size(); }
    /* Total number of factors, k excluded. */
    int length() const { return mu_.count() + nu_.count() + lam_.count() + eta_.count(); }
    bool is_vacuum() const { return length() == 0; }

    /* Factors in canonical order. */
    std::vector<Generator> factors() const;
    std::optional<Generator> first() const;
    PBWMonomial without_first() const;
    /* Inserts a non-positive, non-central generator into its block.
     * Only valid when no factor of an earlier block must be commuted past,
     * i.e. block_of(g) <= block of first().
     */
    PBWMonomial with_factor(const Generator& g) const;
    PBWMonomial with_kexp(int kexp) const;

    /* "A(0)^2*B(-1)*w", "k^2*c(-3)*w", "w" */
    std::string to_string() const;

    std::size_t hash() const { return hash_; }

    friend bool operator==(const PBWMonomial& a, const PBWMonomial& b)
    {
        return a.hash_ == b.hash_ && a.kexp_ == b.kexp_ && a.mu_ == b.mu_ && a.nu_ == b.nu_ && a.lam_ == b.lam_
            && a.eta_ == b.eta_;
    }
    /* (degree, mu, nu, lam, eta, kexp) */
    friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b);

private:
    void rehash();

    EvenPseudoPartition mu_;
    OddPartition nu_, lam_, eta_;
    int kexp_ = 0;
    std::size_t hash_ = 0;
};

/* Builds a monomial from canonical-order factors; throws
 * std::invalid_argument on positive modes, K, or out-of-order factors.
 */
PBWMonomial monomial_from_factors(const std::vector<Generator>& factors, int kexp = 0);

struct PBWMonomialHash {
    std::size_t operator()(const PBWMonomial& m) const { return m.hash(); }
};

} // namespace h4t
