/**
 * @file hecke.hpp
 * @brief Exact Homflypt computation through the Iwahori–Hecke algebra H_n.
 *
 * H_n is carried on the permutation basis { T_w : w in S_n } with
 * coefficients in Z[v^±1, z^±1] and the quadratic relation T_i^2 = z T_i + 1.
 * Braid generators act by
 *
 *     sigma_i      ->  v * T_i
 *     sigma_i^-1   ->  v^-1 * (T_i - z)
 *
 * so the skein relation P(+) = v z P(0) + v^2 P(-) holds term by term.
 * The Markov trace is taken with a formal parameter tau (one factor per
 * strand retirement); substituting tau = z / (1 - v^2) and scaling by
 * delta^(n-1), delta = (v^-1 - v)/z, yields the Homflypt polynomial of the
 * closure, normalized to 1 on the unknot.  The final substitution is done
 * by one exact division, which doubles as an engine self-check.
 */
#pragma once

#include "skeinlab/algebra.hpp"
#include "skeinlab/braid.hpp"

#include <map>
#include <optional>

namespace skeinlab {

/// Element of H_n: finite sum of basis elements T_w with BiLaurent coefficients.
class HeckeElement {
public:
    explicit HeckeElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("HeckeElement: need n >= 1");
    }

    /// The multiplicative identity T_id.
    static HeckeElement identity(int n);

    int strands() const { return n_; }
    const std::map<Perm, BiLaurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Perm& w, const BiLaurent& c);

    bool operator==(const HeckeElement& o) const {
        return n_ == o.n_ && terms_ == o.terms_;
    }

private:
    int n_;
    std::map<Perm, BiLaurent> terms_;
};

/// Right multiplication by the plain basis generator T_i (1 <= i <= n-1):
/// T_w T_i = T_{w s_i} when the length goes up, z T_w + T_{w s_i} otherwise.
HeckeElement hecke_mul_ti(const HeckeElement& x, int i);

/// Right multiplication by rho(sigma_i^sign); sign is +1 or -1.
HeckeElement hecke_mul_gen(const HeckeElement& x, int i, int sign);

/// rho(b): the image of a braid word, built letter by letter.
HeckeElement hecke_image(const BraidWord& b);

/// Markov trace with formal tau: c[k] is the coefficient of tau^k, 0 <= k <= n-1.
struct TracePoly {
    std::vector<BiLaurent> c;
    bool operator==(const TracePoly& o) const = default;
};

/// Ocneanu trace of x, computed by the strand-retirement recursion.
TracePoly ocneanu_trace(const HeckeElement& x);

/// Homflypt polynomial of the closure of b (exact; unknot -> 1).
BiLaurent homflypt(const BraidWord& b);

/// (v^-1 - v)/z: the factor a split unknot component contributes.
BiLaurent split_factor();

/// Closed form for the (p,2) torus closure:
/// P = v^p (C_{p+1} - C_{p-1} v^2) / (v z), any integer p.
BiLaurent torus_homflypt_closed(long p);

/// Skein check at one letter position: with D+/D-/D0 the words whose letter
/// at `position` is made positive / negative / deleted, verifies
/// P(D+) = v z P(D0) + v^2 P(D-) exactly.
bool check_skein_triple(const BraidWord& b, size_t position);

/// Results of the generator-power reduction identities on b * sigma_i^e.
struct ReductionReport {
    bool conway_plus = false;   // nabla: C_e anchor at sigma_i^{+1}
    bool conway_minus = false;  // nabla: C_e anchor at sigma_i^{-1}
    bool homfly_plus = false;   // P = v^{e-1} C_e P(b sigma_i) + v^e C_{e-1} P(b)
    bool homfly_minus = false;  // P = v^{e+1} C_e P(b sigma_i^{-1}) + v^e C_{e+1} P(b)
    std::optional<bool> cluster;  // split through the clustered syllable;
                                  // nullopt when sigma_i is not clustered
    bool all() const {
        return conway_plus && conway_minus && homfly_plus && homfly_minus &&
               cluster.value_or(true);
    }
};

/// Exact checks of the reduction formulas on the composed word b * sigma_i^e.
ReductionReport check_reduction_formulas(const BraidWord& b, int i, long e);

}  // namespace skeinlab
