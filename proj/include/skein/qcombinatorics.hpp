/**
 * @file qcombinatorics.hpp
 * @brief Quantum integers, factorials, q-Pochhammer symbols and q-binomial variants.
 *
 * Conventions (q = t^12):
 *   {k}       = q^{k/2} - q^{-k/2}
 *   [k]       = {k} / {1}
 *   (q;q)_k   = prod_{l=1..k} (1 - q^l)
 *   (n k)_q   = (q;q)_n / ((q;q)_k (q;q)_{n-k})        "Gauss" binomial
 *   [n k]     = [n]! / ([k]! [n-k]!)                    "bracket" binomial
 * Binomials vanish outside 0 <= k <= n.
 */
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

/// Raised by gauss_multinomial when the parts do not sum to n.
struct PartsMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// q^{num/den} as a Laurent polynomial.
LaurentPoly q_pow(long num, long den = 1);

/// {k} = q^{k/2} - q^{-k/2}
LaurentPoly quantum_brace(long k);

/// [k] for any integer k; [-k] = -[k], [0] = 0.
LaurentPoly quantum_integer(long k);

/// ({k}!, [k]!) for k >= 0.
std::pair<LaurentPoly, LaurentPoly> quantum_factorials(long k);

/// (q;q)_k for k >= 0 (memoized).
LaurentPoly pochhammer(long k);

/// Gauss binomial (n choose k)_q, zero outside 0 <= k <= n.
LaurentPoly gauss_binomial(long n, long k);

/// Bracket binomial [n brack k], zero outside 0 <= k <= n.
LaurentPoly bracket_binomial(long n, long k);

/// (q)_n / prod (q)_{n_i}; throws PartsMismatch if sum(parts) != n.
LaurentPoly gauss_multinomial(long n, const std::vector<long>& parts);

/// Sum of q^{|lambda|} over partitions lambda fitting in a k x l box, by enumeration.
LaurentPoly partition_box_sum(long k, long l);

}  // namespace skein
