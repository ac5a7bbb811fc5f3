#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ucstar/matrep.hpp"
#include "ucstar/zero_one_matrix.hpp"

namespace ucstar {

using Path = std::vector<std::size_t>;

/// "[]", "[1,2]".
std::string word_label(Path const& w);
/// "(1,2)".
std::string path_label(Path const& p);

/// Truncated Fock space for O_n on generators S1..Sn and `one`: basis words of
/// length <= L over 1..n, S_i e_w = e_{iw} when |w| < L. Interior: 1 <= |w| < L.
Representation fock_rep(std::size_t n, std::size_t L);

/// Same construction for O_infinity materialized on m letters T1..Tm.
Representation fock_infinity_rep(std::size_t m, std::size_t L);

/// Compatible index sequences of length n (A_{i_k i_{k+1}} = 1), lexicographic.
std::vector<Path> enumerate_paths(ZeroOneMatrix const& A, std::size_t n);

/// Truncated path space for a finite A on T1..Tn (plus `one` if unital):
/// basis paths of length 1..L, L_i e_mu = e_{i mu} if A_{i mu_0} = 1 and
/// |mu| < L. Interior: lengths 2..L-1.
Representation pathspace_rep(ZeroOneMatrix const& A, std::size_t L, bool unital = true);

}  // namespace ucstar
