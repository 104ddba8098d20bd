#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace dsring {

using Partition = std::vector<int>;  // weakly decreasing, zeros stripped

Partition strip(Partition p);

// Number of LR tableaux of shape nu/lambda and content mu.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// All nu with nonzero coefficient in s_lambda * s_mu, by the tableau rule.
std::map<Partition, std::int64_t> lr_expand(const Partition& lambda, const Partition& mu);

// s_lambda * s_mu by expanding monomials in nvars variables and peeling off
// leading terms.
std::map<Partition, std::int64_t> schur_product_bruteforce(const Partition& lambda, const Partition& mu, int nvars);

}  // namespace dsring
