#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "chebms/closed_forms.hpp"

namespace chebms {

/// Ranges for the closed-form identity sweep. Defaults match the ranges the
/// test suite pins.
struct IdentityRanges {
  std::size_t n_max = 9;            // A three-way agreement, N vanishing/nonvanishing
  std::size_t k_max = 15;
  std::size_t displayed_k_max = 50;  // A(1,k), A(3,k), A(5,k) simplifications
  std::size_t theta_n_max = 5;
  std::size_t theta_k_max = 12;
  std::size_t hyp_k_max = 12;  // 2F1 representation of f and g(i,k;-1)
  std::size_t g_i_max = 8;
  std::size_t worpitzky_n_max = 20;
  std::size_t q_link_n_max = 7;
  std::size_t q_link_k_max = 12;
};

struct IdentityCheck {
  std::string label;
  std::string checked_range;
  bool pass = false;
};

/// Runs every closed-form identity. N and the closed form of A read their
/// Worpitzky numbers from `table`, which must cover max(n_max, worpitzky_n_max).
std::vector<IdentityCheck> verify_identities(const IdentityRanges& ranges, const WorpitzkyTable& table);
std::vector<IdentityCheck> verify_identities(const IdentityRanges& ranges);

bool all_pass(const std::vector<IdentityCheck>& checks);

}  // namespace chebms
