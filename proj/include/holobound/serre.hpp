#pragma once

#include "holobound/exact.hpp"

#include <string>
#include <vector>

namespace holobound {

/// M = O(degree) on the projective plane.
struct PlaneLineBundle {
  BigInt degree = 0;
};

/// Parameters of a Serre construction 0 → O → E → Q ⊗ I_Z → 0 on P² with
/// Q = O(2n), chosen against a twisting line bundle M.
struct SerrePlan {
  BigInt m_degree;
  BigInt n;                // Q = 2nΘ
  BigInt q_degree;         // 2n
  BigInt h0_q;             // h⁰(Q)
  BigInt h0_qm;            // h⁰(Q ⊗ M)
  BigInt lz_min;           // minimal admissible length ℓ(Z)
  BigInt stability_floor;  // caller-supplied extra lower bound on c2(E)
  BigInt c2_min;           // certified sufficient bound: max(lz_min, floor)
  BigInt twisted_c2_min;   // c2(E ⊗ O(-n)) = c2_min - n²

  friend bool operator==(const SerrePlan&, const SerrePlan&) = default;
};

/// h⁰(P², O(d)) = binom(d + 2, 2) for d >= 0, else 0.
BigInt h0_plane(const BigInt& d);

/// Smallest admissible plan: least n >= 1 with 2n > deg M, ℓ(Z) = h⁰(Q⊗M) + 1.
SerrePlan plan(const PlaneLineBundle& m, const BigInt& extra_stability_floor = 0);

/// Plan for M = O_X(C) ⊗ K_X on P², i.e. M = O(curve_degree - 3).
SerrePlan alpha_of_curve(const BigInt& curve_degree, const BigInt& extra_stability_floor = 0);

struct ConditionCheck {
  std::string condition;
  bool holds = false;
};

/// Re-derives each counting condition from the plan's n and lz_min (stored
/// h⁰ values are not trusted) and returns one entry per condition.
std::vector<ConditionCheck> check_assumptions(const SerrePlan& p, const PlaneLineBundle& m);

inline bool all_hold(const std::vector<ConditionCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

}  // namespace holobound
