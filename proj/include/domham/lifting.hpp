#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "domham/dominating.hpp"
#include "domham/reduction.hpp"

namespace domham {

/// How a dominating set F of H' = H - v relates to the OpI triple.
enum class Op1Class {
  XPrime,   // x in F, u not in F
  BPrime,   // x and u in F
  USource,  // u in F, x not in F
};

/// Everything lift_op1 needs about H, H' = H - v and the triple (u, v, x).
class LiftContextOp1 {
 public:
  /// Throws InvalidInput unless `r` is a valid OpI in `h`.
  LiftContextOp1(const Graph& h, const Reduction& r);

  const Graph& host() const { return host_; }
  const Graph& reduced() const { return reduced_; }
  int u() const { return u_; }
  int v() const { return v_; }
  int x() const { return x_; }

  /// Throws InvalidInput if `f` contains neither u nor x (so it cannot
  /// dominate H').
  Op1Class classify(VertexSet f) const;

 private:
  Graph host_;
  Graph reduced_;
  int u_, v_, x_;
};

/// J: dominating sets of H' - u that avoid N_{H'}[u], ascending.
std::vector<VertexSet> compute_J(const Graph& hprime, int u,
                                 std::size_t budget = kDefaultNodeBudget);

/// Everything lift_op2 needs about H, H' = H - v - w and the triple (u, v, w).
class LiftContextOp2 {
 public:
  LiftContextOp2(const Graph& h, const Reduction& r,
                 std::size_t budget = kDefaultNodeBudget);

  const Graph& host() const { return host_; }
  const Graph& reduced() const { return reduced_; }
  int u() const { return u_; }
  int v() const { return v_; }
  int w() const { return w_; }
  const std::vector<VertexSet>& J() const { return j_; }
  bool in_J(VertexSet s) const { return j_lookup_.contains(s); }

 private:
  Graph host_;
  Graph reduced_;
  int u_, v_, w_;
  std::vector<VertexSet> j_;
  std::unordered_set<VertexSet> j_lookup_;
};

/// Hamilton path of D(H) from one of D(H - v), splicing detours through the
/// sets without v along each maximal run of X-class nodes.
HamPath lift_op1(const HamPath& p, const LiftContextOp1& ctx);

/// Hamilton path of D(H) from one of D(H - v - w): each F_i becomes the
/// triple F_i+v, F_i+vw, F_i+w (reversed for even i), then every S in J is
/// spliced in next to F_t = S+u.
HamPath lift_op2(const HamPath& p, const LiftContextOp2& ctx);

/// Lifts `p` through a single reduction applied to `h`.
HamPath lift(const HamPath& p, const Graph& h, const Reduction& r,
             std::size_t budget = kDefaultNodeBudget);

}  // namespace domham
