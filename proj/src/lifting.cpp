#include "domham/lifting.hpp"

#include <string>

#include "domham/error.hpp"

namespace domham {

namespace {

// The input must already be a Hamilton path of D(H'): dominating, distinct,
// unit steps and covering every dominating set.
void require_hamilton_path(const Graph& g, const HamPath& p) {
  std::unordered_set<VertexSet> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].subset_of(g.active()) || !is_dominating(g, p[i]))
      throw Error(ErrorKind::InvalidInput,
                  "input step " + std::to_string(i) + " is not a dominating set of H'");
    if (!seen.insert(p[i]).second)
      throw Error(ErrorKind::InvalidInput, "input step " + std::to_string(i) + " repeats");
    if (i > 0 && hamming(p[i - 1], p[i]) != 1)
      throw Error(ErrorKind::InvalidInput,
                  "input steps " + std::to_string(i - 1) + " and " + std::to_string(i) +
                      " differ in more than one vertex");
  }
  if (p.size() != enumerate_dominating_sets(g).size())
    throw Error(ErrorKind::InvalidInput, "input path does not cover D(H')");
}

}  // namespace

LiftContextOp1::LiftContextOp1(const Graph& h, const Reduction& r)
    : host_(h), reduced_(apply_op1(h, r)), u_(r.u), v_(r.v), x_(r.x()) {}

Op1Class LiftContextOp1::classify(VertexSet f) const {
  const bool has_x = f.contains(x_), has_u = f.contains(u_);
  if (has_x && !has_u) return Op1Class::XPrime;
  if (has_x && has_u) return Op1Class::BPrime;
  if (has_u) return Op1Class::USource;
  throw Error(ErrorKind::InvalidInput,
              to_set_string(f) + " contains neither u nor x; not dominating in H'");
}

HamPath lift_op1(const HamPath& p, const LiftContextOp1& ctx) {
  require_hamilton_path(ctx.reduced(), p);
  const int u = ctx.u(), v = ctx.v();
  const std::size_t n = p.size();
  auto in_x = [&](std::size_t i) { return ctx.classify(p[i]) == Op1Class::XPrime; };

  HamPath out;
  out.reserve(2 * n);
  std::size_t i = 0;
  while (i < n) {
    if (!in_x(i)) {
      out.push_back(p[i].with(v));
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && in_x(j + 1)) ++j;
    // Maximal run i..j inside X. Detour pairs (t, t+1) for t = i, i+2, ...
    std::size_t t = i;
    for (; t + 1 <= j; t += 2) {
      out.push_back(p[t].with(v));
      out.push_back(p[t]);
      out.push_back(p[t].with(u));
      out.push_back(p[t + 1].with(u));
      out.push_back(p[t + 1]);
      out.push_back(p[t + 1].with(v));
    }
    if (t == j) {
      // Odd run: the last node detours alone.
      out.push_back(p[j].with(v));
      out.push_back(p[j]);
      out.push_back(p[j].with(u));
      if (j + 1 < n && p[j + 1] != p[j].with(u))
        throw Error(ErrorKind::ConstructionFailed,
                    "odd X-run ending at step " + std::to_string(j) +
                        " is not followed by its B-class partner");
      // p[j+1] + v == p[j] + u + v follows next, adjacent to p[j] + u.
    }
    i = j + 1;
  }
  return out;
}

std::vector<VertexSet> compute_J(const Graph& hprime, int u, std::size_t budget) {
  if (!hprime.is_active(u))
    throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(u) + " is not active");
  const VertexSet rest = hprime.active().without(u);
  return dominating_subsets(hprime, rest - hprime.closed_neighborhood(u), rest, budget);
}

LiftContextOp2::LiftContextOp2(const Graph& h, const Reduction& r, std::size_t budget)
    : host_(h), reduced_(apply_op2(h, r)), u_(r.u), v_(r.v), w_(r.w()),
      j_(compute_J(reduced_, r.u, budget)), j_lookup_(j_.begin(), j_.end()) {}

HamPath lift_op2(const HamPath& p, const LiftContextOp2& ctx) {
  require_hamilton_path(ctx.reduced(), p);
  const int u = ctx.u(), v = ctx.v(), w = ctx.w();
  HamPath out;
  out.reserve(3 * p.size() + 2 * ctx.J().size());
  std::size_t spliced = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const VertexSet f = p[i];
    const VertexSet fv = f.with(v), fw = f.with(w), fvw = fv.with(w);
    const VertexSet s = f.without(u);
    const bool splice = f.contains(u) && ctx.in_J(s);
    spliced += splice ? 1 : 0;
    // i is 0-based, so even i is an odd position in the path.
    if (i % 2 == 0) {
      out.push_back(fv);
      if (splice) {
        out.push_back(s.with(v));
        out.push_back(s.with(v).with(w));
      }
      out.push_back(fvw);
      out.push_back(fw);
    } else {
      out.push_back(fw);
      out.push_back(fvw);
      if (splice) {
        out.push_back(s.with(v).with(w));
        out.push_back(s.with(v));
      }
      out.push_back(fv);
    }
  }
  if (spliced != ctx.J().size())
    throw Error(ErrorKind::ConstructionFailed,
                "only " + std::to_string(spliced) + " of " + std::to_string(ctx.J().size()) +
                    " J-sets found on the input path");
  return out;
}

HamPath lift(const HamPath& p, const Graph& h, const Reduction& r, std::size_t budget) {
  if (r.kind == OpKind::OpI) return lift_op1(p, LiftContextOp1(h, r));
  return lift_op2(p, LiftContextOp2(h, r, budget));
}

}  // namespace domham
