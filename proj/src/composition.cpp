#include "fairsplit/composition.hpp"

#include <algorithm>

#include "fairsplit/errors.hpp"

namespace fairsplit {

bool floor_identity_check(long long a, long long b, long long c) {
  if (a < 0 || b < 1 || c < 1) throw InputError("floor identity: need a >= 0 and b, c >= 1");
  return (a / b) / c == a / (b * c);
}

namespace {

// Almost fair, pairwise disjoint, s-stable on the path 1..n (weak when w > 0).
std::string stage_problem(int n, const VertexPartition& p, const Splitting& sp, int q, int s, int w) {
  if (sp.q() != q) return "produced " + std::to_string(sp.q()) + " sets instead of " + std::to_string(q);
  VertexSet seen;
  for (auto set : sp.sets) {
    if (!set.subset_of(VertexSet::range(n))) return "label outside the path";
    if (!set.disjoint(seen)) return "sets overlap";
    seen |= set;
  }
  SplittingSpec spec;
  spec.q = q;
  spec.stability = s;
  spec.weak_stability = w > 0;
  const auto c = certify(p, sp, spec, std::vector<bool>(q, true));
  if (!c.almost_fair_ok) return "not almost fair";
  if (!c.stability_ok) return "not " + std::to_string(s) + "-stable";
  if (w > 0 && !c.weak_stability_ok) return "not weakly stable";
  return {};
}

}  // namespace

BaseSplitter exhaustive_path_splitter(int q, int s, bool weak, std::int64_t node_budget, int threads) {
  BaseSplitter b;
  b.q = q;
  b.s = s;
  b.w = weak ? q : 0;
  b.name = "exhaustive(q=" + std::to_string(q) + ",s=" + std::to_string(s) + (weak ? ",weak" : "") + ")";
  b.run = [q, s, weak, node_budget, threads](int n, const VertexPartition& p) {
    SplittingSpec spec;
    spec.q = q;
    spec.stability = s;
    spec.weak_stability = weak;
    SearchProblem pb = SearchProblem::on_graph(Graph(n), p, spec);
    pb.node_budget = node_budget;
    pb.threads = threads;
    const auto out = find_splitting(pb);
    if (out.status == SearchStatus::budget_exceeded) throw ResourceError("base splitter: node budget exceeded");
    if (out.status != SearchStatus::found) {
      throw ContractError("base splitter: no almost fair splitting exists for this sub-instance");
    }
    return *out.splitting;
  };
  return b;
}

BaseSplitter identity_splitter() {
  BaseSplitter b;
  b.q = 1;
  b.s = 1;
  b.name = "identity";
  b.run = [](int n, const VertexPartition&) { return Splitting{{VertexSet::range(n)}}; };
  return b;
}

CompositionResult compose(int path_n, const VertexPartition& p, const BaseSplitter& first,
                          const BaseSplitter& second) {
  const int q1 = first.q, q2 = second.q, q = q1 * q2;
  if (p.vertex_count() != path_n) throw InputError("compose: partition does not cover the path");
  for (int j = 0; j < p.block_count(); ++j) {
    if (p.block_size(j) < q - 1) throw InputError("compose: every block needs at least q1*q2-1 vertices");
  }

  const Splitting outer = first.run(path_n, p);
  if (auto why = stage_problem(path_n, p, outer, q1, first.s, first.w); !why.empty()) {
    throw ContractError("compose stage 1 (" + first.name + "): " + why);
  }

  Splitting result;
  for (int t = 0; t < q1; ++t) {
    const std::vector<int> labels = outer.sets[t].labels();  // path order = label order
    const int len = static_cast<int>(labels.size());
    std::vector<VertexSet> blocks;
    for (int j = 0; j < p.block_count(); ++j) {
      VertexSet b;
      for (int pos = 1; pos <= len; ++pos) {
        if (p.block(j).contains(labels[pos - 1])) b.insert(pos);
      }
      if (b.size() < q2 - 1) {
        throw ContractError("compose stage 1: S'_" + std::to_string(t + 1) + " meets block " + std::to_string(j + 1) +
                            " in fewer than q2-1 vertices");
      }
      if (!b.empty()) blocks.push_back(b);
    }
    Splitting inner;
    if (len == 0) {
      inner.sets.assign(q2, VertexSet{});
    } else {
      const VertexPartition sub(len, blocks);
      inner = second.run(len, sub);
      if (auto why = stage_problem(len, sub, inner, q2, second.s, second.w); !why.empty()) {
        throw ContractError("compose stage 2 (" + second.name + ", t=" + std::to_string(t + 1) + "): " + why);
      }
    }
    for (auto set : inner.sets) {
      VertexSet back;
      set.for_each([&](int pos) { back.insert(labels[pos - 1]); });
      result.sets.push_back(back);
    }
  }

  CompositionResult r;
  r.splitting = result;
  r.stability = first.s * second.s;
  if (first.w >= 2) r.weak_stability = (second.s - 1) * (first.w - 1) + 1;
  if (auto why = stage_problem(path_n, p, result, q, r.stability, 0); !why.empty()) {
    throw ContractError("compose final check: " + why);
  }
  if (r.weak_stability > 0) {
    for (auto set : result.sets) {
      if (!is_q_stable(set, r.weak_stability, path_n)) throw ContractError("compose final check: weak-stability bound fails");
    }
  }
  SplittingSpec spec;
  spec.q = q;
  spec.stability = std::max(r.stability, r.weak_stability);
  r.certificate = certify(p, result, spec, std::vector<bool>(q, true));
  return r;
}

BaseSplitter compose_splitters(const BaseSplitter& first, const BaseSplitter& second) {
  BaseSplitter b;
  b.q = first.q * second.q;
  b.s = first.s * second.s;
  b.name = "(" + first.name + " x " + second.name + ")";
  b.run = [first, second](int n, const VertexPartition& p) { return compose(n, p, first, second).splitting; };
  return b;
}

CompositionResult power_of_two_splitting(int path_n, const VertexPartition& p, int t, const BaseSplitter* base) {
  if (t < 1) throw InputError("power of two: t must be at least 1");
  const BaseSplitter two = base ? *base : exhaustive_path_splitter(2, 2);
  if (two.q != 2) throw InputError("power of two: base splitter must produce two sets");
  if (t == 1) {
    for (int j = 0; j < p.block_count(); ++j) {
      if (p.block_size(j) < 1) throw InputError("power of two: empty block");
    }
    const Splitting sp = two.run(path_n, p);
    if (auto why = stage_problem(path_n, p, sp, 2, two.s, two.w); !why.empty()) {
      throw ContractError("power of two base (" + two.name + "): " + why);
    }
    CompositionResult r;
    r.splitting = sp;
    r.stability = two.s;
    SplittingSpec spec;
    spec.q = 2;
    spec.stability = two.s;
    r.certificate = certify(p, sp, spec, {true, true});
    return r;
  }
  BaseSplitter acc = two;
  for (int level = 2; level < t; ++level) acc = compose_splitters(acc, two);
  return compose(path_n, p, acc, two);
}

}  // namespace fairsplit
