#include "fairsplit/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

std::vector<Face> maximal_only(std::vector<Face> facets) {
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Face> kept;
  for (auto& f : facets) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](const Face& big) {
      return big.size() > f.size() && std::includes(big.begin(), big.end(), f.begin(), f.end());
    });
    if (!covered) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<VertexTag> label_tags(int n) {
  std::vector<VertexTag> tags;
  for (int v = 1; v <= n; ++v) tags.emplace_back(v);
  return tags;
}

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<VertexTag> tags, std::vector<Face> facets)
    : tags_(std::move(tags)) {
  const int n = vertex_count();
  for (const auto& f : facets) {
    for (int v : f) {
      if (v < 0 || v >= n) throw InputError("complex: facet references unknown vertex index");
    }
    if (std::set<int>(f.begin(), f.end()).size() != f.size()) {
      throw InputError("complex: facet repeats a vertex");
    }
  }
  facets_ = maximal_only(std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  Face all;
  for (int i = 0; i < n; ++i) all.push_back(i);
  return SimplicialComplex(label_tags(n), {all});
}

SimplicialComplex SimplicialComplex::from_labels(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<Face> idx;
  for (const auto& f : facets) {
    Face face;
    for (int v : f) {
      if (v < 1 || v > n) throw InputError("complex: label outside 1..n");
      face.push_back(v - 1);
    }
    idx.push_back(face);
  }
  return SimplicialComplex(label_tags(n), std::move(idx));
}

int SimplicialComplex::dimension() const {
  int best = -1;
  for (const auto& f : facets_) best = std::max(best, static_cast<int>(f.size()) - 1);
  return best;
}

bool SimplicialComplex::contains(const Face& face) const {
  Face sorted = face;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
  });
}

int SimplicialComplex::index_of(const VertexTag& tag) const {
  for (int i = 0; i < vertex_count(); ++i) {
    if (tags_[i] == tag) return i;
  }
  return -1;
}

std::vector<Face> SimplicialComplex::faces(std::size_t budget) const {
  std::set<Face, decltype(&face_less)> out(&face_less);
  for (const auto& f : facets_) {
    if (f.size() >= 63) throw ResourceError("complex: facet too large to enumerate");
    const std::uint64_t subsets = std::uint64_t{1} << f.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if ((mask >> i) & 1U) sub.push_back(f[i]);
      }
      out.insert(std::move(sub));
      if (out.size() > budget) throw ResourceError("complex: face budget exceeded");
    }
  }
  return {out.begin(), out.end()};
}

std::vector<long long> SimplicialComplex::f_vector(std::size_t budget) const {
  std::vector<long long> f(dimension() + 2, 0);
  for (const auto& face : faces(budget)) ++f[face.size()];
  return f;
}

long long SimplicialComplex::euler_characteristic(std::size_t budget) const {
  long long chi = 0;
  for (const auto& face : faces(budget)) {
    if (face.empty()) continue;
    chi += (face.size() % 2 == 1) ? 1 : -1;
  }
  return chi;
}

void BarycentricChain::validate() const {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    Face f = chain[i];
    if (f.empty()) throw InputError("chain: empty face");
    std::sort(f.begin(), f.end());
    if (i == 0) continue;
    Face prev = chain[i - 1];
    std::sort(prev.begin(), prev.end());
    if (prev.size() >= f.size() || !std::includes(f.begin(), f.end(), prev.begin(), prev.end())) {
      throw InputError("chain: not strictly increasing");
    }
  }
}

// ---------------------------------------------------------------------------

SimplicialComplex independence_complex(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Face> facets;
  // Bron-Kerbosch with pivoting on the complement graph: maximal independent sets.
  std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      Face f;
      r.for_each([&](int v) { f.push_back(v - 1); });
      facets.push_back(f);
      return;
    }
    int pivot = (p | x).min();
    int best = -1;
    (p | x).for_each([&](int u) {
      const int c = (p - g.neighbors(u)).size();
      if (c > best) { best = c; pivot = u; }
    });
    // Candidates: vertices of p that are adjacent to the pivot (or the pivot itself).
    VertexSet candidates = p & (g.neighbors(pivot) | VertexSet{pivot});
    candidates.for_each([&](int v) {
      VertexSet rv = r;
      rv.insert(v);
      const VertexSet keep = VertexSet::range(n) - g.neighbors(v) - VertexSet{v};
      expand(rv, p & keep, x & keep);
      p.erase(v);
      x.insert(v);
    });
  };
  expand(VertexSet{}, VertexSet::range(n), VertexSet{});
  return SimplicialComplex(label_tags(n), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& k, int dim) {
  if (dim < -1) throw InputError("skeleton: dimension must be >= -1");
  if (k.is_void()) return k;
  const std::size_t cap = static_cast<std::size_t>(dim + 1);
  std::vector<Face> out;
  for (const auto& f : k.facets()) {
    if (f.size() <= cap) {
      out.push_back(f);
      continue;
    }
    // All cap-subsets of f.
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(cap), true);
    do {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (pick[i]) sub.push_back(f[i]);
      }
      out.push_back(sub);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return SimplicialComplex(k.tags(), std::move(out));
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<VertexTag> tags;
  for (const auto& t : k.tags()) tags.push_back(VertexTag::array({0, t}));
  for (const auto& t : l.tags()) tags.push_back(VertexTag::array({1, t}));
  const int shift = k.vertex_count();
  std::vector<Face> facets;
  for (const auto& a : k.facets()) {
    for (const auto& b : l.facets()) {
      Face f = a;
      for (int v : b) f.push_back(v + shift);
      facets.push_back(f);
    }
  }
  return SimplicialComplex(std::move(tags), std::move(facets));
}

std::vector<JoinedFace> deleted_join_faces(const SimplicialComplex& k, int q, std::size_t budget) {
  if (q < 1) throw InputError("deleted join: q must be positive");
  if (k.vertex_count() > 64) throw ResourceError("deleted join: more than 64 vertices");
  const auto faces = k.faces(budget);
  std::vector<std::uint64_t> masks;
  for (const auto& f : faces) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  std::vector<JoinedFace> out;
  JoinedFace cur;
  cur.slots.resize(q);
  std::function<void(int, std::uint64_t)> rec = [&](int slot, std::uint64_t used) {
    if (slot == q) {
      out.push_back(cur);
      if (out.size() > budget) throw ResourceError("deleted join: face budget exceeded");
      return;
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (masks[i] & used) continue;
      cur.slots[slot] = faces[i];
      rec(slot + 1, used | masks[i]);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex deleted_join(const SimplicialComplex& k, int q, std::size_t budget) {
  const int n = k.vertex_count();
  std::vector<VertexTag> tags;
  for (int c = 1; c <= q; ++c) {
    for (const auto& t : k.tags()) tags.push_back(VertexTag::array({c, t}));
  }
  const auto tuples = deleted_join_faces(k, q, budget);
  std::vector<Face> facets;
  for (const auto& jf : tuples) {
    // Keep only tuples to which no vertex can be added in any slot.
    std::vector<bool> used(n, false);
    for (const auto& s : jf.slots) {
      for (int v : s) used[v] = true;
    }
    bool maximal = true;
    for (int c = 0; c < q && maximal; ++c) {
      for (int v = 0; v < n && maximal; ++v) {
        if (used[v]) continue;
        Face bigger = jf.slots[c];
        bigger.push_back(v);
        if (k.contains(bigger)) maximal = false;
      }
    }
    if (!maximal) continue;
    Face f;
    for (int c = 0; c < q; ++c) {
      for (int v : jf.slots[c]) f.push_back(c * n + v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex(std::move(tags), std::move(facets));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k, std::size_t budget) {
  auto faces = k.faces(budget);
  faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return f.empty(); }), faces.end());
  std::map<Face, int> index;
  std::vector<VertexTag> tags;
  for (const auto& f : faces) {
    index.emplace(f, static_cast<int>(tags.size()));
    VertexTag t = VertexTag::array();
    for (int v : f) t.push_back(k.tags()[v]);
    tags.push_back(t);
  }
  std::vector<Face> facets;
  for (const auto& top : k.facets()) {
    if (top.empty()) continue;
    Face order = top;
    do {
      Face chain;
      Face prefix;
      for (int v : order) {
        prefix.push_back(v);
        Face sorted = prefix;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(index.at(sorted));
      }
      facets.push_back(chain);
      if (facets.size() > budget) throw ResourceError("subdivision: facet budget exceeded");
    } while (std::next_permutation(order.begin(), order.end()));
  }
  if (facets.empty() && !k.is_void()) facets.push_back({});
  return SimplicialComplex(std::move(tags), std::move(facets));
}

SimplicialComplex sarkaria_complex(const std::vector<int>& ks) {
  std::vector<int> sizes;
  std::vector<int> caps;
  for (int k : ks) {
    if (k < 1) throw InputError("sarkaria: every k_j must be >= 1");
    sizes.push_back(2 * k + 1);
    caps.push_back(k);
  }
  return constraint_subcomplex(VertexPartition::intervals(sizes), caps);
}

SimplicialComplex constraint_subcomplex(const VertexPartition& p, const std::vector<int>& caps) {
  if (static_cast<int>(caps.size()) != p.block_count()) throw InputError("constraint: one cap per block");
  std::vector<Face> facets{{}};
  for (int j = 0; j < p.block_count(); ++j) {
    if (caps[j] < 0) throw InputError("constraint: caps must be nonnegative");
    std::vector<int> members;
    p.block(j).for_each([&](int v) { members.push_back(v - 1); });
    const std::size_t take = std::min<std::size_t>(caps[j], members.size());
    std::vector<Face> choices;
    std::vector<bool> pick(members.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(take), true);
    do {
      Face c;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (pick[i]) c.push_back(members[i]);
      }
      choices.push_back(c);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::vector<Face> next;
    for (const auto& f : facets) {
      for (const auto& c : choices) {
        Face g = f;
        g.insert(g.end(), c.begin(), c.end());
        next.push_back(g);
      }
      if (next.size() > kDefaultFaceBudget) throw ResourceError("constraint: facet budget exceeded");
    }
    facets = std::move(next);
  }
  return SimplicialComplex(label_tags(p.vertex_count()), std::move(facets));
}

SimplicialComplex intersection(const SimplicialComplex& k, const SimplicialComplex& l) {
  // Map l's vertex indices to k's.
  std::vector<int> to_k(l.vertex_count(), -1);
  for (int i = 0; i < l.vertex_count(); ++i) to_k[i] = k.index_of(l.tags()[i]);
  std::vector<Face> facets;
  for (const auto& a : k.facets()) {
    for (const auto& b : l.facets()) {
      Face mapped;
      for (int v : b) {
        if (to_k[v] >= 0) mapped.push_back(to_k[v]);
      }
      std::sort(mapped.begin(), mapped.end());
      Face common;
      std::set_intersection(a.begin(), a.end(), mapped.begin(), mapped.end(), std::back_inserter(common));
      facets.push_back(common);
    }
  }
  return SimplicialComplex(k.tags(), std::move(facets));
}

}  // namespace fairsplit
