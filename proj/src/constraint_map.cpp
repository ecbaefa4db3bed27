#include "fairsplit/constraint_map.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "fairsplit/errors.hpp"

namespace fairsplit {

namespace {

constexpr std::uint64_t kMaxCodes = 60'000'000;

bool sigma_by_sizes(const std::vector<int>& sizes, int k, int t) {
  int small = 0;
  for (int s : sizes) {
    if (s > k - 1) return false;
    if (s <= k - 2) ++small;
  }
  return small >= t - 1;
}

std::string face_text(const JoinedFace& f) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < f.slots.size(); ++i) {
    if (i) os << ",";
    os << "{";
    for (std::size_t j = 0; j < f.slots[i].size(); ++j) os << (j ? "," : "") << f.slots[i][j];
    os << "}";
  }
  os << ")";
  return os.str();
}

// Unprojected direction: average of e_j over the mask.
std::vector<Rational> raw_direction(std::uint32_t mask, int q) {
  std::vector<Rational> u(q, 0);
  const Rational w(1, std::popcount(mask));
  for (int j = 0; j < q; ++j) {
    if ((mask >> j) & 1U) u[j] = w;
  }
  return u;
}

// Is the all-ones vector a nonnegative combination of the masks' directions?
bool cone_hits_diagonal(const std::set<std::uint32_t>& masks, int q) {
  LPFeasibilityProblem lp;
  lp.variables = static_cast<int>(masks.size());
  std::vector<std::vector<Rational>> cols;
  for (auto m : masks) cols.push_back(raw_direction(m, q));
  for (int j = 0; j < q; ++j) {
    std::vector<Rational> row;
    for (const auto& c : cols) row.push_back(c[j]);
    lp.add_row(std::move(row), 1);
  }
  return solve_feasibility(lp).has_value();
}

}  // namespace

SigmaMembership sigma_member(const JoinedFace& face, int q, int k, int t) {
  if (static_cast<int>(face.slots.size()) != q) throw InputError("sigma: face must have q slots");
  std::set<int> seen;
  std::vector<int> sizes;
  for (const auto& s : face.slots) {
    for (int v : s) {
      if (v < 1 || v > q * k - t) throw InputError("sigma: label outside the simplex");
      if (!seen.insert(v).second) throw InputError("sigma: slots are not disjoint");
    }
    sizes.push_back(static_cast<int>(s.size()));
  }
  SigmaMembership r;
  for (int i = 0; i < q; ++i) {
    if (sizes[i] > k - 1) {
      r.witness = "slot " + std::to_string(i + 1) + " has more than k-1 vertices";
      return r;
    }
  }
  const int small = static_cast<int>(std::count_if(sizes.begin(), sizes.end(), [&](int s) { return s <= k - 2; }));
  if (small < t - 1) {
    r.witness = "only " + std::to_string(small) + " slots have at most k-2 vertices, need " + std::to_string(t - 1);
    return r;
  }
  r.member = true;
  return r;
}

std::vector<Rational> project_to_wq(const std::vector<Rational>& x) {
  Rational mean = 0;
  for (const auto& v : x) mean += v;
  if (!x.empty()) mean /= static_cast<long>(x.size());
  std::vector<Rational> out;
  for (const auto& v : x) out.push_back(v - mean);
  return out;
}

std::vector<Rational> direction_vector(std::uint32_t mask, int q) {
  if (mask == 0) return std::vector<Rational>(q, 0);
  return project_to_wq(raw_direction(mask, q));
}

PhiInstance PhiInstance::build(int q, int k, int t, std::vector<int> vertex_order) {
  if (q < 2) throw InputError("phi: q must be at least 2");
  if (t < 1 || t > q) throw InputError("phi: t must lie in 1..q");
  if (k < std::min(t, 2)) throw InputError("phi: k must be at least min(t, 2)");
  if (q > 16) throw InputError("phi: q too large");
  PhiInstance p;
  p.q_ = q;
  p.k_ = k;
  p.t_ = t;
  p.n_ = q * k - t;
  if (vertex_order.empty()) {
    vertex_order.resize(p.n_);
    std::iota(vertex_order.begin(), vertex_order.end(), 1);
  }
  std::vector<int> sorted = vertex_order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < p.n_; ++i) {
    if (static_cast<int>(sorted.size()) != p.n_ || sorted[i] != i + 1) {
      throw InputError("phi: vertex order must be a permutation of 1..qk-t");
    }
  }
  p.order_ = std::move(vertex_order);
  p.rank_.assign(p.n_, 0);
  for (int i = 0; i < p.n_; ++i) p.rank_[p.order_[i] - 1] = i;
  p.pow_.assign(p.n_ + 1, 1);
  for (int i = 1; i <= p.n_; ++i) {
    p.pow_[i] = p.pow_[i - 1] * static_cast<std::uint64_t>(q + 1);
    if (p.pow_[i] > kMaxCodes) throw ResourceError("phi: deleted join too large to enumerate");
  }
  return p;
}

std::uint64_t PhiInstance::encode(const JoinedFace& face) const {
  if (static_cast<int>(face.slots.size()) != q_) throw InputError("phi: face must have q slots");
  std::uint64_t code = 0;
  std::vector<bool> used(n_, false);
  for (int i = 0; i < q_; ++i) {
    for (int v : face.slots[i]) {
      if (v < 1 || v > n_) throw InputError("phi: label outside the simplex");
      if (used[v - 1]) throw InputError("phi: slots are not disjoint");
      used[v - 1] = true;
      code += static_cast<std::uint64_t>(i + 1) * pow_[v - 1];
    }
  }
  return code;
}

JoinedFace PhiInstance::decode(std::uint64_t code) const {
  JoinedFace f;
  f.slots.resize(q_);
  for (int v = 1; v <= n_; ++v) {
    const int d = static_cast<int>(code % (q_ + 1));
    code /= (q_ + 1);
    if (d) f.slots[d - 1].push_back(v);
  }
  return f;
}

std::vector<int> PhiInstance::slot_sizes(std::uint64_t code) const {
  if (code >= code_count()) return {};
  std::vector<int> sizes(q_, 0);
  for (int v = 0; v < n_; ++v) {
    const int d = static_cast<int>(code % (q_ + 1));
    code /= (q_ + 1);
    if (d) ++sizes[d - 1];
  }
  return sizes;
}

bool PhiInstance::in_sigma(std::uint64_t code) const {
  return sigma_by_sizes(slot_sizes(code), k_, t_);
}

std::uint32_t PhiInstance::direction_mask(std::uint64_t code) const {
  std::vector<int> slot_of(n_, 0);
  std::vector<int> sizes(q_, 0);
  std::uint64_t c = code;
  for (int v = 0; v < n_; ++v) {
    slot_of[v] = static_cast<int>(c % (q_ + 1));
    c /= (q_ + 1);
    if (slot_of[v]) ++sizes[slot_of[v] - 1];
  }
  if (sigma_by_sizes(sizes, k_, t_)) return 0;
  const int low = *std::min_element(sizes.begin(), sizes.end());
  std::uint32_t tied = 0;
  for (int i = 0; i < q_; ++i) {
    if (sizes[i] == low) tied |= 1U << i;
  }
  if (low == 0) return tied;
  for (int v : order_) {
    const int s = slot_of[v - 1];
    if (s && ((tied >> (s - 1)) & 1U)) return 1U << (s - 1);
  }
  return tied;  // unreachable: tied slots are nonempty
}

std::vector<Rational> PhiInstance::assignment_of_code(std::uint64_t code) const {
  return direction_vector(direction_mask(code), q_);
}

std::vector<Rational> PhiInstance::assignment(const JoinedFace& face) const {
  return assignment_of_code(encode(face));
}

std::vector<Rational> evaluate_phi(const PhiInstance& inst, const std::vector<JoinedFace>& chain,
                                   const std::vector<Rational>& coords) {
  if (chain.empty() || chain.size() != coords.size()) throw InputError("phi: chain and coordinates disagree");
  Rational total = 0;
  for (const auto& c : coords) {
    if (c < 0) throw InputError("phi: negative barycentric coordinate");
    total += c;
  }
  if (total != 1) throw InputError("phi: coordinates must sum to 1");
  std::vector<std::uint64_t> codes;
  for (const auto& f : chain) codes.push_back(inst.encode(f));
  const int base = inst.q() + 1;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (codes[i] == 0) throw InputError("phi: chain contains the empty face");
    if (i == 0) continue;
    // Slot-wise strict inclusion: every assigned vertex keeps its slot.
    std::uint64_t a = codes[i - 1], b = codes[i];
    bool sub = a != b;
    for (int v = 0; v < inst.vertex_count(); ++v) {
      const auto da = a % base, db = b % base;
      if (da && da != db) sub = false;
      a /= base;
      b /= base;
    }
    if (!sub) throw InputError("phi: chain is not strictly increasing");
  }
  std::vector<Rational> out(inst.q(), 0);
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto w = inst.assignment_of_code(codes[i]);
    for (int j = 0; j < inst.q(); ++j) out[j] += coords[i] * w[j];
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Saturated chains of non-Σ faces, from each minimal non-Σ face up to a full face.
void saturated_chain_check(const PhiInstance& inst, const std::vector<std::uint8_t>& sigma,
                           ZeroSetReport& r, std::uint64_t budget) {
  const int n = inst.vertex_count();
  const int q = inst.q();
  std::vector<std::uint64_t> pw(n + 1, 1);
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * (q + 1);
  std::set<std::string> found;
  std::vector<std::uint32_t> masks;
  std::function<void(std::uint64_t)> climb = [&](std::uint64_t code) {
    masks.push_back(inst.direction_mask(code));
    bool extended = false;
    std::uint64_t c = code;
    for (int v = 0; v < n; ++v) {
      const bool free = c % (q + 1) == 0;
      c /= (q + 1);
      if (!free) continue;
      for (int s = 1; s <= q; ++s) {
        extended = true;
        climb(code + s * pw[v]);
      }
    }
    if (!extended) {
      if (++r.chains_checked > budget) throw ResourceError("phi: chain budget exceeded");
      std::set<std::uint32_t> distinct(masks.begin(), masks.end());
      if (cone_hits_diagonal(distinct, q)) found.insert("chain ending at " + face_text(inst.decode(code)));
    }
    masks.pop_back();
  };
  for (std::uint64_t code = 1; code < inst.code_count(); ++code) {
    if (sigma[code]) continue;
    bool minimal = true;
    std::uint64_t c = code;
    for (int v = 0; v < n && minimal; ++v) {
      const auto d = c % (q + 1);
      c /= (q + 1);
      if (d && !sigma[code - d * pw[v]]) minimal = false;
    }
    if (minimal) climb(code);
  }
  r.violations.insert(r.violations.end(), found.begin(), found.end());
}

void fill_sigma(const PhiInstance& inst, std::vector<std::uint8_t>& sigma, ZeroSetReport& r) {
  const int q = inst.q(), k = inst.k(), t = inst.t(), n = inst.vertex_count();
  const std::uint64_t codes = inst.code_count();
  sigma.assign(codes, 0);
  std::vector<int> digits(n, 0);
  const int bound = q * (k - 1) - t + 1;
  for (std::uint64_t code = 0; code < codes; ++code) {
    if (code) {
      for (int v = 0; v < n; ++v) {
        if (++digits[v] <= q) break;
        digits[v] = 0;
      }
    }
    std::vector<int> sizes(q, 0);
    int used = 0;
    for (int d : digits) {
      if (d) {
        ++sizes[d - 1];
        ++used;
      }
    }
    sigma[code] = sigma_by_sizes(sizes, k, t) ? 1 : 0;
    if (code == 0) continue;
    ++r.faces;
    if (sigma[code]) {
      ++r.sigma_faces;
      if (used > bound) r.sigma_size_bound = false;
    }
  }
}

}  // namespace

ZeroSetReport verify_zero_set(const PhiInstance& inst, std::uint64_t chain_budget) {
  ZeroSetReport r;
  r.q = inst.q();
  r.k = inst.k();
  r.t = inst.t();
  const int q = inst.q(), n = inst.vertex_count();
  const std::uint64_t codes = inst.code_count();
  std::vector<std::uint8_t> sigma;
  fill_sigma(inst, sigma, r);

  // reach[code] = bitset over direction unions of chains of non-Σ faces inside code.
  const int bits = 1 << q;
  const int words = std::max(1, bits / 64);
  const std::uint32_t full = (q == 32) ? ~0U : ((1U << q) - 1);
  std::vector<std::uint64_t> reach(codes * words, 0);
  std::vector<std::uint64_t> pw(n + 1, 1);
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * (q + 1);
  std::vector<int> digits(n, 0);
  std::vector<std::uint64_t> below(words);
  bool covering = false;

  for (std::uint64_t code = 1; code < codes; ++code) {
    for (int v = 0; v < n; ++v) {
      if (++digits[v] <= q) break;
      digits[v] = 0;
    }
    std::fill(below.begin(), below.end(), 0);
    for (int v = 0; v < n; ++v) {
      if (!digits[v]) continue;
      const std::uint64_t cover = code - digits[v] * pw[v];
      if (sigma[code] && !sigma[cover]) r.sigma_downward_closed = false;
      const std::uint64_t* src = &reach[cover * words];
      for (int w = 0; w < words; ++w) below[w] |= src[w];
    }
    std::uint64_t* dst = &reach[code * words];
    for (int w = 0; w < words; ++w) dst[w] = below[w];
    if (sigma[code]) continue;
    const std::uint32_t d = inst.direction_mask(code);
    if (d == 0) {
      r.every_vertex_assigned = false;
      continue;
    }
    auto set_bit = [&](std::uint32_t m) {
      dst[m / 64] |= std::uint64_t{1} << (m % 64);
      if (m == full) covering = true;
    };
    set_bit(d);
    for (int w = 0; w < words; ++w) {
      for (std::uint64_t b = below[w]; b; b &= b - 1) {
        const std::uint32_t m = static_cast<std::uint32_t>(w * 64 + std::countr_zero(b));
        set_bit(m | d);
      }
    }
  }
  (void)bits;
  if (covering) saturated_chain_check(inst, sigma, r, chain_budget);
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

ZeroSetReport verify_zero_set_literal(const PhiInstance& inst, std::uint64_t chain_budget) {
  ZeroSetReport r;
  r.q = inst.q();
  r.k = inst.k();
  r.t = inst.t();
  const int q = inst.q(), n = inst.vertex_count();
  std::vector<std::uint8_t> sigma;
  fill_sigma(inst, sigma, r);
  std::vector<std::uint64_t> pw(n + 1, 1);
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * (q + 1);

  for (std::uint64_t code = 1; code < inst.code_count(); ++code) {
    if (sigma[code]) {
      if (inst.direction_mask(code) != 0) r.violations.push_back("sigma face not sent to 0: " + face_text(inst.decode(code)));
      std::uint64_t c = code;
      for (int v = 0; v < n; ++v) {
        const auto d = c % (q + 1);
        c /= (q + 1);
        if (d && !sigma[code - d * pw[v]]) r.sigma_downward_closed = false;
      }
    } else if (inst.direction_mask(code) == 0) {
      r.every_vertex_assigned = false;
    }
  }

  // Every chain of non-Σ faces; 0 in the open image iff λ_i >= 1 with Σ λ_i w_i = 0 is feasible.
  std::vector<std::uint64_t> chain;
  std::set<std::string> found;
  auto check = [&]() {
    if (++r.chains_checked > chain_budget) throw ResourceError("phi: chain budget exceeded");
    LPFeasibilityProblem lp;
    lp.variables = static_cast<int>(chain.size());
    std::vector<std::vector<Rational>> w;
    for (auto c : chain) w.push_back(inst.assignment_of_code(c));
    for (int j = 0; j < q; ++j) {
      std::vector<Rational> row;
      Rational rhs = 0;
      for (const auto& x : w) {
        row.push_back(x[j]);
        rhs -= x[j];
      }
      lp.add_row(std::move(row), rhs);
    }
    if (solve_feasibility(lp)) {
      std::string s = "zero in open chain:";
      for (auto c : chain) s += " " + face_text(inst.decode(c));
      found.insert(s);
    }
  };
  // Strict supersets of `code` that are non-Σ (upward closure makes all of them non-Σ
  // once code is, but Σ is tested explicitly here).
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t code) {
    chain.push_back(code);
    check();
    std::vector<int> free;
    std::uint64_t c = code;
    for (int v = 0; v < n; ++v) {
      if (c % (q + 1) == 0) free.push_back(v);
      c /= (q + 1);
    }
    const std::uint64_t combos = pw[free.size()];
    for (std::uint64_t sel = 1; sel < combos; ++sel) {
      std::uint64_t add = 0, s = sel;
      for (int v : free) {
        add += (s % (q + 1)) * pw[v];
        s /= (q + 1);
      }
      if (!sigma[code + add]) extend(code + add);
    }
    chain.pop_back();
  };
  for (std::uint64_t code = 1; code < inst.code_count(); ++code) {
    if (!sigma[code]) extend(code);
  }
  r.violations.insert(r.violations.end(), found.begin(), found.end());
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

EquivarianceReport verify_equivariance(const PhiInstance& inst, std::uint64_t work_budget) {
  EquivarianceReport r;
  const int q = inst.q(), n = inst.vertex_count();
  r.q = q;
  const std::uint64_t codes = inst.code_count();
  std::uint64_t fact = 1;
  for (int i = 2; i <= q; ++i) fact *= i;

  std::vector<std::vector<int>> perms;
  if (fact * codes <= work_budget) {
    std::vector<int> p(q);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    r.generators_only = true;
    std::vector<int> swap(q), cycle(q);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < q; ++i) cycle[i] = (i + 1) % q;
    perms = {swap, cycle};
  }
  r.permutations = perms.size();

  std::vector<std::uint32_t> mask(codes);
  for (std::uint64_t c = 0; c < codes; ++c) mask[c] = inst.direction_mask(c);
  std::vector<std::uint64_t> pw(n + 1, 1);
  for (int i = 1; i <= n; ++i) pw[i] = pw[i - 1] * (q + 1);

  for (const auto& p : perms) {
    for (std::uint64_t c = 0; c < codes; ++c) {
      std::uint64_t moved = 0, rest = c;
      for (int v = 0; v < n; ++v) {
        const int d = static_cast<int>(rest % (q + 1));
        rest /= (q + 1);
        if (d) moved += static_cast<std::uint64_t>(p[d - 1] + 1) * pw[v];
      }
      std::uint32_t image = 0;
      for (int j = 0; j < q; ++j) {
        if ((mask[c] >> j) & 1U) image |= 1U << p[j];
      }
      ++r.checks;
      if (mask[moved] != image && r.violations.size() < 20) {
        r.violations.push_back("face " + face_text(inst.decode(c)));
      }
    }
  }
  return r;
}

}  // namespace fairsplit
