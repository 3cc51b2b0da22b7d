#include "kroman/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <unordered_map>

namespace kroman {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
constexpr int kMaxM = 6;

using LabelArr = std::array<std::uint8_t, kMaxM>;

std::uint32_t pack(const LabelArr& a, int m) {
  std::uint32_t code = 0;
  for (int j = 0; j < m; ++j) code |= std::uint32_t(a[j]) << (4 * j);
  return code;
}

LabelArr unpack(std::uint32_t code, int m) {
  LabelArr a{};
  for (int j = 0; j < m; ++j) a[j] = (code >> (4 * j)) & 0xF;
  return a;
}

std::uint64_t state_key(std::uint32_t labels, std::uint32_t demands) {
  return (std::uint64_t(labels) << 32) | demands;
}

// All (k+2)^m label vectors in lexicographic order. cap[t] holds the
// nibble-wise largest demand vector the labels can still satisfy
// (max(label-1, 0) per position), for the SWAR feasibility test below.
struct VecTable {
  int m = 0;
  std::vector<LabelArr> arr;
  std::vector<std::uint32_t> code;
  std::vector<int> wt;
  std::vector<std::uint32_t> cap;

  VecTable(int m_, int k) : m(m_) {
    LabelArr cur{};
    for (;;) {
      arr.push_back(cur);
      code.push_back(pack(cur, m));
      int w = 0;
      LabelArr c{};
      for (int j = 0; j < m; ++j) {
        w += cur[j];
        c[j] = cur[j] > 0 ? cur[j] - 1 : 0;
      }
      wt.push_back(w);
      cap.push_back(pack(c, m));
      int pos = m - 1;
      while (pos >= 0 && cur[pos] == k + 1) cur[pos--] = 0;
      if (pos < 0) break;
      ++cur[pos];
    }
  }
};

// High bit of each of the m nibbles; labels and demands are < 8, so
// nibble-wise "demands <= cap" is ((cap | high) - demands) & high == high.
std::uint32_t nibble_high(int m) {
  std::uint32_t h = 0;
  for (int j = 0; j < m; ++j) h |= 0x8u << (4 * j);
  return h;
}

// Residual demand on vertex (i, j): the minimum x - [x > 0] its
// next-fibre neighbor's label x must contribute. Returns false when some
// demand would exceed k (unsatisfiable).
bool demands_for(int m, int k, const LabelArr* prev, const LabelArr& cur, LabelArr& out) {
  for (int j = 0; j < m; ++j) {
    if (cur[j] >= k) {
      out[j] = 0;
      continue;
    }
    int left = (j + m - 1) % m, right = (j + 1) % m;
    int s = cur[j] + cur[left] + cur[right];
    int a = (cur[left] > 0) + (cur[right] > 0);
    if (prev) {
      s += (*prev)[j];
      a += (*prev)[j] > 0;
    }
    int d = k + a - s;
    if (d <= 0) {
      out[j] = 0;
    } else if (d > k) {
      return false;
    } else {
      out[j] = std::uint8_t(d);
    }
  }
  return true;
}

bool satisfies(const LabelArr& demands, const LabelArr& labels, int m) {
  for (int j = 0; j < m; ++j)
    if (demands[j] > 0 && labels[j] < demands[j] + 1) return false;
  return true;
}

std::uint64_t canonical_rotation(std::uint32_t labels, std::uint32_t demands, int m) {
  LabelArr l = unpack(labels, m), d = unpack(demands, m);
  std::uint64_t best = state_key(labels, demands);
  LabelArr lr, dr;
  for (int r = 1; r < m; ++r) {
    for (int j = 0; j < m; ++j) {
      lr[j] = l[(j + r) % m];
      dr[j] = d[(j + r) % m];
    }
    best = std::min(best, state_key(pack(lr, m), pack(dr, m)));
  }
  return best;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int e = 0; e < exp; ++e) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

void require_dp_params(int m, int k) {
  if (m < 3 || m > kMaxM) throw ApplicabilityError("DP solver supports m in [3,6]");
  if (k < 1 || k > 5) throw ApplicabilityError("DP solver supports k in [1,5]");
}

using LayerMap = std::unordered_map<std::uint64_t, long long>;

// One DP step. States are grouped by label vector so the successor
// demands (a function of labels and the new vector only) are computed
// once per (labels, vec) pair, with one hash update for the group's
// cheapest satisfying member.
void advance_layer(const LayerMap& prev, LayerMap& next, const VecTable& vecs, int m, int k,
                   bool rotate, long long cutoff = kInf) {
  const std::uint32_t high = nibble_high(m);
  std::vector<std::pair<std::uint64_t, long long>> entries;
  entries.reserve(prev.size());
  for (const auto& e : prev)
    if (e.second < cutoff) entries.push_back(e);
  std::sort(entries.begin(), entries.end());
  std::size_t idx = 0;
  while (idx < entries.size()) {
    std::uint32_t labels_code = std::uint32_t(entries[idx].first >> 32);
    std::size_t group_end = idx;
    while (group_end < entries.size() &&
           std::uint32_t(entries[group_end].first >> 32) == labels_code)
      ++group_end;
    LabelArr labels = unpack(labels_code, m);
    for (std::size_t t = 0; t < vecs.arr.size(); ++t) {
      long long cheapest = kInf;
      for (std::size_t e = idx; e < group_end; ++e) {
        std::uint32_t demands = std::uint32_t(entries[e].first & 0xFFFFFFFFu);
        if ((((vecs.cap[t] | high) - demands) & high) == high)
          cheapest = std::min(cheapest, entries[e].second);
      }
      if (cheapest >= kInf) continue;
      LabelArr nd;
      if (!demands_for(m, k, &labels, vecs.arr[t], nd)) continue;
      std::uint64_t key = rotate ? canonical_rotation(vecs.code[t], pack(nd, m), m)
                                 : state_key(vecs.code[t], pack(nd, m));
      long long w = cheapest + vecs.wt[t];
      auto [it, inserted] = next.try_emplace(key, w);
      if (!inserted && w < it->second) it->second = w;
    }
    idx = group_end;
  }
}

Labeling labeling_from_rows(const GridSpec& spec, int k, const std::vector<LabelArr>& rows) {
  std::vector<std::vector<int>> vals(spec.n(), std::vector<int>(spec.m()));
  for (int i = 0; i < spec.n(); ++i)
    for (int j = 0; j < spec.m(); ++j) vals[i][j] = rows[i][j];
  return Labeling(spec, k, std::move(vals));
}

// Backward cost-to-go over the forward layer maps; h[i][s] is the least
// weight of fibres i+1..n-1 completing state s, with acceptance encoded
// in h[n-1]. Used for canonical (lexicographically smallest) witnesses.
std::vector<LayerMap> cost_to_go(const std::vector<LayerMap>& g, const VecTable& vecs, int m,
                                 int k,
                                 const std::function<bool(std::uint32_t, std::uint32_t)>& accept) {
  int n = int(g.size());
  std::vector<LayerMap> h(n);
  for (const auto& [key, w] : g[n - 1]) {
    if (accept(std::uint32_t(key >> 32), std::uint32_t(key & 0xFFFFFFFFu))) h[n - 1][key] = 0;
  }
  for (int i = n - 2; i >= 0; --i) {
    for (const auto& [key, w] : g[i]) {
      LabelArr labels = unpack(std::uint32_t(key >> 32), m);
      LabelArr demands = unpack(std::uint32_t(key & 0xFFFFFFFFu), m);
      long long best = kInf;
      for (std::size_t t = 0; t < vecs.arr.size(); ++t) {
        if (!satisfies(demands, vecs.arr[t], m)) continue;
        LabelArr nd;
        if (!demands_for(m, k, &labels, vecs.arr[t], nd)) continue;
        auto it = h[i + 1].find(state_key(vecs.code[t], pack(nd, m)));
        if (it != h[i + 1].end()) best = std::min(best, vecs.wt[t] + it->second);
      }
      if (best < kInf) h[i][key] = best;
    }
  }
  return h;
}

}  // namespace

SolveResult solve_cylinder(int m, int n, int k, const SolveOptions& opts) {
  require_dp_params(m, k);
  if (n < 1) throw ApplicabilityError("need n >= 1");
  std::uint64_t estimate = checked_pow(std::uint64_t(k + 2) * (k + 1), m, opts.budget);
  if (estimate > opts.budget)
    throw CapacityError("cylinder DP state space exceeds budget", estimate);

  const bool rotate = opts.rotation_symmetry && !opts.want_witness;
  VecTable vecs(m, k);
  std::vector<LayerMap> g(n);

  auto relax = [&](LayerMap& layer, std::uint32_t labels, std::uint32_t demands, long long w) {
    std::uint64_t key = rotate ? canonical_rotation(labels, demands, m) : state_key(labels, demands);
    auto [it, inserted] = layer.try_emplace(key, w);
    if (!inserted && w < it->second) it->second = w;
  };

  for (std::size_t t = 0; t < vecs.arr.size(); ++t) {
    LabelArr d;
    if (!demands_for(m, k, nullptr, vecs.arr[t], d)) continue;
    relax(g[0], vecs.code[t], pack(d, m), vecs.wt[t]);
  }
  for (int i = 1; i < n; ++i) advance_layer(g[i - 1], g[i], vecs, m, k, rotate);

  SolveResult res;
  res.method = Method::DP;
  for (const auto& layer : g) res.states_explored += layer.size();
  long long best = kInf;
  for (const auto& [key, w] : g[n - 1])
    if (std::uint32_t(key & 0xFFFFFFFFu) == 0) best = std::min(best, w);
  if (best >= kInf) throw std::logic_error("no accepting DP state");  // all-(k+1) always accepts
  res.value = best;

  if (opts.want_witness) {
    auto accept = [](std::uint32_t, std::uint32_t demands) { return demands == 0; };
    auto h = cost_to_go(g, vecs, m, k, accept);
    std::vector<LabelArr> rows;
    std::uint64_t cur = 0;
    long long target = best;
    for (std::size_t t = 0; t < vecs.arr.size(); ++t) {
      LabelArr d;
      if (!demands_for(m, k, nullptr, vecs.arr[t], d)) continue;
      std::uint64_t key = state_key(vecs.code[t], pack(d, m));
      auto it = h[0].find(key);
      if (it != h[0].end() && vecs.wt[t] + it->second == best) {
        rows.push_back(vecs.arr[t]);
        cur = key;
        target = it->second;
        break;
      }
    }
    for (int i = 1; i < n; ++i) {
      LabelArr labels = unpack(std::uint32_t(cur >> 32), m);
      LabelArr demands = unpack(std::uint32_t(cur & 0xFFFFFFFFu), m);
      for (std::size_t t = 0; t < vecs.arr.size(); ++t) {
        if (!satisfies(demands, vecs.arr[t], m)) continue;
        LabelArr nd;
        if (!demands_for(m, k, &labels, vecs.arr[t], nd)) continue;
        std::uint64_t key = state_key(vecs.code[t], pack(nd, m));
        auto it = h[i].find(key);
        if (it != h[i].end() && vecs.wt[t] + it->second == target) {
          rows.push_back(vecs.arr[t]);
          cur = key;
          target = it->second;
          break;
        }
      }
    }
    res.witness = labeling_from_rows(GridSpec::cylinder(m, n), k, rows);
  }
  return res;
}

SolveResult solve_torus(int m, int n, int k, const SolveOptions& opts) {
  require_dp_params(m, k);
  if (n < 3) throw ApplicabilityError("torus needs n >= 3");
  std::uint64_t inner = checked_pow(std::uint64_t(k + 2) * (k + 1), m, opts.budget);
  std::uint64_t outer = checked_pow(k + 2, m, opts.budget);
  if (inner > opts.budget || outer > opts.budget / std::max<std::uint64_t>(inner, 1))
    throw CapacityError("torus DP state space exceeds budget",
                        inner > opts.budget ? inner : inner * outer);

  VecTable vecs(m, k);
  SolveResult res;
  res.method = Method::DP;
  long long best = kInf;
  std::size_t best_t0 = 0, best_t1 = 0;

  // Demand placed by fibre 0's vertices on fibre n-1 (their back
  // neighbor), given fixed fibre 0 and fibre 1 labels.
  auto wrap_demands = [&](const LabelArr& l0, const LabelArr& l1, LabelArr& out) {
    for (int j = 0; j < m; ++j) {
      if (l0[j] >= k) {
        out[j] = 0;
        continue;
      }
      int left = (j + m - 1) % m, right = (j + 1) % m;
      int s = l0[j] + l0[left] + l0[right] + l1[j];
      int a = (l0[left] > 0) + (l0[right] > 0) + (l1[j] > 0);
      int d = k + a - s;
      if (d <= 0) {
        out[j] = 0;
      } else if (d > k) {
        return false;
      } else {
        out[j] = std::uint8_t(d);
      }
    }
    return true;
  };

  // Fibre 0 may be fixed to the lexicographically smallest rotation of
  // its label vector: rotating every fibre by the same offset is an
  // automorphism, and it can only lower the witness lexicographically.
  auto rotation_canonical = [&](const LabelArr& a) {
    for (int r = 1; r < m; ++r) {
      for (int j = 0; j < m; ++j) {
        std::uint8_t rotated = a[(j + r) % m];
        if (rotated != a[j]) {
          if (rotated < a[j]) return false;
          break;
        }
      }
    }
    return true;
  };

  auto run_chain = [&](std::size_t t0, std::size_t t1, bool witness, long long cutoff,
                       std::vector<LabelArr>* rows_out) -> long long {
    const LabelArr& l0 = vecs.arr[t0];
    const LabelArr& l1 = vecs.arr[t1];
    if (vecs.wt[t0] + vecs.wt[t1] >= cutoff) return kInf;
    LabelArr d0;
    if (!wrap_demands(l0, l1, d0)) return kInf;
    LabelArr d1;
    if (!demands_for(m, k, &l0, l1, d1)) return kInf;

    std::vector<LayerMap> g(n - 1);  // index t = fibre t+1
    g[0][state_key(vecs.code[t1], pack(d1, m))] = vecs.wt[t0] + vecs.wt[t1];
    for (int i = 1; i < n - 1; ++i) advance_layer(g[i - 1], g[i], vecs, m, k, false, cutoff);
    for (const auto& layer : g) res.states_explored += layer.size();

    auto accept = [&](std::uint32_t labels_code, std::uint32_t demands_code) {
      LabelArr ln = unpack(labels_code, m);
      LabelArr dn = unpack(demands_code, m);
      return satisfies(dn, l0, m) && satisfies(d0, ln, m);
    };
    long long chain_best = kInf;
    for (const auto& [key, w] : g[n - 2])
      if (accept(std::uint32_t(key >> 32), std::uint32_t(key & 0xFFFFFFFFu)))
        chain_best = std::min(chain_best, w);

    if (witness && chain_best < kInf) {
      auto h = cost_to_go(g, vecs, m, k, accept);
      rows_out->push_back(l0);
      rows_out->push_back(l1);
      std::uint64_t cur = state_key(vecs.code[t1], pack(d1, m));
      long long target = h[0].at(cur);
      for (int i = 1; i < n - 1; ++i) {
        LabelArr labels = unpack(std::uint32_t(cur >> 32), m);
        LabelArr demands = unpack(std::uint32_t(cur & 0xFFFFFFFFu), m);
        for (std::size_t t = 0; t < vecs.arr.size(); ++t) {
          if (!satisfies(demands, vecs.arr[t], m)) continue;
          LabelArr nd;
          if (!demands_for(m, k, &labels, vecs.arr[t], nd)) continue;
          std::uint64_t key = state_key(vecs.code[t], pack(nd, m));
          auto it = h[i].find(key);
          if (it != h[i].end() && vecs.wt[t] + it->second == target) {
            rows_out->push_back(vecs.arr[t]);
            cur = key;
            target = it->second;
            break;
          }
        }
      }
    }
    return chain_best;
  };

  for (std::size_t t0 = 0; t0 < vecs.arr.size(); ++t0) {
    if (!rotation_canonical(vecs.arr[t0])) continue;
    for (std::size_t t1 = 0; t1 < vecs.arr.size(); ++t1) {
      long long v = run_chain(t0, t1, false, best, nullptr);
      if (v < best) {
        best = v;
        best_t0 = t0;
        best_t1 = t1;
      }
    }
  }
  if (best >= kInf) throw std::logic_error("no accepting torus DP state");
  res.value = best;

  if (opts.want_witness) {
    std::vector<LabelArr> rows;
    run_chain(best_t0, best_t1, true, best + 1, &rows);
    res.witness = labeling_from_rows(GridSpec::torus(m, n), k, rows);
  }
  return res;
}

SolveResult brute_force(const GridSpec& spec, int k, const SolveOptions& opts) {
  if (k < 1) throw ApplicabilityError("need k >= 1");
  const int m = spec.m(), n = spec.n(), cells = m * n;
  std::uint64_t estimate = checked_pow(k + 2, cells, opts.budget);
  if (estimate > opts.budget) throw CapacityError("brute-force space exceeds budget", estimate);

  std::vector<std::vector<int>> nbr(cells);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (Vertex u : spec.neighbors({i, j})) nbr[i * m + j].push_back(u.i * m + u.j);

  std::vector<int> grid(cells, 0);
  std::vector<int> best_grid(cells, k + 1);
  long long best = 1LL * (k + 1) * cells;  // all-(k+1) is always valid
  std::uint64_t leaves = 0;

  auto vertex_ok = [&](int v) {
    if (grid[v] >= k) return true;
    int s = grid[v], a = 0;
    for (int u : nbr[v]) {
      s += grid[u];
      if (grid[u] > 0) ++a;
    }
    return s >= k + a;
  };
  auto row_ok = [&](int row) {
    for (int j = 0; j < m; ++j)
      if (!vertex_ok(row * m + j)) return false;
    return true;
  };

  const bool torus = spec.family() == Family::Torus;
  const bool skip_one = opts.prune_label_one && k >= 2;
  // vertex pos - m is fully determined once cell pos is set, except at the
  // seam rows of a torus, which wait for the leaf.
  const int settled_from = torus ? 2 * m : m;

  auto rec = [&](auto&& self, int pos, long long w) -> void {
    if (w >= best) return;
    if (pos == cells) {
      ++leaves;
      if (!row_ok(n - 1)) return;
      if (torus && !row_ok(0)) return;
      best = w;
      best_grid = grid;
      return;
    }
    for (int val = 0; val <= k + 1; ++val) {
      if (skip_one && val == 1) continue;
      grid[pos] = val;
      if (pos < settled_from || vertex_ok(pos - m)) self(self, pos + 1, w + val);
    }
    grid[pos] = 0;
  };
  rec(rec, 0, 0);

  SolveResult res;
  res.method = Method::BruteForce;
  res.value = best;
  res.states_explored = leaves;
  if (opts.want_witness) {
    std::vector<std::vector<int>> vals(n, std::vector<int>(m));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) vals[i][j] = best_grid[i * m + j];
    res.witness = Labeling(spec, k, std::move(vals));
  }
  return res;
}

namespace {

std::uint64_t closed_mask(const GridSpec& spec, int v) {
  int m = spec.m();
  std::uint64_t mask = 1ULL << v;
  for (Vertex u : spec.neighbors({v / m, v % m})) mask |= 1ULL << (u.i * m + u.j);
  return mask;
}

void require_small(const GridSpec& spec, int limit) {
  if (spec.vertex_count() > limit)
    throw CapacityError("instance too large for set search", spec.vertex_count());
}

std::vector<Vertex> to_vertices(const GridSpec& spec, const std::vector<int>& idx) {
  std::vector<Vertex> out;
  for (int v : idx) out.push_back({v / spec.m(), v % spec.m()});
  return out;
}

}  // namespace

SetResult max_packing(const GridSpec& spec) {
  require_small(spec, 48);
  const int cells = spec.vertex_count();
  std::vector<std::uint64_t> cn(cells), conflict(cells);
  for (int v = 0; v < cells; ++v) cn[v] = closed_mask(spec, v);
  for (int v = 0; v < cells; ++v)
    for (int u = 0; u < cells; ++u)
      if (cn[v] & cn[u]) conflict[v] |= 1ULL << u;

  SetResult res;
  std::vector<int> chosen, best_set;
  int best = -1;
  auto rec = [&](auto&& self, std::uint64_t allowed) -> void {
    ++res.nodes_explored;
    int count = int(chosen.size());
    if (count + std::popcount(allowed) <= best) return;
    if (allowed == 0) {
      if (count > best) {
        best = count;
        best_set = chosen;
      }
      return;
    }
    int v = std::countr_zero(allowed);
    chosen.push_back(v);
    self(self, allowed & ~conflict[v]);
    chosen.pop_back();
    self(self, allowed & ~(1ULL << v));
  };
  std::uint64_t all = cells == 64 ? ~0ULL : (1ULL << cells) - 1;
  rec(rec, all);
  res.value = best;
  res.witness = to_vertices(spec, best_set);
  return res;
}

namespace {

// Exact cover by closed neighborhoods: branch on who dominates the first
// vertex not yet covered. Each efficient dominating set is found once.
template <typename Sink>
void eds_search(const GridSpec& spec, const std::vector<std::uint64_t>& cn, std::uint64_t covered,
                std::uint64_t all, std::vector<int>& chosen, Sink&& sink, bool& stop) {
  if (stop) return;
  if (covered == all) {
    stop = sink(chosen);
    return;
  }
  int v = std::countr_zero(~covered & all);
  const int cells = spec.vertex_count();
  for (int u = 0; u < cells; ++u) {
    if (!(cn[u] >> v & 1)) continue;
    if (cn[u] & covered) continue;
    chosen.push_back(u);
    eds_search(spec, cn, covered | cn[u], all, chosen, sink, stop);
    chosen.pop_back();
    if (stop) return;
  }
}

}  // namespace

EdsResult has_efficient_dominating_set(const GridSpec& spec) {
  require_small(spec, 48);
  const int cells = spec.vertex_count();
  std::vector<std::uint64_t> cn(cells);
  for (int v = 0; v < cells; ++v) cn[v] = closed_mask(spec, v);
  std::uint64_t all = cells == 64 ? ~0ULL : (1ULL << cells) - 1;
  EdsResult res;
  std::vector<int> chosen;
  bool stop = false;
  eds_search(spec, cn, 0, all, chosen,
             [&](const std::vector<int>& s) {
               res.exists = true;
               res.witness = to_vertices(spec, s);
               return true;
             },
             stop);
  return res;
}

std::vector<std::vector<Vertex>> enumerate_efficient_dominating_sets(const GridSpec& spec) {
  require_small(spec, 48);
  const int cells = spec.vertex_count();
  std::vector<std::uint64_t> cn(cells);
  for (int v = 0; v < cells; ++v) cn[v] = closed_mask(spec, v);
  std::uint64_t all = cells == 64 ? ~0ULL : (1ULL << cells) - 1;
  std::vector<std::vector<Vertex>> out;
  std::vector<int> chosen;
  bool stop = false;
  eds_search(spec, cn, 0, all, chosen,
             [&](const std::vector<int>& s) {
               out.push_back(to_vertices(spec, s));
               return false;
             },
             stop);
  return out;
}

SetResult domination_number(const GridSpec& spec) {
  require_small(spec, 48);
  const int cells = spec.vertex_count();
  std::vector<std::uint64_t> cn(cells);
  for (int v = 0; v < cells; ++v) cn[v] = closed_mask(spec, v);
  std::uint64_t all = cells == 64 ? ~0ULL : (1ULL << cells) - 1;
  int max_closed = 0;
  for (int v = 0; v < cells; ++v) max_closed = std::max(max_closed, std::popcount(cn[v]));

  SetResult res;
  std::vector<int> chosen, best_set(cells);
  for (int v = 0; v < cells; ++v) best_set[v] = v;
  int best = cells;
  auto rec = [&](auto&& self, std::uint64_t covered) -> void {
    ++res.nodes_explored;
    int count = int(chosen.size());
    if (covered == all) {
      if (count < best) {
        best = count;
        best_set = chosen;
      }
      return;
    }
    int uncovered = std::popcount(~covered & all);
    if (count + (uncovered + max_closed - 1) / max_closed >= best) return;
    int v = std::countr_zero(~covered & all);
    for (int u = 0; u < cells; ++u) {
      if (!(cn[u] >> v & 1)) continue;
      chosen.push_back(u);
      self(self, covered | cn[u]);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  res.value = best;
  res.witness = to_vertices(spec, best_set);
  return res;
}

}  // namespace kroman
