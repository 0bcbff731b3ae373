#include "fracturan/matching.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "fracturan/error.hpp"

namespace fracturan {

bool subset_lex_less(VertexSet a, VertexSet b) {
  if (a == b) return false;
  const int d = std::countr_zero(a ^ b);
  // Below d the lists agree. The set holding d wins iff the other set still
  // has an element after the common prefix (that element is larger than d).
  const VertexSet above = d >= 63 ? 0 : ~first_vertices(d + 1);
  if ((a >> d) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

DeficiencyResult nu_star_deficiency(const Graph& g) {
  const int n = g.order();
  if (n > kMaxDeficiencyOrder) {
    fail(ErrorCode::out_of_range, "deficiency scan limited to " +
                                      std::to_string(kMaxDeficiencyOrder) + " vertices (got " +
                                      std::to_string(n) + ")");
  }

  std::array<int, kMaxVertices> outside{};  // |N(v) \ T|
  int isolated = 0;
  for (int v = 0; v < n; ++v) {
    outside[static_cast<std::size_t>(v)] = g.degree(v);
    if (outside[static_cast<std::size_t>(v)] == 0) ++isolated;
  }

  VertexSet removed = 0;
  DeficiencyWitness best{0, isolated};
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int w = std::countr_zero(step);
    VertexSet nbrs = g.neighbors(w);
    if (((removed >> w) & 1U) == 0) {
      if (outside[static_cast<std::size_t>(w)] == 0) --isolated;
      removed |= vertex_bit(w);
      while (nbrs != 0) {
        const int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (--outside[static_cast<std::size_t>(v)] == 0 && ((removed >> v) & 1U) == 0) ++isolated;
      }
    } else {
      removed &= ~vertex_bit(w);
      while (nbrs != 0) {
        const int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (outside[static_cast<std::size_t>(v)]++ == 0 && ((removed >> v) & 1U) == 0) --isolated;
      }
      if (outside[static_cast<std::size_t>(w)] == 0) ++isolated;
    }

    const DeficiencyWitness current{removed, isolated};
    if (current.deficiency() > best.deficiency() ||
        (current.deficiency() == best.deficiency() && subset_lex_less(removed, best.removed))) {
      best = current;
    }
  }
  return {HalfInt(n - best.deficiency()), best};
}

namespace {

// Maximum matching of the bipartite double cover by augmenting paths.
class DoubleCoverMatching {
 public:
  explicit DoubleCoverMatching(const Graph& g) : g_(g) {
    partner_of_left_.fill(-1);
    partner_of_right_.fill(-1);
    for (int u = 0; u < g.order(); ++u) {
      VertexSet visited = 0;
      if (augment(u, visited)) ++size_;
    }
  }

  int size() const { return size_; }
  bool matched(int left, int right) const {
    return partner_of_left_[static_cast<std::size_t>(left)] == right;
  }

 private:
  bool augment(int u, VertexSet& visited) {
    VertexSet candidates = g_.neighbors(u) & ~visited;
    while (candidates != 0) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      visited |= vertex_bit(w);
      const int holder = partner_of_right_[static_cast<std::size_t>(w)];
      if (holder < 0 || augment(holder, visited)) {
        partner_of_left_[static_cast<std::size_t>(u)] = static_cast<std::int8_t>(w);
        partner_of_right_[static_cast<std::size_t>(w)] = static_cast<std::int8_t>(u);
        return true;
      }
      candidates &= ~visited;
    }
    return false;
  }

  const Graph& g_;
  std::array<std::int8_t, kMaxVertices> partner_of_left_{};
  std::array<std::int8_t, kMaxVertices> partner_of_right_{};
  int size_ = 0;
};

int branching_matching(const Graph& g, VertexSet alive) {
  // Vertices with no live neighbor can never be matched.
  VertexSet useful = 0;
  for (VertexSet rest = alive; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if ((g.neighbors(v) & alive) != 0) useful |= vertex_bit(v);
  }
  if (useful == 0) return 0;
  const int v = std::countr_zero(useful);
  const VertexSet without_v = useful & ~vertex_bit(v);
  const int ceiling = set_size(useful) / 2;

  int best = 0;
  for (VertexSet nbrs = g.neighbors(v) & useful; nbrs != 0 && best < ceiling; nbrs &= nbrs - 1) {
    const int w = std::countr_zero(nbrs);
    best = std::max(best, 1 + branching_matching(g, without_v & ~vertex_bit(w)));
  }
  if (best < ceiling) best = std::max(best, branching_matching(g, without_v));
  return best;
}

}  // namespace

HalfInt nu_star_fast(const Graph& g) { return HalfInt(DoubleCoverMatching(g).size()); }

FractionalCertificate fractional_certificate(const Graph& g) {
  const DoubleCoverMatching cover(g);
  FractionalCertificate cert;
  for (const Edge& e : g.edges()) {
    const int w = (cover.matched(e.u, e.v) ? 1 : 0) + (cover.matched(e.v, e.u) ? 1 : 0);
    cert.entries.push_back({e, w});
    cert.total_doubled += w;
  }
  if (cert.total_doubled != cover.size()) {
    fail(ErrorCode::internal, "certificate total differs from the double-cover matching size");
  }
  return cert;
}

bool FractionalCertificate::feasible_for(const Graph& g) const {
  std::vector<int> load(static_cast<std::size_t>(g.order()), 0);
  int total = 0;
  for (const Entry& entry : entries) {
    if (entry.doubled_weight < 0 || entry.doubled_weight > 2) return false;
    if (entry.edge.v >= g.order() || !g.has_edge(entry.edge.u, entry.edge.v)) return false;
    load[static_cast<std::size_t>(entry.edge.u)] += entry.doubled_weight;
    load[static_cast<std::size_t>(entry.edge.v)] += entry.doubled_weight;
    total += entry.doubled_weight;
  }
  return total == total_doubled &&
         std::all_of(load.begin(), load.end(), [](int x) { return x <= 2; });
}

std::string FractionalCertificate::to_json() const {
  std::ostringstream out;
  out << "{\"edges\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out << ',';
    out << '[' << entries[i].edge.u << ',' << entries[i].edge.v << ',' << entries[i].doubled_weight
        << ']';
  }
  out << "],\"total_doubled\":" << total_doubled << '}';
  return out.str();
}

int matching_number(const Graph& g) {
  if (g.order() > kMaxBranchingOrder) {
    fail(ErrorCode::out_of_range, "matching branching search limited to " +
                                      std::to_string(kMaxBranchingOrder) + " vertices (got " +
                                      std::to_string(g.order()) + ")");
  }
  return branching_matching(g, g.vertices());
}

}  // namespace fracturan
