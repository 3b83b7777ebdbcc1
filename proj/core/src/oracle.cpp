#include "ctoda/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <thread>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"

namespace ctoda::oracle {

namespace {

constexpr int kMaxDarts = 64;

// Union-find over vertices with undo; no path compression so that merges
// can be reverted in stack order.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<size_t>(n)), size_(static_cast<size_t>(n), 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[static_cast<size_t>(x)] != x) x = parent_[static_cast<size_t>(x)];
    return x;
  }

  // Returns the absorbed root, or -1 when already joined.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) std::swap(a, b);
    parent_[static_cast<size_t>(b)] = a;
    size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
    --components_;
    return b;
  }

  void undo(int absorbed) {
    if (absorbed < 0) return;
    const int root = parent_[static_cast<size_t>(absorbed)];
    size_[static_cast<size_t>(root)] -= size_[static_cast<size_t>(absorbed)];
    parent_[static_cast<size_t>(absorbed)] = absorbed;
    ++components_;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

struct Shape {
  int darts;
  int vertex_count;
  std::vector<int> rotation;
  std::vector<int> vertex_of;
};

Shape make_shape(std::span<const int> rotation) {
  Shape s{static_cast<int>(rotation.size()), 0, {rotation.begin(), rotation.end()}, std::vector<int>(rotation.size(), -1)};
  std::vector<bool> seen(rotation.size());
  for (size_t i = 0; i < rotation.size(); ++i) {
    if (rotation[i] < 0 || rotation[i] >= s.darts || seen[static_cast<size_t>(rotation[i])])
      throw PreconditionError("census: rotation is not a permutation");
    seen[static_cast<size_t>(rotation[i])] = true;
  }
  for (int d = 0; d < s.darts; ++d) {
    if (s.vertex_of[static_cast<size_t>(d)] >= 0) continue;
    for (int x = d; s.vertex_of[static_cast<size_t>(x)] < 0; x = s.rotation[static_cast<size_t>(x)])
      s.vertex_of[static_cast<size_t>(x)] = s.vertex_count;
    ++s.vertex_count;
  }
  return s;
}

struct Tally {
  std::vector<std::uint64_t> by_faces;  // connected pairs by face count
  std::uint64_t disconnected = 0;
};

// Partial face permutation phi = sigma . tau kept as disjoint paths and
// closed cycles. Pairing a with b fixes phi(a) = sigma(b) and
// phi(b) = sigma(a); each assignment joins a path tail to a path head, so
// faces are counted incrementally and a leaf costs O(1).
class FacePaths {
 public:
  explicit FacePaths(int darts) : head_of_tail_(static_cast<size_t>(darts)), tail_of_head_(static_cast<size_t>(darts)) {
    std::iota(head_of_tail_.begin(), head_of_tail_.end(), 0);
    std::iota(tail_of_head_.begin(), tail_of_head_.end(), 0);
  }

  struct Undo {
    int path_head;
    int old_tail;
    int path_tail;
    int old_head;
    bool closed;
  };

  Undo link(int tail, int head) {
    const int h = head_of_tail_[static_cast<size_t>(tail)];
    if (h == head) {
      ++cycles_;
      return {0, 0, 0, 0, true};
    }
    const int t = tail_of_head_[static_cast<size_t>(head)];
    Undo u{h, tail_of_head_[static_cast<size_t>(h)], t, head_of_tail_[static_cast<size_t>(t)], false};
    tail_of_head_[static_cast<size_t>(h)] = t;
    head_of_tail_[static_cast<size_t>(t)] = h;
    return u;
  }

  void unlink(const Undo& u) {
    if (u.closed) {
      --cycles_;
      return;
    }
    tail_of_head_[static_cast<size_t>(u.path_head)] = u.old_tail;
    head_of_tail_[static_cast<size_t>(u.path_tail)] = u.old_head;
  }

  int cycles() const { return cycles_; }

 private:
  std::vector<int> head_of_tail_;
  std::vector<int> tail_of_head_;
  int cycles_ = 0;
};

class Enumerator {
 public:
  Enumerator(const Shape& shape, Tally& tally)
      : shape_(shape),
        tally_(tally),
        partner_(static_cast<size_t>(shape.darts), -1),
        uf_(shape.vertex_count),
        faces_(shape.darts) {}

  struct Token {
    int merged;
    FacePaths::Undo first;
    FacePaths::Undo second;
  };

  Token pair(int a, int b) {
    partner_[static_cast<size_t>(a)] = b;
    partner_[static_cast<size_t>(b)] = a;
    Token t;
    t.merged = uf_.unite(shape_.vertex_of[static_cast<size_t>(a)], shape_.vertex_of[static_cast<size_t>(b)]);
    t.first = faces_.link(a, shape_.rotation[static_cast<size_t>(b)]);
    t.second = faces_.link(b, shape_.rotation[static_cast<size_t>(a)]);
    return t;
  }

  void unpair(int a, int b, const Token& t) {
    faces_.unlink(t.second);
    faces_.unlink(t.first);
    uf_.undo(t.merged);
    partner_[static_cast<size_t>(a)] = -1;
    partner_[static_cast<size_t>(b)] = -1;
  }

  int first_free(int from) const {
    while (from < shape_.darts && partner_[static_cast<size_t>(from)] >= 0) ++from;
    return from;
  }

  void run(int from) {
    const int a = first_free(from);
    if (a == shape_.darts) {
      leaf();
      return;
    }
    for (int b = a + 1; b < shape_.darts; ++b) {
      if (partner_[static_cast<size_t>(b)] >= 0) continue;
      const Token token = pair(a, b);
      run(a + 1);
      unpair(a, b, token);
    }
  }

 private:
  void leaf() {
    if (uf_.components() != 1) {
      ++tally_.disconnected;
      return;
    }
    ++tally_.by_faces[static_cast<size_t>(faces_.cycles())];
  }

  const Shape& shape_;
  Tally& tally_;
  std::vector<int> partner_;
  RollbackUnionFind uf_;
  FacePaths faces_;
};

// Pairings of the first two free darts, each an independent subtree.
std::vector<std::array<int, 4>> split_prefixes(int darts) {
  std::vector<std::array<int, 4>> out;
  for (int b = 1; b < darts; ++b) {
    const int a2 = b == 1 ? 2 : 1;
    if (a2 >= darts) {
      out.push_back({0, b, -1, -1});
      continue;
    }
    for (int c = a2 + 1; c < darts; ++c) {
      if (c == b) continue;
      out.push_back({0, b, a2, c});
    }
  }
  return out;
}

MapCensus run_census(const OracleTask& task, const Shape& shape, const CensusOptions& options) {
  const BigInt estimate = matching_count(shape.darts);
  if (!options.force && estimate > BigInt(static_cast<unsigned long>(options.budget)))
    throw BudgetExceededError(estimate.get_str(), "census of " + std::to_string(shape.darts) + " darts exceeds the budget of " +
                                                      std::to_string(options.budget) + " matchings");
  const auto prefixes = split_prefixes(shape.darts);
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(prefixes.size())));
  std::vector<Tally> tallies(threads, Tally{std::vector<std::uint64_t>(static_cast<size_t>(shape.darts) + 2), 0});
  std::atomic<size_t> next{0};
  auto worker = [&](unsigned id) {
    Enumerator e(shape, tallies[id]);
    for (size_t i = next++; i < prefixes.size(); i = next++) {
      const auto& p = prefixes[i];
      const auto t1 = e.pair(p[0], p[1]);
      if (p[2] >= 0) {
        const auto t2 = e.pair(p[2], p[3]);
        e.run(0);
        e.unpair(p[2], p[3], t2);
      } else {
        e.run(0);
      }
      e.unpair(p[0], p[1], t1);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }

  MapCensus out{task, {}, 0, 0};
  const int edges = shape.darts / 2;
  for (const Tally& t : tallies) {
    out.disconnected += t.disconnected;
    for (size_t f = 0; f < t.by_faces.size(); ++f) {
      if (t.by_faces[f] == 0) continue;
      const auto g = euler_genus(shape.vertex_count, edges, static_cast<int>(f));
      if (!g) throw ConsistencyError("census: non-integral genus for " + std::to_string(f) + " faces");
      out.by_genus[*g] += t.by_faces[f];
    }
  }
  out.total = out.disconnected;
  for (const auto& [g, c] : out.by_genus) out.total += c;
  if (BigInt(static_cast<unsigned long>(out.total)) != estimate)
    throw ConsistencyError("census: enumerated " + std::to_string(out.total) + " matchings, expected " + estimate.get_str());
  return out;
}

void validate(const OracleTask& task) {
  if (task.nu < 1) throw PreconditionError("census: nu must be positive");
  if (task.vertices < 1) throw PreconditionError("census: need at least one vertex");
  if (task.legs != 0 && task.legs != 2) throw PreconditionError("census: legs must be 0 or 2");
  if (task.darts() > kMaxDarts) throw PreconditionError("census: too many darts");
}

}  // namespace

BigInt matching_count(int darts) {
  if (darts < 0 || darts % 2 != 0) throw PreconditionError("matching_count: dart count must be even");
  return double_factorial_odd(darts / 2);
}

std::vector<int> standard_rotation(const OracleTask& task) {
  validate(task);
  std::vector<int> sigma(static_cast<size_t>(task.darts()));
  const int len = 2 * task.nu;
  for (int v = 0; v < task.vertices; ++v)
    for (int i = 0; i < len; ++i) sigma[static_cast<size_t>(v * len + i)] = v * len + (i + 1) % len;
  for (int d = len * task.vertices; d < task.darts(); ++d) sigma[static_cast<size_t>(d)] = d;
  return sigma;
}

MapCensus census(const OracleTask& task, const CensusOptions& options) {
  const auto sigma = standard_rotation(task);
  return run_census(task, make_shape(sigma), options);
}

MapCensus two_leg_census(int nu, int vertices, const CensusOptions& options) {
  return census(OracleTask{nu, vertices, 2}, options);
}

MapCensus census_with_rotation(const OracleTask& task, std::span<const int> rotation, const CensusOptions& options) {
  validate(task);
  if (static_cast<int>(rotation.size()) != task.darts()) throw PreconditionError("census: rotation has the wrong size");
  return run_census(task, make_shape(rotation), options);
}

std::optional<int> euler_genus(int vertices, int edges, int faces) {
  if (vertices < 1 || edges < 0 || faces < 1) return std::nullopt;
  const int twice = 2 - vertices + edges - faces;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

}  // namespace ctoda::oracle
