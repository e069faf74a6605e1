#include "etcc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "etcc/error.hpp"

namespace etcc {

namespace {

using Mask = std::uint32_t;

Mask bit(Color c) { return Mask{1} << c; }

// A set of cells whose colors, together with an optional face, must cover
// every color: a rainbow closed neighbourhood (no face), or a face border
// that must use every color except the face's own.
struct Group {
  std::vector<CellId> members;
  std::optional<CellId> face;
};

struct Model {
  std::size_t n = 0;
  Mask full = 0;
  std::vector<std::vector<CellId>> neq;
  std::vector<Group> groups;
  std::vector<std::vector<std::size_t>> groups_of;
};

void add_neq(std::vector<std::vector<CellId>>& neq, CellId a, CellId b) {
  neq[a].push_back(b);
  neq[b].push_back(a);
}

Model build_model(const CellComplex& x, int k, Level level) {
  Model m;
  m.n = x.size();
  m.full = (Mask{1} << (k + 1)) - 1;
  m.neq.assign(m.n, {});

  for (CellId e : x.edges()) {
    auto ends = x.vertices_of(e);
    add_neq(m.neq, ends[0], ends[1]);
    add_neq(m.neq, ends[0], e);
    add_neq(m.neq, ends[1], e);
  }
  for (CellId v : x.vertices()) {
    auto es = x.edges_at(v);
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) add_neq(m.neq, es[i], es[j]);
    }
  }

  const Skeleton g = skeleton(x);
  const auto degree = is_regular(g);
  if (level != Level::proper_total && degree && static_cast<int>(*degree) == k) {
    for (CellId v : x.vertices()) {
      Group group{{v}, std::nullopt};
      for (CellId w : x.neighbors(v)) group.members.push_back(w);
      for (std::size_t i = 0; i < group.members.size(); ++i) {
        for (std::size_t j = i + 1; j < group.members.size(); ++j) add_neq(m.neq, group.members[i], group.members[j]);
      }
      m.groups.push_back(std::move(group));
    }
  }

  if (level == Level::etcc || level == Level::setcc) {
    for (CellId f : x.faces()) {
      Group group{{}, f};
      for (CellId id : x.border(f)) {
        group.members.push_back(id);
        add_neq(m.neq, f, id);
      }
      m.groups.push_back(std::move(group));
    }
    for (CellId e : x.edges()) {
      auto fs = x.faces_at_edge(e);
      if (fs.size() == 2) add_neq(m.neq, fs[0], fs[1]);
    }
  }
  if (level == Level::setcc) {
    for (CellId v : x.vertices()) {
      auto fs = x.faces_at_vertex(v);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) add_neq(m.neq, fs[i], fs[j]);
      }
    }
  }

  for (auto& list : m.neq) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  m.groups_of.assign(m.n, {});
  for (std::size_t gi = 0; gi < m.groups.size(); ++gi) {
    for (CellId c : m.groups[gi].members) m.groups_of[c].push_back(gi);
    if (m.groups[gi].face) m.groups_of[*m.groups[gi].face].push_back(gi);
  }
  for (auto& list : m.groups_of) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return m;
}

// Prefix of assignments in variable order that a worker replays before
// searching on its own.
struct Prefix {
  std::vector<std::pair<CellId, Color>> steps;
};

class Engine {
 public:
  Engine(const Model& model, SearchMode mode, std::size_t count_limit, bool symmetric)
      : m_(model), mode_(mode), limit_(count_limit), symmetric_(symmetric) {
    domain_.assign(m_.n, m_.full);
    value_.assign(m_.n, -1);
    queued_.assign(m_.groups.size(), 0);
  }

  // Applies the fixed colors. Returns false when propagation already fails.
  bool fix(const PartialColoring& fixed) {
    for (CellId c = 0; c < fixed.size(); ++c) {
      if (!fixed[c]) continue;
      if (!assign(c, *fixed[c])) return false;
      if (*fixed[c] > max_used_) max_used_ = *fixed[c];
    }
    for (CellId c = 0; c < m_.n; ++c) {
      if (value_[c] < 0) order_.push_back(c);
    }
    return true;
  }

  // Expands the first `depth` free variables, collecting the surviving
  // prefixes in lexicographic order.
  void frontier(std::size_t depth, std::vector<Prefix>& out) {
    Prefix current;
    collect(0, depth, current, out);
  }

  bool replay(const Prefix& prefix) {
    for (auto [c, color] : prefix.steps) {
      if (!(domain_[c] & bit(color))) return false;
      if (!assign(c, color)) return false;
      max_used_ = std::max(max_used_, color);
    }
    start_ = prefix.steps.size();
    return true;
  }

  void run() { dfs(start_); }

  const std::optional<std::vector<Color>>& solution() const { return solution_; }
  std::size_t count() const { return count_; }
  std::uint64_t nodes() const { return nodes_; }
  void set_cancel(const std::atomic<bool>* cancel) { cancel_ = cancel; }

 private:
  bool done() const {
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) return true;
    return mode_ == SearchMode::count ? count_ >= limit_ : count_ > 0;
  }

  Mask allowed(CellId c) const {
    Mask d = domain_[c];
    if (symmetric_ && max_used_ + 2 <= 31) d &= (Mask{1} << (max_used_ + 2)) - 1;
    return d;
  }

  void collect(std::size_t pos, std::size_t depth, Prefix& current, std::vector<Prefix>& out) {
    if (pos == order_.size() || pos == depth) {
      out.push_back(current);
      return;
    }
    const CellId c = order_[pos];
    const Mask d = allowed(c);
    for (Color color = 0; color <= 31; ++color) {
      if (!(d & bit(color))) continue;
      const std::size_t mark = trail_.size();
      const Color saved = max_used_;
      if (assign(c, color)) {
        max_used_ = std::max(max_used_, color);
        current.steps.emplace_back(c, color);
        collect(pos + 1, depth, current, out);
        current.steps.pop_back();
      }
      max_used_ = saved;
      undo(mark);
      value_[c] = -1;
    }
  }

  void dfs(std::size_t pos) {
    ++nodes_;
    if (pos == order_.size()) {
      ++count_;
      if (mode_ == SearchMode::first && !solution_) solution_ = value_;
      return;
    }
    const CellId c = order_[pos];
    const Mask d = allowed(c);
    for (Color color = 0; color <= 31 && !done(); ++color) {
      if (!(d & bit(color))) continue;
      const std::size_t mark = trail_.size();
      const Color saved = max_used_;
      if (assign(c, color)) {
        max_used_ = std::max(max_used_, color);
        dfs(pos + 1);
      }
      max_used_ = saved;
      undo(mark);
      value_[c] = -1;
    }
  }

  void set_domain(CellId c, Mask d) {
    trail_.emplace_back(c, domain_[c]);
    domain_[c] = d;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      domain_[trail_.back().first] = trail_.back().second;
      trail_.pop_back();
    }
  }

  bool assign(CellId c, Color color) {
    if (!(domain_[c] & bit(color))) return false;
    value_[c] = color;
    return restrict(c, bit(color)) && propagate();
  }

  // Narrows a domain and queues the cell; false on a wipe-out.
  bool restrict(CellId c, Mask mask) {
    const Mask d = domain_[c] & mask;
    if (d == domain_[c]) return true;
    if (d == 0) return false;
    set_domain(c, d);
    queue_.push_back(c);
    return true;
  }

  // Singleton domains are removed from their neq neighbours; groups touched
  // by a change are checked and may force a color onto their only carrier.
  bool propagate() {
    bool ok = true;
    while (ok && (!queue_.empty() || !pending_.empty())) {
      while (ok && !queue_.empty()) {
        const CellId c = queue_.back();
        queue_.pop_back();
        const Mask d = domain_[c];
        if (std::popcount(d) == 1) {
          for (CellId o : m_.neq[c]) {
            if (!restrict(o, ~d)) {
              ok = false;
              break;
            }
          }
        }
        for (std::size_t gi : m_.groups_of[c]) {
          if (!queued_[gi]) {
            queued_[gi] = 1;
            pending_.push_back(gi);
          }
        }
      }
      while (ok && !pending_.empty() && queue_.empty()) {
        const std::size_t gi = pending_.back();
        pending_.pop_back();
        queued_[gi] = 0;
        ok = group_ok(m_.groups[gi]);
      }
    }
    queue_.clear();
    for (std::size_t gi : pending_) queued_[gi] = 0;
    pending_.clear();
    return ok;
  }

  bool group_ok(const Group& g) {
    Mask reach = 0;
    Mask present = 0;
    int open = 0;
    for (CellId c : g.members) {
      reach |= domain_[c];
      if (std::popcount(domain_[c]) == 1) {
        present |= domain_[c];
      } else {
        ++open;
      }
    }
    Mask need = m_.full;
    if (g.face) {
      const Mask fd = domain_[*g.face];
      if (std::popcount(fd) != 1) {
        const Mask unreachable = m_.full & ~reach;
        const int missing = std::popcount(unreachable);
        if (missing > 1) return false;
        if (missing == 1) return restrict(*g.face, unreachable);
        return std::popcount(m_.full & ~present) - 1 <= open;
      }
      need &= ~fd;
    }
    if ((reach & need) != need) return false;
    const Mask wanted = need & ~present;
    if (std::popcount(wanted) > open) return false;
    for (Color color = 0; color <= 31; ++color) {
      if (!(wanted & bit(color))) continue;
      CellId carrier = 0;
      int carriers = 0;
      for (CellId c : g.members) {
        if (domain_[c] & bit(color)) {
          carrier = c;
          ++carriers;
        }
      }
      if (carriers == 1 && !restrict(carrier, bit(color))) return false;
    }
    return true;
  }

  const Model& m_;
  SearchMode mode_;
  std::size_t limit_;
  bool symmetric_;
  std::vector<Mask> domain_;
  std::vector<Color> value_;
  std::vector<std::pair<CellId, Mask>> trail_;
  std::vector<CellId> order_;
  std::vector<CellId> queue_;
  std::vector<std::size_t> pending_;
  std::vector<char> queued_;
  Color max_used_ = -1;
  std::size_t start_ = 0;
  std::size_t count_ = 0;
  std::uint64_t nodes_ = 0;
  std::optional<std::vector<Color>> solution_;
  const std::atomic<bool>* cancel_ = nullptr;
};

void check_fixed(const CellComplex& x, const Model& m, const SearchOptions& o) {
  if (o.fixed.empty()) return;
  if (o.fixed.size() != x.size()) {
    throw Error(Errc::InconsistentFixed, "fixed colors cover " + std::to_string(o.fixed.size()) + " cells, complex has " +
                                             std::to_string(x.size()));
  }
  for (CellId c = 0; c < o.fixed.size(); ++c) {
    if (!o.fixed[c]) continue;
    if (*o.fixed[c] < 0 || *o.fixed[c] > o.k) {
      throw Error(Errc::InconsistentFixed, "cell " + std::to_string(c) + " fixed to color " +
                                               std::to_string(*o.fixed[c]) + " outside 0.." + std::to_string(o.k));
    }
    for (CellId d : m.neq[c]) {
      if (d > c && o.fixed[d] && *o.fixed[d] == *o.fixed[c]) {
        throw Error(Errc::InconsistentFixed, "cells " + std::to_string(c) + " and " + std::to_string(d) +
                                                 " are fixed to the same color " + std::to_string(*o.fixed[c]));
      }
    }
  }
}

}  // namespace

std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::first: return "first";
    case SearchMode::exists: return "exists";
    case SearchMode::count: return "count";
  }
  return "unknown";
}

SearchMode parse_search_mode(std::string_view text) {
  for (SearchMode m : {SearchMode::first, SearchMode::exists, SearchMode::count}) {
    if (text == to_string(m)) return m;
  }
  throw Error(Errc::ParseError, "unknown search mode '" + std::string(text) + "'");
}

SearchResult solve(const CellComplex& x, const SearchOptions& o) {
  if (x.size() > o.max_cells) {
    throw Error(Errc::SizeBound, "complex has " + std::to_string(x.size()) + " cells, bound is " +
                                     std::to_string(o.max_cells));
  }
  if (o.k < 1 || o.k > 30) throw Error(Errc::InvalidCell, "k must lie in 1..30");
  if (o.level == Level::axioms) throw Error(Errc::InvalidCell, "search needs a coloring level");
  const Model model = build_model(x, o.k, o.level);
  check_fixed(x, model, o);

  bool any_fixed = false;
  for (const auto& f : o.fixed) any_fixed = any_fixed || f.has_value();
  const bool symmetric = !any_fixed && o.mode != SearchMode::count;
  const std::size_t limit = o.mode == SearchMode::count ? std::max<std::size_t>(o.count_limit, 1) : 1;

  SearchResult result;
  auto finish = [&](const std::optional<std::vector<Color>>& colors) {
    if (colors && o.mode == SearchMode::first) result.solution = ColorAssignment{o.k, *colors};
    return result;
  };

  Engine root(model, o.mode, limit, symmetric);
  if (!root.fix(o.fixed)) return result;

  if (o.threads <= 1) {
    root.run();
    result.count = root.count();
    result.nodes = root.nodes();
    return finish(root.solution());
  }

  // Split the tree at a shallow depth; work items keep lexicographic order
  // so the merged answer matches the single-threaded one.
  std::vector<Prefix> work;
  for (std::size_t depth = 1; depth <= 8; ++depth) {
    work.clear();
    root.frontier(depth, work);
    if (work.size() >= 4 * o.threads) break;
  }
  std::vector<std::optional<std::vector<Color>>> found(work.size());
  std::vector<std::size_t> counts(work.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{work.size()};
  std::atomic<std::size_t> total{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  auto worker = [&]() {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      if (o.mode != SearchMode::count && i > best.load()) continue;
      if (o.mode == SearchMode::count && stop.load()) continue;
      Engine engine(model, o.mode, limit, symmetric);
      engine.fix(o.fixed);
      if (!engine.replay(work[i])) continue;
      if (o.mode == SearchMode::count) engine.set_cancel(&stop);
      engine.run();
      nodes += engine.nodes();
      counts[i] = engine.count();
      found[i] = engine.solution();
      if (engine.count() > 0) {
        std::size_t b = best.load();
        while (i < b && !best.compare_exchange_weak(b, i)) {
        }
        if ((total += engine.count()) >= limit && o.mode == SearchMode::count) stop = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < o.threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  result.nodes = nodes.load();
  if (o.mode == SearchMode::count) {
    std::size_t sum = 0;
    for (std::size_t c : counts) sum += c;
    result.count = std::min(sum, limit);
    return result;
  }
  if (best.load() < work.size()) {
    result.count = 1;
    return finish(found[best.load()]);
  }
  return result;
}

ConjectureProbe probe_conjecture(const CellComplex& x, int k, std::size_t max_cells, unsigned threads) {
  ConjectureProbe probe;
  SearchOptions o;
  o.k = k;
  o.max_cells = max_cells;
  o.threads = threads;
  o.level = Level::etc;
  SearchResult etc_like = solve(x, o);
  probe.etc_like_exists = etc_like.satisfiable();
  probe.etc_like_witness = etc_like.solution;
  o.level = Level::etcc;
  SearchResult etcc = solve(x, o);
  probe.etcc_exists = etcc.satisfiable();
  probe.etcc_witness = etcc.solution;
  return probe;
}

}  // namespace etcc
