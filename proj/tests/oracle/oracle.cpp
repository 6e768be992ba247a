#include "oracle.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace psg::oracle {

  std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
      throw std::invalid_argument("Rng::below(0)");
    }
    std::uint64_t const limit = (~std::uint64_t(0) / n) * n;
    std::uint64_t       x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  std::vector<std::string> letter_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(i < 26 ? std::string(1, char('a' + i))
                           : "v" + std::to_string(i));
    }
    return out;
  }

  GraphPtr make_graph(std::size_t n,
                      std::vector<DefiningGraph::Edge> const& edges) {
    return std::make_shared<DefiningGraph const>(letter_names(n), edges);
  }

  GraphPtr edgeless_graph(std::size_t n) {
    return make_graph(n, {});
  }

  GraphPtr path_graph(std::size_t n) {
    std::vector<DefiningGraph::Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      e.emplace_back(i, i + 1);
    }
    return make_graph(n, e);
  }

  GraphPtr cycle_graph(std::size_t n) {
    std::vector<DefiningGraph::Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
      e.emplace_back(i, (i + 1) % n);
    }
    return make_graph(n, e);
  }

  GraphPtr random_graph(Rng& rng, std::size_t n, std::uint64_t num,
                        std::uint64_t den) {
    std::vector<DefiningGraph::Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng.chance(num, den)) {
          e.emplace_back(i, j);
        }
      }
    }
    return make_graph(n, e);
  }

  Letters random_letters(Rng& rng, std::size_t num_vertices, std::size_t len) {
    Letters w;
    for (std::size_t i = 0; i < len; ++i) {
      w.emplace_back(rng.below(num_vertices), rng.coin());
    }
    return w;
  }

  GroupWord random_word(Rng& rng, GraphPtr const& g, std::size_t max_len) {
    auto len = rng.between(0, max_len);
    return GroupWord(g, random_letters(rng, g->num_vertices(), len));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Length in the top 4 bits, 4-bit symbols (code + 1) below.
    std::uint64_t pack(std::vector<int> const& w) {
      std::uint64_t k = std::uint64_t(w.size()) << 60;
      for (std::size_t i = 0; i < w.size(); ++i) {
        k |= std::uint64_t(w[i] + 1) << (4 * i);
      }
      return k;
    }

    std::vector<int> unpack(std::uint64_t k) {
      std::vector<int> w(k >> 60);
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = int((k >> (4 * i)) & 0xF) - 1;
      }
      return w;
    }

    template <class F>
    void neighbours(std::vector<int> const& w, DefiningGraph const& g,
                    bool allow_cancel, F&& emit) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int x = w[i], y = w[i + 1];
        int vx = x / 2, vy = y / 2;
        if (vx == vy) {
          if (allow_cancel && x != y) {
            std::vector<int> v;
            v.insert(v.end(), w.begin(), w.begin() + i);
            v.insert(v.end(), w.begin() + i + 2, w.end());
            emit(v);
          }
        } else if (g.adjacent(std::size_t(vx), std::size_t(vy))) {
          auto v = w;
          std::swap(v[i], v[i + 1]);
          emit(v);
        }
      }
    }

    std::unordered_set<std::uint64_t> closure(std::vector<int> const& start,
                                              DefiningGraph const& g,
                                              bool allow_cancel) {
      std::unordered_set<std::uint64_t> seen = {pack(start)};
      std::deque<std::uint64_t>         queue = {pack(start)};
      while (!queue.empty()) {
        auto w = unpack(queue.front());
        queue.pop_front();
        neighbours(w, g, allow_cancel, [&](std::vector<int> const& v) {
          auto k = pack(v);
          if (seen.insert(k).second) {
            queue.push_back(k);
          }
        });
      }
      return seen;
    }
  }  // namespace

  RewriteResult rewrite_normal_form(Letters const& raw, DefiningGraph const& g) {
    if (raw.size() > 15 || g.num_vertices() > 7) {
      throw std::invalid_argument("rewrite oracle limited to 15 letters, 7 vertices");
    }
    std::vector<int> start;
    for (auto l : raw) {
      start.push_back(int(l.vertex()) * 2 + (l.inverse() ? 1 : 0));
    }
    auto all = closure(start, g, true);

    std::size_t min_len = raw.size();
    for (auto k : all) {
      min_len = std::min<std::size_t>(min_len, k >> 60);
    }
    std::set<std::vector<int>> minimal;
    for (auto k : all) {
      if ((k >> 60) == min_len) {
        minimal.insert(unpack(k));
      }
    }
    RewriteResult r;
    r.explored = all.size();
    auto const& least = *minimal.begin();
    for (int c : least) {
      r.least.push_back(Letter::from_code(static_cast<std::uint8_t>(c)));
    }
    auto cls = closure(least, g, false);
    r.single_class = cls.size() == minimal.size();
    if (r.single_class) {
      for (auto const& m : minimal) {
        if (!cls.count(pack(m))) {
          r.single_class = false;
          break;
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free groups on strings
  ////////////////////////////////////////////////////////////////////////

  namespace {
    char flip(char c) {
      return std::islower(static_cast<unsigned char>(c))
                 ? char(std::toupper(static_cast<unsigned char>(c)))
                 : char(std::tolower(static_cast<unsigned char>(c)));
    }
  }  // namespace

  std::string free_reduce(std::string const& w) {
    std::string out;
    for (char c : w) {
      if (!out.empty() && out.back() == flip(c)) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  std::string free_inverse(std::string const& w) {
    std::string out(w.rbegin(), w.rend());
    for (auto& c : out) {
      c = flip(c);
    }
    return out;
  }

  std::string to_free_string(GroupWord const& w) {
    std::string out;
    for (auto l : w.letters()) {
      char c = char('a' + l.vertex());
      out.push_back(l.inverse() ? flip(c) : c);
    }
    return out;
  }

  std::vector<std::size_t> free_ball_sizes_bfs(std::size_t k, std::size_t n) {
    std::string gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(char('a' + i));
      gens.push_back(char('A' + i));
    }
    std::set<std::string>    seen = {""};
    std::vector<std::string> frontier = {""};
    std::vector<std::size_t> out;
    for (std::size_t r = 1; r <= n; ++r) {
      std::vector<std::string> next;
      for (auto const& w : frontier) {
        for (char c : gens) {
          auto v = free_reduce(w + c);
          if (seen.insert(v).second) {
            next.push_back(v);
          }
        }
      }
      frontier = std::move(next);
      out.push_back(seen.size());
    }
    return out;
  }

  std::size_t free_ball_size_formula(std::size_t k, std::size_t n) {
    std::size_t total = 1, term = 2 * k;
    for (std::size_t i = 1; i <= n; ++i) {
      total += term;
      term *= 2 * k - 1;
    }
    return total;
  }

  std::size_t counterexample_size(std::size_t k, std::size_t n) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) {
      p *= 3;
    }
    return (2 * p - 1) * (2 * n * k + 1);
  }

  std::size_t translation_length(std::string const& g) {
    auto g2 = free_reduce(g + g);
    auto g3 = free_reduce(g2 + g);
    return g3.size() - g2.size();
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph brute force
  ////////////////////////////////////////////////////////////////////////

  bool in_subjoin_brute(DefiningGraph const& g, VertexSet s) {
    auto const n = g.num_vertices();
    for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
      if ((w & s.mask()) != s.mask()) {
        continue;
      }
      std::vector<std::size_t> members = VertexSet(w).indices();
      auto const               m       = members.size();
      if (m < 2) {
        continue;
      }
      // Bipartitions with members[0] on side A.
      for (std::uint64_t side = 0; side < (std::uint64_t(1) << (m - 1)); ++side) {
        std::vector<std::size_t> a = {members[0]}, b;
        for (std::size_t i = 1; i < m; ++i) {
          ((side >> (i - 1)) & 1U ? b : a).push_back(members[i]);
        }
        if (b.empty()) {
          continue;
        }
        bool full = true;
        for (auto x : a) {
          for (auto y : b) {
            full = full && g.adjacent(x, y);
          }
        }
        if (full) {
          return true;
        }
      }
    }
    return false;
  }

  std::size_t max_clique_brute(DefiningGraph const& g) {
    auto const  n    = g.num_vertices();
    std::size_t best = 0;
    for (std::uint64_t w = 1; w < (std::uint64_t(1) << n); ++w) {
      auto idx  = VertexSet(w).indices();
      bool ok   = true;
      for (std::size_t i = 0; i < idx.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < idx.size() && ok; ++j) {
          ok = g.adjacent(idx[i], idx[j]);
        }
      }
      if (ok) {
        best = std::max(best, idx.size());
      }
    }
    return best;
  }

  std::size_t common_prefix(GroupWord const& x, GroupWord const& y) {
    auto const& a = x.letters();
    auto const& b = y.letters();
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) {
      ++i;
    }
    return i;
  }

}  // namespace psg::oracle
