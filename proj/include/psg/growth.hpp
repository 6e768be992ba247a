// Product sets U^n, growth tables and the inequality checks run on them.

#ifndef PSG_GROWTH_HPP_
#define PSG_GROWTH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psg/rational.hpp"
#include "psg/word.hpp"

namespace psg {

  struct EnumerationCaps {
    std::size_t max_elements = 5'000'000;
    std::size_t max_length   = 64;
  };

  // Worker threads for enumeration: PSG_THREADS if set, else the hardware
  // concurrency, at least 1.
  std::size_t enumeration_threads();

  // {u_1 ... u_n : u_i in U}.  Throws CapExceeded when n * max|u| exceeds
  // caps.max_length or a level grows past caps.max_elements.
  WordSet product_set(WordSet const& u,
                      std::size_t n,
                      EnumerationCaps const& caps = {});

  struct GrowthTable {
    std::size_t                              base_size = 0;
    std::vector<std::size_t>                 sizes;       // sizes[n-1] = |U^n|
    std::optional<std::vector<std::size_t>>  ball_sizes;  // |{e} ∪ U ∪ ... ∪ U^n|
    std::vector<double>                      ball_root;   // |B(n)|^{1/n}
  };

  GrowthTable growth_table(WordSet const& u,
                           std::size_t n_max,
                           bool with_balls,
                           EnumerationCaps const& caps = {});

  enum class ExponentMode { linear, half_floor };

  struct GrowthParams {
    Rational     alpha = 1;
    Rational     beta  = 1;
    ExponentMode mode  = ExponentMode::linear;

    // Throws DomainError unless alpha, beta > 0.
    void validate() const;
  };

  // e(n): beta*n, or floor((n+1)/2) (beta unused) in half-floor mode.
  double exponent(GrowthParams const& p, std::size_t n);

  struct Verdict {
    std::size_t n;
    std::size_t size;
    double      rhs;  // (alpha |U|)^{e(n)}, possibly inf
    bool        holds;
  };

  // |U^n| >= (alpha |U|)^{e(n)} for each n in the table.
  std::vector<Verdict> check_inequality(GrowthTable const& t,
                                        GrowthParams const& p);

  // One-off form of the same comparison.
  bool growth_holds(std::size_t size,
                    std::size_t base_size,
                    GrowthParams const& p,
                    std::size_t n);

  struct TriplingRow {
    std::size_t n;
    std::size_t size;
    double      bound;   // (8K^3)^{n-2} |U|
    double      margin;  // ln bound - ln size
    bool        holds;
  };

  struct TriplingReport {
    Rational                 k;  // |U^3| / |U|
    std::vector<TriplingRow> rows;
    bool                     holds = true;
  };

  // Checks |U^n| <= (8K^3)^{n-2} |U| for 3 <= n <= N exactly.  Throws
  // DomainError when the table stops before n = 3.
  TriplingReport tripling_check(GrowthTable const& t);

  // U^2 ⊆ XU.  Throws DomainError unless U is symmetric and both sets
  // share a graph.
  bool approx_witness_check(WordSet const& u, WordSet const& x,
                            EnumerationCaps const& caps = {});

  // Deletes the letters outside `factor`.  A homomorphism when Γ splits as
  // a join with `factor` a union of join factors.
  GroupWord project(GroupWord const& w, VertexSet factor);

  struct ProjectionReport {
    std::vector<VertexSet> factors;      // finest join decomposition
    std::vector<WordSet>   projections;  // one per factor
    std::size_t            max_size = 0;
    bool                   holds    = false;  // max|U_i|^m >= |U|
  };

  // Throws NotAProduct when Γ is not a join.
  ProjectionReport projection_analysis(WordSet const& u);

  // A(P3) = F2 x Z: vertices a b c, edges a-c and b-c.
  GraphPtr p3_graph();

  // {x c^i : x in {e, a, a^-1, b, b^-1}, |i| <= k}.
  WordSet counterexample_family(std::size_t k);

  struct CounterexampleResult {
    std::optional<WordSet>   set;
    std::size_t              k = 0;
    std::size_t              n = 0;
    std::vector<std::size_t> sizes;  // |U^1| .. |U^n| of the returned set
    double                   rhs = 0;
    std::string              diagnostic;
  };

  // Scans k = k_max down to k_min and, for each k, n = 1..n_max; returns
  // the first U_k, n with |U_k^n| < (alpha |U_k|)^{e(n)}.
  CounterexampleResult counterexample_search(GrowthParams const& p,
                                             std::size_t k_max,
                                             std::size_t n_max,
                                             std::size_t k_min = 0,
                                             EnumerationCaps caps = {});

}  // namespace psg

#endif  // PSG_GROWTH_HPP_
