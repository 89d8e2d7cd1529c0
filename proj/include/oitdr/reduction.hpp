#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oitdr/graph.hpp"
#include "oitdr/labeling.hpp"
#include "oitdr/solver.hpp"

namespace oitdr {

/// Star K_{1,4} hung on an original vertex x through the leaf a.
struct GadgetStar {
  Vertex x, u, a, b, c, d;
};

/// Host graph H plus the star attached to every original vertex. Original
/// vertices keep ids 0..n-1; the star of x_i occupies n+5i..n+5i+4 in the
/// order u, a, b, c, d.
struct GadgetMap {
  Graph host;
  int original_order = 0;
  std::vector<GadgetStar> stars;
};

GadgetMap build_gadget(const Graph& g);
std::string gadget_to_json(const GadgetMap& gm);

/// f on G, u_i = 3, a_i = 1, b_i = c_i = d_i = 0. Throws PreconditionError
/// unless f is a valid OIDRDF of g.
Labeling lift_oidrdf(const Graph& g, const Labeling& f, const GadgetMap& gm);

struct ReductionOptions {
  int max_order = 3;
  SolveOptions solve;
};

struct ReductionVerdict {
  long long k = 0;
  long long offset = 0;                    // 4 n(G)
  std::optional<long long> gamma_oidr;     // of G, when solved exactly
  std::optional<long long> gamma_host;     // OITDRD number of H, when solved exactly
  std::optional<bool> forward_ok;          // gamma_oidr <= k implies gamma_host <= k + offset
  std::optional<bool> backward_ok;         // the converse
  bool complete() const { return forward_ok.has_value() && backward_ok.has_value(); }
};

/// Both directions of the equivalence, decided from exact solver values.
/// A direction that cannot be decided inside the budget stays empty.
ReductionVerdict verify_reduction(const Graph& g, long long k, const ReductionOptions& opts = {});
std::string verdict_to_json(const ReductionVerdict& v);

}  // namespace oitdr
