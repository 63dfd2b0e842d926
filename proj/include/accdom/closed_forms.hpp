#pragma once

#include <string>

#include "accdom/corona.hpp"
#include "accdom/generators.hpp"
#include "accdom/graph.hpp"

namespace accdom {

// Either an exact value or an inclusive range, tagged with the id of the
// rule that produced it (the same ids the verify command accepts).
struct Prediction {
  enum class Kind { exact, bounds };
  Kind kind = Kind::exact;
  int value = 0;  // meaningful for exact only
  int lower = 0;
  int upper = 0;
  std::string source;

  static Prediction exact(int v, std::string source);
  static Prediction range(int lo, int hi, std::string source);
};

enum class AccurateFamily {
  path,
  cycle,
  complete,
  complete_bipartite_equal,    // both sides a
  complete_bipartite_unequal,  // sides a < b
};

// Minimum dominating size for the standard families.
int gamma_closed(StandardFamily family, int a, int b = 0);

// Minimum accurate dominating size. Callers pick the bipartite case
// explicitly; sizes that contradict it are rejected.
int gamma_a_closed(AccurateFamily family, int a, int b = 0);

// gamma_of_member[v] must hold the minimum dominating size of members[v].
struct FCoronaPrediction {
  Prediction gamma;
  Prediction gamma_a;
};
FCoronaPrediction f_corona_predict(const GraphFamily& family,
                                   const std::vector<int>& gamma_of_member);

enum class PCoronaBase { general, tree, cycle };

struct PCoronaPrediction {
  Prediction gamma;
  Prediction gamma_a;
};
// The accurate bound needs every block list nonempty; isolated base
// vertices are rejected. tree/cycle tighten the bound to an exact value.
PCoronaPrediction p_corona_predict(const NeighborhoodPartition& partition,
                                   PCoronaBase base_kind);

struct S2Prediction {
  int gamma = 0;
  int gamma_a = 0;
};
// For the double subdivision of a connected graph both values are exact.
S2Prediction s2_predict(const Graph& g);

}  // namespace accdom
