#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "uwca/bigint.hpp"

namespace uwca {

// Grid cell. 64-bit coordinates are plenty: growth speed is one cell per
// generation and the simulation budget keeps generations small; the closed
// forms, not the simulator, serve large n.
struct CellCoord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

struct CellCoordHash {
  std::size_t operator()(const CellCoord& c) const noexcept;
};

using CellSet = std::unordered_set<CellCoord, CellCoordHash>;

// Sparse simulator state; a plain value, copy it to fork a run.
// Invariants: frontier is a subset of on_set; |on_set| equals the sum of
// born_history; cells never turn OFF; on_set is closed under the 8 square
// symmetries about the origin for every evolved state.
struct AutomatonState {
  std::uint64_t generation = 0;
  CellSet on_set;
  CellSet frontier;                          // cells born in the latest step
  std::vector<std::uint64_t> born_history;   // u(1) .. u(generation)
};

// Generation 0: nothing ON yet. The origin turns ON at the step to
// generation 1.
AutomatonState new_automaton();

// Advance one generation. An OFF cell turns ON when it shares exactly one
// edge with an ON cell (von Neumann neighbourhood). Candidates come from the
// frontier only; neighbour counts are taken against the full on_set.
void step(AutomatonState& state);

// Same contract, but candidates are the OFF neighbours of every ON cell --
// no frontier shortcut. Shipping oracle for step(): the outputs must be
// identical, and the test suite holds them to that.
void naive_step(AutomatonState& state);

inline constexpr std::uint64_t kDefaultSimulationBudget = 1024;

enum class StepMode { frontier, naive };

// Evolve a fresh automaton to generation n. Throws BudgetExceeded when
// n > budget (|on_set| stays resident; use the closed forms beyond this).
AutomatonState run_to(const Index& n,
                      std::uint64_t budget = kDefaultSimulationBudget,
                      StepMode mode = StepMode::frontier);

struct BoundingBox {
  std::int64_t min_x = 0;
  std::int64_t min_y = 0;
  std::int64_t max_x = 0;
  std::int64_t max_y = 0;

  std::int64_t width() const { return max_x - min_x + 1; }
  std::int64_t height() const { return max_y - min_y + 1; }
};

// Tight extents of on_set. Throws std::domain_error on an empty state.
BoundingBox bounding_box(const AutomatonState& state);

// '#' for ON, '.' for OFF over the bounding box, one newline-terminated row
// per grid line. Row 0 is y = max_y: the y axis points up.
std::string render_text(const AutomatonState& state);

// Plain PBM ("P1"): "P1\n<width> <height>\n" then height rows of width
// tokens, "0"/"1" separated by single spaces, each row newline-terminated.
// 1 = ON; row 0 is y = max_y, column 0 is x = min_x.
std::string render_pbm(const AutomatonState& state);

}  // namespace uwca
