#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "uwca/automaton.hpp"
#include "uwca/enumeration.hpp"

using namespace uwca;
using uwca::testing::dihedral8_symmetric;
using uwca::testing::parse_pbm;

namespace {

bool same_state(const AutomatonState& a, const AutomatonState& b) {
  return a.generation == b.generation && a.on_set == b.on_set &&
         a.frontier == b.frontier && a.born_history == b.born_history;
}

}  // namespace

TEST_CASE("first generations") {
  AutomatonState state = new_automaton();
  CHECK(state.generation == 0);
  CHECK(state.on_set.empty());
  CHECK(state.frontier.empty());
  CHECK(state.born_history.empty());

  step(state);
  CHECK(state.generation == 1);
  CHECK(state.on_set == CellSet{{0, 0}});
  CHECK(state.frontier == CellSet{{0, 0}});

  step(state);
  CHECK(state.on_set.size() == 5);
  CHECK(state.frontier ==
        CellSet{{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  CHECK(state.born_history == std::vector<std::uint64_t>{1, 4});
}

TEST_CASE("birth counts match cells_born through 256 generations") {
  AutomatonState state = new_automaton();
  for (std::uint64_t n = 1; n <= 256; ++n) {
    step(state);
    REQUIRE(CellCount(state.born_history[n - 1]) == cells_born(Index(n)));
    REQUIRE(CellCount(state.on_set.size()) == total_cells(Index(n)));
  }
  // u(4) = 12 and u(8) = 36 among them
  CHECK(state.born_history[3] == 12);
  CHECK(state.born_history[7] == 36);
}

TEST_CASE("frontier stepper equals the naive stepper") {
  AutomatonState fast = new_automaton();
  AutomatonState slow = new_automaton();
  for (int g = 0; g < 32; ++g) {
    step(fast);
    naive_step(slow);
    REQUIRE(same_state(fast, slow));
  }
}

TEST_CASE("state invariants hold while evolving") {
  AutomatonState state = new_automaton();
  CellSet previous;
  for (int g = 1; g <= 128; ++g) {
    step(state);

    // frontier is a subset of on_set
    for (const CellCoord& c : state.frontier) {
      REQUIRE(state.on_set.contains(c));
    }
    // cells never turn off
    for (const CellCoord& c : previous) {
      REQUIRE(state.on_set.contains(c));
    }
    // total is the sum of births
    std::uint64_t born_total = 0;
    for (std::uint64_t b : state.born_history) {
      born_total += b;
    }
    REQUIRE(born_total == state.on_set.size());
    // dihedral symmetry about the origin
    REQUIRE(dihedral8_symmetric(state.on_set));

    previous = state.on_set;
  }
}

TEST_CASE("run_to") {
  CHECK(run_to(0).on_set.empty());
  CHECK(run_to(14).on_set.size() == 197);
  CHECK(run_to(14, kDefaultSimulationBudget, StepMode::naive).on_set.size() ==
        197);
  CHECK_THROWS_AS(run_to(1025), BudgetExceeded);
  CHECK_THROWS_AS(run_to(10, 9), BudgetExceeded);
  CHECK_THROWS_AS(run_to(Index(-1)), std::domain_error);
}

TEST_CASE("bounding box") {
  CHECK_THROWS_AS(bounding_box(new_automaton()), std::domain_error);

  const AutomatonState g1 = run_to(1);
  const BoundingBox b1 = bounding_box(g1);
  CHECK(b1.min_x == 0);
  CHECK(b1.max_y == 0);
  CHECK(b1.width() == 1);

  const BoundingBox b2 = bounding_box(run_to(2));
  CHECK(b2.min_x == -1);
  CHECK(b2.min_y == -1);
  CHECK(b2.max_x == 1);
  CHECK(b2.max_y == 1);

  const BoundingBox b14 = bounding_box(run_to(14));
  CHECK(b14.min_x == -13);
  CHECK(b14.min_y == -13);
  CHECK(b14.max_x == 13);
  CHECK(b14.max_y == 13);
}

TEST_CASE("text renderer") {
  CHECK(render_text(run_to(1)) == "#\n");
  CHECK(render_text(run_to(2)) == ".#.\n###\n.#.\n");
  CHECK_THROWS_AS(render_text(new_automaton()), std::domain_error);

  const std::string grid = render_text(run_to(14));
  CHECK(std::count(grid.begin(), grid.end(), '#') == 197);
  CHECK(std::count(grid.begin(), grid.end(), '\n') == 27);
  CHECK(grid.find('\n') == 27);  // 27 columns per row
}

TEST_CASE("text renderer orientation: row 0 is max_y, column 0 is min_x") {
  AutomatonState state;
  state.generation = 1;
  state.on_set = {{0, 0}, {1, 2}};
  CHECK(render_text(state) == ".#\n..\n#.\n");
}

TEST_CASE("pbm renderer") {
  CHECK(render_pbm(run_to(1)) == "P1\n1 1\n1\n");
  CHECK_THROWS_AS(render_pbm(new_automaton()), std::domain_error);

  const auto small = parse_pbm(render_pbm(run_to(2)));
  CHECK(small.width == 3);
  CHECK(small.height == 3);
  CHECK(small.ones() == 5);
  CHECK(small.rows[1] == std::vector<int>{1, 1, 1});

  const auto big = parse_pbm(render_pbm(run_to(14)));
  CHECK(big.width == 27);
  CHECK(big.height == 27);
  CHECK(big.ones() == 197);

  AutomatonState lop_sided;
  lop_sided.generation = 1;
  lop_sided.on_set = {{0, 0}, {1, 2}};
  CHECK(render_pbm(lop_sided) == "P1\n2 3\n0 1\n0 0\n1 0\n");
}
