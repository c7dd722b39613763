#include "uwca/automaton.hpp"

#include <array>
#include <limits>

namespace uwca {

namespace {

constexpr std::array<CellCoord, 4> kVonNeumann = {
    CellCoord{1, 0}, CellCoord{-1, 0}, CellCoord{0, 1}, CellCoord{0, -1}};

CellCoord offset(const CellCoord& c, const CellCoord& d) {
  return CellCoord{c.x + d.x, c.y + d.y};
}

std::uint64_t splitmix64(std::uint64_t v) {
  v += 0x9e3779b97f4a7c15ull;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ull;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebull;
  return v ^ (v >> 31);
}

int on_neighbour_count(const CellSet& on, const CellCoord& c) {
  int count = 0;
  for (const CellCoord& d : kVonNeumann) {
    count += on.contains(offset(c, d)) ? 1 : 0;
  }
  return count;
}

// Shared tail of both steppers: births are the candidates with exactly one
// ON neighbour, counted against the full on_set.
void apply_births(AutomatonState& state, const CellSet& candidates) {
  CellSet born;
  for (const CellCoord& c : candidates) {
    if (on_neighbour_count(state.on_set, c) == 1) {
      born.insert(c);
    }
  }
  for (const CellCoord& c : born) {
    state.on_set.insert(c);
  }
  state.born_history.push_back(born.size());
  state.frontier = std::move(born);
  ++state.generation;
}

bool ignite_if_empty(AutomatonState& state) {
  if (state.generation != 0) {
    return false;
  }
  state.on_set.insert(CellCoord{0, 0});
  state.frontier = {CellCoord{0, 0}};
  state.born_history.push_back(1);
  state.generation = 1;
  return true;
}

}  // namespace

std::size_t CellCoordHash::operator()(const CellCoord& c) const noexcept {
  const auto h = splitmix64(static_cast<std::uint64_t>(c.x));
  return static_cast<std::size_t>(
      splitmix64(h ^ static_cast<std::uint64_t>(c.y)));
}

AutomatonState new_automaton() { return AutomatonState{}; }

void step(AutomatonState& state) {
  if (ignite_if_empty(state)) {
    return;
  }
  CellSet candidates;
  candidates.reserve(state.frontier.size() * 3);
  for (const CellCoord& f : state.frontier) {
    for (const CellCoord& d : kVonNeumann) {
      const CellCoord c = offset(f, d);
      if (!state.on_set.contains(c)) {
        candidates.insert(c);
      }
    }
  }
  apply_births(state, candidates);
}

void naive_step(AutomatonState& state) {
  if (ignite_if_empty(state)) {
    return;
  }
  CellSet candidates;
  for (const CellCoord& cell : state.on_set) {
    for (const CellCoord& d : kVonNeumann) {
      const CellCoord c = offset(cell, d);
      if (!state.on_set.contains(c)) {
        candidates.insert(c);
      }
    }
  }
  apply_births(state, candidates);
}

AutomatonState run_to(const Index& n, std::uint64_t budget, StepMode mode) {
  if (n < 0) {
    throw std::domain_error("run_to: generation must be >= 0, got " + n.str());
  }
  if (n > budget) {
    throw BudgetExceeded("run_to: generation " + n.str() +
                         " exceeds the simulation budget " +
                         std::to_string(budget) +
                         "; the closed forms serve large n");
  }
  const auto target = n.convert_to<std::uint64_t>();
  AutomatonState state = new_automaton();
  while (state.generation < target) {
    if (mode == StepMode::frontier) {
      step(state);
    } else {
      naive_step(state);
    }
  }
  return state;
}

BoundingBox bounding_box(const AutomatonState& state) {
  if (state.on_set.empty()) {
    throw std::domain_error("bounding_box: no cells are ON yet");
  }
  BoundingBox box{std::numeric_limits<std::int64_t>::max(),
                  std::numeric_limits<std::int64_t>::max(),
                  std::numeric_limits<std::int64_t>::min(),
                  std::numeric_limits<std::int64_t>::min()};
  for (const CellCoord& c : state.on_set) {
    box.min_x = std::min(box.min_x, c.x);
    box.min_y = std::min(box.min_y, c.y);
    box.max_x = std::max(box.max_x, c.x);
    box.max_y = std::max(box.max_y, c.y);
  }
  return box;
}

std::string render_text(const AutomatonState& state) {
  const BoundingBox box = bounding_box(state);
  std::string out;
  out.reserve(static_cast<std::size_t>((box.width() + 1) * box.height()));
  for (std::int64_t y = box.max_y; y >= box.min_y; --y) {
    for (std::int64_t x = box.min_x; x <= box.max_x; ++x) {
      out.push_back(state.on_set.contains(CellCoord{x, y}) ? '#' : '.');
    }
    out.push_back('\n');
  }
  return out;
}

std::string render_pbm(const AutomatonState& state) {
  const BoundingBox box = bounding_box(state);
  std::string out = "P1\n";
  out += std::to_string(box.width());
  out += ' ';
  out += std::to_string(box.height());
  out += '\n';
  for (std::int64_t y = box.max_y; y >= box.min_y; --y) {
    for (std::int64_t x = box.min_x; x <= box.max_x; ++x) {
      if (x != box.min_x) {
        out.push_back(' ');
      }
      out.push_back(state.on_set.contains(CellCoord{x, y}) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace uwca
