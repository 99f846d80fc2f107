#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swefv/grid.hpp"
#include "swefv/model.hpp"
#include "swefv/reconstruct.hpp"

namespace swefv {

enum class BoundaryKind { periodic, free_flow, dirichlet };

struct BoundarySide {
  BoundaryKind kind = BoundaryKind::free_flow;
  std::optional<double> h;  // prescribed components for dirichlet sides;
  std::optional<double> q;  // an unset component is copied from the interior
};

struct BoundarySpec {
  BoundarySide left, right;

  static BoundarySpec periodic();
  static BoundarySpec free_flow();
  static BoundarySpec dirichlet(BoundarySide l, BoundarySide r);
  void validate() const;  // periodic requires both sides periodic
};

// Explicit Runge-Kutta tableau (strictly lower triangular A, sum b = 1).
struct ButcherTableau {
  std::vector<std::vector<double>> a;
  std::vector<double> b;

  std::size_t stages() const { return b.size(); }
  void validate() const;

  static ButcherTableau explicit_euler();
  static ButcherTableau heun();
  static ButcherTableau ssp3();
  static ButcherTableau classic_rk4();
  static ButcherTableau for_order(int order);
};

// Per-cell averages of depth and discharge.
struct State {
  std::vector<double> h, q;
  std::size_t size() const { return h.size(); }
};

// Interior arrays extended by two ghost cells per side.
struct PaddedState {
  std::vector<double> h, q, z, widths;
  std::size_t interior = 0;
};

PaddedState fill_ghosts(const State& state, std::span<const double> z, const Grid& grid,
                        const BoundarySpec& bc);

struct SchemeConfig {
  int order = 3;
  PhysConstants phys{};
  WenoParams weno{};
  BoundarySpec bc = BoundarySpec::free_flow();
  double cfl = 0.45;
};

// Everything produced while evaluating the semidiscrete right-hand side once:
// the rates, the interface fluxes, and both numerical entropy flux variants.
struct StageEval {
  std::vector<double> dh, dq;          // size n
  std::vector<double> flux_h, flux_q;  // size n+1
  std::vector<double> ent_matched, ent_averaged;  // size n+1
};

StageEval evaluate_stage(const State& state, std::span<const double> z, const Grid& grid,
                         const SchemeConfig& cfg);

// d/dt of the cell averages; thin wrapper over evaluate_stage.
struct Rhs {
  std::vector<double> dh, dq;
};
Rhs semidiscrete_rhs(const State& state, std::span<const double> z, const Grid& grid,
                     const SchemeConfig& cfg);

// dt = cfl * min_j(width_j) / max_j(wave speed); throws if nothing moves.
double cfl_timestep(const State& state, const Grid& grid, const PhysConstants& pc, double cfl);

struct StageData {
  State stage_state;
  std::vector<double> flux_h, flux_q;
  std::vector<double> ent_matched, ent_averaged;
};

struct StepRecord {
  std::vector<StageData> stages;
  std::vector<double> b;  // quadrature weights of the tableau used
  double dt = 0.0;
};

struct StepResult {
  State state;
  StepRecord record;
};

// One full Runge-Kutta step. Reconstruction, hydrostatic correction and the
// source quadrature are applied to every stage value. Throws on emergent
// negative depth beyond rounding tolerance.
StepResult rk_step(const State& state, std::span<const double> z, const Grid& grid,
                   const SchemeConfig& cfg, const ButcherTableau& tableau, double dt);

}  // namespace swefv
