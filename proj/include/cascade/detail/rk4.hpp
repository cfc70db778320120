#pragma once

namespace cascade::detail {

// Classical fixed-step 4th-order Runge-Kutta for autonomous systems.
// State needs operator+(State) and scalar operator*(double, State).
template <typename State, typename Rhs>
State rk4_step(const Rhs& f, const State& y, double dt) {
  const State k1 = f(y);
  const State k2 = f(y + (0.5 * dt) * k1);
  const State k3 = f(y + (0.5 * dt) * k2);
  const State k4 = f(y + dt * k3);
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace cascade::detail
