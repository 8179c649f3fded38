"""Trace a clustering path on two interleaved half circles and draw it.

Run from the repository root::

    python3 demos/two_moons_path.py [out.svg]
"""

import sys

from clusterpath import SolverConfig, compute_knn_weights, make_schedule, run_path
from clusterpath.datasets import two_moons
from clusterpath.plot import render_path_svg


def main(out="two_moons_path.svg"):
    data, truth = two_moons(200, noise=0.08, seed=1)
    graph = compute_knn_weights(data, k=10, phi=2.0, require_connected=True)
    schedule = make_schedule(1e-3, 5.0, 25)
    result = run_path(data, graph, schedule, SolverConfig(algorithm="ssnal"))

    print(f"{'gamma':>10} {'K':>4} {'iters':>6} {'gap':>9}")
    for gamma, sol, assign in zip(result.gammas, result.solutions, result.assignments):
        print(f"{gamma:10.4g} {assign.K:4d} {sol.iterations:6d} {sol.termination.gap:9.1e}")
    print(f"total time {result.cumulative_times()[-1]:.2f} s, {result.num_converged()}/{schedule.T} converged")
    print("wrote", render_path_svg(result, data, out))


if __name__ == "__main__":
    main(*sys.argv[1:])
