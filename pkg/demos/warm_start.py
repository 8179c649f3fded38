"""Iterations saved by starting each solve from its neighbour on the path."""

from clusterpath import SolverConfig, compute_knn_weights, make_schedule, run_path
from clusterpath.datasets import gaussian_mixture

CENTERS = [(-2.0, -2.0), (2.0, -2.0), (-2.0, 2.0), (2.0, 2.0)]


def main():
    data, _ = gaussian_mixture(CENTERS, 1.0, 25, seed=0)
    graph = compute_knn_weights(data, k=10, phi=0.5, require_connected=True)
    schedule = make_schedule(1e-3, 10.0, 20)
    for alg in ("ssnal", "admm", "ama"):
        cfg = SolverConfig(algorithm=alg)
        warm = run_path(data, graph, schedule, cfg, warm_start=True)
        cold = run_path(data, graph, schedule, cfg, warm_start=False)
        w = [s.iterations for s in warm.solutions]
        c = [s.iterations for s in cold.solutions]
        print(f"{alg:>6}: warm {sum(w):6d}  cold {sum(c):6d}  "
              f"no worse at {sum(a <= b for a, b in zip(w, c))}/{schedule.T} points")


if __name__ == "__main__":
    main()
