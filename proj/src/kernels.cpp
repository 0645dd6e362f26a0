#include "splitwave/kernels.hpp"

namespace splitwave::kernels {

std::vector<double> interpolate_batch(const std::vector<std::complex<double>>& spectrum,
                                      const PeriodicGrid& grid,
                                      const std::vector<double>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<double> values(n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        values[i] = detail::eval_point(spectrum, grid, points[i]);
    return values;
}

CharacteristicResult characteristic_solve(const std::vector<std::complex<double>>& spectrum,
                                          const PeriodicGrid& grid,
                                          const std::vector<double>& start,
                                          double t, double damping,
                                          double tolerance, int max_iterations) {
    const int n = grid.size();
    CharacteristicResult result;
    result.values.resize(n);
    int worst = 0;
    int stalled = 0;
#pragma omp parallel for schedule(static) reduction(max : worst) reduction(+ : stalled)
    for (int j = 0; j < n; ++j) {
        const auto node = detail::solve_node(spectrum, grid, grid.node(j), start[j],
                                             t, damping, tolerance, max_iterations);
        result.values[j] = node.w;
        worst = std::max(worst, node.iterations);
        if (!node.converged) ++stalled;
    }
    result.max_iterations_used = worst;
    result.stalled_nodes = stalled;
    return result;
}

}  // namespace splitwave::kernels
