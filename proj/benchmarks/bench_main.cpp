#include <benchmark/benchmark.h>

#include "samara/calibration.hpp"
#include "samara/equilibrium.hpp"
#include "samara/optimizer.hpp"
#include "samara/profile.hpp"
#include "samara/propulsion.hpp"
#include "samara/wing_aero.hpp"

using namespace samara;

namespace {

void BM_StationSolve(benchmark::State& state) {
    const AeroCoefficients aero;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_station(0.15, 40.0, 0.05, 0.46, aero));
    }
}
BENCHMARK(BM_StationSolve);

void BM_WingCoefficients(benchmark::State& state) {
    const auto robot = crazyflie_bench();
    WingSolverOptions opt;
    opt.station_count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wing_coefficients(robot.wing, robot.aero, opt));
    }
}
BENCHMARK(BM_WingCoefficients)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_OperatingPoint(benchmark::State& state) {
    const auto p = crazyflie_bench().propulsion;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_operating_point(3.5, 5.0, p.propeller, p.motor, 1.2));
    }
}
BENCHMARK(BM_OperatingPoint);

void BM_Trim(benchmark::State& state) {
    const auto robot = crazyflie_bench();
    const auto wing = wing_coefficients(robot.wing, robot.aero);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_trim(3.5, robot, wing));
    }
}
BENCHMARK(BM_Trim)->Unit(benchmark::kMicrosecond);

void BM_Optimize(benchmark::State& state) {
    OptimizationContext ctx;
    ctx.base = crazyflie_bench();
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize(rectangular_seed(), ctx));
    }
}
BENCHMARK(BM_Optimize)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Fit(benchmark::State& state) {
    const AeroCoefficients truth{2.0, 0.15, 2.2, 1.2};
    MeasurementSet data;
    data.geometries["ref"] = reference_design().wing();
    data.geometries["seed"] = rectangular_seed().wing();
    for (const auto& [id, g] : data.geometries) {
        for (double om = 20.0; om <= 45.0; om += 5.0) {
            data.records.push_back({id, om, predict_thrust_at_speed(g, truth, om)});
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit(data, AeroCoefficients{}));
    }
}
BENCHMARK(BM_Fit)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
