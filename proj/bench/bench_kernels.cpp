// Timing comparison of the parallel kernels against their serial paths.
// The parallel and serial variants must return bit-identical results; this
// binary reports wall time and verifies that equality on each run.

#include <chrono>
#include <cstdio>
#include <random>

#include "bellwit/classical.hpp"
#include "bellwit/families.hpp"
#include "bellwit/optimizer.hpp"
#include "bellwit/parallel.hpp"
#include "bellwit/rng.hpp"
#include "bellwit/search.hpp"

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double timed(F&& f) {
    const double t0 = now_seconds();
    f();
    return now_seconds() - t0;
}

void report(const char* kernel, double serial, double parallel, bool identical) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", kernel, serial,
                parallel, serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    const int jobs = bellwit::resolve_jobs(0);
    std::printf("bellwit kernel benchmark (%d threads)\n\n", jobs);

    {
        // Exhaustive classical bound on a dense random 8 x 24 expression.
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        std::vector<double> entries(8 * 24);
        for (auto& v : entries) v = uniform(rng);
        const bellwit::BellExpression expr(8, 24, entries);

        bellwit::ClassicalResult reference;
        bellwit::ClassicalResult serial;
        bellwit::ClassicalResult parallel;
        const double t_ref = timed([&] { reference = bellwit::classical_max_reference(expr); });
        const double t1 = timed([&] { serial = bellwit::classical_max(expr, 1); });
        const double tp = timed([&] { parallel = bellwit::classical_max(expr, jobs); });
        std::printf("%-28s naive reference %8.3fs (value %.12g)\n", "classical enumeration",
                    t_ref, reference.value);
        report("classical enumeration", t1, tp,
               serial.value == parallel.value && serial.signs == parallel.signs);
    }

    {
        // Restart batch on the m_b = 6 family at full dimension.
        const bellwit::BellExpression expr = bellwit::bgamma_matrix(6, 1.7642);
        bellwit::OptimizerConfig config;
        config.restarts = 64;
        config.seed = 11;

        bellwit::OptRun serial;
        bellwit::OptRun parallel;
        config.jobs = 1;
        const double t1 = timed([&] { serial = bellwit::max_over_restarts(expr, 6, config); });
        config.jobs = jobs;
        const double tp = timed([&] { parallel = bellwit::max_over_restarts(expr, 6, config); });
        report("see-saw restarts", t1, tp,
               serial.value == parallel.value && serial.restart_index == parallel.restart_index);
    }

    {
        // Class enumeration + witness scan over 2 x 3 sign matrices.
        bellwit::EnumerationOptions enum_options;
        bellwit::ScanOptions scan_options;
        scan_options.n_max = 2;
        scan_options.flag_gap = {1, 2};
        bellwit::OptimizerConfig config;
        config.restarts = 16;
        config.seed = 3;

        std::vector<bellwit::ClassRep> classes;
        bellwit::ScanResult serial;
        bellwit::ScanResult parallel;
        enum_options.jobs = 1;
        config.jobs = 1;
        const double t1 = timed([&] {
            classes = bellwit::enumerate_classes(3, 3, enum_options);
            serial = bellwit::scan_for_witnesses(classes, scan_options, config);
        });
        enum_options.jobs = jobs;
        config.jobs = jobs;
        const double tp = timed([&] {
            classes = bellwit::enumerate_classes(3, 3, enum_options);
            parallel = bellwit::scan_for_witnesses(classes, scan_options, config);
        });
        bool identical = serial.hits.size() == parallel.hits.size();
        for (std::size_t i = 0; identical && i < serial.hits.size(); ++i) {
            identical = serial.hits[i].class_index == parallel.hits[i].class_index &&
                        serial.hits[i].gap == parallel.hits[i].gap;
        }
        report("class enumeration + scan", t1, tp, identical);
    }

    return 0;
}
