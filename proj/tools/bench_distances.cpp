// Compares the serial reference distance search against the stratified
// OpenMP kernel on the bundled example codes and a wider synthetic encoder.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skewideal/config.hpp"
#include "skewideal/distances.hpp"

using namespace skewideal;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void bench(const char* name, const PolyMatrix& encoder, int j) {
    const auto t0 = Clock::now();
    const int serial = column_distance_serial(encoder, j);
    const double ts = seconds_since(t0);
    const auto t1 = Clock::now();
    const int parallel = column_distance(encoder, j);
    const double tp = seconds_since(t1);
    std::printf("%-28s j=%d  d^c=%d  serial %8.3fs  parallel %8.3fs  speedup %5.2fx%s\n", name, j,
                parallel, ts, tp, tp > 0 ? ts / tp : 0.0,
                serial == parallel ? "" : "  ** MISMATCH **");
}

PolyMatrix encoder_from_fixture(const Job& job) {
    const LinearMap* delta = job.ring->has_delta() ? &job.ring->delta() : nullptr;
    const auto sep =
        lift_to_ore(build_separability(*job.algebra, job.ring->sigma(), delta, job.strategy), *job.ring);
    return basic_encoder(compute_idempotent(job.generators, sep));
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = "fixtures";
    if (argc > 1) dir = argv[1];
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    try {
        const Job ccc = load_config_file(dir + "/ccc_f4_x5.json");
        const PolyMatrix enc1 = encoder_from_fixture(ccc);
        for (int j = 0; j <= 3; ++j) bench("(5,3) code over F_4", enc1, j);

        const Job m2 = load_config_file(dir + "/m2f8.json");
        const PolyMatrix enc2 = encoder_from_fixture(m2);
        for (int j = 0; j <= 3; ++j) bench("(4,2) code over F_8", enc2, j);

        // wider synthetic encoder: one message block more doubles the work 64-fold
        const FieldPtr f8 = make_field(2, 3, {1, 1, 0, 1});
        PolyMatrix wide(f8.get(), 2, 6);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 6; ++c)
                wide.at(r, c) = Poly::from_reps(
                    f8.get(), {static_cast<std::uint32_t>((3 * r + 5 * c + 1) % 8),
                               static_cast<std::uint32_t>((r + c) % 8),
                               static_cast<std::uint32_t>((5 * r + c * c + 2) % 8)});
        if (max_minor_degree(wide, 2) >= 0)
            for (int j = 2; j <= 3; ++j) bench("synthetic (6,2) over F_8", wide, j);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
