#include "equicoh/parallel.hpp"

#include <atomic>

namespace equicoh {

namespace {
std::atomic<ExecMode> g_mode{
#ifdef _OPENMP
    ExecMode::Parallel
#else
    ExecMode::Serial
#endif
};
std::atomic<int> g_threads{0};
}  // namespace

void set_exec_mode(ExecMode mode) {
    g_mode.store(mode);
}

ExecMode exec_mode() {
    return g_mode.load();
}

void set_thread_count(int n) {
    g_threads.store(n < 0 ? 0 : n);
}

int thread_count() {
    return g_threads.load();
}

}  // namespace equicoh
