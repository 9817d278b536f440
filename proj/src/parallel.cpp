#include "multireduce/parallel.hpp"

namespace multireduce {

namespace {
int g_thread_budget = 0;  // 0 = use hardware concurrency
}

int thread_budget() {
    if (g_thread_budget > 0) return g_thread_budget;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void set_thread_budget(int n) { g_thread_budget = n < 0 ? 0 : n; }

}  // namespace multireduce
