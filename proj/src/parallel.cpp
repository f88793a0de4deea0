#include "sprod/parallel.hpp"

#include <atomic>

namespace sprod {

static std::atomic<int> g_threads{1};

void set_threads(int n) { g_threads = n < 1 ? 1 : n; }
int threads() { return g_threads; }

} // namespace sprod
