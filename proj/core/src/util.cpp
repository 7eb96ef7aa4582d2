#include "hyperflex/util.hpp"

#include <cstdlib>
#include <thread>

namespace hyperflex {

unsigned thread_cap() {
    const char* env = std::getenv("HYPERFLEX_THREADS");
    if (!env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<unsigned>(v) > hw ? hw : static_cast<unsigned>(v);
}

} // namespace hyperflex
