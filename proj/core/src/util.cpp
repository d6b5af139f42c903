#include "cyclotomo/util.hpp"

#include <cstdlib>
#include <thread>

namespace cyclotomo {

unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CYCLOTOMO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, hw));
    }
    return hw;
}

} // namespace cyclotomo
