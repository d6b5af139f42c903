#pragma once

#include <cstddef>

namespace cyclotomo {

/// Worker count for parallel enumeration; honors the CYCLOTOMO_THREADS
/// environment variable, clamped to [1, hardware_concurrency].
unsigned thread_count();

} // namespace cyclotomo
