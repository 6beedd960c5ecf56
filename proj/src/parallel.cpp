#include "isoquot/parallel.hpp"

#include <cstdlib>
#include <string>

namespace isoquot {

int thread_count() {
    if (const char* s = std::getenv("ISOQUOT_THREADS")) {
        try {
            int n = std::stoi(s);
            if (n > 0) return n;
        } catch (...) {
        }
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

} // namespace isoquot
