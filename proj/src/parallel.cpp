#include "mapforge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace mapforge {

namespace {
std::atomic<int> g_jobs{0};

int env_jobs() {
    const char* v = std::getenv("MAPFORGE_JOBS");
    if (!v) return 1;
    try {
        int n = std::stoi(v);
        return n > 0 ? n : 1;
    } catch (const std::exception&) {
        return 1;
    }
}
}  // namespace

int jobs() {
    int j = g_jobs.load();
    return j > 0 ? j : env_jobs();
}

void set_jobs(int n) { g_jobs.store(n > 0 ? n : 0); }

}  // namespace mapforge
