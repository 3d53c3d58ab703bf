#include "complicial/budget.hpp"

#include <cstdlib>

namespace complicial {

std::int64_t default_budget_limit() {
    if (const char* env = std::getenv("COMPLICIAL_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 20'000'000;
}

} // namespace complicial
