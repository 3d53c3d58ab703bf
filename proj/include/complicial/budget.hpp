// budget.hpp -- node-count budgets for the search procedures; wall-clock
// free so runs reproduce across machines.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace complicial {

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& where)
        : std::runtime_error("search budget exceeded in " + where) {}
};

struct Budget {
    std::int64_t limit = 20'000'000;
    std::int64_t used = 0;

    void spend(const char* where, std::int64_t amount = 1) {
        used += amount;
        if (used > limit) throw BudgetExceeded(where);
    }
};

std::int64_t default_budget_limit();

} // namespace complicial
