#pragma once

#include <stdexcept>

namespace rcl {

// A search or construction outgrew its configured budget. Distinct from a
// domain error: callers may retry with a larger budget.
struct BudgetExceeded : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

} // namespace rcl
