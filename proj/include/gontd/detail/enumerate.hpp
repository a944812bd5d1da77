#pragma once

#include <vector>

namespace gontd {

template <class Visit>
bool for_each_effective_divisor(std::size_t n, std::int64_t deg, Visit&& visit) {
    if (n == 0 || deg < 0) return false;
    const auto k = static_cast<std::size_t>(deg);
    std::vector<VertexId> pick(k, 0);
    Divisor d(n);
    d[0] = deg;
    for (;;) {
        if (visit(static_cast<const Divisor&>(d))) return true;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - 1) --i;
        if (i == 0) return false;
        --i;
        for (std::size_t j = i; j < k; ++j) --d[pick[j]];
        ++pick[i];
        for (std::size_t j = i; j < k; ++j) {
            pick[j] = pick[i];
            ++d[pick[j]];
        }
    }
}

}  // namespace gontd
