#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gontd/graph.hpp"

namespace gontd {

/// Integer chip count per vertex. Negative entries are representable, but
/// every operation that needs an effective divisor rejects them.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(std::size_t n) : chips_(n, 0) {}
    explicit Divisor(std::vector<std::int64_t> chips) : chips_(std::move(chips)) {}

    /// k chips on vertex v of an n-vertex graph.
    static Divisor point(std::size_t n, VertexId v, std::int64_t k = 1);

    std::size_t size() const noexcept { return chips_.size(); }
    std::int64_t operator[](VertexId v) const { return chips_.at(v); }
    std::int64_t& operator[](VertexId v) { return chips_.at(v); }
    std::span<const std::int64_t> chips() const noexcept { return chips_; }

    bool is_effective() const noexcept;
    VertexSet support() const;

    bool operator==(const Divisor&) const = default;

private:
    std::vector<std::int64_t> chips_;
};

/// Normalized firing script: nonnegative, with at least one zero entry.
struct FiringScript {
    std::vector<std::int64_t> x;

    std::int64_t max() const noexcept;
    bool is_zero() const noexcept { return max() == 0; }
    bool operator==(const FiringScript&) const = default;
};

/// Increasing chain U_1 ⊆ ... ⊆ U_t whose indicator vectors sum to a script.
struct LevelSetChain {
    std::vector<VertexSet> sets;
};

struct ReducedDivisor {
    Divisor divisor;
    FiringScript script;  // divisor == input - Q * script, script[q] == 0
};

std::int64_t degree(const Divisor& d);

/// outdeg_U(v) <= d(v) for every v in u. Requires d effective.
bool is_fireable(const MultiGraph& g, const Divisor& d, const VertexSet& u);

/// d - Q 1_u. Throws DomainError naming a vertex with too few chips.
Divisor fire_set(const MultiGraph& g, const Divisor& d, const VertexSet& u);

/// d - Q x for an arbitrary integer vector x (no effectiveness requirement).
Divisor apply_script(const MultiGraph& g, const Divisor& d, std::span<const std::int64_t> x);

/// Dhar's burning algorithm: the unique maximal fireable subset of V \ {q}.
/// Empty iff d is q-reduced. O(|E|).
VertexSet dhar(const MultiGraph& g, const Divisor& d, VertexId q);

/// Called with each intermediate divisor (after every firing) during q_reduce.
using ReduceObserver = std::function<void(const Divisor& current, const VertexSet& fired)>;

/// The q-reduced divisor equivalent to d, reached by repeatedly firing Dhar's set.
ReducedDivisor q_reduce(const MultiGraph& g, const Divisor& d, VertexId q, const ReduceObserver& observer = {});

/// Normalized x with d2 = d1 - Q x, or nullopt when d1 and d2 are inequivalent.
std::optional<FiringScript> script_between(const MultiGraph& g, const Divisor& d1, const Divisor& d2);

std::optional<std::int64_t> dist(const MultiGraph& g, const Divisor& d1, const Divisor& d2);

/// U_i = {v : x(v) >= t + 1 - i}, i = 1..t, where t = max x.
LevelSetChain level_set_chain(const FiringScript& x);

/// Subtracts the minimum entry so that the smallest entry is 0.
FiringScript normalize_script(std::vector<std::int64_t> x);

}  // namespace gontd
