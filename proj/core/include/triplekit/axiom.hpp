#pragma once

#include <string>
#include <utility>

#include "triplekit/matrix.hpp"
#include "triplekit/report.hpp"
#include "triplekit/sweep.hpp"
#include "triplekit/vec.hpp"

namespace triplekit {

/// Exhaustively verify a vector-valued identity over a basis tuple space.
/// `eval` maps a tuple of basis indices to (lhs, rhs); the result records
/// pass, or the first failing tuple with both sides printed in `labels`.
template <ScalarField K, class F>
CheckResult check_identity_vec(std::string name, const TupleSpace& space, F&& eval,
                               const std::vector<std::string>& labels) {
    if (space.total() == 0) return {std::move(name), CheckStatus::Vacuous, std::nullopt, "empty tuple space"};
    auto fail = sweep_first_failure<Counterexample>(space.total(), [&](std::size_t idx) -> std::optional<Counterexample> {
        auto tuple = space.decode(idx);
        auto [lhs, rhs] = eval(tuple);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{tuple, vec_str_labeled(lhs, labels), vec_str_labeled(rhs, labels), ""};
    });
    if (!fail) return {std::move(name), CheckStatus::Pass, std::nullopt, ""};
    return {std::move(name), CheckStatus::Fail, std::move(fail->second), ""};
}

/// Same, for operator-valued identities (both sides matrices).
template <ScalarField K, class F>
CheckResult check_identity_mat(std::string name, const TupleSpace& space, F&& eval) {
    if (space.total() == 0) return {std::move(name), CheckStatus::Vacuous, std::nullopt, "empty tuple space"};
    auto fail = sweep_first_failure<Counterexample>(space.total(), [&](std::size_t idx) -> std::optional<Counterexample> {
        auto tuple = space.decode(idx);
        auto [lhs, rhs] = eval(tuple);
        if (lhs == rhs) return std::nullopt;
        return Counterexample{tuple, lhs.str(), rhs.str(), ""};
    });
    if (!fail) return {std::move(name), CheckStatus::Pass, std::nullopt, ""};
    return {std::move(name), CheckStatus::Fail, std::move(fail->second), ""};
}

} // namespace triplekit
