#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "triplekit/errors.hpp"

namespace triplekit {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

/// Finite-dimensional vector space with a fixed ordered basis, optional
/// Z/2-grading on basis vectors, and unique human-readable basis labels.
class BasedSpace {
  public:
    BasedSpace() = default;

    /// Space of dimension n with default labels prefix0..prefix{n-1}.
    explicit BasedSpace(std::size_t n, const std::string& prefix = "e") {
        labels_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(prefix + std::to_string(i));
    }

    explicit BasedSpace(std::vector<std::string> labels,
                        std::optional<std::vector<Parity>> parity = std::nullopt)
        : labels_(std::move(labels)), parity_(std::move(parity)) {
        check_invariants();
    }

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    bool graded() const { return parity_.has_value(); }
    Parity parity(std::size_t i) const {
        return parity_ ? parity_->at(i) : Parity::Even;
    }
    const std::optional<std::vector<Parity>>& parity_table() const { return parity_; }

    void set_parity(std::vector<Parity> p) {
        parity_ = std::move(p);
        check_invariants();
    }

    friend bool operator==(const BasedSpace& x, const BasedSpace& y) {
        return x.labels_ == y.labels_ && x.parity_ == y.parity_;
    }

  private:
    void check_invariants() const {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels_)
            if (!seen.insert(l).second)
                throw DimError("duplicate basis label '" + l + "'");
        if (parity_ && parity_->size() != labels_.size())
            throw DimError("parity table size does not match dimension");
    }

    std::vector<std::string> labels_;
    std::optional<std::vector<Parity>> parity_;
};

} // namespace triplekit
