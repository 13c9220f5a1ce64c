#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "apolar/error.hpp"

namespace apolar {

// Exponent vector over all variables of a ring, block order = declaration order.
using Exponents = std::vector<int>;

// A polynomial ring split into blocks, one block per projective factor.
class VariableBlock {
public:
    VariableBlock() = default;

    VariableBlock(std::vector<std::size_t> sizes, std::vector<std::string> names)
        : sizes_(std::move(sizes)), names_(std::move(names)) {
        std::size_t total = 0;
        for (std::size_t s : sizes_) {
            if (s == 0) throw dimension_error("empty variable block");
            total += s;
        }
        if (names_.size() != total)
            throw dimension_error("variable name count does not match block sizes");
    }

    static VariableBlock single(std::size_t n, const std::string& prefix = "x") {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
        return VariableBlock({n}, std::move(names));
    }
    static VariableBlock binary() { return VariableBlock({2}, {"x", "y"}); }
    static VariableBlock ternary() { return VariableBlock({3}, {"x", "y", "z"}); }
    static VariableBlock p1xp1() { return VariableBlock({2, 2}, {"x", "y", "z", "w"}); }
    static VariableBlock pn_p1(std::size_t n) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
        names.push_back("z");
        names.push_back("w");
        return VariableBlock({n + 1, 2}, std::move(names));
    }

    std::size_t block_count() const { return sizes_.size(); }
    std::size_t size(std::size_t block) const { return sizes_.at(block); }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    std::size_t total() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t var) const { return names_.at(var); }

    std::size_t block_of(std::size_t var) const {
        std::size_t b = 0, acc = 0;
        for (; b < sizes_.size(); ++b) {
            acc += sizes_[b];
            if (var < acc) return b;
        }
        throw dimension_error("variable index out of range");
    }
    std::size_t block_start(std::size_t block) const {
        std::size_t acc = 0;
        for (std::size_t b = 0; b < block; ++b) acc += sizes_[b];
        return acc;
    }

    bool operator==(const VariableBlock& o) const {
        return sizes_ == o.sizes_ && names_ == o.names_;
    }
    bool operator!=(const VariableBlock& o) const { return !(*this == o); }

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::string> names_;
};

}  // namespace apolar
