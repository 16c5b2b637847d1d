#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pigc {

using Vertex = std::size_t;

/// Malformed input: bad endpoints, self-loops, parse failures, non-partitions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The graph is not in the class an algorithm requires. Carries an induced
/// obstruction when one was found.
class ClassError : public std::runtime_error {
public:
    ClassError(std::string required_class, std::string witness_kind, std::vector<Vertex> witness)
        : std::runtime_error("graph is not " + required_class +
                             (witness_kind.empty() ? std::string{} : " (found induced " + witness_kind + ")")),
          required_class_(std::move(required_class)),
          witness_kind_(std::move(witness_kind)),
          witness_(std::move(witness)) {}

    const std::string& required_class() const noexcept { return required_class_; }
    const std::string& witness_kind() const noexcept { return witness_kind_; }
    const std::vector<Vertex>& witness() const noexcept { return witness_; }

private:
    std::string required_class_;
    std::string witness_kind_;
    std::vector<Vertex> witness_;
};

/// A brute-force oracle refused an instance larger than its budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace pigc
