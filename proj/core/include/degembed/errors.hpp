#ifndef DEGEMBED_ERRORS_HPP
#define DEGEMBED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace degembed {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Sequence admits no simple-graph realization.
class NotGraphicError : public Error {
public:
    using Error::Error;
};

/// Bipartite demand admits no realization.
class NotBigraphicError : public Error {
public:
    using Error::Error;
};

/// Integer sequence does not sum to zero.
class NotZeroSumError : public Error {
public:
    using Error::Error;
};

/// Exhaustive check would exceed the configured work budget.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// Rewiring ran out of unmarked balanced complete bipartite components.
class InsufficientGadgetsError : public Error {
public:
    using Error::Error;
};

/// Class sizes admit no valid tuple assignment.
class BadShapeError : public Error {
public:
    using Error::Error;
};

/// Demand cannot be realized (sum mismatch or infeasible flow).
class NotRealizableError : public Error {
public:
    using Error::Error;
};

/// Star decomposition cannot cover a vertex; carries the witness.
class StuckError : public Error {
public:
    StuckError(int vertex, const std::string& what) : Error(what), vertex(vertex) {}
    int vertex;
};

/// Input too small for the requested partition.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// An exceptional vertex has no permitted cluster; carries the witness.
class UnassignableError : public Error {
public:
    UnassignableError(int vertex, const std::string& what) : Error(what), vertex(vertex) {}
    int vertex;
};

/// Assignment cap cannot be met for some cluster.
class OverloadError : public Error {
public:
    using Error::Error;
};

/// Covering walk collapsed before the component was placed; carries the witness.
class CoverFailedError : public Error {
public:
    CoverFailedError(int vertex, const std::string& what) : Error(what), vertex(vertex) {}
    int vertex;
};

/// A component cannot fit in the remaining vacancies.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// Odd order where an even one is required.
class BadParityError : public Error {
public:
    using Error::Error;
};

}  // namespace degembed

#endif  // DEGEMBED_ERRORS_HPP
