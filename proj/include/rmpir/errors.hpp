#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rmpir {

// Base for all library errors that represent expected failure modes of the
// protocol or its inputs. Precondition violations (caller bugs) throw
// std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No codeword within the error/erasure budget, or contradictory candidates.
// Signals a parameter violation or an adversary outside the declared model.
class DecodingFailure : public Error {
public:
    using Error::Error;
};

// Parameter tuple rejected; `violated` names the failing inequality.
class InfeasibleParams : public Error {
public:
    InfeasibleParams(const std::string& violated, const std::string& detail)
        : Error("infeasible parameters: " + violated + " (" + detail + ")"), violated_(violated) {}

    const std::string& violated() const { return violated_; }

private:
    std::string violated_;
};

// The planner could not produce a complete query plan for these parameters.
// Carries the GF(2) rank over the file unknowns that was achieved.
class PlanNotFound : public Error {
public:
    PlanNotFound(std::size_t rank_achieved, std::size_t rank_needed)
        : Error("no query plan found: achieved rank " + std::to_string(rank_achieved) + " of " +
                std::to_string(rank_needed)),
          rank_achieved_(rank_achieved) {}

    std::size_t rank_achieved() const { return rank_achieved_; }

private:
    std::size_t rank_achieved_;
};

// A recovered equation contradicts previously solved symbols. With a valid
// plan this indicates a protocol bug or an adversary beyond the model.
class InconsistentLedger : public Error {
public:
    using Error::Error;
};

// An exact audit would have to enumerate too many codewords.
class EnumerationTooLarge : public Error {
public:
    using Error::Error;
};

// Database file failed header or size validation.
class MalformedDatabase : public Error {
public:
    using Error::Error;
};

}  // namespace rmpir
