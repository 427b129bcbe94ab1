#pragma once

#include <stdexcept>
#include <string>

namespace rde
{
// Invalid argument to a sampler or solver (negative dimension, p outside its
// admissible range, ...).
class ParameterError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// Input outside the domain where a formula converges or is defined.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// A simulation or iteration hit its hard cap without meeting its stopping
// rule.
class ConvergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Filesystem or configuration failure in the batch driver.
class OperationalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

#define RDE_REQUIRE(cond, ErrorType, msg)                                      \
    do                                                                         \
    {                                                                          \
        if (!(cond))                                                           \
        {                                                                      \
            throw ErrorType(std::string(msg));                                 \
        }                                                                      \
    } while (0)

}  // namespace rde
