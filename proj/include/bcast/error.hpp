#pragma once

#include <stdexcept>
#include <string>

namespace bcast {

// Base for every domain error raised by the library. The CLI maps these to
// exit status 1; UsageError maps to 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GraphError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class ReductionError : public Error {
public:
    using Error::Error;
};

class OracleError : public Error {
public:
    using Error::Error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bcast
