#pragma once

#include <stdexcept>

namespace joinortho {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error { public: using Error::Error; };
class DimensionError : public Error { public: using Error::Error; };
class OrderError : public Error { public: using Error::Error; };
class TooFewRowsError : public Error { public: using Error::Error; };
class InfeasibleError : public Error { public: using Error::Error; };
class BadIncrementError : public Error { public: using Error::Error; };
class UnequalTotalsError : public Error { public: using Error::Error; };

} // namespace joinortho
