#pragma once

#include <stdexcept>
#include <string>

namespace clear {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// A configuration is internally inconsistent (missing table entry,
/// floor above ceiling, cross-field rule broken).
class ConfigError : public Error
{
public:
    using Error::Error;
};

/// A fit was requested with too few distinct abscissae.
class InsufficientDataError : public Error
{
public:
    using Error::Error;
};

/// A physical model has no operating point (e.g. an optical power budget
/// that cannot close on some span).
class InfeasibleError : public Error
{
public:
    using Error::Error;
};

} // namespace clear
