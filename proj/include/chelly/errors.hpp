#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chelly/rational.hpp"

namespace chelly {

/** Base of every error raised by the toolkit. */
class Error : public std::runtime_error
{
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Vectors or polyhedra of incompatible ambient dimension were combined. */
class DimensionError : public Error
{
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/** Malformed input: bad rational literal, schema mismatch, zero normal, ... */
class InputError : public Error
{
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/**
 * An exact search would exceed its configured budget. Raised instead of
 * silently returning an approximation.
 */
class ScaleError : public Error
{
public:
    explicit ScaleError(const std::string& what) : Error(what) {}
};

/**
 * The caller broke an operation's precondition. When the violation is a
 * non-empty intersection, the common point is attached.
 */
class PreconditionError : public Error
{
public:
    explicit PreconditionError(const std::string& what,
                               std::optional<Vector> witness = std::nullopt)
        : Error(what), witness_(std::move(witness))
    {
    }

    const std::optional<Vector>& witness() const { return witness_; }

private:
    std::optional<Vector> witness_;
};

/**
 * A result guaranteed by a theorem failed exact verification. Signals a
 * solver or input bug.
 */
class TheoremViolation : public Error
{
public:
    explicit TheoremViolation(const std::string& what) : Error(what) {}
};

/** A construction generator could not certify its invariants. */
class GenerationError : public Error
{
public:
    explicit GenerationError(const std::string& what) : Error(what) {}
};

} // namespace chelly
