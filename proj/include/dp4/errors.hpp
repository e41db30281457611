#ifndef DP4_ERRORS_HPP
#define DP4_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dp4 {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Checked 64-bit arithmetic overflowed. All enumeration bounds in this
// library are tiny, so an overflow always means corrupted input.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

// Two classes from lattices of different rank were combined.
class LatticeMismatchError : public Error {
public:
    explicit LatticeMismatchError(const std::string& what) : Error(what) {}
};

// Operation outside the supported blow-up range (n <= 8, or n = 5 only).
class UnsupportedRankError : public Error {
public:
    explicit UnsupportedRankError(const std::string& what) : Error(what) {}
};

// reflection() was given a class with r^2 != -2 or r.K != 0.
class NotARootError : public Error {
public:
    explicit NotARootError(const std::string& what) : Error(what) {}
};

// Orbit closure exceeded the configured cap.
class OrbitCapError : public Error {
public:
    explicit OrbitCapError(const std::string& what) : Error(what) {}
};

// A class that must be 2-divisible has an odd coefficient.
class NotDivisibleError : public Error {
public:
    explicit NotDivisibleError(const std::string& what) : Error(what) {}
};

// Cover data produced a non-integral Euler characteristic.
class BranchDataError : public Error {
public:
    explicit BranchDataError(const std::string& what) : Error(what) {}
};

// Malformed user input (point files, arity, duplicates).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// An exhaustive witness search came up empty.
class SearchFailureError : public Error {
public:
    explicit SearchFailureError(const std::string& what) : Error(what) {}
};

}  // namespace dp4

#endif
