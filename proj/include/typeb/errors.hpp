#pragma once

#include <stdexcept>
#include <string>

namespace typeb {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coefficient was requested above the known truncation order.
class IndexBeyondOrder : public Error {
 public:
  using Error::Error;
};

/// Division where the numerator vanishes to lower order than the divisor.
class ValuationError : public Error {
 public:
  using Error::Error;
};

/// Division by a series (or rational) that is zero.
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

/// A series operation whose precondition on the constant term failed
/// (log of a series not starting with 1, exp of a series not starting with 0,
/// composition with an inner series that has a constant term).
class ConstantTermError : public Error {
 public:
  using Error::Error;
};

/// Triangle index (n, k) outside 0 <= k <= n.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A Riordan array was asked for an entry beyond the order of its series.
class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

/// An unrecognised family/identity/array/sequence tag.
class UnknownTag : public Error {
 public:
  using Error::Error;
};

/// A fixture path that does not name a readable file.
class MissingFile : public Error {
 public:
  using Error::Error;
};

/// A b-file fixture that cannot be parsed (or holds no entries).
class MalformedFixture : public Error {
 public:
  MalformedFixture(const std::string& what, int line)
      : Error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace typeb
