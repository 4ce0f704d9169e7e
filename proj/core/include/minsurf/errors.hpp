#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that cannot generate or describe a surface (zero f, A = 0, J = 0, ...).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested at a non-regular point, i.e. |x_u x x_v| below threshold.
class SingularPointError : public Error {
public:
    SingularPointError(const std::string& what, double cross_norm)
        : Error(what), cross_norm_(cross_norm) {}

    double cross_norm() const noexcept { return cross_norm_; }

private:
    double cross_norm_;
};

/// Evaluation requested inside an excluded disk around a branch point.
class BranchPointError : public Error {
public:
    using Error::Error;
};

/// Chart is not the real part of a polynomial Weierstrass curve.
class NotWeierstrassError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized data (JSON, OBJ, CSV).
class FormatError : public Error {
public:
    using Error::Error;
};

/// File-system failure; the message names the path.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace minsurf
