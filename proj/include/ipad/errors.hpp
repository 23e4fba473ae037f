#pragma once

#include <stdexcept>
#include <string>

namespace ipad {

// Base for every error raised by the toolkit. The CLI maps subclasses to
// exit codes (config 2, data 3, port 4).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the operation's documented domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

// Caller violated a precondition that is not a plain range check.
class ContractError : public Error {
public:
    using Error::Error;
};

// A model port failed or returned something of the wrong shape.
class PortError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Dataset layout problems: missing ground truth, unreadable images, ...
class DataError : public Error {
public:
    using Error::Error;
};

class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

class SamplingExhaustedError : public Error {
public:
    SamplingExhaustedError(const std::string& what, double last_iou)
        : Error(what), last_iou_(last_iou) {}
    double last_iou() const noexcept { return last_iou_; }

private:
    double last_iou_;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace ipad
